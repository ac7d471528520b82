#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "rpf/dense.hpp"

namespace rpf {

/// A categorical distribution: probabilities in [0, 1] summing to 1.
class AbsoluteDistribution {
 public:
  explicit AbsoluteDistribution(std::vector<double> probs) : probs_(std::move(probs)) {
    double sum = 0.0;
    for (const double p : probs_) {
      if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("AbsoluteDistribution: probability outside [0, 1]");
      sum += p;
    }
    if (std::fabs(sum - 1.0) > 1e-9)
      throw std::invalid_argument("AbsoluteDistribution: probabilities must sum to 1");
  }

  const std::vector<double>& probs() const { return probs_; }
  int size() const { return static_cast<int>(probs_.size()); }
  double operator[](int i) const { return probs_.at(i); }

 private:
  std::vector<double> probs_;
};

/// Every pair of outcomes equally likely.
inline DenseRpf uniform(int k) { return DenseRpf(k); }

/// Every distinct pair incomparable. The diagonal stays 1: the identity
/// axiom is unconditional, so self-comparisons carry no wildcard.
inline DenseRpf indeterminate(int k) { return DenseRpf(k, Magnitude::wildcard()); }

inline DenseRpf empty() { return DenseRpf(0); }

inline DenseRpf unit() { return DenseRpf(1); }

/// Outcome c infinitely more probable than every other outcome. The
/// remaining pairs are unconstrained by the definition; they are filled
/// uniformly with 1, which keeps the result totally comparable.
inline DenseRpf certain(int k, int c) {
  if (k < 1) throw std::invalid_argument("certain: needs at least one outcome");
  if (c < 0 || c >= k) throw std::out_of_range("certain: outcome index out of range");
  DenseRpf p(k);
  for (int h = 0; h < k; ++h)
    if (h != c) p.set_pair(c, h, Magnitude::infinity());
  return p;
}

/// Neighbor ratio r throughout: P(h_{i+1}, h_i) = r, so P(h_i, h_j) =
/// r^(i-j). With r in {0, inf} this is the limit finite geometric RPF and
/// the off-neighbor entries follow the composed 0/inf chain.
inline DenseRpf finite_geometric(int k, const Magnitude& r) {
  if (r.is_wildcard())
    throw std::invalid_argument("finite_geometric: ratio cannot be the wildcard");
  DenseRpf p(k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < i; ++j) {
      const Magnitude value =
          r.is_finite() ? Magnitude::from_log((i - j) * r.log_value()) : r;
      p.set_pair(i, j, value);
    }
  return p;
}

/// Relative form of Binomial(n, p) on outcomes {0..n}: the pairwise ratio of
/// the probability mass function, computed with additive log-factorial
/// tables so no factorial is ever materialized.
inline DenseRpf binomial(int n, double p) {
  if (n < 0) throw std::invalid_argument("binomial: negative sample size");
  if (!(p > 0.0 && p < 1.0))
    throw std::invalid_argument("binomial: success probability must lie in (0, 1)");
  std::vector<double> log_factorial(n + 1, 0.0);
  for (int m = 1; m <= n; ++m)
    log_factorial[m] = log_factorial[m - 1] + std::log(static_cast<double>(m));
  const double log_odds = std::log(p) - std::log1p(-p);

  DenseRpf out(n + 1);
  for (int h1 = 0; h1 <= n; ++h1)
    for (int h2 = 0; h2 <= n; ++h2) {
      if (h1 == h2) continue;
      const double log_ratio = log_factorial[h2] + log_factorial[n - h2] -
                               log_factorial[h1] - log_factorial[n - h1] +
                               (h1 - h2) * log_odds;
      out.set(h1, h2, Magnitude::from_log(log_ratio));
    }
  return out;
}

/// Pairwise ratio of an absolute distribution. Two zero probabilities are
/// incomparable (0/0 = *), except on the diagonal where the identity axiom
/// forces 1.
inline DenseRpf from_absolute(const AbsoluteDistribution& d) {
  if (d.size() < 1)
    throw std::invalid_argument("from_absolute: no absolute distribution has zero outcomes");
  const int k = d.size();
  DenseRpf out(k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (i == j) continue;
      const double pi = d[i];
      const double pj = d[j];
      Magnitude value = Magnitude::wildcard();
      if (pi > 0.0 && pj > 0.0)
        value = Magnitude::from_log(std::log(pi) - std::log(pj));
      else if (pi > 0.0)
        value = Magnitude::infinity();
      else if (pj > 0.0)
        value = Magnitude::zero();
      out.set(i, j, value);
    }
  return out;
}

inline DenseRpf from_absolute(std::vector<double> probs) {
  return from_absolute(AbsoluteDistribution(std::move(probs)));
}

}  // namespace rpf

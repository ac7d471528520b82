#pragma once

#include <cmath>
#include <span>
#include <stdexcept>
#include <vector>

#include "rpf/dense.hpp"

namespace rpf {

/// Entrywise product of two RPFs over the same outcomes; the result again
/// satisfies the fundamental axioms.
inline DenseRpf pointwise_product(const DenseRpf& p1, const DenseRpf& p2) {
  if (p1.size() != p2.size())
    throw std::invalid_argument("pointwise_product: outcome counts differ");
  DenseRpf out(p1.size());
  for (int i = 0; i < p1.size(); ++i)
    for (int j = 0; j < p1.size(); ++j)
      if (i != j) out.set(i, j, p1(i, j) * p2(i, j));
  return out;
}

/// Bayes rule for relative probability: the posterior is the pointwise
/// product of the likelihood-ratio RPF and the prior.
inline DenseRpf bayes_update(const DenseRpf& prior, const DenseRpf& likelihood) {
  return pointwise_product(likelihood, prior);
}

/// Folds a stream of likelihoods into the prior. The product commutes, so
/// the order of evidence never matters.
inline DenseRpf sequential_update(DenseRpf prior, std::span<const DenseRpf> likelihoods) {
  for (const DenseRpf& likelihood : likelihoods)
    prior = bayes_update(prior, likelihood);
  return prior;
}

/// Likelihood-ratio RPF for the noisy channel: a k-ary message arrives
/// intact with probability p and is otherwise resampled uniformly. Given
/// counts c of the received values,
///   P_c(h1, h2) = (1 + p k / (1 - p))^(c_h1 - c_h2),
/// so the entries are exponential in the count differences. p = 1 is
/// rejected; take that limit explicitly if it is intended.
inline DenseRpf noisy_channel_likelihood(int k, double p, const std::vector<int>& counts) {
  if (static_cast<int>(counts.size()) != k)
    throw std::invalid_argument("noisy_channel_likelihood: counts length must equal k");
  if (!(p >= 0.0 && p < 1.0))
    throw std::invalid_argument("noisy_channel_likelihood: p must lie in [0, 1)");
  for (const int c : counts)
    if (c < 0) throw std::invalid_argument("noisy_channel_likelihood: negative count");

  const double log_base = std::log1p(p * k / (1.0 - p));
  DenseRpf out(k);
  for (int h1 = 0; h1 < k; ++h1)
    for (int h2 = 0; h2 < k; ++h2)
      if (h1 != h2) out.set(h1, h2, Magnitude::from_log((counts[h1] - counts[h2]) * log_base));
  return out;
}

/// Adapter: per-hypothesis densities of one observation, as an RPF of
/// likelihood ratios. Densities must be strictly positive.
inline DenseRpf likelihood_from_densities(const std::vector<double>& density) {
  DenseRpf out(static_cast<int>(density.size()));
  for (const double d : density)
    if (!(d > 0.0) || std::isinf(d))
      throw std::invalid_argument("likelihood_from_densities: densities must be positive and finite");
  for (int i = 0; i < out.size(); ++i)
    for (int j = 0; j < out.size(); ++j)
      if (i != j) out.set(i, j, Magnitude::from_log(std::log(density[i]) - std::log(density[j])));
  return out;
}

}  // namespace rpf

#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "rpf/magnitude.hpp"

namespace rpf {

/// A relative probability function on outcomes {0..k-1}, stored as the full
/// k x k table of pairwise values. Entry (i, j) is the probability of
/// outcome i relative to outcome j. Valid tables satisfy the three
/// fundamental axioms, which validate() checks explicitly; nothing is ever
/// inferred or repaired.
class DenseRpf {
 public:
  DenseRpf() : k_(0) {}

  explicit DenseRpf(int k, Magnitude fill = Magnitude::one())
      : k_(k), cells_(static_cast<size_t>(k) * k, fill) {
    if (k < 0) throw std::invalid_argument("DenseRpf: negative outcome count");
    for (int i = 0; i < k; ++i) cells_[index(i, i)] = Magnitude::one();
  }

  int size() const { return k_; }

  const Magnitude& operator()(int i, int j) const { return cells_[index(i, j)]; }

  void set(int i, int j, const Magnitude& m) { cells_[index(i, j)] = m; }

  /// Sets (i, j) and mirrors the inverse into (j, i).
  void set_pair(int i, int j, const Magnitude& m) {
    cells_[index(i, j)] = m;
    cells_[index(j, i)] = inverse(m);
  }

  friend bool operator==(const DenseRpf& a, const DenseRpf& b) {
    if (a.k_ != b.k_) return false;
    for (size_t c = 0; c < a.cells_.size(); ++c)
      if (a.cells_[c] != b.cells_[c]) return false;
    return true;
  }

 private:
  size_t index(int i, int j) const {
    if (i < 0 || i >= k_ || j < 0 || j >= k_)
      throw std::out_of_range("DenseRpf: outcome index out of range");
    return static_cast<size_t>(i) * k_ + j;
  }

  int k_;
  std::vector<Magnitude> cells_;
};

enum class Axiom { Identity, Inverse, Composition };

struct AxiomViolation {
  Axiom axiom;
  // Identity uses i; Inverse uses (i, j); Composition uses the triple.
  int i = -1;
  int j = -1;
  int l = -1;

  std::string describe() const {
    switch (axiom) {
      case Axiom::Identity:
        return "identity axiom violated at outcome " + std::to_string(i);
      case Axiom::Inverse:
        return "inverse axiom violated at pair (" + std::to_string(i) + ", " +
               std::to_string(j) + ")";
      default:
        return "composition axiom violated at triple (" + std::to_string(i) + ", " +
               std::to_string(j) + ", " + std::to_string(l) + ")";
    }
  }
};

/// Checks the three fundamental axioms and reports every violation with a
/// witness. Composition is checked over all ordered triples.
inline std::vector<AxiomViolation> validate(const DenseRpf& p) {
  std::vector<AxiomViolation> out;
  const int k = p.size();
  for (int i = 0; i < k; ++i)
    if (p(i, i) != Magnitude::one())
      out.push_back({Axiom::Identity, i, -1, -1});
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (p(i, j) != inverse(p(j, i)))
        out.push_back({Axiom::Inverse, i, j, -1});
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      for (int l = 0; l < k; ++l)
        if (!matches(p(i, l), p(i, j) * p(j, l)))
          out.push_back({Axiom::Composition, i, j, l});
  return out;
}

inline bool is_valid(const DenseRpf& p) { return validate(p).empty(); }

inline bool comparable(const DenseRpf& p, int i, int j) {
  return !p(i, j).is_wildcard();
}

/// i is possible with respect to j: comparable with strictly positive value.
inline bool possible(const DenseRpf& p, int i, int j) {
  const Magnitude& m = p(i, j);
  return m.is_finite() || m.is_infinity();
}

inline bool mutually_possible(const DenseRpf& p, int i, int j) {
  return p(i, j).is_finite();
}

inline bool totally_comparable(const DenseRpf& p) {
  for (int i = 0; i < p.size(); ++i)
    for (int j = 0; j < p.size(); ++j)
      if (!comparable(p, i, j)) return false;
  return true;
}

inline bool totally_mutually_possible(const DenseRpf& p) {
  for (int i = 0; i < p.size(); ++i)
    for (int j = 0; j < p.size(); ++j)
      if (!mutually_possible(p, i, j)) return false;
  return true;
}

/// p1 is matched by p2 when every entry of p1 is matched by the
/// corresponding entry of p2 (equal, or the p2 entry is the wildcard).
inline bool matched_by(const DenseRpf& p1, const DenseRpf& p2) {
  if (p1.size() != p2.size())
    throw std::invalid_argument("matched_by: outcome counts differ");
  for (int i = 0; i < p1.size(); ++i)
    for (int j = 0; j < p1.size(); ++j)
      if (!matches(p1(i, j), p2(i, j))) return false;
  return true;
}

/// Path form of the composition axiom: P(first, last) must be matched by the
/// product of successive steps. A single-outcome path checks the identity
/// axiom against the empty product.
inline bool check_path_composition(const DenseRpf& p, std::span<const int> path) {
  if (path.empty())
    throw std::invalid_argument("check_path_composition: empty path");
  Magnitude product = Magnitude::one();
  for (size_t t = 0; t + 1 < path.size(); ++t)
    product = product * p(path[t], path[t + 1]);
  return matches(p(path.front(), path.back()), product);
}

}  // namespace rpf

#pragma once

#include <cmath>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "rpf/dense.hpp"

namespace rpf {

/// Image of a totally comparable RPF in the unit hypercube: the inverse
/// odds transform of every entry, row-major. Diagonal coordinates sit at
/// 0.5, the image of 1.
struct EmbeddedRpf {
  int k = 0;
  std::vector<double> coords;

  double at(int i, int j) const { return coords[static_cast<size_t>(i) * k + j]; }
};

inline EmbeddedRpf embed(const DenseRpf& p) {
  EmbeddedRpf e;
  e.k = p.size();
  e.coords.reserve(static_cast<size_t>(e.k) * e.k);
  for (int i = 0; i < e.k; ++i)
    for (int j = 0; j < e.k; ++j) e.coords.push_back(inverse_odds(p(i, j)));
  return e;
}

/// Maps coordinates back through the odds transform and re-validates; a
/// cube point is only an RPF if the axioms survive the reconstruction.
inline DenseRpf unembed(const EmbeddedRpf& e) {
  if (e.coords.size() != static_cast<size_t>(e.k) * e.k)
    throw std::invalid_argument("unembed: coordinate count must be k*k");
  DenseRpf p(e.k);
  for (int i = 0; i < e.k; ++i)
    for (int j = 0; j < e.k; ++j)
      if (i != j) p.set(i, j, odds(e.at(i, j)));
  const std::vector<AxiomViolation> violations = validate(p);
  if (!violations.empty())
    throw std::domain_error("unembed: " + violations.front().describe());
  return p;
}

/// Raised when a sequence fails the convergence criterion or its limit
/// point cannot be classified as an RPF.
struct NonConvergence : std::runtime_error {
  int i;
  int j;
  NonConvergence(std::string message, int i_, int j_)
      : std::runtime_error(std::move(message)), i(i_), j(j_) {}
};

namespace detail {

inline constexpr double kConvergenceEps = 1e-9;
inline constexpr int kConvergenceSteps = 3;
inline constexpr double kBoundarySnap = 1e-9;

}  // namespace detail

/// Elementwise limit of a sequence of totally comparable RPFs, taken in
/// embedded coordinates. Converged when each of the last three successive
/// embedded distances (max-norm) is at most 1e-9; shorter sequences must
/// hold it for every step they have. Coordinates within 1e-9 of the cube
/// boundary snap onto it, so limits land exactly on 0 and inf. The result
/// is re-validated; a snap that breaks the axioms reports non-convergence.
inline DenseRpf sequence_limit(std::span<const DenseRpf> seq) {
  if (seq.size() < 2)
    throw std::invalid_argument("sequence_limit: need at least two elements");
  const int k = seq.front().size();
  std::vector<EmbeddedRpf> embedded;
  embedded.reserve(seq.size());
  for (const DenseRpf& p : seq) {
    if (p.size() != k) throw std::invalid_argument("sequence_limit: mixed outcome counts");
    embedded.push_back(embed(p));
  }

  const size_t steps = std::min<size_t>(detail::kConvergenceSteps, seq.size() - 1);
  for (size_t t = seq.size() - steps; t < seq.size(); ++t) {
    double worst = 0.0;
    int wi = 0, wj = 0;
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        const double d = std::fabs(embedded[t].at(i, j) - embedded[t - 1].at(i, j));
        if (d > worst) {
          worst = d;
          wi = i;
          wj = j;
        }
      }
    if (worst > detail::kConvergenceEps)
      throw NonConvergence("sequence_limit: entry (" + std::to_string(wi) + ", " +
                               std::to_string(wj) + ") still moving by " + std::to_string(worst),
                           wi, wj);
  }

  // Entries away from the boundary carry over verbatim; only coordinates
  // inside the snap band are idealized to 0 and inf.
  DenseRpf limit = seq.back();
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      const double u = embedded.back().at(i, j);
      if (u < detail::kBoundarySnap)
        limit.set(i, j, Magnitude::zero());
      else if (u > 1.0 - detail::kBoundarySnap)
        limit.set(i, j, Magnitude::infinity());
    }
  const std::vector<AxiomViolation> violations = validate(limit);
  if (!violations.empty())
    throw NonConvergence("sequence_limit: limit point is not an RPF (" +
                             violations.front().describe() + ")",
                         violations.front().i, violations.front().j);
  return limit;
}

/// Limit of a parametric family along the schedule eps_n = 2^-n, n = 1..steps.
inline DenseRpf family_limit(const std::function<DenseRpf(double)>& family, int steps = 40) {
  if (steps < 2) throw std::invalid_argument("family_limit: need at least two steps");
  std::vector<DenseRpf> seq;
  seq.reserve(steps);
  for (int n = 1; n <= steps; ++n) seq.push_back(family(std::ldexp(1.0, -n)));
  return sequence_limit(seq);
}

}  // namespace rpf

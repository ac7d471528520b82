#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "rpf/analysis.hpp"
#include "rpf/dense.hpp"

namespace rpf {

/// Class-based representation of an RPF: every outcome is assigned to its
/// mutual-possibility class, carries a log value within that class, and the
/// classes compare through a small RPF whose entries are restricted to
/// {inf, 0, 1, *}. The dense value is recovered as
///   P(h1, h2) = class_order(a(h1), a(h2)) * e^(l(h1) - l(h2)).
struct ClassedRpf {
  int k = 0;
  std::vector<int> assignment;   // outcome -> class id
  std::vector<double> log_value; // outcome -> log value within its class
  DenseRpf class_order;          // class x class comparison table

  int class_count() const { return class_order.size(); }
};

/// Structural checks for a classed form: shapes, the canonical labeling
/// (class ids dense in order of first appearance, the first member of each
/// class at log value 0), and the class-order table being a valid RPF over
/// {inf, 0, 1, *} with 1 only on the diagonal.
inline std::vector<std::string> validate_classed(const ClassedRpf& c) {
  std::vector<std::string> problems;
  const int classes = c.class_count();
  if (static_cast<int>(c.assignment.size()) != c.k)
    problems.push_back("assignment length does not equal outcome count");
  if (static_cast<int>(c.log_value.size()) != c.k)
    problems.push_back("logValue length does not equal outcome count");
  if (!problems.empty()) return problems;

  int seen = 0;
  std::vector<bool> class_started(classes, false);
  for (int h = 0; h < c.k; ++h) {
    const int cls = c.assignment[h];
    if (cls < 0 || cls >= classes) {
      problems.push_back("assignment of outcome " + std::to_string(h) +
                         " is not a class id");
      return problems;
    }
    if (!class_started[cls]) {
      if (cls != seen)
        problems.push_back("class ids are not ordered by first appearance");
      else
        ++seen;
      class_started[cls] = true;
      if (std::fabs(c.log_value[h]) > kLogTolerance)
        problems.push_back("first member of class " + std::to_string(cls) +
                           " must have log value 0");
    }
    if (!std::isfinite(c.log_value[h]))
      problems.push_back("log value of outcome " + std::to_string(h) +
                         " is not finite");
  }
  if (seen != classes)
    problems.push_back("class order table mentions classes with no members");

  for (const AxiomViolation& v : validate(c.class_order))
    problems.push_back("class order: " + v.describe());
  for (int a = 0; a < classes; ++a)
    for (int b = 0; b < classes; ++b) {
      const Magnitude& q = c.class_order(a, b);
      if (q.is_finite() && q != Magnitude::one())
        problems.push_back("class order entry (" + std::to_string(a) + ", " +
                           std::to_string(b) + ") is not in {inf, 0, 1, *}");
      else if (a != b && q == Magnitude::one())
        problems.push_back("distinct classes " + std::to_string(a) + " and " +
                           std::to_string(b) + " compare as equal");
    }
  return problems;
}

/// Converts a valid dense RPF into the classed form. The class ids follow
/// each class's lowest member, which also serves as the log-value base.
inline ClassedRpf to_classed(const DenseRpf& p) {
  const PossibilityClasses pc = possibility_classes(p);
  const int classes = static_cast<int>(pc.classes.size());

  ClassedRpf out;
  out.k = p.size();
  out.assignment.assign(out.k, -1);
  out.log_value.assign(out.k, 0.0);
  out.class_order = DenseRpf(classes);
  for (int c = 0; c < classes; ++c) {
    const int base = pc.classes[c][0];
    for (const int h : pc.classes[c]) {
      out.assignment[h] = c;
      out.log_value[h] = (h == base) ? 0.0 : p(h, base).log_value();
    }
    for (int c2 = 0; c2 < classes; ++c2)
      if (c2 != c) out.class_order.set(c, c2, p(base, pc.classes[c2][0]));
  }
  return out;
}

/// Rebuilds the dense table from a structurally valid classed form.
inline DenseRpf to_dense(const ClassedRpf& c) {
  {
    const std::vector<std::string> problems = validate_classed(c);
    if (!problems.empty())
      throw std::invalid_argument("to_dense: " + problems.front());
  }
  DenseRpf out(c.k);
  for (int i = 0; i < c.k; ++i)
    for (int j = 0; j < c.k; ++j) {
      if (i == j) continue;
      const Magnitude q = c.class_order(c.assignment[i], c.assignment[j]);
      out.set(i, j, q * Magnitude::from_log(c.log_value[i] - c.log_value[j]));
    }
  return out;
}

}  // namespace rpf

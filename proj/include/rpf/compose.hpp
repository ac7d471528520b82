#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "rpf/dense.hpp"
#include "rpf/events.hpp"

namespace rpf {

/// A one-level tree of RPFs: a top-level RPF whose outcomes are the
/// components themselves. Deeper trees are built by composing repeatedly.
struct Composition {
  DenseRpf top;
  std::vector<DenseRpf> components;
};

/// compose() output: the RPF over the disjoint union of component outcomes
/// (component-major order) plus the offset of each component's first
/// outcome, so (component, local index) pairs can be translated.
struct ComposedRpf {
  DenseRpf rpf;
  std::vector<int> offsets;  // one per component, plus the total at the end
};

namespace detail {

inline void check_composition(const Composition& c, const char* who) {
  if (c.top.size() != static_cast<int>(c.components.size()))
    throw std::invalid_argument(std::string(who) +
                                ": top-level outcome count must equal the number of components");
  for (size_t m = 0; m < c.components.size(); ++m) {
    if (c.components[m].size() == 0)
      throw std::invalid_argument(std::string(who) + ": component " + std::to_string(m) +
                                  " is empty");
    if (!totally_comparable(c.components[m]))
      throw std::invalid_argument(std::string(who) + ": component " + std::to_string(m) +
                                  " is not totally comparable");
  }
}

}  // namespace detail

/// Combines component RPFs under a top-level RPF. Within a component the
/// values are untouched; across components (m1, m2) the value is
///   P_m1(h, whole of m1) * P_top(m1, m2) * P_m2(whole of m2, h').
inline ComposedRpf compose(const Composition& c) {
  detail::check_composition(c, "compose");
  const int parts = static_cast<int>(c.components.size());

  ComposedRpf out;
  out.offsets.resize(parts + 1, 0);
  for (int m = 0; m < parts; ++m)
    out.offsets[m + 1] = out.offsets[m] + c.components[m].size();
  const int total = out.offsets[parts];
  out.rpf = DenseRpf(total);

  // P_m(h, whole component), one magnitude per union outcome.
  std::vector<Magnitude> outcome_weight(total);
  for (int m = 0; m < parts; ++m) {
    const DenseRpf& comp = c.components[m];
    const Event whole = Event::universe(comp.size());
    for (int h = 0; h < comp.size(); ++h)
      outcome_weight[out.offsets[m] + h] = event_rel_prob(comp, Event{h}, whole);
  }

  for (int m1 = 0; m1 < parts; ++m1)
    for (int m2 = 0; m2 < parts; ++m2) {
      if (m1 == m2) {
        const DenseRpf& comp = c.components[m1];
        for (int i = 0; i < comp.size(); ++i)
          for (int j = 0; j < comp.size(); ++j)
            if (i != j) out.rpf.set(out.offsets[m1] + i, out.offsets[m1] + j, comp(i, j));
        continue;
      }
      for (int i = 0; i < c.components[m1].size(); ++i)
        for (int j = 0; j < c.components[m2].size(); ++j) {
          const int u = out.offsets[m1] + i;
          const int v = out.offsets[m2] + j;
          out.rpf.set(u, v, outcome_weight[u] * c.top(m1, m2) * inverse(outcome_weight[v]));
        }
    }
  return out;
}

/// The three conditions that together are equivalent to total comparability
/// of the composed RPF: (1) the top level and every component totally
/// comparable, (2) at most one component not totally mutually possible,
/// (3) if such a component exists, every top-level outcome possible with
/// respect to it.
struct ComparabilityReport {
  bool condition1 = false;
  bool condition2 = false;
  bool condition3 = false;
  std::string witness;  // empty when all three hold

  bool all() const { return condition1 && condition2 && condition3; }
};

inline ComparabilityReport total_comparability_conditions(const Composition& c) {
  detail::check_composition(c, "total_comparability_conditions");
  ComparabilityReport report;

  report.condition1 = totally_comparable(c.top);
  if (!report.condition1) report.witness = "top-level RPF has a wildcard entry";
  for (size_t m = 0; m < c.components.size() && report.condition1; ++m)
    if (!totally_comparable(c.components[m])) {
      report.condition1 = false;
      report.witness = "component " + std::to_string(m) + " has a wildcard entry";
    }

  std::vector<int> not_tmp;
  for (size_t m = 0; m < c.components.size(); ++m)
    if (!totally_mutually_possible(c.components[m])) not_tmp.push_back(static_cast<int>(m));

  report.condition2 = not_tmp.size() <= 1;
  if (!report.condition2 && report.witness.empty())
    report.witness = "components " + std::to_string(not_tmp[0]) + " and " +
                     std::to_string(not_tmp[1]) + " both contain impossible outcomes";

  report.condition3 = true;
  if (not_tmp.size() == 1) {
    const int m = not_tmp.front();
    for (int j = 0; j < c.top.size(); ++j)
      if (!possible(c.top, j, m)) {
        report.condition3 = false;
        if (report.witness.empty())
          report.witness = "component " + std::to_string(j) +
                           " is not possible with respect to component " + std::to_string(m);
        break;
      }
  }
  return report;
}

}  // namespace rpf

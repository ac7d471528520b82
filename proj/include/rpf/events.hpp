#pragma once

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <limits>
#include <stdexcept>
#include <vector>

#include "rpf/analysis.hpp"
#include "rpf/catalog.hpp"
#include "rpf/dense.hpp"

namespace rpf {

/// A set of outcome indices. Members are kept sorted and unique; the empty
/// event is legitimate and meaningful.
struct Event {
  std::vector<int> members;

  Event() = default;
  Event(std::initializer_list<int> list) : members(list) { canonicalize(); }
  explicit Event(std::vector<int> list) : members(std::move(list)) { canonicalize(); }

  static Event universe(int k) {
    Event e;
    e.members.resize(k);
    for (int h = 0; h < k; ++h) e.members[h] = h;
    return e;
  }

  bool empty() const { return members.empty(); }

 private:
  void canonicalize() {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
  }
};

namespace detail {

inline void require_totally_comparable(const DenseRpf& p, const char* who) {
  if (!totally_comparable(p))
    throw std::invalid_argument(std::string(who) +
                                ": RPF must be totally comparable (wildcard entries present)");
}

inline void require_members_in_range(const DenseRpf& p, const Event& e, const char* who) {
  for (const int h : e.members)
    if (h < 0 || h >= p.size())
      throw std::out_of_range(std::string(who) + ": event member out of range");
}

}  // namespace detail

/// An anchor of the RPF restricted to the event: a member possible with
/// respect to every other member. Lowest such index; one always exists for
/// a non-empty event of a totally comparable RPF.
inline int internal_anchor(const DenseRpf& p, const Event& e) {
  detail::require_totally_comparable(p, "internal_anchor");
  detail::require_members_in_range(p, e, "internal_anchor");
  if (e.empty()) throw std::invalid_argument("internal_anchor: empty event");
  for (const int a : e.members) {
    bool ok = true;
    for (const int h : e.members)
      if (!possible(p, a, h)) {
        ok = false;
        break;
      }
    if (ok) return a;
  }
  throw std::logic_error("internal_anchor: no internal anchor; input violates the axioms");
}

/// Relative probability of events over a totally comparable RPF:
///   P(e1, e2) = sum over h1 in e1 of 1 / (sum over h2 in e2 of P(h2, h1)),
/// with P({}, {}) = 1 from the identity axiom. Never returns the wildcard.
inline Magnitude event_rel_prob(const DenseRpf& p, const Event& e1, const Event& e2) {
  detail::require_totally_comparable(p, "event_rel_prob");
  detail::require_members_in_range(p, e1, "event_rel_prob");
  detail::require_members_in_range(p, e2, "event_rel_prob");
  if (e1.empty() && e2.empty()) return Magnitude::one();

  Magnitude total = Magnitude::zero();
  for (const int h1 : e1.members) {
    Magnitude denom = Magnitude::zero();
    for (const int h2 : e2.members) denom = denom + p(h2, h1);
    total = total + inverse(denom);
  }
  return total;
}

/// The matching absolute distribution of an anchored RPF:
///   P(h) = P(h, a) / sum over h' of P(h', a)
/// for an anchor a (the lowest-indexed one; the value does not depend on
/// the choice). The sums are evaluated in the log domain.
inline AbsoluteDistribution to_absolute(const DenseRpf& p) {
  if (p.size() == 0)
    throw std::invalid_argument("to_absolute: the empty RPF has no absolute form");
  const std::vector<int> anchors = find_anchors(p);
  if (anchors.empty())
    throw std::invalid_argument("to_absolute: RPF is not anchored");
  const int a = anchors.front();

  const double neg_inf = -std::numeric_limits<double>::infinity();
  std::vector<double> log_weight(p.size(), neg_inf);
  double hi = neg_inf;
  for (int h = 0; h < p.size(); ++h) {
    const Magnitude& m = p(h, a);
    if (m.is_finite()) log_weight[h] = m.log_value();
    hi = std::max(hi, log_weight[h]);
  }
  double scaled_sum = 0.0;
  for (const double lw : log_weight) scaled_sum += std::exp(lw - hi);

  std::vector<double> probs(p.size(), 0.0);
  for (int h = 0; h < p.size(); ++h)
    probs[h] = std::exp(log_weight[h] - hi) / scaled_sum;
  return AbsoluteDistribution(std::move(probs));
}

/// P(e) = P(e, universe), as a plain probability in [0, 1].
inline double absolute_event_prob(const DenseRpf& p, const Event& e) {
  if (p.size() == 0)
    throw std::invalid_argument("absolute_event_prob: needs at least one outcome");
  const Magnitude m = event_rel_prob(p, e, Event::universe(p.size()));
  return std::min(m.linear(), 1.0);
}

}  // namespace rpf

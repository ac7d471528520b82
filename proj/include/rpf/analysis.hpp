#pragma once

#include <algorithm>
#include <numeric>
#include <utility>
#include <vector>

#include "rpf/dense.hpp"

namespace rpf {

namespace detail {

// Minimal union-find; enough for grouping outcomes by mutual possibility.
class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<int> parent_;
};

}  // namespace detail

/// Blocks of the mutual-possibility partition (each sorted, ordered by their
/// lowest member) plus the induced relation between distinct classes:
/// (c1, c2) present when the outcomes of c1 are possible with respect to
/// those of c2. By cross-class constancy the representative choice is
/// immaterial.
struct PossibilityClasses {
  std::vector<std::vector<int>> classes;
  std::vector<std::pair<int, int>> class_dag;
};

inline PossibilityClasses possibility_classes(const DenseRpf& p) {
  const int k = p.size();
  detail::DisjointSets sets(k);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (mutually_possible(p, i, j)) sets.unite(i, j);

  std::vector<int> root_to_class(k, -1);
  PossibilityClasses out;
  for (int h = 0; h < k; ++h) {
    const int root = sets.find(h);
    if (root_to_class[root] < 0) {
      root_to_class[root] = static_cast<int>(out.classes.size());
      out.classes.emplace_back();
    }
    out.classes[root_to_class[root]].push_back(h);
  }

  const int c = static_cast<int>(out.classes.size());
  for (int c1 = 0; c1 < c; ++c1)
    for (int c2 = 0; c2 < c; ++c2)
      if (c1 != c2 && possible(p, out.classes[c1][0], out.classes[c2][0]))
        out.class_dag.emplace_back(c1, c2);
  return out;
}

/// Outcomes possible with respect to every other outcome. Empty when the
/// RPF is not anchored.
inline std::vector<int> find_anchors(const DenseRpf& p) {
  std::vector<int> anchors;
  for (int a = 0; a < p.size(); ++a) {
    bool ok = true;
    for (int h = 0; h < p.size() && ok; ++h) ok = possible(p, a, h);
    if (ok) anchors.push_back(a);
  }
  return anchors;
}

struct ClassificationReport {
  bool totally_comparable = false;
  bool anchored = false;
  bool totally_mutually_possible = false;
  std::vector<int> anchors;
  std::vector<std::vector<int>> classes;
  std::vector<std::pair<int, int>> class_dag;
};

/// Full structural summary of a valid RPF. The empty RPF is vacuously
/// totally comparable and totally mutually possible but has no anchor.
inline ClassificationReport classify(const DenseRpf& p) {
  ClassificationReport report;
  report.totally_comparable = totally_comparable(p);
  report.totally_mutually_possible = totally_mutually_possible(p);
  report.anchors = find_anchors(p);
  report.anchored = !report.anchors.empty();
  PossibilityClasses classes = possibility_classes(p);
  report.classes = std::move(classes.classes);
  report.class_dag = std::move(classes.class_dag);
  return report;
}

}  // namespace rpf

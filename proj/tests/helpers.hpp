#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "rpf/rpf.hpp"

// Shared deterministic generators for the test suites.
namespace rpftest {

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(0x52504620u);
  return gen;
}

inline double uniform_real(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng());
}

inline int uniform_int(int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng());
}

inline rpf::Magnitude random_finite(double log_lo = -6.0, double log_hi = 6.0) {
  return rpf::Magnitude::from_log(uniform_real(log_lo, log_hi));
}

inline rpf::Magnitude random_magnitude(bool include_wildcard = true) {
  switch (uniform_int(0, include_wildcard ? 3 : 2)) {
    case 0: return rpf::Magnitude::zero();
    case 1: return rpf::Magnitude::infinity();
    case 2: return random_finite();
    default: return rpf::Magnitude::wildcard();
  }
}

// A random point of the k-simplex with exactly `zeros` coordinates at 0.
inline std::vector<double> random_simplex(int k, int zeros = 0) {
  std::vector<double> p(k, 0.0);
  double sum = 0.0;
  for (int i = zeros; i < k; ++i) {
    p[i] = -std::log(uniform_real(1e-12, 1.0));
    sum += p[i];
  }
  for (double& v : p) v /= sum;
  std::shuffle(p.begin(), p.end(), rng());
  return p;
}

enum class ClassStructure {
  SingleClass,  // totally mutually possible
  Chain,        // totally ordered classes: totally comparable
  AnyDag,       // random partial order: wildcards allowed
};

// Random valid RPF built from an explicit class structure: a partition of
// the outcomes, log values within each class, and a transitively closed
// order between classes.
inline rpf::DenseRpf random_valid_rpf(int k, ClassStructure structure) {
  if (k == 0) return rpf::empty();

  int blocks = 1;
  if (structure != ClassStructure::SingleClass) blocks = uniform_int(1, k);

  std::vector<int> outcome(k);
  for (int h = 0; h < k; ++h) outcome[h] = h;
  std::shuffle(outcome.begin(), outcome.end(), rng());
  std::vector<std::vector<int>> partition(blocks);
  for (int h = 0; h < k; ++h)
    partition[h < blocks ? h : uniform_int(0, blocks - 1)].push_back(outcome[h]);
  for (auto& block : partition) std::sort(block.begin(), block.end());
  std::sort(partition.begin(), partition.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });

  rpf::ClassedRpf c;
  c.k = k;
  c.assignment.assign(k, 0);
  c.log_value.assign(k, 0.0);
  for (int cls = 0; cls < blocks; ++cls)
    for (const int h : partition[cls]) {
      c.assignment[h] = cls;
      c.log_value[h] = (h == partition[cls].front()) ? 0.0 : uniform_real(-3.0, 3.0);
    }

  // above[a][b]: class a possible with respect to class b (entry inf).
  std::vector<std::vector<bool>> above(blocks, std::vector<bool>(blocks, false));
  for (int a = 0; a < blocks; ++a)
    for (int b = a + 1; b < blocks; ++b)
      above[a][b] = structure == ClassStructure::Chain || uniform_int(0, 1) == 1;
  for (int mid = 0; mid < blocks; ++mid)
    for (int a = 0; a < blocks; ++a)
      for (int b = 0; b < blocks; ++b)
        if (above[a][mid] && above[mid][b]) above[a][b] = true;

  c.class_order = rpf::DenseRpf(blocks);
  for (int a = 0; a < blocks; ++a)
    for (int b = a + 1; b < blocks; ++b)
      c.class_order.set_pair(
          a, b, above[a][b] ? rpf::Magnitude::infinity() : rpf::Magnitude::wildcard());

  return rpf::to_dense(c);
}

inline rpf::DenseRpf random_tmp_rpf(int k) {
  return random_valid_rpf(k, ClassStructure::SingleClass);
}

inline rpf::DenseRpf random_totally_comparable_rpf(int k) {
  return random_valid_rpf(k, ClassStructure::Chain);
}

inline rpf::DenseRpf random_any_rpf(int k) {
  return random_valid_rpf(k, ClassStructure::AnyDag);
}

}  // namespace rpftest

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "helpers.hpp"
#include "rpf/rpf.hpp"

using namespace rpf;
using rpftest::random_any_rpf;
using rpftest::uniform_int;

namespace {

bool has_violation(const std::vector<AxiomViolation>& vs, Axiom axiom, int i, int j = -1,
                   int l = -1) {
  for (const AxiomViolation& v : vs)
    if (v.axiom == axiom && v.i == i && v.j == j && v.l == l) return true;
  return false;
}

}  // namespace

TEST_CASE("validate accepts the uniform table and reports witnesses", "[core]") {
  CHECK(validate(uniform(3)).empty());

  DenseRpf bad_diag = uniform(3);
  bad_diag.set(1, 1, Magnitude::from_linear(2));
  CHECK(has_violation(validate(bad_diag), Axiom::Identity, 1));

  DenseRpf bad_comp(3);
  bad_comp.set_pair(0, 1, Magnitude::from_linear(2));
  bad_comp.set_pair(1, 2, Magnitude::from_linear(3));
  bad_comp.set_pair(0, 2, Magnitude::from_linear(7));
  CHECK(has_violation(validate(bad_comp), Axiom::Composition, 0, 1, 2));
}

TEST_CASE("a perturbed entry is caught with its coordinates", "[core]") {
  DenseRpf p = finite_geometric(4, Magnitude::from_linear(2));
  p.set(2, 1, Magnitude::from_log(p(2, 1).log_value() + 1e-5));
  const std::vector<AxiomViolation> vs = validate(p);
  REQUIRE_FALSE(vs.empty());
  CHECK(has_violation(vs, Axiom::Inverse, 1, 2));
}

TEST_CASE("pairwise comparability and possibility predicates", "[core]") {
  CHECK(mutually_possible(uniform(3), 0, 1));
  CHECK_FALSE(comparable(indeterminate(3), 0, 1));

  const DenseRpf chain = finite_geometric(3, Magnitude::zero());
  CHECK(comparable(chain, 1, 0));
  CHECK_FALSE(possible(chain, 1, 0));
  CHECK(possible(chain, 0, 1));
  CHECK_THROWS_AS(comparable(chain, 0, 3), std::out_of_range);
}

TEST_CASE("possibility classes and their order", "[core]") {
  const PossibilityClasses whole = possibility_classes(uniform(4));
  CHECK(whole.classes == std::vector<std::vector<int>>{{0, 1, 2, 3}});
  CHECK(whole.class_dag.empty());

  const PossibilityClasses chain = possibility_classes(finite_geometric(3, Magnitude::zero()));
  CHECK(chain.classes == std::vector<std::vector<int>>{{0}, {1}, {2}});
  CHECK(chain.class_dag == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}});

  // Two zero-probability outcomes do not join a class: 0/0 is the wildcard.
  const PossibilityClasses split = possibility_classes(from_absolute({0.5, 0.5, 0.0, 0.0}));
  CHECK(split.classes == std::vector<std::vector<int>>{{0, 1}, {2}, {3}});
  CHECK(split.class_dag == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}});
}

TEST_CASE("anchors", "[core]") {
  CHECK(find_anchors(uniform(4)) == std::vector<int>{0, 1, 2, 3});
  CHECK(find_anchors(finite_geometric(3, Magnitude::zero())) == std::vector<int>{0});
  CHECK(find_anchors(certain(3, 1)) == std::vector<int>{1});
  CHECK(find_anchors(indeterminate(2)).empty());
}

TEST_CASE("classification flags", "[core]") {
  const ClassificationReport u = classify(unit());
  CHECK(u.totally_comparable);
  CHECK(u.anchored);
  CHECK(u.totally_mutually_possible);

  const ClassificationReport ind = classify(indeterminate(2));
  CHECK_FALSE(ind.totally_comparable);
  CHECK_FALSE(ind.anchored);
  CHECK_FALSE(ind.totally_mutually_possible);

  const ClassificationReport two_zeros = classify(from_absolute({1.0, 0.0, 0.0}));
  CHECK(two_zeros.anchored);
  CHECK_FALSE(two_zeros.totally_comparable);

  // The empty RPF: vacuously comparable and mutually possible, no anchor.
  const ClassificationReport none = classify(empty());
  CHECK(none.totally_comparable);
  CHECK(none.totally_mutually_possible);
  CHECK_FALSE(none.anchored);
}

TEST_CASE("classify is internally consistent on random inputs", "[core]") {
  for (int trial = 0; trial < 200; ++trial) {
    const DenseRpf p = random_any_rpf(uniform_int(0, 6));
    const ClassificationReport r = classify(p);
    if (r.totally_mutually_possible)
      CHECK(static_cast<int>(r.anchors.size()) == p.size());
    if (r.totally_comparable && p.size() >= 1) CHECK(r.anchored);
    if (r.totally_mutually_possible && p.size() >= 1) CHECK(r.classes.size() == 1);
  }
}

TEST_CASE("cross-class entries are constant and degenerate", "[core]") {
  for (int trial = 0; trial < 100; ++trial) {
    const DenseRpf p = random_any_rpf(uniform_int(1, 8));
    const PossibilityClasses pc = possibility_classes(p);
    for (size_t c1 = 0; c1 < pc.classes.size(); ++c1)
      for (size_t c2 = 0; c2 < pc.classes.size(); ++c2) {
        if (c1 == c2) continue;
        const Magnitude expected = p(pc.classes[c1][0], pc.classes[c2][0]);
        CHECK_FALSE(expected.is_finite());
        for (const int h1 : pc.classes[c1])
          for (const int h2 : pc.classes[c2]) CHECK(p(h1, h2) == expected);
      }
  }
}

TEST_CASE("classed form of the catalog examples", "[core]") {
  const ClassedRpf u = to_classed(uniform(3));
  CHECK(u.class_count() == 1);
  CHECK(u.assignment == std::vector<int>{0, 0, 0});
  for (const double l : u.log_value) CHECK(l == 0.0);
  CHECK(to_dense(u) == uniform(3));

  const ClassedRpf g = to_classed(finite_geometric(3, Magnitude::from_linear(2)));
  CHECK(g.class_count() == 1);
  CHECK(g.log_value[0] == 0.0);
  CHECK(g.log_value[1] == Catch::Approx(std::log(2.0)));
  CHECK(g.log_value[2] == Catch::Approx(std::log(4.0)));

  const ClassedRpf chain = to_classed(finite_geometric(3, Magnitude::zero()));
  CHECK(chain.class_count() == 3);
  CHECK(chain.class_order(0, 1) == Magnitude::infinity());
  CHECK(chain.class_order(2, 0) == Magnitude::zero());
  CHECK(validate(chain.class_order).empty());
}

TEST_CASE("classed round trip over generators", "[core]") {
  for (int trial = 0; trial < 150; ++trial) {
    const DenseRpf p = random_any_rpf(uniform_int(0, 7));
    const ClassedRpf c = to_classed(p);
    CHECK(validate_classed(c).empty());
    CHECK(to_dense(c) == p);
  }
  CHECK(to_dense(to_classed(empty())) == empty());
  CHECK(to_dense(to_classed(unit())) == unit());
  CHECK(to_dense(to_classed(indeterminate(4))) == indeterminate(4));
}

TEST_CASE("structural checks on the classed form", "[core]") {
  const ClassedRpf c = to_classed(finite_geometric(3, Magnitude::zero()));

  ClassedRpf shifted = c;
  shifted.log_value[1] = 0.5;  // class base must sit at log 0
  CHECK_FALSE(validate_classed(shifted).empty());

  ClassedRpf equal_classes = c;
  equal_classes.class_order.set_pair(0, 1, Magnitude::one());
  CHECK_FALSE(validate_classed(equal_classes).empty());

  ClassedRpf bad_assignment = c;
  bad_assignment.assignment[2] = 7;
  CHECK_FALSE(validate_classed(bad_assignment).empty());
  CHECK_THROWS_AS(to_dense(bad_assignment), std::invalid_argument);
}

TEST_CASE("matched-by relation on tables", "[core]") {
  for (int trial = 0; trial < 50; ++trial) {
    const DenseRpf p = random_any_rpf(uniform_int(0, 5));
    CHECK(matched_by(p, indeterminate(p.size())));
    CHECK(matched_by(p, p));
  }
  CHECK_FALSE(matched_by(indeterminate(2), uniform(2)));
  CHECK_THROWS_AS(matched_by(uniform(2), uniform(3)), std::invalid_argument);
}

TEST_CASE("path composition", "[core]") {
  const std::vector<int> path = {0, 1, 2, 3};
  CHECK(check_path_composition(uniform(4), path));

  const std::vector<int> single = {0};
  CHECK(check_path_composition(uniform(4), single));

  const DenseRpf g = finite_geometric(4, Magnitude::from_linear(3));
  const std::vector<int> down = {3, 2, 1, 0};
  CHECK(g(3, 0) == Magnitude::from_linear(27));
  CHECK(check_path_composition(g, down));
  CHECK(check_path_composition(g, path));

  CHECK_THROWS_AS(check_path_composition(uniform(2), std::vector<int>{}),
                  std::invalid_argument);

  for (int trial = 0; trial < 100; ++trial) {
    const DenseRpf p = random_any_rpf(uniform_int(1, 6));
    std::vector<int> walk(uniform_int(1, 6));
    for (int& h : walk) h = uniform_int(0, p.size() - 1);
    CHECK(check_path_composition(p, walk));
  }
}

TEST_CASE("a two-outcome RPF is determined by its off-diagonal entry", "[core]") {
  for (int trial = 0; trial < 200; ++trial) {
    const Magnitude q = rpftest::random_magnitude();
    DenseRpf p(2);
    p.set_pair(0, 1, q);
    CHECK(validate(p).empty());
    CHECK(p(1, 0) == inverse(q));
  }
}

TEST_CASE("the empty RPF is a valid degenerate case", "[core]") {
  CHECK(validate(empty()).empty());
  CHECK(empty().size() == 0);
  CHECK(possibility_classes(empty()).classes.empty());
}

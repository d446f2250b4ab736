#include <doctest.h>

#include <algorithm>

#include "choicekit/choice.hpp"
#include "testing.hpp"

using namespace choicekit;
using cktest::vec;
using cktest::vecs;

namespace {

ChoiceModel pareto_model() {
  return ChoiceModel::from_cones(
      {make_cone(vecs({{1, 0}}), 2), make_cone(vecs({{0, 1}}), 2)});
}

ChoiceModel assessment_model(
    std::initializer_list<std::initializer_list<std::initializer_list<long>>> sets, int dim) {
  AssessmentFamily f;
  f.dim = dim;
  for (const auto& s : sets) f.basis.push_back(FinitePoints{cktest::vecs(s)});
  return ChoiceModel::from_assessment(std::move(f));
}

}  // namespace

TEST_CASE("choosing with cones and with assessments on the pinned examples") {
  const ChoiceModel orthant =
      ChoiceModel::from_cones({make_cone(vecs({{1, 0}, {0, 1}}), 2)});
  CHECK(choose(orthant, vecs({{0, 0}, {1, 0}, {0, 1}})) == vecs({{0, 1}, {1, 0}}));

  const ChoiceModel assessed = assessment_model({{{1, 0}}}, 2);
  CHECK(choose(assessed, vecs({{0, 0}, {1, 0}})) == vecs({{1, 0}}));

  const ChoiceModel empty = assessment_model({}, 2);
  const auto everything = vecs({{0, 0}, {1, 0}, {-3, 2}});
  CHECK(choose(empty, everything) == sorted_unique(everything));

  CHECK_THROWS_AS(choose(orthant, {}), EmptyOptionSetError);
  CHECK_THROWS_AS(ChoiceModel::from_cones({}), EmptyOrderSetError);
  CHECK_THROWS_AS(
      ChoiceModel::from_assessment(
          AssessmentFamily{2, {FinitePoints{vecs({{1, 0}})}, FinitePoints{vecs({{-1, 0}})}}}),
      InconsistentAssessmentError);
}

TEST_CASE("zero rejection on the pinned examples") {
  const ChoiceModel assessed = assessment_model({{{1, 0}}}, 2);
  CHECK(rejects_zero(assessed, vecs({{1, 0}})));
  CHECK_FALSE(rejects_zero(assessed, vecs({{0, 1}})));

  const ChoiceModel ray = ChoiceModel::from_cones({make_cone(vecs({{1, 0}}), 2)});
  CHECK_FALSE(rejects_zero(ray, vecs({{-1, 0}})));
}

TEST_CASE("zero rejection equals extension membership") {
  cktest::Rng rng(5050);
  for (int trial = 0; trial < 8; ++trial) {
    const int dim = rng.uniform(1, 3);
    AssessmentFamily f = rng.consistent_family(dim, 3, 2);
    const ChoiceModel m = ChoiceModel::from_assessment(f);
    for (int q = 0; q < 4; ++q) {
      const std::vector<Vec> a = sorted_unique(rng.vectors(dim, rng.uniform(1, 4)));
      CHECK(rejects_zero(m, a) == in_natural_extension(f, OptionSet(FinitePoints{a})));
    }
  }
}

TEST_CASE("binarity of single-order models and the two-cone counterexample") {
  const ChoiceModel single =
      ChoiceModel::from_cones({make_cone(vecs({{1, 0}, {0, 1}}), 2)});
  const auto universe = vecs({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  CHECK(is_binary_on(single, universe, 4).binary);

  const auto pair_only = is_binary_on(pareto_model(), vecs({{1, 0}, {0, 1}}), 2);
  CHECK(pair_only.binary);

  const auto broken = is_binary_on(pareto_model(), vecs({{0, 0}, {1, 0}, {0, 1}}), 3);
  REQUIRE_FALSE(broken.binary);
  CHECK(broken.counterexample_set == vecs({{0, 0}, {0, 1}, {1, 0}}));
  CHECK(*broken.counterexample_option == vec({0, 0}));
}

TEST_CASE("order extraction on the pinned examples") {
  const ChoiceModel orthant =
      ChoiceModel::from_cones({make_cone(vecs({{1, 0}, {0, 1}}), 2)});
  const auto probes = vecs({{1, 0}, {0, 1}, {-1, 0}, {1, 1}});
  const Cone extracted = extract_order(orthant, probes);
  CHECK(extracted.generators().size() == 3);  // (1,0),(0,1),(1,1)
  for (const auto& u : probes) {
    for (const auto& v : probes) {
      if (u == v) continue;
      const std::vector<Vec> pair{u, v};
      const auto chosen = choose(orthant, pair);
      const bool u_rejected = !std::binary_search(chosen.begin(), chosen.end(), u);
      CHECK(dominates(extracted, v, u) == u_rejected);
    }
  }

  const ChoiceModel vacuous = ChoiceModel::from_cones({make_cone({}, 2)});
  CHECK(extract_order(vacuous, probes).is_empty());

  // (1,1) is beaten by (2,1) under the first cone and by (1,2) under the
  // second, yet survives both pairs.
  CHECK_THROWS_AS(extract_order(pareto_model(), vecs({{1, 1}, {2, 1}, {1, 2}})),
                  NotBinaryError);
  CHECK_THROWS_AS(extract_order(orthant, vecs({{0, 0}, {1, 0}})), Error);
}

TEST_CASE("extraction round-trips single-cone models") {
  cktest::Rng rng(60660);
  for (int trial = 0; trial < 6; ++trial) {
    const int dim = rng.uniform(1, 3);
    const Cone d = rng.cone(dim, 3);
    const ChoiceModel m = ChoiceModel::from_cones({d});
    std::vector<Vec> probes(d.generators().begin(), d.generators().end());
    while (probes.size() < 5) probes.push_back(rng.nonzero_vector(dim));
    probes = sorted_unique(std::move(probes));

    const Cone extracted = extract_order(m, probes);
    for (const auto& g : d.generators()) {
      CHECK(std::binary_search(extracted.generators().begin(),
                               extracted.generators().end(), g));
    }
    for (const auto& u : probes) {
      for (const auto& v : probes) {
        if (u == v) continue;
        const std::vector<Vec> pair{u, v};
        const auto chosen = choose(m, pair);
        const bool u_rejected = !std::binary_search(chosen.begin(), chosen.end(), u);
        CHECK(dominates(extracted, v, u) == u_rejected);
      }
    }
  }
}

TEST_CASE("representation reproduces the assessment's choices") {
  cktest::Rng rng(111213);
  for (int trial = 0; trial < 8; ++trial) {
    const int dim = rng.uniform(1, 3);
    AssessmentFamily f = rng.consistent_family(dim, 3, 3);
    const ChoiceModel assessed = ChoiceModel::from_assessment(f);
    const std::vector<Cone> cones = represent(assessed);
    if (cones.empty()) continue;  // empty basis: nothing to compare against
    const ChoiceModel conic = ChoiceModel::from_cones(cones);
    for (int q = 0; q < 6; ++q) {
      const std::vector<Vec> a = rng.vectors(dim, rng.uniform(1, 5));
      CHECK(choose(assessed, a) == choose(conic, a));
    }
  }
}

TEST_CASE("representation agrees on the pinned families") {
  const ChoiceModel axes = assessment_model({{{1, 0}}, {{0, 1}}}, 2);
  const auto cones = represent(axes);
  REQUIRE(cones.size() == 1);
  CHECK(cones[0] == make_cone(vecs({{1, 0}, {0, 1}}), 2));
  const ChoiceModel conic = ChoiceModel::from_cones(cones);
  const auto probe = vecs({{0, 0}, {1, 0}, {0, 1}, {1, 1}, {-1, -1}});
  CHECK(choose(axes, probe) == choose(conic, probe));

  CHECK_THROWS_AS(represent(pareto_model()), Error);
}

TEST_CASE("choice axioms hold for cone and assessment models") {
  const std::vector<std::vector<Vec>> probe_sets{
      vecs({{1, 0}}), vecs({{0, 0}, {1, 0}}), vecs({{1, 0}, {0, 1}, {-1, -1}})};
  const auto translations = vecs({{1, 1}, {-1, 2}});
  const std::vector<Rational> grid{Rational(1, 2), Rational(2)};

  const ChoiceModel ray = ChoiceModel::from_cones({make_cone(vecs({{1, 0}}), 2)});
  const auto r1 = check_choice_axioms(ray, probe_sets, translations, grid);
  INFO(r1.first_violation);
  CHECK(r1.all_pass());

  const ChoiceModel assessed = assessment_model({{{1, 0}}, {{0, 1}}}, 2);
  const auto r2 = check_choice_axioms(assessed, probe_sets, translations, grid);
  INFO(r2.first_violation);
  CHECK(r2.all_pass());

  const ChoiceModel empty = assessment_model({}, 2);
  const auto r3 = check_choice_axioms(empty, probe_sets, translations, grid);
  CHECK(r3.all_pass());
}

TEST_CASE("choice axioms hold on random models") {
  cktest::Rng rng(141414);
  const std::vector<Rational> grid{Rational(1), Rational(3)};
  for (int trial = 0; trial < 5; ++trial) {
    const int dim = rng.uniform(1, 3);
    std::vector<std::vector<Vec>> probe_sets;
    for (int i = 0; i < 3; ++i) probe_sets.push_back(rng.vectors(dim, rng.uniform(1, 3)));
    const auto translations = rng.vectors(dim, 2);

    std::vector<Cone> cones;
    const int ncones = rng.uniform(1, 2);
    for (int i = 0; i < ncones; ++i) cones.push_back(rng.cone(dim, 3));
    const ChoiceModel m = ChoiceModel::from_cones(std::move(cones));
    const auto report = check_choice_axioms(m, probe_sets, translations, grid);
    INFO(report.first_violation);
    CHECK(report.all_pass());

    const ChoiceModel assessed =
        ChoiceModel::from_assessment(rng.consistent_family(dim, 2, 2));
    const auto report2 = check_choice_axioms(assessed, probe_sets, translations, grid);
    INFO(report2.first_violation);
    CHECK(report2.all_pass());
  }
}

TEST_CASE("rule compatibility of models matches the per-variant semantics") {
  const RuleSet want_x{2, {Rule{{}, OptionSet(FinitePoints{vecs({{1, 0}})})}}};
  CHECK(model_compatible(ChoiceModel::from_cones({make_cone(vecs({{1, 0}}), 2)}), want_x)
            .compatible);
  // The second cone misses (1,0), so the intersection structure rejects it.
  CHECK_FALSE(model_compatible(pareto_model(), want_x).compatible);

  const ChoiceModel assessed = assessment_model({{{1, 0}}}, 2);
  CHECK(model_compatible(assessed, want_x).compatible);
}

TEST_CASE("choose never returns the empty set") {
  cktest::Rng rng(171717);
  for (int trial = 0; trial < 10; ++trial) {
    const int dim = rng.uniform(1, 3);
    const ChoiceModel m =
        trial % 2 == 0
            ? ChoiceModel::from_cones({rng.cone(dim, 4), rng.cone(dim, 4)})
            : ChoiceModel::from_assessment(rng.consistent_family(dim, 3, 2));
    const std::vector<Vec> a = rng.vectors(dim, rng.uniform(1, 5));
    CHECK(!choose(m, a).empty());
  }
}

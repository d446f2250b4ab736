#include <doctest.h>

#include "choicekit/rules.hpp"
#include "testing.hpp"

using namespace choicekit;
using cktest::vec;
using cktest::vecs;

namespace {

OptionSet finite(std::initializer_list<std::initializer_list<long>> pts) {
  return OptionSet(FinitePoints{vecs(pts)});
}

Rule premise_free(OptionSet conclusion) { return Rule{{}, std::move(conclusion)}; }

}  // namespace

TEST_CASE("finite sets meet a cone through a member point") {
  const Cone ray = make_cone(vecs({{1, 0}}), 2);
  CHECK(optset_meets_cone(finite({{1, 0}, {0, 1}}), ray));
  CHECK_FALSE(optset_meets_cone(finite({{0, 1}, {0, 0}}), ray));
}

TEST_CASE("positive hulls meet a cone through a joint combination") {
  const Cone up = make_cone(vecs({{0, 1}}), 2);
  // (1,1) + (-1,1) lands on the vertical axis.
  CHECK(optset_meets_cone(OptionSet(PosiHull{vecs({{1, 1}, {-1, 1}})}), up));
  CHECK_FALSE(optset_meets_cone(OptionSet(PosiHull{vecs({{1, 1}, {1, -1}})}), up));
  // Opposite points span only the origin inside the cone's plane.
  CHECK_FALSE(optset_meets_cone(OptionSet(PosiHull{vecs({{1, 0}, {-1, 0}})}), up));
  const Cone empty = make_cone({}, 2);
  CHECK_FALSE(optset_meets_cone(OptionSet(PosiHull{vecs({{1, 0}})}), empty));
}

TEST_CASE("hulls meet whenever one of their points is a member") {
  cktest::Rng rng(2024);
  for (int trial = 0; trial < 12; ++trial) {
    const int dim = rng.uniform(1, 3);
    const Cone d = rng.cone(dim, 4);
    std::vector<Vec> pts;
    const int n = rng.uniform(1, 3);
    for (int i = 0; i < n; ++i) pts.push_back(rng.nonzero_vector(dim));
    const bool pointwise = std::any_of(pts.begin(), pts.end(),
                                       [&d](const Vec& u) { return cone_contains(d, u); });
    if (pointwise) CHECK(optset_meets_cone(OptionSet(PosiHull{pts}), d));
  }
}

TEST_CASE("open rays meet a cone only past the base") {
  const Cone ray = make_cone(vecs({{1, 0}}), 2);
  CHECK_FALSE(optset_meets_cone(OptionSet(OpenRay{vec({1, 0}), vec({-1, -1})}), ray));
  const Cone diag = make_cone(vecs({{1, 1}}), 2);
  CHECK(optset_meets_cone(OptionSet(OpenRay{vec({1, 1}), vec({-1, -1})}), diag));
  // The ray from (-1,0) through the origin touches the cone's span at zero
  // only, which is not a member.
  const Cone up = make_cone(vecs({{0, 1}}), 2);
  CHECK_FALSE(optset_meets_cone(OptionSet(OpenRay{vec({-1, 0}), vec({1, 0})}), up));
  // Entering the upper half-plane along the same line does meet.
  CHECK(optset_meets_cone(OptionSet(OpenRay{vec({0, -1}), vec({0, 1})}), up));
  // Unbounded along the cone.
  CHECK(optset_meets_cone(OptionSet(OpenRay{vec({-1, 0}), vec({1, 0})}),
                          make_cone(vecs({{1, 0}}), 2)));
}

TEST_CASE("rule compatibility on the pinned examples") {
  const RuleSet want_x{2, {premise_free(finite({{1, 0}}))}};
  CHECK(d_compatible(make_cone(vecs({{1, 0}, {0, 1}}), 2), want_x).compatible);

  const auto bad = d_compatible(make_cone(vecs({{1, 1}}), 2), want_x);
  CHECK_FALSE(bad.compatible);
  CHECK(bad.witness == 0);

  const RuleSet vacuous{2, {Rule{{finite({{0, 1}})}, std::nullopt}}};
  CHECK(d_compatible(make_cone(vecs({{1, 0}}), 2), vacuous).compatible);

  const RuleSet impossible{2, {Rule{{finite({{1, 0}})}, std::nullopt}}};
  CHECK_FALSE(d_compatible(make_cone(vecs({{1, 0}}), 2), impossible).compatible);
}

TEST_CASE("monotonification unions the extra set everywhere") {
  const Rule r{{finite({{1, 0}})}, finite({{0, 1}})};
  const Rule out = monotonify_rule(r, FinitePoints{vecs({{5, 5}})});
  CHECK(out.premises.size() == 1);
  CHECK(out.premises[0] == finite({{1, 0}, {5, 5}}));
  CHECK(*out.conclusion == finite({{0, 1}, {5, 5}}));

  CHECK_THROWS_AS(monotonify_rule(premise_free(finite({{1, 0}})), FinitePoints{vecs({{1, 1}})}),
                  PremiseFreeError);

  const Rule empty_conclusion{{finite({{1, 0}}), finite({{0, 1}})}, std::nullopt};
  const Rule ext = monotonify_rule(empty_conclusion, FinitePoints{vecs({{1, 1}})});
  CHECK(ext.premises[0] == finite({{1, 0}, {1, 1}}));
  CHECK(ext.premises[1] == finite({{0, 1}, {1, 1}}));
  CHECK(*ext.conclusion == finite({{1, 1}}));
}

TEST_CASE("monotonifying a hull premise produces a union set") {
  const Rule r{{OptionSet(PosiHull{vecs({{1, 0}})})}, finite({{1, 0}})};
  const Rule out = monotonify_rule(r, FinitePoints{vecs({{7, 7}})});
  CHECK(out.premises[0].pieces().size() == 2);
  CHECK(out.premises[0].as_finite() == nullptr);
  // The union set meets a cone whenever either part does.
  const Cone diag = make_cone(vecs({{7, 7}}), 2);
  CHECK(optset_meets_cone(out.premises[0], diag));
}

TEST_CASE("compatibility is unchanged by monotonified rules") {
  cktest::Rng rng(90210);
  for (int trial = 0; trial < 25; ++trial) {
    const int dim = rng.uniform(1, 3);
    const Cone d = rng.cone(dim, 4);

    RuleSet rs{dim, {}};
    const int nrules = rng.uniform(1, 3);
    for (int i = 0; i < nrules; ++i) {
      Rule r;
      const int nprem = rng.uniform(1, 2);
      for (int p = 0; p < nprem; ++p) {
        r.premises.push_back(OptionSet(FinitePoints{{rng.vector(dim), rng.vector(dim)}}));
      }
      if (rng.uniform(0, 5) == 0) {
        r.conclusion = std::nullopt;
      } else {
        r.conclusion = OptionSet(FinitePoints{{rng.vector(dim), rng.vector(dim)}});
      }
      rs.rules.push_back(std::move(r));
    }

    RuleSet extended = rs;
    for (int k = 0; k < 5; ++k) {
      const FinitePoints extra{{rng.vector(dim), rng.vector(dim)}};
      for (const auto& r : rs.rules) {
        extended.rules.push_back(monotonify_rule(r, extra));
      }
    }
    CHECK(d_compatible(d, rs).compatible == d_compatible(d, extended).compatible);
  }
}

TEST_CASE("scheme instantiation matches the definitions") {
  SchemeParams totality;
  totality.probes = vecs({{1, 0}});
  const RuleSet rt = instantiate_scheme(Scheme::totality, totality, 2);
  REQUIRE(rt.rules.size() == 1);
  CHECK(rt.rules[0].premises.empty());
  CHECK(*rt.rules[0].conclusion == finite({{1, 0}, {-1, 0}}));

  SchemeParams weak2;
  weak2.pairs = {{vec({1, 0}), vec({0, 1})}};
  const RuleSet rw2 = instantiate_scheme(Scheme::weak2, weak2, 2);
  REQUIRE(rw2.rules.size() == 1);
  CHECK(rw2.rules[0].premises[0] == finite({{1, 1}}));
  CHECK(*rw2.rules[0].conclusion == finite({{1, 0}, {0, 1}}));

  SchemeParams mixing;
  mixing.finite_sets = {vecs({{1, 0}, {-1, 1}})};
  const RuleSet rm = instantiate_scheme(Scheme::mixing, mixing, 2);
  REQUIRE(rm.rules.size() == 1);
  CHECK(rm.rules[0].premises[0] == OptionSet(PosiHull{vecs({{1, 0}, {-1, 1}})}));
  CHECK(*rm.rules[0].conclusion == finite({{1, 0}, {-1, 1}}));

  SchemeParams arch;
  arch.probes = vecs({{2, 1}});
  const RuleSet ra = instantiate_scheme(Scheme::archimedean, arch, 2);
  REQUIRE(ra.rules.size() == 1);
  CHECK(ra.rules[0].premises[0] == finite({{2, 1}}));
  CHECK(*ra.rules[0].conclusion == OptionSet(OpenRay{vec({2, 1}), vec({-1, -1})}));

  SchemeParams coh;
  coh.probes = vecs({{0, 1}});
  CHECK_THROWS_AS(instantiate_scheme(Scheme::coherence, coh, 2), InvalidProbeError);
  coh.variant = CoherenceVariant::nonneg_nonzero;
  CHECK_NOTHROW(instantiate_scheme(Scheme::coherence, coh, 2));

  CHECK_THROWS_AS(scheme_from_name("no-such-scheme"), UnknownSchemeError);
  CHECK(scheme_from_name("weak2") == Scheme::weak2);
}

TEST_CASE("exact coherence agrees with the pinned examples") {
  CHECK(coherent_exact(make_cone(vecs({{1, 0}, {0, 1}}), 2), CoherenceVariant::strict_positive));
  CHECK_FALSE(coherent_exact(make_cone(vecs({{1, 1}}), 2), CoherenceVariant::strict_positive));
  CHECK_FALSE(coherent_exact(make_cone({}, 2), CoherenceVariant::strict_positive));
}

TEST_CASE("exact archimedeanity agrees with the pinned examples") {
  CHECK(archimedean_exact(make_cone(vecs({{1, 1}}), 2)));
  CHECK_FALSE(archimedean_exact(make_cone(vecs({{1, 0}}), 2)));
  CHECK(archimedean_exact(make_cone(vecs({{2, 1}, {1, 2}}), 2)));
  CHECK(archimedean_exact(make_cone({}, 2)));
}

TEST_CASE("exact scheme decisions agree with probe instantiation") {
  cktest::Rng rng(606);
  for (int trial = 0; trial < 12; ++trial) {
    const int dim = rng.uniform(1, 3);
    const Cone d = rng.cone(dim, 4);

    SchemeParams coh;
    coh.variant = CoherenceVariant::nonneg_nonzero;
    for (int i = 0; i < dim; ++i) coh.probes.push_back(Vec::unit(dim, i));
    for (int i = 0; i < 20; ++i) coh.probes.push_back(rng.strictly_positive_vector(dim));
    const bool coherent = coherent_exact(d, CoherenceVariant::nonneg_nonzero);
    // The basis vectors are among the probes, so the instantiated rule set
    // decides coherence exactly here.
    CHECK(coherent ==
          d_compatible(d, instantiate_scheme(Scheme::coherence, coh, dim)).compatible);

    SchemeParams arch;
    arch.probes.assign(d.generators().begin(), d.generators().end());
    const bool archimedean = archimedean_exact(d);
    CHECK(archimedean ==
          d_compatible(d, instantiate_scheme(Scheme::archimedean, arch, dim)).compatible);
  }
}

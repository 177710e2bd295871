#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "infoclust/featsel.hpp"

using namespace infoclust;
using namespace testutil;

namespace {

FeatureProblem problem(const std::string& fixture) {
    LoadedModel lm = load_fixture(fixture);
    REQUIRE(lm.dependent.has_value());
    return FeatureProblem::make(lm.model, *lm.dependent);
}

} // namespace

TEST_CASE("objective and penalty") {
    FeatureProblem p = problem("example_a.json");
    CHECK(p.num_features() == 2);
    CHECK(p.features_independent());
    CHECK(objective(p, Subset::empty_of(2)) == V(0));
    CHECK(objective(p, Subset::single(0, 2)) == V(2));
    CHECK(objective(p, Subset::single(1, 2)) == V(1));
    CHECK(objective(p, Subset::full_of(2)) == V(3));
    CHECK(penalized(p, Subset::full_of(2), V(1)) == V(1));
    CHECK(penalized(p, Subset::single(0, 2), V(3, 2)) == V(1, 2));
}

TEST_CASE("relaxed selection over all thresholds") {
    FeatureProblem p = problem("example_a.json");

    RelaxResult r = relax_optimize(p, V(1));
    CHECK(r.value == V(1));
    REQUIRE(r.optimal.size() == 2);
    CHECK(r.minimal == Subset::single(0, 2));
    CHECK(r.maximal == Subset::full_of(2));

    r = relax_optimize(p, V(3, 2));
    CHECK(r.value == V(1, 2));
    REQUIRE(r.optimal.size() == 1);
    CHECK(r.optimal[0] == Subset::single(0, 2));

    // Below zero the full set is the unique winner; past the last
    // breakpoint the empty set is.
    r = relax_optimize(p, V(-1));
    REQUIRE(r.optimal.size() == 1);
    CHECK(r.optimal[0] == Subset::full_of(2));
    r = relax_optimize(p, V(10));
    REQUIRE(r.optimal.size() == 1);
    CHECK(r.optimal[0] == Subset::empty_of(2));
}

TEST_CASE("size-constrained selection") {
    FeatureProblem p = problem("example_c.json");
    SizeConstrainedResult r = size_constrained(p, 2);
    CHECK(r.value == V(4, 3));
    REQUIRE(r.argmax.size() == 1);
    CHECK(r.argmax[0] == Subset::of({0, 3}, 4)); // X1 and X4
    CHECK(p.feature_set_str(r.argmax[0]) == "{X1,X4}");

    CHECK(size_constrained(p, 0).value == V(0));
    CHECK(size_constrained(p, 4).value == V(7, 3));
    CHECK_THROWS_AS((void)size_constrained(p, 5), BadSize);
    CHECK_THROWS_AS((void)size_constrained(p, -1), BadSize);
}

TEST_CASE("principal partition of the two-feature fixture") {
    FeatureProblem p = problem("example_a.json");
    PpResult r = pp(p);
    REQUIRE(r.breakpoints.size() == 2);
    CHECK(r.breakpoints[0] == V(1));
    CHECK(r.breakpoints[1] == V(2));
    CHECK(r.tangent_values[0] == V(1));
    CHECK(r.tangent_values[1] == V(0));
    REQUIRE(r.regions.size() == 3);
    CHECK(r.regions[0].maximal == Subset::full_of(2));
    CHECK(r.regions[1].maximal == Subset::single(0, 2));
    CHECK(r.regions[2].maximal == Subset::empty_of(2));
    CHECK(r.at_breakpoints[0].contains(Subset::full_of(2)));
    CHECK(r.at_breakpoints[0].contains(Subset::single(0, 2)));
    CHECK_FALSE(r.at_breakpoints[0].contains(Subset::single(1, 2)));
}

TEST_CASE("a size-constrained winner can miss the principal partition") {
    FeatureProblem p = problem("example_c.json");
    PpResult r = pp(p);
    REQUIRE(r.breakpoints.size() == 3);
    CHECK(r.breakpoints[0] == V(1, 3));
    CHECK(r.breakpoints[1] == V(1, 2));
    CHECK(r.breakpoints[2] == V(1));
    CHECK(r.tangent_values[0] == V(1));
    CHECK(r.tangent_values[1] == V(1, 2));
    CHECK(r.tangent_values[2] == V(0));
    REQUIRE(r.regions.size() == 4);
    CHECK(r.regions[0].maximal == Subset::full_of(4));
    CHECK(r.regions[1].maximal == Subset::of({0, 1, 2}, 4));
    CHECK(r.regions[2].maximal == Subset::single(0, 4));
    CHECK(r.regions[3].maximal == Subset::empty_of(4));

    // The best pair {X1,X4} never appears anywhere in the lattice.
    Subset pair = Subset::of({0, 3}, 4);
    for (const auto& fam : r.regions)
        CHECK_FALSE(fam.contains(pair));
    for (const auto& fam : r.at_breakpoints)
        CHECK_FALSE(fam.contains(pair));
}

TEST_CASE("optimizer families are lattices and shrink with gamma") {
    std::mt19937 gen(47);
    for (int trial = 0; trial < 30; ++trial) {
        FeatureProblem p = random_independent_problem(gen, pick(gen, 1, 5));
        Value gamma = random_gamma(gen);
        RelaxResult r = relax_optimize(p, gamma);
        for (const auto& b1 : r.optimal) {
            CHECK(r.minimal.subset_of(b1));
            CHECK(b1.subset_of(r.maximal));
            for (const auto& b2 : r.optimal) {
                CHECK(penalized(p, b1 | b2, gamma) == r.value);
                CHECK(penalized(p, b1 & b2, gamma) == r.value);
            }
        }
        RelaxResult later = relax_optimize(p, gamma + V(1, 3));
        CHECK(later.maximal.subset_of(r.minimal));
    }
}

TEST_CASE("relaxed and size-constrained optima meet at every threshold") {
    for (const char* name :
         {"example_a.json", "example_b.json", "example_c.json", "example_d.json"}) {
        FeatureProblem p = problem(name);
        for (long num = 0; num <= 8; ++num) {
            LagrangianReport rep = check_lagrangian_link(p, V(num, 4));
            CHECK(rep.pass);
            CHECK_FALSE(rep.entries.empty());
        }
    }
}

TEST_CASE("supermodularity of the objective") {
    CHECK(check_supermodular_objective(problem("example_a.json")) ==
          Supermodularity::holds);
    CHECK(check_supermodular_objective(problem("example_c.json")) ==
          Supermodularity::holds);

    FeatureProblem d = problem("example_d.json");
    CHECK_FALSE(d.features_independent());
    CHECK(check_supermodular_objective(d) == Supermodularity::not_applicable);

    std::mt19937 gen(53);
    for (int trial = 0; trial < 15; ++trial) {
        FeatureProblem p = random_independent_problem(gen, pick(gen, 1, 5));
        CHECK(check_supermodular_objective(p) == Supermodularity::holds);
    }
}

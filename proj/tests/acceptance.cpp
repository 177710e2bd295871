// Acceptance gate: one line per criterion, PASS or FAIL, nonzero exit on
// any failure. Runs against the checked-in fixtures plus randomized
// cross-validation between the incremental and brute-force routes.

#include <cstdlib>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "infoclust/duality.hpp"
#include "infoclust/model_io.hpp"

using namespace infoclust;

namespace {

int g_failed = 0;

struct Criterion {
    int id;
    std::string title;
    bool ok = true;
    std::vector<std::string> notes;

    Criterion(int id, std::string title) : id(id), title(std::move(title)) {}

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            notes.push_back(what);
        }
    }

    ~Criterion() {
        std::cout << (ok ? "PASS" : "FAIL") << " [" << id << "] " << title << "\n";
        for (const auto& note : notes)
            std::cout << "       - " << note << "\n";
        if (!ok)
            ++g_failed;
    }
};

Value V(long num, long den = 1) { return Value::exact(num, den); }

LoadedModel fixture(const std::string& name) {
    return load_model_file(std::string(FIXTURES_DIR) + "/" + name);
}

FeatureProblem problem(const LoadedModel& lm) {
    return FeatureProblem::make(lm.model, *lm.dependent);
}

std::string vs(const Value& v) { return v.str(); }

int pick(std::mt19937& gen, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(gen);
}

mpq_class random_weight(std::mt19937& gen) {
    mpq_class q(pick(gen, 1, 5), pick(gen, 1, 4));
    q.canonicalize();
    return q;
}

SourceModel random_model(std::mt19937& gen, int n) {
    int num_bits = pick(gen, 1, 5);
    int num_atoms = pick(gen, 0, 2);
    LinearAtomicSource src;
    std::vector<std::string> names;
    for (int i = 0; i < num_bits; ++i)
        src.bit_names.push_back("W" + std::to_string(i + 1));
    for (int a = 0; a < num_atoms; ++a) {
        src.atom_names.push_back("A" + std::to_string(a + 1));
        src.atom_weights.push_back(random_weight(gen));
    }
    for (int v = 0; v < n; ++v) {
        names.push_back("Z" + std::to_string(v + 1));
        LinearAtomicSource::VariableDef def;
        for (int c = pick(gen, 0, 3); c > 0; --c)
            def.combos.push_back(pick(gen, 1, (1 << num_bits) - 1));
        if (num_atoms > 0)
            def.atoms = pick(gen, 0, (1 << num_atoms) - 1);
        src.defs.push_back(def);
    }
    return SourceModel(GroundSet(names), std::move(src));
}

FeatureProblem random_independent_problem(std::mt19937& gen, int num_features) {
    LinearAtomicSource src;
    std::vector<std::string> names{"Y"};
    src.defs.emplace_back();
    int next_bit = 0, next_atom = 0;
    std::vector<LinearAtomicSource::VariableDef> feature_defs;
    for (int j = 0; j < num_features; ++j) {
        names.push_back("X" + std::to_string(j + 1));
        LinearAtomicSource::VariableDef def;
        int own_bits = pick(gen, 0, 2);
        for (int b = 0; b < own_bits; ++b) {
            src.bit_names.push_back("W" + std::to_string(++next_bit));
            def.combos.push_back(1ull << (next_bit - 1));
        }
        if (own_bits == 0 || pick(gen, 0, 2) == 0) {
            src.atom_names.push_back("A" + std::to_string(++next_atom));
            src.atom_weights.push_back(random_weight(gen));
            def.atoms |= 1ull << (next_atom - 1);
        }
        feature_defs.push_back(def);
    }
    LinearAtomicSource::VariableDef ydef;
    for (int b = 0; b < next_bit; ++b)
        if (pick(gen, 0, 1))
            ydef.combos.push_back(1ull << b);
    if (next_bit >= 2 && pick(gen, 0, 1))
        ydef.combos.push_back(pick(gen, 1, (1 << next_bit) - 1));
    for (int a = 0; a < next_atom; ++a)
        if (pick(gen, 0, 1))
            ydef.atoms |= 1ull << a;
    src.defs[0] = ydef;
    for (auto& def : feature_defs)
        src.defs.push_back(def);
    return FeatureProblem::make(SourceModel(GroundSet(names), std::move(src)), 0);
}

Value random_gamma(std::mt19937& gen) {
    mpq_class q(pick(gen, -2, 6), pick(gen, 1, 4));
    q.canonicalize();
    return Value::exact(q);
}

void criterion_1() {
    Criterion c(1, "shared-information table of the three-variable fixture");
    SourceModel m = fixture("example_a.json").model;
    auto check = [&](std::initializer_list<int> e, long num) {
        Subset b = Subset::of(e, 3);
        Value got = mmi(m, b);
        c.require(got == V(num), "mmi " + b.str() + " = " + vs(got) +
                                     ", wanted " + std::to_string(num));
    };
    check({1, 2}, 0);
    check({0, 1}, 2);
    check({0, 2}, 1);
    check({0, 1, 2}, 1);
}

void criterion_2() {
    Criterion c(2, "partition sequence of the three-variable fixture");
    SourceModel m = fixture("example_a.json").model;
    PspResult r = psp(m);
    c.require(r.critical_values == std::vector<Value>{V(1), V(2)},
              "critical values are not {1, 2}");
    c.require(r.chain.size() == 3 && r.chain[0] == Partition::trivial(3) &&
                  r.chain[1] == Partition({Subset::of({0, 1}, 3),
                                           Subset::single(2, 3)}, 3) &&
                  r.chain[2] == Partition::singletons(3),
              "chain is not {V} > {{0,1},{2}} > singletons");
    long want[] = {3, 2, 0, -3};
    for (long g = 0; g <= 3; ++g) {
        Value v = dilworth_truncation(m, V(g)).value;
        c.require(v == V(want[g]), "truncation at gamma " + std::to_string(g) +
                                       " = " + vs(v));
    }
}

void criterion_3() {
    Criterion c(3, "parametric selection profile of the three-variable fixture");
    FeatureProblem p = problem(fixture("example_a.json"));
    PpResult r = pp(p);
    c.require(r.breakpoints == std::vector<Value>{V(1), V(2)},
              "breakpoints are not {1, 2}");
    c.require(r.regions.size() == 3 && r.regions[0].maximal == Subset::full_of(2) &&
                  r.regions[1].maximal == Subset::single(0, 2) &&
                  r.regions[2].maximal == Subset::empty_of(2),
              "maximal optimizers are not {X1,X2} > {X1} > {}");
    RelaxResult mid = relax_optimize(p, V(3, 2));
    c.require(mid.value == V(1, 2), "value at 3/2 = " + vs(mid.value));
    c.require(mid.optimal.size() == 1 && mid.optimal[0] == Subset::single(0, 2),
              "optimizer at 3/2 is not uniquely {X1}");
}

void criterion_4() {
    Criterion c(4, "extended clusters of the two-feature fixture at the tie point");
    SourceModel m = fixture("example_b.json").model;
    c.require(clusters(m, V(1)).clusters.empty(), "plain clusters are not empty");
    std::vector<Subset> want = {Subset::of({0, 1}, 3), Subset::of({0, 2}, 3),
                                Subset::full_of(3)};
    auto got = extended_clusters(m, V(1)).clusters;
    c.require(got == want, "extended clusters differ from {{0,1},{0,2},{0,1,2}}");
}

void criterion_5() {
    Criterion c(5, "best fixed-size selection outside the parametric lattice");
    FeatureProblem p = problem(fixture("example_c.json"));
    SizeConstrainedResult k2 = size_constrained(p, 2);
    Subset pair = Subset::of({0, 3}, 4);
    c.require(k2.value == V(4, 3), "best pair value = " + vs(k2.value));
    c.require(k2.argmax.size() == 1 && k2.argmax[0] == pair,
              "best pair is not uniquely {X1,X4}");
    PpResult r = pp(p);
    c.require(r.breakpoints == std::vector<Value>{V(1, 3), V(1, 2), V(1)},
              "breakpoints are not {1/3, 1/2, 1}");
    c.require(r.tangent_values == std::vector<Value>{V(1), V(1, 2), V(0)},
              "tangent values are not {1, 1/2, 0}");
    bool absent = true;
    for (const auto& fam : r.regions)
        absent = absent && !fam.contains(pair);
    for (const auto& fam : r.at_breakpoints)
        absent = absent && !fam.contains(pair);
    c.require(absent, "{X1,X4} shows up in the optimizer lattice");
}

void criterion_6() {
    Criterion c(6, "dependent features break the selection/clustering correspondence");
    LoadedModel lm = fixture("example_d.json");
    SourceModel m = lm.model;
    FeatureProblem p = problem(lm);
    c.require(!p.features_independent(), "features report as independent");
    c.require(mmi(m, Subset::of({0, 2, 3}, 4)) == V(3, 2), "mmi {0,2,3} != 3/2");
    c.require(mmi(m, Subset::of({0, 1, 2}, 4)) == V(1), "mmi {0,1,2} != 1");
    c.require(mmi(m, Subset::of({0, 1, 3}, 4)) == V(1), "mmi {0,1,3} != 1");

    DualityReport rep = verify_duality(p, V(1));
    auto forward_fails = [&](const Subset& b) {
        for (const auto& e : rep.forward)
            if (e.optimizer == b)
                return !e.holds;
        return false;
    };
    bool forward_failed = false, backward_failed = false;
    for (const auto& e : rep.forward)
        forward_failed = forward_failed || !e.holds;
    for (const auto& e : rep.backward)
        backward_failed = backward_failed || !e.holds;
    c.require(forward_failed, "forward direction held at gamma 1");
    c.require(forward_fails(Subset::of({0, 1}, 3)) && forward_fails(Subset::of({0, 2}, 3)),
              "forward witnesses {X1,X2} and {X1,X3} missing at gamma 1");
    c.require(backward_failed, "backward direction held at gamma 1");
    bool backward_witness = false;
    for (const auto& e : rep.backward)
        backward_witness = backward_witness || (!e.holds && e.block == Subset::of({0, 2, 3}, 4));
    c.require(backward_witness, "backward witness {Y,X2,X3} missing at gamma 1");

    auto cl = clusters(m, V(6, 5)).clusters;
    bool member = false;
    for (const auto& b : cl)
        member = member || b == Subset::of({0, 2, 3}, 4);
    c.require(member, "{Y,X2,X3} is not a cluster at gamma 6/5");

    c.require(check_lagrangian_link(p, V(1)).pass,
              "relaxed/constrained link broke at gamma 1");
}

void criterion_7() {
    Criterion c(7, "incremental routes match brute-force enumeration");
    std::mt19937 gen(20260823);
    for (int trial = 0; trial < 200 && c.ok; ++trial) {
        int n = pick(gen, 2, 7);
        SourceModel m = random_model(gen, n);
        Value gamma = random_gamma(gen);

        DtResult inc = dilworth_truncation(m, gamma);
        DtEnumeration ref = dilworth_truncation_bruteforce(m, gamma);
        c.require(inc.value == ref.value && inc.finest == ref.finest,
                  "truncation mismatch, trial " + std::to_string(trial));

        Subset b(static_cast<std::uint32_t>(pick(gen, 0, (1 << n) - 1)), n);
        if (b.count() < 2)
            b = Subset::full_of(n);
        c.require(mmi(m, b) == mmi_bruteforce(m, b).value,
                  "shared-information mismatch, trial " + std::to_string(trial));

        if (n <= 6)
            c.require(extended_clusters(m, gamma).clusters ==
                          extended_clusters_bruteforce(m, gamma),
                      "extended-cluster mismatch, trial " + std::to_string(trial));
    }
}

void criterion_8() {
    Criterion c(8, "correspondence holds across sweeps of independent fixtures");
    std::mt19937 gen(8);
    for (int trial = 0; trial < 50 && c.ok; ++trial) {
        FeatureProblem p = random_independent_problem(gen, pick(gen, 1, 6));
        bool saw_negative = false;
        for (const auto& rep : sweep_duality(p)) {
            c.require(rep.pass(), "sweep failed at gamma " + vs(rep.gamma) +
                                      ", trial " + std::to_string(trial));
            saw_negative = saw_negative || rep.gamma < Value::exact(0);
        }
        c.require(saw_negative, "sweep skipped the negative threshold");

        DtEnumeration e = dilworth_truncation_bruteforce(lift(p), V(-1, 2));
        RelaxResult r = relax_optimize(p, V(-1, 2));
        c.require(e.optimal.size() == 1 &&
                      e.optimal[0] == Partition::trivial(p.num_features() + 1) &&
                      r.optimal.size() == 1 &&
                      r.optimal[0] == Subset::full_of(p.num_features()),
                  "negative threshold is not uniquely resolved, trial " +
                      std::to_string(trial));
    }
}

void criterion_9() {
    Criterion c(9, "structural properties of the parametric solutions");
    std::mt19937 gen(9);

    for (int trial = 0; trial < 30 && c.ok; ++trial) {
        int n = pick(gen, 2, 6);
        SourceModel m = random_model(gen, n);
        c.require(check_submodular(EntropyOracle(m)).empty(),
                  "entropy oracle not submodular, trial " + std::to_string(trial));
        PspResult r = psp(m);
        bool chain_ok = r.chain.front() == Partition::trivial(n) &&
                        r.chain.back() == Partition::singletons(n);
        for (std::size_t j = 0; j + 1 < r.chain.size(); ++j)
            chain_ok = chain_ok && refines(r.chain[j + 1], r.chain[j]) &&
                       r.chain[j + 1] != r.chain[j];
        for (std::size_t j = 0; j + 1 < r.critical_values.size(); ++j)
            chain_ok = chain_ok && r.critical_values[j] < r.critical_values[j + 1];
        c.require(chain_ok, "partition chain not strictly decreasing, trial " +
                                std::to_string(trial));
    }

    for (int trial = 0; trial < 30 && c.ok; ++trial) {
        FeatureProblem p = random_independent_problem(gen, pick(gen, 1, 5));
        Value gamma = random_gamma(gen);
        RelaxResult r = relax_optimize(p, gamma);
        bool lattice = true;
        for (const auto& b1 : r.optimal)
            for (const auto& b2 : r.optimal)
                lattice = lattice && penalized(p, b1 | b2, gamma) == r.value &&
                          penalized(p, b1 & b2, gamma) == r.value;
        c.require(lattice, "optimizer family not a lattice, trial " +
                               std::to_string(trial));
        RelaxResult later = relax_optimize(p, gamma + V(1, 3));
        c.require(later.maximal.subset_of(r.minimal),
                  "maximal optimizer failed to shrink, trial " + std::to_string(trial));
        c.require(check_supermodular_objective(p) == Supermodularity::holds,
                  "objective not supermodular, trial " + std::to_string(trial));
    }
}

} // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    if (g_failed) {
        std::cout << g_failed << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}

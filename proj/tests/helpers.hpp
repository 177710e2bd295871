#pragma once

#include <random>
#include <string>
#include <vector>

#include "infoclust/featsel.hpp"
#include "infoclust/model_io.hpp"

namespace testutil {

using namespace infoclust;

inline std::string fixture_path(const std::string& name) {
    return std::string(FIXTURES_DIR) + "/" + name;
}

inline LoadedModel load_fixture(const std::string& name) {
    return load_model_file(fixture_path(name));
}

inline Value V(long num, long den = 1) { return Value::exact(num, den); }

inline int pick(std::mt19937& gen, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(gen);
}

inline mpq_class random_weight(std::mt19937& gen) {
    mpq_class q(pick(gen, 1, 5), pick(gen, 1, 4));
    q.canonicalize();
    return q;
}

inline Value random_gamma(std::mt19937& gen) {
    mpq_class q(pick(gen, -2, 6), pick(gen, 1, 4));
    q.canonicalize();
    return Value::exact(q);
}

// A random model over a handful of shared bits and weighted atoms. Small
// enough for full partition enumeration but rich enough to produce
// non-trivial partition lattices.
inline SourceModel random_linear_atomic(std::mt19937& gen, int n) {
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
        int num_combos = pick(gen, 0, 3);
        for (int c = 0; c < num_combos; ++c) {
            std::uint64_t combo = pick(gen, 1, (1 << num_bits) - 1);
            def.combos.push_back(combo);
        }
        if (num_atoms > 0)
            def.atoms = pick(gen, 0, (1 << num_atoms) - 1);
        src.defs.push_back(def);
    }
    return SourceModel(GroundSet(names), std::move(src));
}

// A feature-selection instance whose features observe disjoint primitives
// and are therefore mutually independent. The dependent variable observes
// an arbitrary mix of everyone's primitives.
inline FeatureProblem random_independent_problem(std::mt19937& gen, int num_features) {
    LinearAtomicSource src;
    std::vector<std::string> names;
    names.push_back("Y");
    src.defs.emplace_back(); // filled once the primitive pool is known

    int next_bit = 0;
    int next_atom = 0;
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
    if (next_bit >= 2 && pick(gen, 0, 1)) {
        std::uint64_t combo = pick(gen, 1, (1 << next_bit) - 1);
        ydef.combos.push_back(combo);
    }
    for (int a = 0; a < next_atom; ++a)
        if (pick(gen, 0, 1))
            ydef.atoms |= 1ull << a;
    src.defs[0] = ydef;
    for (auto& def : feature_defs)
        src.defs.push_back(def);

    return FeatureProblem::make(SourceModel(GroundSet(names), std::move(src)), 0);
}

} // namespace testutil

#pragma once

#include <vector>

#include "infoclust/clustering.hpp"
#include "infoclust/sources.hpp"

namespace infoclust {

// Feature-selection instance: one dependent variable Y and the remaining
// variables as features. Feature subsets are indexed locally in feature
// declaration order; feature_to_global maps them onto the model ground.
struct FeatureProblem {
    SourceModel model;
    int dependent;             // index in the model ground
    std::vector<int> features; // remaining indices, declaration order

    static FeatureProblem make(SourceModel model, int dependent_index);
    static FeatureProblem make(SourceModel model, const std::string& dependent_name);

    int num_features() const { return static_cast<int>(features.size()); }
    Subset feature_to_global(const Subset& b) const;
    std::string feature_set_str(const Subset& b) const;

    // Are the features mutually independent (eq. of the factored joint)?
    bool features_independent() const;
};

// f(B) = I(Y ^ X_B); f of the empty set is 0.
Value objective(const FeatureProblem& p, const Subset& b);

// f_gamma(B) = f(B) - gamma |B|.
Value penalized(const FeatureProblem& p, const Subset& b, const Value& gamma);

struct RelaxResult {
    Value gamma;
    Value value;                 // f*(gamma)
    std::vector<Subset> optimal; // every optimizer, canonically sorted
    Subset minimal;
    Subset maximal;
};

// Brute-force scan of all feature subsets. |U| <= 20.
RelaxResult relax_optimize(const FeatureProblem& p, const Value& gamma);

struct SizeConstrainedResult {
    Value value;
    std::vector<Subset> argmax; // all maximizing subsets of size k
};

// Best-of-size-k selection. 0 <= k <= |U|.
SizeConstrainedResult size_constrained(const FeatureProblem& p, int k);

// Principal partition: the breakpoints of f*(gamma) with the optimizer
// family per closed region and at every breakpoint.
struct PpResult {
    struct Family {
        Subset minimal;
        Subset maximal;
        std::vector<Subset> members;
        bool contains(const Subset& b) const;
    };

    std::vector<Value> breakpoints;     // increasing
    std::vector<Value> tangent_values;  // f* at each breakpoint
    std::vector<Family> regions;        // breakpoints.size() + 1 entries
    std::vector<Family> at_breakpoints; // family exactly at each breakpoint
};

// Breakpoint recursion on the upper envelope of the lines f(B) - gamma|B|.
// |U| <= 12.
PpResult pp(const FeatureProblem& p);

struct LagrangianReport {
    struct Entry {
        Subset optimizer;
        bool holds;
    };
    Value gamma;
    bool pass;
    std::vector<Entry> entries;
};

// Every relax optimizer at gamma must also win the size-constrained
// problem at its own cardinality.
LagrangianReport check_lagrangian_link(const FeatureProblem& p, const Value& gamma);

enum class Supermodularity { holds, violated, not_applicable };

// Verifies the reversed submodular inequality for f over all subset
// pairs; not applicable when the features are dependent. |U| <= 10.
Supermodularity check_supermodular_objective(const FeatureProblem& p);

} // namespace infoclust

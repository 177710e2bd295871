#pragma once

#include <vector>

#include "infoclust/featsel.hpp"

namespace infoclust {

// The clustering view of a feature problem: variable 0 is the dependent
// variable, variables 1..|U| are the features in declaration order.
SourceModel lift(const FeatureProblem& p);

struct BlockStructureReport {
    Value gamma;
    bool pass;
    std::vector<Subset> blocks;          // the {0} u B blocks observed (lifted)
    std::vector<Partition> violations;   // optimal partitions not of block form
};

// Every optimal partition of the lifted truncation must be a block
// partition around the dependent variable. Requires gamma > 0 and
// mutually independent features; n <= 10.
BlockStructureReport check_block_structure(const FeatureProblem& p, const Value& gamma);

struct DualityReport {
    struct ForwardEntry {
        Subset optimizer; // feature-indexed
        bool holds;       // {0} u optimizer appears in some optimal partition
    };
    struct BackwardEntry {
        Subset block; // lifted-indexed block containing 0
        bool holds;   // block minus {0} is relax-optimal
    };

    Value gamma;
    bool independent;
    std::vector<ForwardEntry> forward;
    std::vector<BackwardEntry> backward;

    bool pass() const;
};

// Both directions of the feature-selection / clustering correspondence
// at one threshold. Uses brute-force optimal-partition enumeration, so
// n = |U| + 1 <= 10.
DualityReport verify_duality(const FeatureProblem& p, const Value& gamma);

// verify_duality at every PSP breakpoint of the lifted model, every PP
// breakpoint, all interval midpoints, gamma = 0, and one negative gamma.
std::vector<DualityReport> sweep_duality(const FeatureProblem& p);

} // namespace infoclust

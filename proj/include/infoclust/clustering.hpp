#pragma once

#include <vector>

#include "infoclust/submodular.hpp"

namespace infoclust {

// Dilworth truncation evaluated at the full ground set.
struct DtResult {
    Value gamma;
    Value value;       // min over partitions of sum of h_gamma over blocks
    Partition finest;  // finest optimal partition
    bool incremental;  // method tag
};

// Incremental algorithm: elements in declaration order, one SFM per
// element with minimal minimizers, blocks fused along the way.
DtResult dilworth_truncation(const SetFunctionOracle& h, const Value& gamma);
DtResult dilworth_truncation(const SourceModel& model, const Value& gamma);

struct DtEnumeration {
    Value gamma;
    Value value;
    std::vector<Partition> optimal; // every optimal partition
    Partition finest;
};

// Direct enumeration of all partitions; n <= 10. The finest optimal
// partition is the meet of the optimal set; on the float backend a
// tolerance-ambiguous meet raises NoUniqueFinest.
DtEnumeration dilworth_truncation_bruteforce(const SetFunctionOracle& h,
                                             const Value& gamma);
DtEnumeration dilworth_truncation_bruteforce(const SourceModel& model,
                                             const Value& gamma);

// Principal sequence of partitions: critical values g_1 < .. < g_k and
// the chain chain[0] = {V} down to chain[k] = singletons, where chain[j]
// is the finest optimal partition on the j-th gamma interval.
struct PspResult {
    std::vector<Value> critical_values;
    std::vector<Partition> chain; // critical_values.size() + 1 entries
};

PspResult psp(const SetFunctionOracle& h);
PspResult psp(const SourceModel& model);

struct MmiResult {
    Value value;
    std::vector<Subset> argmin_blocks; // an optimal multi-block partition of b
};

// Direct minimization over all multi-block partitions of b; |b| <= 10.
MmiResult mmi_bruteforce(const SourceModel& model, const Subset& b);

// Multivariate mutual information I(Z_b): the first critical value of the
// PSP restricted to b. Bivariate sets take the direct Shannon route.
Value mmi(const SourceModel& model, const Subset& b);

struct ClusterSet {
    Value gamma;
    std::vector<Subset> clusters; // each non-singleton, canonically sorted
    bool extended;
};

// Non-singleton blocks of the finest optimal partition at gamma.
ClusterSet clusters(const SourceModel& model, const Value& gamma);

// Adds every B with I(Z_B) = gamma that is consistent (disjoint-or-
// contained) with all sets of strictly larger MMI. n <= 10.
ClusterSet extended_clusters(const SourceModel& model, const Value& gamma);

// Cross-check route: non-singleton blocks over ALL optimal partitions.
std::vector<Subset> extended_clusters_bruteforce(const SourceModel& model,
                                                 const Value& gamma);

} // namespace infoclust

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "infoclust/ground.hpp"
#include "infoclust/value.hpp"

namespace infoclust {

// A source built from independent uniform binary primitives (entropy 1
// each) and independent atoms with positive rational entropy weight.
// Each variable observes a set of GF(2) linear combinations of the bits
// plus a set of atoms. H of any collection is the GF(2) rank of the
// union of its combinations plus the total weight of its atoms, exactly.
struct LinearAtomicSource {
    struct VariableDef {
        std::vector<std::uint64_t> combos; // each a mask over the bits
        std::uint64_t atoms = 0;           // mask over the atoms
    };

    std::vector<std::string> bit_names;
    std::vector<std::string> atom_names;
    std::vector<mpq_class> atom_weights;
    std::vector<VariableDef> defs; // one per ground variable

    mpq_class subset_entropy(const Subset& b) const;
};

// An explicit joint distribution with exact rational probabilities.
// Entropies go through floating point and the library tolerance.
struct PmfSource {
    struct Outcome {
        mpq_class prob;
        std::vector<int> values; // one value per ground variable
    };

    std::vector<Outcome> outcomes;
    int arity = 0;

    double subset_entropy(const Subset& b) const;
};

// A direct oracle: h(B) for every non-empty B, rational. h(emptyset) = 0.
struct EntropyTableSource {
    std::vector<mpq_class> table; // indexed by subset mask, size 1 << n

    mpq_class subset_entropy(const Subset& b) const { return table.at(b.mask()); }
};

struct ValidationReport {
    std::vector<std::string> errors;   // model is not usable
    std::vector<std::string> warnings; // reported, not fatal
    bool ok() const { return errors.empty(); }
};

// Tagged union of the three backends with a memoized entropy oracle.
// Cheap to copy (shared immutable state); the memo table is internally
// synchronized.
class SourceModel {
public:
    SourceModel(GroundSet ground, LinearAtomicSource src);
    SourceModel(GroundSet ground, PmfSource src);
    SourceModel(GroundSet ground, EntropyTableSource src);

    const GroundSet& ground() const;
    int size() const { return ground().size(); }
    Value::Kind kind() const;

    // H(Z_B) in bits; H over the empty set is 0.
    Value entropy(const Subset& b) const;

    // New model whose variable i is this model's variable order[i].
    SourceModel reorder(const std::vector<int>& order) const;

    const LinearAtomicSource* linear_atomic() const;
    const PmfSource* pmf() const;
    const EntropyTableSource* entropy_table() const;

    ValidationReport validate(bool polymatroid_checks = true) const;

private:
    struct Impl;
    std::shared_ptr<Impl> impl_;
};

Value mutual_information(const SourceModel& m, const Subset& a, const Subset& b);
Value conditional_entropy(const SourceModel& m, const Subset& a, const Subset& given);

// True iff the family's entropies add up to the entropy of its union.
// Members must be pairwise disjoint and non-empty.
bool is_mutually_independent(const SourceModel& m, const std::vector<Subset>& family);

} // namespace infoclust

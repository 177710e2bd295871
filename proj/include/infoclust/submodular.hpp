#pragma once

#include <functional>
#include <vector>

#include "infoclust/partition.hpp"
#include "infoclust/sources.hpp"
#include "infoclust/value.hpp"

namespace infoclust {

// A deterministic set function over a ground set of local indices.
class SetFunctionOracle {
public:
    virtual ~SetFunctionOracle() = default;
    virtual int ground_size() const = 0;
    virtual Value::Kind kind() const = 0;
    virtual Value eval(const Subset& b) const = 0;
};

// The entropy of a source model, optionally viewed through an index map:
// local element i stands for model variable indices[i]. Used both for the
// identity view and for restriction to a sub-ground-set.
class EntropyOracle final : public SetFunctionOracle {
public:
    explicit EntropyOracle(SourceModel model);
    EntropyOracle(SourceModel model, std::vector<int> indices);

    int ground_size() const override { return static_cast<int>(indices_.size()); }
    Value::Kind kind() const override { return model_.kind(); }
    Value eval(const Subset& b) const override;

    const SourceModel& model() const { return model_; }

private:
    SourceModel model_;
    std::vector<int> indices_;
};

// Wraps an arbitrary callable as an oracle (tests, inner SFM objectives).
class FunctionOracle final : public SetFunctionOracle {
public:
    FunctionOracle(int n, Value::Kind kind, std::function<Value(const Subset&)> fn)
        : n_(n), kind_(kind), fn_(std::move(fn)) {}

    int ground_size() const override { return n_; }
    Value::Kind kind() const override { return kind_; }
    Value eval(const Subset& b) const override { return fn_(b); }

private:
    int n_;
    Value::Kind kind_;
    std::function<Value(const Subset&)> fn_;
};

// h_gamma(B) = h(B) - gamma. Holds a reference to the base oracle.
class ResidualFunction final : public SetFunctionOracle {
public:
    ResidualFunction(const SetFunctionOracle& base, Value gamma);

    int ground_size() const override { return base_->ground_size(); }
    Value::Kind kind() const override { return base_->kind(); }
    Value eval(const Subset& b) const override { return base_->eval(b) - gamma_; }

    const Value& gamma() const { return gamma_; }

private:
    const SetFunctionOracle* base_;
    Value gamma_;
};

inline ResidualFunction residual(const SetFunctionOracle& h, Value gamma) {
    return ResidualFunction(h, std::move(gamma));
}

struct SubmodularityViolation {
    Subset b1, b2;
};

// Empty iff h(B1)+h(B2) >= h(B1 u B2)+h(B1 n B2) for all pairs (within
// tolerance for the float kind). Guarded at n <= 12.
std::vector<SubmodularityViolation> check_submodular(const SetFunctionOracle& h);

struct SfmResult {
    Value min_value;
    Subset minimal; // intersection of all minimizers
    Subset maximal; // union of all minimizers
};

// Scans all B with must_contain <= B <= within in (cardinality, mask)
// order. For submodular g the reported extremal sets are themselves
// minimizers; asserted in debug builds.
SfmResult sfm_bruteforce(const SetFunctionOracle& g, const Subset& within,
                         const Subset& must_contain);

// Sum of h_gamma over the blocks of p.
Value partition_value(const SetFunctionOracle& h_gamma, const Partition& p);

} // namespace infoclust

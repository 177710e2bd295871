#include "infoclust/submodular.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace infoclust {

EntropyOracle::EntropyOracle(SourceModel model) : model_(std::move(model)) {
    indices_.resize(model_.size());
    std::iota(indices_.begin(), indices_.end(), 0);
}

EntropyOracle::EntropyOracle(SourceModel model, std::vector<int> indices)
    : model_(std::move(model)), indices_(std::move(indices)) {
    for (int i : indices_)
        if (i < 0 || i >= model_.size())
            throw UnknownVariable("oracle index map out of range");
}

Value EntropyOracle::eval(const Subset& b) const {
    if (b.ground_size() != ground_size())
        throw GroundMismatch("subset over a different ground set");
    Subset global = Subset::empty_of(model_.size());
    for (int i : b.elements())
        global = global.with(indices_[i]);
    return model_.entropy(global);
}

ResidualFunction::ResidualFunction(const SetFunctionOracle& base, Value gamma)
    : base_(&base), gamma_(std::move(gamma)) {
    if (gamma_.kind() != base.kind())
        throw MixedArithmetic("residual threshold kind must match the oracle");
}

std::vector<SubmodularityViolation> check_submodular(const SetFunctionOracle& h) {
    int n = h.ground_size();
    if (n > kMaxEnumGround)
        throw GroundTooLarge("submodularity check capped at n = " +
                             std::to_string(kMaxEnumGround));
    std::vector<SubmodularityViolation> out;
    std::uint32_t full = Subset::full_of(n).mask();
    for (std::uint32_t m1 = 0; m1 <= full; ++m1)
        for (std::uint32_t m2 = m1 + 1; m2 <= full; ++m2) {
            Subset b1(m1, n), b2(m2, n);
            Value lhs = h.eval(b1) + h.eval(b2);
            Value rhs = h.eval(b1 | b2) + h.eval(b1 & b2);
            if (lhs < rhs)
                out.push_back({b1, b2});
        }
    return out;
}

SfmResult sfm_bruteforce(const SetFunctionOracle& g, const Subset& within,
                         const Subset& must_contain) {
    if (!must_contain.subset_of(within))
        throw Error("sfm: must_contain must be contained in within");
    if (within.count() > kMaxGroundSize)
        throw GroundTooLarge("sfm brute force capped at 20 free elements");
    int n = g.ground_size();

    std::vector<std::uint32_t> candidates;
    std::uint32_t free = within.minus(must_contain).mask();
    // All submasks of the free part.
    std::uint32_t sub = free;
    for (;;) {
        candidates.push_back(sub);
        if (sub == 0)
            break;
        sub = (sub - 1) & free;
    }
    std::sort(candidates.begin(), candidates.end(), [](std::uint32_t a, std::uint32_t b) {
        int ca = __builtin_popcount(a), cb = __builtin_popcount(b);
        return ca != cb ? ca < cb : a < b;
    });

    SfmResult res{Value::zero(g.kind()), Subset::empty_of(n), Subset::empty_of(n)};
    bool first = true;
    for (std::uint32_t m : candidates) {
        Subset b(m | must_contain.mask(), n);
        Value v = g.eval(b);
        if (first || v < res.min_value) {
            res = {v, b, b};
            first = false;
        } else if (v == res.min_value) {
            res.minimal = res.minimal & b;
            res.maximal = res.maximal | b;
        }
    }
    assert(g.eval(res.minimal) == res.min_value &&
           "extremal minimizer lattice property violated (is g submodular?)");
    assert(g.eval(res.maximal) == res.min_value &&
           "extremal minimizer lattice property violated (is g submodular?)");
    return res;
}

Value partition_value(const SetFunctionOracle& h_gamma, const Partition& p) {
    if (p.ground_size() != h_gamma.ground_size())
        throw GroundMismatch("partition over a different ground set");
    Value sum = Value::zero(h_gamma.kind());
    for (const auto& b : p.blocks())
        sum += h_gamma.eval(b);
    return sum;
}

} // namespace infoclust

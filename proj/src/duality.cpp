#include "infoclust/duality.hpp"

#include <algorithm>

namespace infoclust {

SourceModel lift(const FeatureProblem& p) {
    std::vector<int> order{p.dependent};
    order.insert(order.end(), p.features.begin(), p.features.end());
    return p.model.reorder(order);
}

namespace {

// Feature subset (bit j) -> lifted block {0} u B (bit j+1 plus bit 0).
Subset lift_block(const Subset& b, int lifted_n) {
    return Subset((b.mask() << 1) | 1u, lifted_n);
}

Subset lower_block(const Subset& block, int num_features) {
    return Subset(block.mask() >> 1, num_features);
}

} // namespace

BlockStructureReport check_block_structure(const FeatureProblem& p, const Value& gamma) {
    if (!(gamma > Value::zero(gamma.kind())))
        throw PreconditionViolated("block structure requires gamma > 0");
    if (!p.features_independent())
        throw PreconditionViolated("block structure requires independent features");
    SourceModel lifted = lift(p);
    DtEnumeration dt = dilworth_truncation_bruteforce(lifted, gamma);

    BlockStructureReport rep{gamma, true, {}, {}};
    int n = lifted.size();
    for (const auto& part : dt.optimal) {
        const Subset& c = part.block_containing(0);
        if (part == block_partition(c, n))
            rep.blocks.push_back(c);
        else {
            rep.pass = false;
            rep.violations.push_back(part);
        }
    }
    std::sort(rep.blocks.begin(), rep.blocks.end());
    rep.blocks.erase(std::unique(rep.blocks.begin(), rep.blocks.end()),
                     rep.blocks.end());
    return rep;
}

bool DualityReport::pass() const {
    for (const auto& e : forward)
        if (!e.holds)
            return false;
    for (const auto& e : backward)
        if (!e.holds)
            return false;
    return true;
}

DualityReport verify_duality(const FeatureProblem& p, const Value& gamma) {
    SourceModel lifted = lift(p);
    int n = lifted.size();
    DtEnumeration dt = dilworth_truncation_bruteforce(lifted, gamma);
    RelaxResult relax = relax_optimize(p, gamma);

    std::vector<Subset> zero_blocks; // blocks containing 0, over all optima
    for (const auto& part : dt.optimal)
        zero_blocks.push_back(part.block_containing(0));
    std::sort(zero_blocks.begin(), zero_blocks.end());
    zero_blocks.erase(std::unique(zero_blocks.begin(), zero_blocks.end()),
                      zero_blocks.end());

    DualityReport rep;
    rep.gamma = gamma;
    rep.independent = p.features_independent();
    for (const auto& b : relax.optimal) {
        Subset block = lift_block(b, n);
        bool holds = std::find(zero_blocks.begin(), zero_blocks.end(), block) !=
                     zero_blocks.end();
        rep.forward.push_back({b, holds});
    }
    for (const auto& block : zero_blocks) {
        Subset b = lower_block(block, p.num_features());
        bool holds = std::find(relax.optimal.begin(), relax.optimal.end(), b) !=
                     relax.optimal.end();
        rep.backward.push_back({block, holds});
    }
    return rep;
}

std::vector<DualityReport> sweep_duality(const FeatureProblem& p) {
    Value::Kind k = p.model.kind();
    Value zero = Value::zero(k);
    Value one = k == Value::Kind::exact ? Value::exact(1) : Value::approx(1.0);

    std::vector<Value> gammas;
    for (const auto& g : psp(lift(p)).critical_values)
        gammas.push_back(g);
    for (const auto& g : pp(p).breakpoints)
        gammas.push_back(g);
    std::sort(gammas.begin(), gammas.end(),
              [](const Value& a, const Value& b) { return a.to_double() < b.to_double(); });
    gammas.erase(std::unique(gammas.begin(), gammas.end()), gammas.end());

    std::vector<Value> points;
    if (gammas.empty()) {
        points = {-one, zero, one};
    } else {
        Value below = gammas.front();
        if (!(below < zero))
            below = zero;
        points.push_back(below - one); // covers gamma < 0
        points.push_back(zero);
        for (std::size_t i = 0; i < gammas.size(); ++i) {
            points.push_back(gammas[i]);
            if (i + 1 < gammas.size())
                points.push_back((gammas[i] + gammas[i + 1]).divided_by(2));
        }
        points.push_back(gammas.back() + one);
    }
    std::sort(points.begin(), points.end(),
              [](const Value& a, const Value& b) { return a.to_double() < b.to_double(); });
    points.erase(std::unique(points.begin(), points.end()), points.end());

    std::vector<DualityReport> out;
    out.reserve(points.size());
    for (const auto& g : points)
        out.push_back(verify_duality(p, g));
    return out;
}

} // namespace infoclust

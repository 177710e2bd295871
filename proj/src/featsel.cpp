#include "infoclust/featsel.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <sstream>

namespace infoclust {

FeatureProblem FeatureProblem::make(SourceModel model, int dependent_index) {
    int n = model.size();
    if (dependent_index < 0 || dependent_index >= n)
        throw UnknownVariable("dependent variable index out of range");
    std::vector<int> features;
    for (int i = 0; i < n; ++i)
        if (i != dependent_index)
            features.push_back(i);
    return {std::move(model), dependent_index, std::move(features)};
}

FeatureProblem FeatureProblem::make(SourceModel model, const std::string& dependent_name) {
    int idx = model.ground().index(dependent_name);
    return make(std::move(model), idx);
}

Subset FeatureProblem::feature_to_global(const Subset& b) const {
    if (b.ground_size() != num_features())
        throw GroundMismatch("subset over a different feature universe");
    Subset g = Subset::empty_of(model.size());
    for (int i : b.elements())
        g = g.with(features[i]);
    return g;
}

std::string FeatureProblem::feature_set_str(const Subset& b) const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (int i : b.elements()) {
        if (!first)
            os << ',';
        os << model.ground().name(features[i]);
        first = false;
    }
    os << '}';
    return os.str();
}

bool FeatureProblem::features_independent() const {
    std::vector<Subset> family;
    for (int f : features)
        family.push_back(Subset::single(f, model.size()));
    return is_mutually_independent(model, family);
}

Value objective(const FeatureProblem& p, const Subset& b) {
    if (b.empty())
        return Value::zero(p.model.kind());
    Subset y = Subset::single(p.dependent, p.model.size());
    return mutual_information(p.model, y, p.feature_to_global(b));
}

Value penalized(const FeatureProblem& p, const Subset& b, const Value& gamma) {
    return objective(p, b) - gamma.times(b.count());
}

RelaxResult relax_optimize(const FeatureProblem& p, const Value& gamma) {
    int m = p.num_features();
    if (m > kMaxGroundSize)
        throw GroundTooLarge("relaxation scan capped at |U| = 20");
    RelaxResult res{gamma, Value::zero(p.model.kind()), {}, Subset::empty_of(m),
                    Subset::empty_of(m)};
    bool first = true;
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        Subset b(mask, m);
        Value v = penalized(p, b, gamma);
        if (first || res.value < v) {
            res.value = v;
            res.optimal.clear();
            res.optimal.push_back(b);
            first = false;
        } else if (v == res.value) {
            res.optimal.push_back(b);
        }
    }
    std::sort(res.optimal.begin(), res.optimal.end());
    res.minimal = res.optimal.front();
    res.maximal = res.optimal.front();
    for (const auto& b : res.optimal) {
        res.minimal = res.minimal & b;
        res.maximal = res.maximal | b;
    }
    return res;
}

SizeConstrainedResult size_constrained(const FeatureProblem& p, int k) {
    int m = p.num_features();
    if (k < 0 || k > m)
        throw BadSize("selection size must be between 0 and |U|");
    if (m > kMaxGroundSize)
        throw GroundTooLarge("size-constrained scan capped at |U| = 20");
    SizeConstrainedResult res{Value::zero(p.model.kind()), {}};
    bool first = true;
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        if (__builtin_popcount(mask) != k)
            continue;
        Subset b(mask, m);
        Value v = objective(p, b);
        if (first || res.value < v) {
            res.value = v;
            res.argmax.clear();
            res.argmax.push_back(b);
            first = false;
        } else if (v == res.value) {
            res.argmax.push_back(b);
        }
    }
    std::sort(res.argmax.begin(), res.argmax.end());
    return res;
}

bool PpResult::Family::contains(const Subset& b) const {
    return std::find(members.begin(), members.end(), b) != members.end();
}

namespace {

PpResult::Family family_at(const FeatureProblem& p, const Value& gamma) {
    RelaxResult r = relax_optimize(p, gamma);
    return {r.minimal, r.maximal, std::move(r.optimal)};
}

} // namespace

PpResult pp(const FeatureProblem& p) {
    int m = p.num_features();
    if (m > kMaxEnumGround)
        throw GroundTooLarge("principal partition capped at |U| = 12");
    PpResult out;
    if (m == 0) {
        out.regions.push_back(
            {Subset::empty_of(0), Subset::empty_of(0), {Subset::empty_of(0)}});
        return out;
    }

    Subset full = Subset::full_of(m), empty = Subset::empty_of(m);
    Value f_full = objective(p, full);
    Value f_empty = Value::zero(p.model.kind());

    // Line of B: gamma -> f(B) - |B| gamma. f* is the upper envelope;
    // U dominates as gamma -> -inf, the empty set as gamma -> +inf.
    std::function<void(const Subset&, const Value&, const Subset&, const Value&)> solve =
        [&](const Subset& ba, const Value& fa, const Subset& bb, const Value& fb) {
            long ka = ba.count(), kb = bb.count();
            assert(ka > kb);
            Value gamma_star = (fa - fb).divided_by(ka - kb);
            Value line = fa - gamma_star.times(ka);
            RelaxResult r = relax_optimize(p, gamma_star);
            if (r.value == line) {
                out.breakpoints.push_back(gamma_star);
                out.tangent_values.push_back(line);
            } else {
                Subset bm = r.maximal;
                assert(kb < bm.count() && bm.count() < ka);
                Value fm = objective(p, bm);
                solve(ba, fa, bm, fm);
                solve(bm, fm, bb, fb);
            }
        };
    solve(full, f_full, empty, f_empty);

    if (p.model.kind() == Value::Kind::approx) {
        for (std::size_t i = 0; i + 1 < out.breakpoints.size();) {
            if (out.breakpoints[i + 1].near(out.breakpoints[i], kSnapTol)) {
                out.breakpoints.erase(out.breakpoints.begin() + i + 1);
                out.tangent_values.erase(out.tangent_values.begin() + i + 1);
            } else {
                ++i;
            }
        }
    }

    // Optimizer families per closed region and at every breakpoint.
    Value one = p.model.kind() == Value::Kind::exact ? Value::exact(1) : Value::approx(1.0);
    for (std::size_t i = 0; i <= out.breakpoints.size(); ++i) {
        Value rep;
        if (out.breakpoints.empty())
            rep = Value::zero(p.model.kind());
        else if (i == 0)
            rep = out.breakpoints.front() - one;
        else if (i == out.breakpoints.size())
            rep = out.breakpoints.back() + one;
        else
            rep = (out.breakpoints[i - 1] + out.breakpoints[i]).divided_by(2);
        out.regions.push_back(family_at(p, rep));
    }
    for (const auto& bp : out.breakpoints)
        out.at_breakpoints.push_back(family_at(p, bp));
    return out;
}

LagrangianReport check_lagrangian_link(const FeatureProblem& p, const Value& gamma) {
    RelaxResult r = relax_optimize(p, gamma);
    LagrangianReport rep{gamma, true, {}};
    for (const auto& b : r.optimal) {
        SizeConstrainedResult sc = size_constrained(p, b.count());
        bool holds =
            std::find(sc.argmax.begin(), sc.argmax.end(), b) != sc.argmax.end();
        rep.entries.push_back({b, holds});
        rep.pass = rep.pass && holds;
    }
    return rep;
}

Supermodularity check_supermodular_objective(const FeatureProblem& p) {
    int m = p.num_features();
    if (m > 10)
        throw GroundTooLarge("supermodularity check capped at |U| = 10");
    if (!p.features_independent())
        return Supermodularity::not_applicable;
    for (std::uint32_t m1 = 0; m1 < (1u << m); ++m1)
        for (std::uint32_t m2 = m1 + 1; m2 < (1u << m); ++m2) {
            Subset b1(m1, m), b2(m2, m);
            Value lhs = objective(p, b1) + objective(p, b2);
            Value rhs = objective(p, b1 | b2) + objective(p, b1 & b2);
            if (lhs > rhs)
                return Supermodularity::violated;
        }
    return Supermodularity::holds;
}

} // namespace infoclust

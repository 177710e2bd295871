#include "infoclust/clustering.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>

namespace infoclust {

DtResult dilworth_truncation(const SetFunctionOracle& h, const Value& gamma) {
    int n = h.ground_size();
    if (n > kMaxGroundSize)
        throw GroundTooLarge("Dilworth truncation capped at n = 20");
    ResidualFunction hg(h, gamma);
    std::vector<Value> x(n, Value::zero(h.kind()));
    std::vector<Subset> blocks;

    for (int u = 0; u < n; ++u) {
        FunctionOracle g(n, h.kind(), [&](const Subset& b) {
            Value v = hg.eval(b);
            for (int j : b.elements())
                if (j != u)
                    v -= x[j];
            return v;
        });
        Subset within((1u << (u + 1)) - 1u, n);
        SfmResult r = sfm_bruteforce(g, within, Subset::single(u, n));
        x[u] = r.min_value;

        Subset fused = Subset::single(u, n);
        std::vector<Subset> next;
        for (const auto& blk : blocks) {
            if (blk.intersects(r.minimal))
                fused = fused | blk;
            else
                next.push_back(blk);
        }
        next.push_back(fused);
        blocks = std::move(next);
    }

    Value total = Value::zero(h.kind());
    for (const auto& xi : x)
        total += xi;
    return {gamma, total, Partition(std::move(blocks), n), true};
}

DtResult dilworth_truncation(const SourceModel& model, const Value& gamma) {
    return dilworth_truncation(EntropyOracle(model), gamma);
}

DtEnumeration dilworth_truncation_bruteforce(const SetFunctionOracle& h,
                                             const Value& gamma) {
    int n = h.ground_size();
    if (n > 10)
        throw GroundTooLarge("brute-force Dilworth truncation capped at n = 10");
    ResidualFunction hg(h, gamma);

    bool first = true;
    Value best = Value::zero(h.kind());
    std::vector<Partition> optimal;
    for_each_partition(n, [&](const Partition& p) {
        Value v = partition_value(hg, p);
        if (first || v < best) {
            best = v;
            optimal.clear();
            optimal.push_back(p);
            first = false;
        } else if (v == best) {
            optimal.push_back(p);
        }
    });

    Partition finest = optimal.front();
    for (const auto& p : optimal)
        finest = partition_meet(finest, p);
    if (std::find(optimal.begin(), optimal.end(), finest) == optimal.end())
        throw NoUniqueFinest(
            "tolerance-ambiguous optimum: meet of optimal partitions is not optimal");
    return {gamma, best, std::move(optimal), std::move(finest)};
}

DtEnumeration dilworth_truncation_bruteforce(const SourceModel& model,
                                             const Value& gamma) {
    return dilworth_truncation_bruteforce(EntropyOracle(model), gamma);
}

namespace {

Value partition_entropy_sum(const SetFunctionOracle& h, const Partition& p) {
    Value s = Value::zero(h.kind());
    for (const auto& b : p.blocks())
        s += h.eval(b);
    return s;
}

} // namespace

PspResult psp(const SetFunctionOracle& h) {
    int n = h.ground_size();
    if (n == 1)
        return {{}, {Partition::trivial(1)}};

    PspResult out;
    out.chain.push_back(Partition::trivial(n));

    // Line of a partition P: gamma -> sum_h(P) - |P| gamma. The PSP is the
    // lower envelope; recursion splits an interval until the candidate
    // intersection lies on the envelope.
    std::function<void(const Partition&, const Value&, const Partition&, const Value&)>
        solve = [&](const Partition& pa, const Value& sa, const Partition& pb,
                    const Value& sb) {
            long ka = pa.num_blocks(), kb = pb.num_blocks();
            assert(ka < kb);
            Value gamma_star = (sa - sb).divided_by(ka - kb);
            Value line = sa - gamma_star.times(ka);
            DtResult dt = dilworth_truncation(h, gamma_star);
            if (dt.value == line) {
                out.critical_values.push_back(gamma_star);
                out.chain.push_back(pb);
            } else {
                Value sm = partition_entropy_sum(h, dt.finest);
                solve(pa, sa, dt.finest, sm);
                solve(dt.finest, sm, pb, sb);
            }
        };

    Partition top = Partition::trivial(n);
    Partition bottom = Partition::singletons(n);
    solve(top, partition_entropy_sum(h, top), bottom, partition_entropy_sum(h, bottom));

    // Float backends: snap breakpoint candidates closer than kSnapTol.
    if (h.kind() == Value::Kind::approx) {
        for (std::size_t i = 0; i + 1 < out.critical_values.size();) {
            if (out.critical_values[i + 1].near(out.critical_values[i], kSnapTol)) {
                out.critical_values.erase(out.critical_values.begin() + i + 1);
                out.chain.erase(out.chain.begin() + i + 1);
            } else {
                ++i;
            }
        }
    }
    return out;
}

PspResult psp(const SourceModel& model) {
    return psp(EntropyOracle(model));
}

MmiResult mmi_bruteforce(const SourceModel& model, const Subset& b) {
    if (b.count() < 2)
        throw SubsetTooSmall("MMI requires at least two variables");
    if (b.count() > 10)
        throw GroundTooLarge("brute-force MMI capped at |b| = 10");
    std::vector<int> elems = b.elements();
    int k = static_cast<int>(elems.size());
    Value joint = model.entropy(b);

    bool first = true;
    MmiResult res{Value::zero(model.kind()), {}};
    for_each_partition(k, [&](const Partition& p) {
        if (p.num_blocks() < 2)
            return;
        Value s = Value::zero(model.kind());
        std::vector<Subset> global;
        for (const auto& blk : p.blocks()) {
            Subset g = Subset::empty_of(model.size());
            for (int e : blk.elements())
                g = g.with(elems[e]);
            s += model.entropy(g);
            global.push_back(g);
        }
        Value v = (s - joint).divided_by(p.num_blocks() - 1);
        if (first || v < res.value) {
            res = {v, std::move(global)};
            first = false;
        }
    });
    return res;
}

Value mmi(const SourceModel& model, const Subset& b) {
    if (b.count() < 2)
        throw SubsetTooSmall("MMI requires at least two variables");
    if (b.count() == 2) {
        auto e = b.elements();
        return mutual_information(model, Subset::single(e[0], model.size()),
                                  Subset::single(e[1], model.size()));
    }
    PspResult r = psp(EntropyOracle(model, b.elements()));
    return r.critical_values.front();
}

namespace {

std::vector<Subset> sorted_unique(std::vector<Subset> sets) {
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    return sets;
}

} // namespace

ClusterSet clusters(const SourceModel& model, const Value& gamma) {
    DtResult dt = dilworth_truncation(model, gamma);
    std::vector<Subset> out;
    for (const auto& blk : dt.finest.blocks())
        if (blk.count() > 1)
            out.push_back(blk);
    return {gamma, sorted_unique(std::move(out)), false};
}

ClusterSet extended_clusters(const SourceModel& model, const Value& gamma) {
    int n = model.size();
    if (n > 10)
        throw GroundTooLarge("extended clusters capped at n = 10");
    ClusterSet base = clusters(model, gamma);

    // MMI of every multi-element subset.
    std::map<std::uint32_t, Value> mmi_of;
    for (std::uint32_t m = 0; m < (1u << n); ++m) {
        Subset b(m, n);
        if (b.count() > 1)
            mmi_of.emplace(m, mmi(model, b));
    }

    std::vector<Subset> out = base.clusters;
    for (const auto& [m, value] : mmi_of) {
        Subset b(m, n);
        if (model.kind() == Value::Kind::approx && value == gamma)
            throw FloatEqualityAmbiguous("MMI of " + b.str() +
                                         " within tolerance of the threshold");
        if (value != gamma)
            continue;
        bool consistent = true;
        for (const auto& [m2, value2] : mmi_of) {
            if (!(value2 > gamma))
                continue;
            Subset b2(m2, n);
            if (b2.intersects(b) && !b2.subset_of(b)) {
                consistent = false;
                break;
            }
        }
        if (consistent)
            out.push_back(b);
    }
    return {gamma, sorted_unique(std::move(out)), true};
}

std::vector<Subset> extended_clusters_bruteforce(const SourceModel& model,
                                                 const Value& gamma) {
    DtEnumeration dt = dilworth_truncation_bruteforce(model, gamma);
    std::vector<Subset> out;
    for (const auto& p : dt.optimal)
        for (const auto& blk : p.blocks())
            if (blk.count() > 1)
                out.push_back(blk);
    return sorted_unique(std::move(out));
}

} // namespace infoclust

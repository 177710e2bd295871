#include "infoclust/sources.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <unordered_map>
#include <variant>

namespace infoclust {

mpq_class LinearAtomicSource::subset_entropy(const Subset& b) const {
    std::vector<std::uint64_t> rows;
    std::uint64_t atom_mask = 0;
    for (int i : b.elements()) {
        const auto& def = defs.at(i);
        rows.insert(rows.end(), def.combos.begin(), def.combos.end());
        atom_mask |= def.atoms;
    }
    // GF(2) rank via an xor basis indexed by leading bit.
    int rank = 0;
    std::uint64_t basis[64] = {0};
    for (std::uint64_t v : rows) {
        while (v) {
            int bit = 63 - __builtin_clzll(v);
            if (!basis[bit]) {
                basis[bit] = v;
                ++rank;
                break;
            }
            v ^= basis[bit];
        }
    }
    mpq_class h(rank);
    for (std::size_t a = 0; a < atom_weights.size(); ++a)
        if ((atom_mask >> a) & 1)
            h += atom_weights[a];
    return h;
}

double PmfSource::subset_entropy(const Subset& b) const {
    if (b.empty())
        return 0.0;
    std::map<std::vector<int>, mpq_class> marginal;
    for (const auto& o : outcomes) {
        std::vector<int> key;
        key.reserve(b.count());
        for (int i : b.elements())
            key.push_back(o.values.at(i));
        marginal[key] += o.prob;
    }
    double h = 0.0;
    for (const auto& [key, p] : marginal) {
        double pd = p.get_d();
        if (pd > 0.0)
            h -= pd * std::log2(pd);
    }
    return h;
}

struct SourceModel::Impl {
    GroundSet ground;
    std::variant<LinearAtomicSource, PmfSource, EntropyTableSource> backend;
    mutable std::mutex memo_mutex;
    mutable std::unordered_map<std::uint32_t, Value> memo;

    Impl(GroundSet g, std::variant<LinearAtomicSource, PmfSource, EntropyTableSource> b)
        : ground(std::move(g)), backend(std::move(b)) {}
};

SourceModel::SourceModel(GroundSet ground, LinearAtomicSource src)
    : impl_(std::make_shared<Impl>(std::move(ground), std::move(src))) {}

SourceModel::SourceModel(GroundSet ground, PmfSource src)
    : impl_(std::make_shared<Impl>(std::move(ground), std::move(src))) {}

SourceModel::SourceModel(GroundSet ground, EntropyTableSource src)
    : impl_(std::make_shared<Impl>(std::move(ground), std::move(src))) {}

const GroundSet& SourceModel::ground() const {
    return impl_->ground;
}

Value::Kind SourceModel::kind() const {
    return pmf() ? Value::Kind::approx : Value::Kind::exact;
}

const LinearAtomicSource* SourceModel::linear_atomic() const {
    return std::get_if<LinearAtomicSource>(&impl_->backend);
}

const PmfSource* SourceModel::pmf() const {
    return std::get_if<PmfSource>(&impl_->backend);
}

const EntropyTableSource* SourceModel::entropy_table() const {
    return std::get_if<EntropyTableSource>(&impl_->backend);
}

Value SourceModel::entropy(const Subset& b) const {
    if (b.ground_size() != size())
        throw GroundMismatch("subset over a different ground set");
    {
        std::lock_guard<std::mutex> lock(impl_->memo_mutex);
        auto it = impl_->memo.find(b.mask());
        if (it != impl_->memo.end())
            return it->second;
    }
    Value h;
    if (const auto* la = linear_atomic())
        h = Value::exact(la->subset_entropy(b));
    else if (const auto* p = pmf())
        h = Value::approx(p->subset_entropy(b));
    else
        h = Value::exact(entropy_table()->subset_entropy(b));
    std::lock_guard<std::mutex> lock(impl_->memo_mutex);
    impl_->memo.emplace(b.mask(), h);
    return h;
}

SourceModel SourceModel::reorder(const std::vector<int>& order) const {
    int n = size();
    if (static_cast<int>(order.size()) != n)
        throw Error("reorder requires a full permutation");
    std::vector<bool> seen(n, false);
    for (int i : order) {
        if (i < 0 || i >= n || seen[i])
            throw Error("reorder requires a permutation of variable indices");
        seen[i] = true;
    }
    std::vector<std::string> names;
    names.reserve(n);
    for (int i : order)
        names.push_back(ground().name(i));
    GroundSet g(std::move(names));

    if (const auto* la = linear_atomic()) {
        LinearAtomicSource src = *la;
        src.defs.clear();
        for (int i : order)
            src.defs.push_back(la->defs.at(i));
        return SourceModel(std::move(g), std::move(src));
    }
    if (const auto* p = pmf()) {
        PmfSource src;
        src.arity = p->arity;
        for (const auto& o : p->outcomes) {
            PmfSource::Outcome no;
            no.prob = o.prob;
            for (int i : order)
                no.values.push_back(o.values.at(i));
            src.outcomes.push_back(std::move(no));
        }
        return SourceModel(std::move(g), std::move(src));
    }
    const auto* t = entropy_table();
    EntropyTableSource src;
    src.table.assign(std::size_t(1) << n, mpq_class(0));
    for (std::uint32_t m = 0; m < (1u << n); ++m) {
        std::uint32_t old_mask = 0;
        for (int i = 0; i < n; ++i)
            if ((m >> i) & 1)
                old_mask |= 1u << order[i];
        src.table[m] = t->table.at(old_mask);
    }
    return SourceModel(std::move(g), std::move(src));
}

namespace {

void validate_linear_atomic(const LinearAtomicSource& la, int n, ValidationReport& r) {
    if (static_cast<int>(la.defs.size()) != n)
        r.errors.push_back("linear-atomic model must define every variable");
    if (la.atom_names.size() != la.atom_weights.size())
        r.errors.push_back("atom name and weight lists differ in length");
    if (la.bit_names.size() > 64)
        r.errors.push_back("at most 64 bit primitives supported");
    for (std::size_t a = 0; a < la.atom_weights.size(); ++a)
        if (la.atom_weights[a] <= 0)
            r.errors.push_back("atom " + la.atom_names[a] + " must have positive weight");
    std::uint64_t bit_range =
        la.bit_names.size() >= 64 ? ~0ull : ((1ull << la.bit_names.size()) - 1);
    std::uint64_t atom_range =
        la.atom_names.size() >= 64 ? ~0ull : ((1ull << la.atom_names.size()) - 1);
    for (std::size_t i = 0; i < la.defs.size(); ++i) {
        for (auto combo : la.defs[i].combos)
            if (combo & ~bit_range)
                r.errors.push_back("variable " + std::to_string(i) +
                                   " references an undeclared bit");
        if (la.defs[i].atoms & ~atom_range)
            r.errors.push_back("variable " + std::to_string(i) +
                               " references an undeclared atom");
    }
}

void validate_pmf(const PmfSource& p, int n, ValidationReport& r) {
    if (p.arity != n)
        r.errors.push_back("pmf arity does not match the variable count");
    mpq_class total(0);
    for (std::size_t i = 0; i < p.outcomes.size(); ++i) {
        const auto& o = p.outcomes[i];
        if (o.prob <= 0)
            r.errors.push_back("outcome " + std::to_string(i) +
                               " has non-positive probability");
        if (static_cast<int>(o.values.size()) != n)
            r.errors.push_back("outcome " + std::to_string(i) + " has wrong arity");
        total += o.prob;
    }
    if (total != 1)
        r.errors.push_back("probabilities sum to " + total.get_str() + ", not 1");
}

void validate_table(const EntropyTableSource& t, int n, ValidationReport& r,
                    bool polymatroid) {
    if (t.table.size() != (std::size_t(1) << n)) {
        r.errors.push_back("entropy table must have an entry per subset");
        return;
    }
    if (t.table[0] != 0)
        r.errors.push_back("entropy of the empty set must be 0");
    if (!polymatroid || n > 12)
        return;
    for (std::uint32_t m = 1; m < (1u << n); ++m)
        if (t.table[m] < 0) {
            r.warnings.push_back("negative entropy at " + Subset(m, n).str());
            break;
        }
    for (std::uint32_t m = 1; m < (1u << n); ++m) {
        std::uint32_t low = m & (m - 1);
        if (t.table[m] < t.table[low]) {
            r.warnings.push_back("monotonicity violated at " + Subset(m, n).str());
            break;
        }
    }
    // h(A+i)+h(A+j) >= h(A+i+j)+h(A) for all A and i,j outside A.
    for (std::uint32_t a = 0; a < (1u << n); ++a)
        for (int i = 0; i < n; ++i) {
            if ((a >> i) & 1)
                continue;
            for (int j = i + 1; j < n; ++j) {
                if ((a >> j) & 1)
                    continue;
                std::uint32_t ai = a | (1u << i), aj = a | (1u << j);
                if (t.table[ai] + t.table[aj] < t.table[ai | aj] + t.table[a]) {
                    r.warnings.push_back("submodularity violated on (" +
                                         Subset(ai, n).str() + "," + Subset(aj, n).str() +
                                         ")");
                }
            }
        }
}

} // namespace

ValidationReport SourceModel::validate(bool polymatroid_checks) const {
    ValidationReport r;
    int n = size();
    if (const auto* la = linear_atomic())
        validate_linear_atomic(*la, n, r);
    else if (const auto* p = pmf())
        validate_pmf(*p, n, r);
    else
        validate_table(*entropy_table(), n, r, polymatroid_checks);
    return r;
}

Value mutual_information(const SourceModel& m, const Subset& a, const Subset& b) {
    if (a.empty() || b.empty())
        throw EmptySet("mutual information requires non-empty sets");
    return m.entropy(a) + m.entropy(b) - m.entropy(a | b);
}

Value conditional_entropy(const SourceModel& m, const Subset& a, const Subset& given) {
    return m.entropy(a | given) - m.entropy(given);
}

bool is_mutually_independent(const SourceModel& m, const std::vector<Subset>& family) {
    Subset seen = Subset::empty_of(m.size());
    Value sum = Value::zero(m.kind());
    for (const auto& b : family) {
        if (b.empty())
            throw EmptySet("independence family members must be non-empty");
        if (b.intersects(seen))
            throw OverlappingFamily("independence family members must be disjoint");
        seen = seen | b;
        sum += m.entropy(b);
    }
    return sum == m.entropy(seen);
}

} // namespace infoclust

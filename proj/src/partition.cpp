#include "infoclust/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace infoclust {

Partition::Partition(std::vector<Subset> blocks, int n) : blocks_(std::move(blocks)), n_(n) {
    std::uint32_t seen = 0;
    for (const auto& b : blocks_) {
        if (b.ground_size() != n_)
            throw GroundMismatch("block over a different ground set");
        if (b.empty())
            throw EmptyBlock("partition block must be non-empty");
        if (seen & b.mask())
            throw Error("partition blocks must be disjoint");
        seen |= b.mask();
    }
    if (seen != Subset::full_of(n_).mask())
        throw Error("partition blocks must cover the ground set");
    std::sort(blocks_.begin(), blocks_.end());
}

Partition Partition::singletons(int n) {
    std::vector<Subset> blocks;
    blocks.reserve(n);
    for (int i = 0; i < n; ++i)
        blocks.push_back(Subset::single(i, n));
    return Partition(std::move(blocks), n);
}

Partition Partition::trivial(int n) {
    return Partition({Subset::full_of(n)}, n);
}

Partition Partition::from_rgs(const std::vector<int>& rgs) {
    int n = static_cast<int>(rgs.size());
    int k = rgs.empty() ? 0 : *std::max_element(rgs.begin(), rgs.end()) + 1;
    std::vector<std::uint32_t> masks(k, 0);
    for (int i = 0; i < n; ++i)
        masks[rgs[i]] |= 1u << i;
    std::vector<Subset> blocks;
    blocks.reserve(k);
    for (auto m : masks)
        blocks.emplace_back(m, n);
    return Partition(std::move(blocks), n);
}

const Subset& Partition::block_containing(int i) const {
    for (const auto& b : blocks_)
        if (b.contains(i))
            return b;
    throw UnknownVariable("element index out of range");
}

bool Partition::has_block(const Subset& b) const {
    return std::find(blocks_.begin(), blocks_.end(), b) != blocks_.end();
}

std::string Partition::str() const {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < blocks_.size(); ++i)
        os << (i ? "," : "") << blocks_[i].str();
    os << '}';
    return os.str();
}

std::string Partition::str(const GroundSet& g) const {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < blocks_.size(); ++i)
        os << (i ? "," : "") << blocks_[i].str(g);
    os << '}';
    return os.str();
}

bool refines(const Partition& p, const Partition& q) {
    if (p.ground_size() != q.ground_size())
        throw GroundMismatch("partitions over different ground sets");
    for (const auto& b : p.blocks())
        if (!b.subset_of(q.block_containing(b.smallest())))
            return false;
    return true;
}

Partition partition_meet(const Partition& p, const Partition& q) {
    if (p.ground_size() != q.ground_size())
        throw GroundMismatch("partitions over different ground sets");
    std::vector<Subset> blocks;
    for (const auto& a : p.blocks())
        for (const auto& b : q.blocks()) {
            Subset c = a & b;
            if (!c.empty())
                blocks.push_back(c);
        }
    return Partition(std::move(blocks), p.ground_size());
}

Partition partition_join(const Partition& p, const Partition& q) {
    if (p.ground_size() != q.ground_size())
        throw GroundMismatch("partitions over different ground sets");
    int n = p.ground_size();
    // Union-find over elements; merge within every block of both partitions.
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    auto merge_block = [&](const Subset& b) {
        int root = find(b.smallest());
        for (int e : b.elements())
            parent[find(e)] = root;
    };
    for (const auto& b : p.blocks())
        merge_block(b);
    for (const auto& b : q.blocks())
        merge_block(b);
    std::vector<std::uint32_t> masks(n, 0);
    for (int i = 0; i < n; ++i)
        masks[find(i)] |= 1u << i;
    std::vector<Subset> blocks;
    for (auto m : masks)
        if (m)
            blocks.emplace_back(m, n);
    return Partition(std::move(blocks), n);
}

Partition block_partition(const Subset& c, int n) {
    if (c.empty())
        throw EmptyBlock("block partition requires a non-empty block");
    std::vector<Subset> blocks{c};
    for (int i = 0; i < n; ++i)
        if (!c.contains(i))
            blocks.push_back(Subset::single(i, n));
    return Partition(std::move(blocks), n);
}

void for_each_partition(int n, const std::function<void(const Partition&)>& fn) {
    if (n < 1)
        throw Error("partition enumeration needs a non-empty ground set");
    if (n > kMaxEnumGround)
        throw GroundTooLarge("partition enumeration capped at n = " +
                             std::to_string(kMaxEnumGround));
    std::vector<int> rgs(n, 0);
    std::function<void(int, int)> rec = [&](int i, int max_label) {
        if (i == n) {
            fn(Partition::from_rgs(rgs));
            return;
        }
        for (int label = 0; label <= max_label + 1; ++label) {
            rgs[i] = label;
            rec(i + 1, std::max(max_label, label));
        }
    };
    rec(1, 0);
}

std::vector<Partition> all_partitions(int n) {
    std::vector<Partition> out;
    for_each_partition(n, [&](const Partition& p) { out.push_back(p); });
    return out;
}

} // namespace infoclust

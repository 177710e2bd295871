#pragma once

#include <functional>
#include <vector>

#include "infoclust/ground.hpp"

namespace infoclust {

// Bell-number blowup guard for full partition enumeration.
inline constexpr int kMaxEnumGround = 12;

// A partition of {0,..,n-1} into non-empty disjoint blocks. Canonical
// form: blocks sorted by smallest element. Immutable after construction.
class Partition {
public:
    Partition(std::vector<Subset> blocks, int n);

    static Partition singletons(int n);
    static Partition trivial(int n);
    // Restricted growth string, rgs[i] = block label of element i.
    static Partition from_rgs(const std::vector<int>& rgs);

    int ground_size() const { return n_; }
    int num_blocks() const { return static_cast<int>(blocks_.size()); }
    const std::vector<Subset>& blocks() const { return blocks_; }
    const Subset& block_containing(int i) const;
    bool has_block(const Subset& b) const;

    bool operator==(const Partition& o) const {
        return n_ == o.n_ && blocks_ == o.blocks_;
    }
    bool operator!=(const Partition& o) const { return !(*this == o); }

    std::string str() const;                   // "{{0,1},{2}}"
    std::string str(const GroundSet& g) const; // "{{Y,X1},{X2}}"

private:
    std::vector<Subset> blocks_;
    int n_;
};

// p ⪯ q: every block of p is contained in some block of q.
bool refines(const Partition& p, const Partition& q);

// Common refinement (blockwise intersections).
Partition partition_meet(const Partition& p, const Partition& q);

// Finest partition coarser than both (connected components of the
// block-overlap graph).
Partition partition_join(const Partition& p, const Partition& q);

// {C} plus singletons for everything outside C.
Partition block_partition(const Subset& c, int n);

// Streams every partition of an n-element ground set exactly once, in
// restricted-growth-string order. Throws GroundTooLarge beyond n = 12.
void for_each_partition(int n, const std::function<void(const Partition&)>& fn);

std::vector<Partition> all_partitions(int n);

} // namespace infoclust

#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "infoclust/errors.hpp"

namespace infoclust {

// Every algorithm in this library is desk-scale by contract.
inline constexpr int kMaxGroundSize = 20;

// An ordered set of variable identifiers. Iteration order is declaration
// order and is stable; it fixes the bit positions of every Subset.
class GroundSet {
public:
    explicit GroundSet(std::vector<std::string> names);

    int size() const { return static_cast<int>(names_.size()); }
    const std::string& name(int i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }
    int index(std::string_view name) const; // throws UnknownVariable

    bool operator==(const GroundSet& o) const { return names_ == o.names_; }

private:
    std::vector<std::string> names_;
};

// A subset of a ground set as a fixed-width membership mask.
class Subset {
public:
    Subset() : mask_(0), n_(0) {}
    Subset(std::uint32_t mask, int n);

    static Subset empty_of(int n) { return Subset(0, n); }
    static Subset full_of(int n);
    static Subset single(int i, int n);
    static Subset of(std::initializer_list<int> elems, int n);
    static Subset of(const std::vector<int>& elems, int n);

    std::uint32_t mask() const { return mask_; }
    int ground_size() const { return n_; }
    int count() const { return __builtin_popcount(mask_); }
    bool empty() const { return mask_ == 0; }
    bool contains(int i) const { return (mask_ >> i) & 1u; }
    bool subset_of(const Subset& o) const;
    bool intersects(const Subset& o) const;

    Subset operator|(const Subset& o) const;
    Subset operator&(const Subset& o) const;
    Subset minus(const Subset& o) const;
    Subset complement() const;
    Subset with(int i) const;
    Subset without(int i) const;

    int smallest() const; // -1 when empty
    std::vector<int> elements() const;

    bool operator==(const Subset& o) const { return n_ == o.n_ && mask_ == o.mask_; }
    bool operator!=(const Subset& o) const { return !(*this == o); }
    // Order by lowest element, then mask; used only for canonical sorting.
    bool operator<(const Subset& o) const;

    std::string str() const;                    // "{0,2}"
    std::string str(const GroundSet& g) const;  // "{Y,X2}"

private:
    void check_ground(const Subset& o) const;

    std::uint32_t mask_;
    int n_;
};

} // namespace infoclust

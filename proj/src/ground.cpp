#include "infoclust/ground.hpp"

#include <algorithm>
#include <sstream>

namespace infoclust {

GroundSet::GroundSet(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty())
        throw Error("ground set must have at least one variable");
    if (static_cast<int>(names_.size()) > kMaxGroundSize)
        throw GroundTooLarge("ground set exceeds the library cap of " +
                             std::to_string(kMaxGroundSize));
    for (std::size_t i = 0; i < names_.size(); ++i)
        for (std::size_t j = i + 1; j < names_.size(); ++j)
            if (names_[i] == names_[j])
                throw Error("duplicate variable identifier: " + names_[i]);
}

int GroundSet::index(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name)
            return static_cast<int>(i);
    throw UnknownVariable("unknown variable: " + std::string(name));
}

Subset::Subset(std::uint32_t mask, int n) : mask_(mask), n_(n) {
    if (n < 0 || n > kMaxGroundSize)
        throw GroundTooLarge("subset width out of range");
    if (n < 32 && (mask >> n) != 0)
        throw Error("subset mask has bits outside the ground set");
}

Subset Subset::full_of(int n) {
    return Subset(n == 0 ? 0u : ((1u << n) - 1u), n);
}

Subset Subset::single(int i, int n) {
    if (i < 0 || i >= n)
        throw UnknownVariable("element index out of range");
    return Subset(1u << i, n);
}

Subset Subset::of(std::initializer_list<int> elems, int n) {
    return of(std::vector<int>(elems), n);
}

Subset Subset::of(const std::vector<int>& elems, int n) {
    std::uint32_t m = 0;
    for (int e : elems) {
        if (e < 0 || e >= n)
            throw UnknownVariable("element index out of range");
        m |= 1u << e;
    }
    return Subset(m, n);
}

void Subset::check_ground(const Subset& o) const {
    if (n_ != o.n_)
        throw GroundMismatch("subsets over different ground sets");
}

bool Subset::subset_of(const Subset& o) const {
    check_ground(o);
    return (mask_ & ~o.mask_) == 0;
}

bool Subset::intersects(const Subset& o) const {
    check_ground(o);
    return (mask_ & o.mask_) != 0;
}

Subset Subset::operator|(const Subset& o) const {
    check_ground(o);
    return Subset(mask_ | o.mask_, n_);
}

Subset Subset::operator&(const Subset& o) const {
    check_ground(o);
    return Subset(mask_ & o.mask_, n_);
}

Subset Subset::minus(const Subset& o) const {
    check_ground(o);
    return Subset(mask_ & ~o.mask_, n_);
}

Subset Subset::complement() const {
    return Subset(~mask_ & full_of(n_).mask(), n_);
}

Subset Subset::with(int i) const {
    return *this | single(i, n_);
}

Subset Subset::without(int i) const {
    return minus(single(i, n_));
}

int Subset::smallest() const {
    return mask_ == 0 ? -1 : __builtin_ctz(mask_);
}

std::vector<int> Subset::elements() const {
    std::vector<int> out;
    out.reserve(count());
    for (int i = 0; i < n_; ++i)
        if (contains(i))
            out.push_back(i);
    return out;
}

bool Subset::operator<(const Subset& o) const {
    if (mask_ == 0 || o.mask_ == 0)
        return o.mask_ != 0;
    if (smallest() != o.smallest())
        return smallest() < o.smallest();
    return mask_ < o.mask_;
}

std::string Subset::str() const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (int e : elements()) {
        if (!first)
            os << ',';
        os << e;
        first = false;
    }
    os << '}';
    return os.str();
}

std::string Subset::str(const GroundSet& g) const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (int e : elements()) {
        if (!first)
            os << ',';
        os << g.name(e);
        first = false;
    }
    os << '}';
    return os.str();
}

} // namespace infoclust

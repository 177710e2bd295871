#pragma once

#include <gmpxx.h>

#include <string>

#include "infoclust/errors.hpp"

namespace infoclust {

// Library-wide absolute tolerance for float-backend comparisons.
inline constexpr double kFloatTol = 1e-9;

// Breakpoint candidates closer than this are snapped together on the
// float backend.
inline constexpr double kSnapTol = 1e-7;

// A scalar that is either an exact rational (arbitrary precision) or a
// double compared with the library tolerance. The kind is fixed by the
// source backend that produced the value; mixing kinds in arithmetic or
// comparison throws MixedArithmetic.
class Value {
public:
    enum class Kind { exact, approx };

    Value() : kind_(Kind::exact), q_(0), d_(0.0) {}

    static Value exact(mpq_class q);
    static Value exact(long num, long den = 1);
    static Value approx(double v);
    static Value zero(Kind k);

    Kind kind() const { return kind_; }
    bool is_exact() const { return kind_ == Kind::exact; }

    // Exact-only accessor.
    const mpq_class& rational() const;
    // Defined for both kinds.
    double to_double() const;

    Value operator+(const Value& o) const;
    Value operator-(const Value& o) const;
    Value operator-() const;
    Value& operator+=(const Value& o);
    Value& operator-=(const Value& o);
    Value times(long k) const;
    Value divided_by(long k) const;

    bool operator==(const Value& o) const;
    bool operator!=(const Value& o) const { return !(*this == o); }
    // Strict beyond tolerance for the approx kind.
    bool operator<(const Value& o) const;
    bool operator>(const Value& o) const { return o < *this; }
    bool operator<=(const Value& o) const { return !(o < *this); }
    bool operator>=(const Value& o) const { return !(*this < o); }

    bool is_zero() const { return *this == zero(kind_); }
    bool near(const Value& o, double tol) const;

    // "7/3" / "2" for exact values, shortest-roundtrip decimal otherwise.
    std::string str() const;

    // Accepts "p/q", integer, and decimal literals. Decimals are converted
    // exactly when the requested kind is exact.
    static Value parse(const std::string& s, Kind k);

private:
    void check_kind(const Value& o) const;

    Kind kind_;
    mpq_class q_;
    double d_;
};

} // namespace infoclust

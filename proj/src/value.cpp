#include "infoclust/value.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

namespace infoclust {

Value Value::exact(mpq_class q) {
    Value v;
    v.kind_ = Kind::exact;
    q.canonicalize();
    v.q_ = std::move(q);
    return v;
}

Value Value::exact(long num, long den) {
    return exact(mpq_class(num, den));
}

Value Value::approx(double d) {
    Value v;
    v.kind_ = Kind::approx;
    v.d_ = d;
    return v;
}

Value Value::zero(Kind k) {
    return k == Kind::exact ? exact(0) : approx(0.0);
}

const mpq_class& Value::rational() const {
    if (kind_ != Kind::exact)
        throw MixedArithmetic("rational() called on a float value");
    return q_;
}

double Value::to_double() const {
    return kind_ == Kind::exact ? q_.get_d() : d_;
}

void Value::check_kind(const Value& o) const {
    if (kind_ != o.kind_)
        throw MixedArithmetic("exact-rational and float values cannot be combined");
}

Value Value::operator+(const Value& o) const {
    check_kind(o);
    return kind_ == Kind::exact ? exact(q_ + o.q_) : approx(d_ + o.d_);
}

Value Value::operator-(const Value& o) const {
    check_kind(o);
    return kind_ == Kind::exact ? exact(q_ - o.q_) : approx(d_ - o.d_);
}

Value Value::operator-() const {
    return kind_ == Kind::exact ? exact(mpq_class(-q_)) : approx(-d_);
}

Value& Value::operator+=(const Value& o) {
    *this = *this + o;
    return *this;
}

Value& Value::operator-=(const Value& o) {
    *this = *this - o;
    return *this;
}

Value Value::times(long k) const {
    return kind_ == Kind::exact ? exact(mpq_class(q_ * k)) : approx(d_ * k);
}

Value Value::divided_by(long k) const {
    if (k == 0)
        throw Error("division by zero");
    return kind_ == Kind::exact ? exact(mpq_class(q_ / k)) : approx(d_ / k);
}

bool Value::operator==(const Value& o) const {
    check_kind(o);
    if (kind_ == Kind::exact)
        return q_ == o.q_;
    return std::abs(d_ - o.d_) <= kFloatTol;
}

bool Value::operator<(const Value& o) const {
    check_kind(o);
    if (kind_ == Kind::exact)
        return q_ < o.q_;
    return d_ < o.d_ - kFloatTol;
}

bool Value::near(const Value& o, double tol) const {
    return std::abs(to_double() - o.to_double()) <= tol;
}

std::string Value::str() const {
    if (kind_ == Kind::exact)
        return q_.get_str();
    std::ostringstream os;
    os.precision(12);
    os << d_;
    return os.str();
}

namespace {

mpq_class parse_rational(const std::string& s) {
    if (s.empty())
        throw Error("empty numeric literal");
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        mpq_class q;
        if (q.set_str(s, 10) != 0)
            throw Error("bad rational literal: " + s);
        if (q.get_den() == 0)
            throw Error("zero denominator: " + s);
        q.canonicalize();
        return q;
    }
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        // Exact decimal conversion: digits over a power of ten.
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        std::size_t frac_len = s.size() - dot - 1;
        if (digits.empty() || digits == "-" || digits == "+")
            throw Error("bad decimal literal: " + s);
        mpz_class num;
        if (num.set_str(digits, 10) != 0)
            throw Error("bad decimal literal: " + s);
        mpz_class den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
        mpq_class q(num, den);
        q.canonicalize();
        return q;
    }
    mpz_class z;
    if (z.set_str(s, 10) != 0)
        throw Error("bad integer literal: " + s);
    return mpq_class(z);
}

} // namespace

Value Value::parse(const std::string& s, Kind k) {
    if (k == Kind::exact)
        return exact(parse_rational(s));
    char* end = nullptr;
    double d = std::strtod(s.c_str(), &end);
    if (end == s.c_str() || *end != '\0') {
        // Fall back to rational syntax ("1/3") for the float kind too.
        return approx(parse_rational(s).get_d());
    }
    return approx(d);
}

} // namespace infoclust

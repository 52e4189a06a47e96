#ifndef THOMPSONF_DYADIC_HPP
#define THOMPSONF_DYADIC_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "thompsonf/errors.hpp"

namespace tf {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

class Rational;

// Exact dyadic rational num / 2^exp.  Canonical form: num odd or exp == 0.
class Dyadic {
public:
    Dyadic() : num_(0), exp_(0) {}
    Dyadic(long n) : num_(n), exp_(0) {}
    Dyadic(BigInt num, unsigned exp) : num_(std::move(num)), exp_(exp) { normalize(); }

    const BigInt & numerator() const { return num_; }
    unsigned exponent() const { return exp_; }

    bool is_zero() const { return num_ == 0; }
    int sign() const { return num_ == 0 ? 0 : (num_ > 0 ? 1 : -1); }

    Dyadic operator+(const Dyadic & o) const;
    Dyadic operator-(const Dyadic & o) const;
    Dyadic operator*(const Dyadic & o) const;
    Dyadic operator-() const { return Dyadic(-num_, exp_); }

    // Multiply by 2^k (k may be negative).
    Dyadic mul_pow2(long k) const;

    std::strong_ordering operator<=>(const Dyadic & o) const;
    bool operator==(const Dyadic & o) const { return num_ == o.num_ && exp_ == o.exp_; }

    // Text form: "0", "a" or "a/2^n".  Round-trips bit-exactly.
    std::string str() const;

    // Accepts "a", "a/2^n" and "p/q" with q a power of two.
    static Dyadic parse(const std::string & s);

    BigRat to_bigrat() const;

private:
    void normalize();

    BigInt num_;
    unsigned exp_;
};

// Exact rational p/q, q > 0, reduced.  Wraps boost's cpp_rational.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(const BigInt & p, const BigInt & q);
    Rational(const Dyadic & d) : v_(d.to_bigrat()) {}
    explicit Rational(BigRat v) : v_(std::move(v)) {}

    BigInt numerator() const { return boost::multiprecision::numerator(v_); }
    BigInt denominator() const { return boost::multiprecision::denominator(v_); }
    const BigRat & value() const { return v_; }

    bool is_zero() const { return v_ == 0; }
    int sign() const { return v_ == 0 ? 0 : (v_ > 0 ? 1 : -1); }

    Rational operator+(const Rational & o) const { return Rational(BigRat(v_ + o.v_)); }
    Rational operator-(const Rational & o) const { return Rational(BigRat(v_ - o.v_)); }
    Rational operator*(const Rational & o) const { return Rational(BigRat(v_ * o.v_)); }
    Rational operator/(const Rational & o) const;
    Rational operator-() const { return Rational(BigRat(-v_)); }

    Rational mul_pow2(long k) const;

    std::strong_ordering operator<=>(const Rational & o) const;
    bool operator==(const Rational & o) const { return v_ == o.v_; }

    bool is_dyadic() const;
    // Precondition: is_dyadic().
    Dyadic to_dyadic() const;

    // "p", "p/q"; also accepts the "a/2^n" dyadic form.
    std::string str() const;
    static Rational parse(const std::string & s);

private:
    BigRat v_;
};

inline bool operator<(const Dyadic & a, const Rational & b) { return Rational(a) < b; }
inline bool operator<(const Rational & a, const Dyadic & b) { return a < Rational(b); }

// Some dyadic strictly between lo and hi (lo < hi required).
Dyadic dyadic_between(const Rational & lo, const Rational & hi);

// Parse a comma-separated list of exact values.
std::vector<Rational> parse_rational_list(const std::string & csv);
std::vector<Dyadic> parse_dyadic_list(const std::string & csv);

} // namespace tf

#endif

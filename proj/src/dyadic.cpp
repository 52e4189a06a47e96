#include "thompsonf/dyadic.hpp"

#include <sstream>
#include <vector>

namespace tf {

void Dyadic::normalize()
{
    if (num_ == 0) {
        exp_ = 0;
        return;
    }
    if (exp_ > 0 && (num_ & 1) == 0) {
        unsigned s = boost::multiprecision::lsb(num_ < 0 ? BigInt(-num_) : num_);
        if (s > exp_)
            s = exp_;
        num_ >>= s;
        exp_ -= s;
    }
}

Dyadic Dyadic::operator+(const Dyadic & o) const
{
    unsigned e = std::max(exp_, o.exp_);
    BigInt a = num_ << (e - exp_);
    BigInt b = o.num_ << (e - o.exp_);
    return Dyadic(a + b, e);
}

Dyadic Dyadic::operator-(const Dyadic & o) const
{
    unsigned e = std::max(exp_, o.exp_);
    BigInt a = num_ << (e - exp_);
    BigInt b = o.num_ << (e - o.exp_);
    return Dyadic(a - b, e);
}

Dyadic Dyadic::operator*(const Dyadic & o) const
{
    return Dyadic(num_ * o.num_, exp_ + o.exp_);
}

Dyadic Dyadic::mul_pow2(long k) const
{
    if (num_ == 0)
        return Dyadic();
    if (k >= 0) {
        long e = static_cast<long>(exp_) - k;
        if (e >= 0)
            return Dyadic(num_, static_cast<unsigned>(e));
        return Dyadic(num_ << static_cast<unsigned>(-e), 0);
    }
    return Dyadic(num_, exp_ + static_cast<unsigned>(-k));
}

std::strong_ordering Dyadic::operator<=>(const Dyadic & o) const
{
    unsigned e = std::max(exp_, o.exp_);
    BigInt a = num_ << (e - exp_);
    BigInt b = o.num_ << (e - o.exp_);
    if (a < b)
        return std::strong_ordering::less;
    if (a > b)
        return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Dyadic::str() const
{
    if (exp_ == 0)
        return num_.str();
    return num_.str() + "/2^" + std::to_string(exp_);
}

BigRat Dyadic::to_bigrat() const
{
    BigInt den = BigInt(1) << exp_;
    return BigRat(num_, den);
}

namespace {

BigInt parse_bigint(const std::string & s)
{
    if (s.empty())
        throw ParseError("empty integer literal");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size())
        throw ParseError("bad integer literal '" + s + "'");
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9')
            throw ParseError("bad integer literal '" + s + "' (floats are not accepted; exact values only)");
    return BigInt(s);
}

// Returns exponent if v is a power of two, nullopt otherwise.
std::optional<unsigned> log2_exact(const BigInt & v)
{
    if (v <= 0)
        return std::nullopt;
    unsigned e = boost::multiprecision::lsb(v);
    if ((v >> e) != 1)
        return std::nullopt;
    return e;
}

} // namespace

Dyadic Dyadic::parse(const std::string & s)
{
    auto slash = s.find('/');
    if (slash == std::string::npos)
        return Dyadic(parse_bigint(s), 0);
    BigInt num = parse_bigint(s.substr(0, slash));
    std::string den = s.substr(slash + 1);
    if (den.rfind("2^", 0) == 0) {
        BigInt e = parse_bigint(den.substr(2));
        if (e < 0 || e > 1000000)
            throw ParseError("dyadic exponent out of range in '" + s + "'");
        return Dyadic(num, static_cast<unsigned>(e));
    }
    BigInt d = parse_bigint(den);
    auto e = log2_exact(d);
    if (!e)
        throw ParseError("'" + s + "' is not dyadic (denominator must be a power of two)");
    return Dyadic(num, *e);
}

Rational::Rational(const BigInt & p, const BigInt & q)
{
    if (q <= 0)
        throw ParseError("rational denominator must be positive");
    v_ = BigRat(p, q);
}

Rational Rational::operator/(const Rational & o) const
{
    if (o.v_ == 0)
        throw PreconditionError("division by zero");
    return Rational(BigRat(v_ / o.v_));
}

Rational Rational::mul_pow2(long k) const
{
    BigRat f(BigInt(1) << static_cast<unsigned>(k >= 0 ? k : -k));
    if (k >= 0)
        return Rational(BigRat(v_ * f));
    return Rational(BigRat(v_ / f));
}

std::strong_ordering Rational::operator<=>(const Rational & o) const
{
    if (v_ < o.v_)
        return std::strong_ordering::less;
    if (v_ > o.v_)
        return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

bool Rational::is_dyadic() const
{
    return log2_exact(denominator()).has_value();
}

Dyadic Rational::to_dyadic() const
{
    auto e = log2_exact(denominator());
    if (!e)
        throw PreconditionError("value " + str() + " is not dyadic");
    return Dyadic(numerator(), *e);
}

std::string Rational::str() const
{
    BigInt d = denominator();
    if (d == 1)
        return numerator().str();
    return numerator().str() + "/" + d.str();
}

Rational Rational::parse(const std::string & s)
{
    auto slash = s.find('/');
    if (slash == std::string::npos)
        return Rational(parse_bigint(s), 1);
    std::string den = s.substr(slash + 1);
    if (den.rfind("2^", 0) == 0)
        return Rational(Dyadic::parse(s));
    return Rational(parse_bigint(s.substr(0, slash)), parse_bigint(den));
}

Dyadic dyadic_between(const Rational & lo, const Rational & hi)
{
    if (!(lo < hi))
        throw PreconditionError("dyadic_between requires lo < hi");
    BigInt pow = 1;
    for (unsigned n = 0;; ++n) {
        // Smallest k with k/2^n > lo.
        BigInt k = (lo.numerator() * pow) / lo.denominator() + 1;
        Rational cand(k, pow);
        if (lo < cand && cand < hi)
            return cand.to_dyadic();
        pow <<= 1;
    }
}

std::vector<Rational> parse_rational_list(const std::string & csv)
{
    std::vector<Rational> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty())
            continue;
        out.push_back(Rational::parse(item));
    }
    return out;
}

std::vector<Dyadic> parse_dyadic_list(const std::string & csv)
{
    std::vector<Dyadic> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty())
            continue;
        out.push_back(Dyadic::parse(item));
    }
    return out;
}

} // namespace tf

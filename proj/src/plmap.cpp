#include "thompsonf/plmap.hpp"

#include <algorithm>
#include <sstream>

namespace tf {

std::string Interval::str() const
{
    std::string s = lo_closed ? "[" : "(";
    s += lo.str();
    s += ", ";
    s += hi.str();
    s += hi_closed ? "]" : ")";
    return s;
}

namespace {

// Exponent k with (iq - ip) = 2^k (q - p), or throws.  Dyadic-only
// arithmetic: the ratio (a/2^x)/(b/2^y) is a power of two iff the odd
// parts of a and b agree.
long derive_slope_exp(const Dyadic & p, const Dyadic & q,
                      const Dyadic & ip, const Dyadic & iq)
{
    Dyadic di = iq - ip;
    Dyadic ds = q - p;
    if (di.numerator() <= 0)
        throw ParseError("map is not strictly increasing");
    BigInt a = di.numerator(), b = ds.numerator();
    long e = static_cast<long>(ds.exponent()) - static_cast<long>(di.exponent());
    if ((a & 1) == 0) {
        unsigned s = boost::multiprecision::lsb(a);
        a >>= s;
        e += s;
    }
    if ((b & 1) == 0) {
        unsigned s = boost::multiprecision::lsb(b);
        b >>= s;
        e -= s;
    }
    if (a != b)
        throw ParseError("slope " + di.str() + " / " + ds.str()
                         + " on segment starting at " + p.str()
                         + " is not a power of two");
    return e;
}

} // namespace

PLMap::PLMap()
    : breaks_{Dyadic(0), Dyadic(1)}, images_{Dyadic(0), Dyadic(1)}, slopes_{0}
{
}

PLMap::PLMap(std::vector<Dyadic> breakpoints, std::vector<Dyadic> images)
    : breaks_(std::move(breakpoints)), images_(std::move(images))
{
    canonicalize();
}

void PLMap::canonicalize()
{
    if (breaks_.size() < 2 || breaks_.size() != images_.size())
        throw ParseError("PLMap needs matching breakpoint/image lists of size >= 2");
    if (!(breaks_.front() == Dyadic(0)) || !(breaks_.back() == Dyadic(1)))
        throw ParseError("breakpoints must start at 0 and end at 1");
    if (!(images_.front() == Dyadic(0)) || !(images_.back() == Dyadic(1)))
        throw ParseError("images must start at 0 and end at 1");
    for (std::size_t i = 0; i + 1 < breaks_.size(); ++i) {
        if (!(breaks_[i] < breaks_[i + 1]))
            throw ParseError("breakpoints must be strictly increasing (offender at index "
                             + std::to_string(i + 1) + ")");
        if (!(images_[i] < images_[i + 1]))
            throw ParseError("images must be strictly increasing (offender at index "
                             + std::to_string(i + 1) + ")");
    }
    slopes_.clear();
    slopes_.reserve(breaks_.size() - 1);
    for (std::size_t i = 0; i + 1 < breaks_.size(); ++i)
        slopes_.push_back(derive_slope_exp(breaks_[i], breaks_[i + 1],
                                           images_[i], images_[i + 1]));
    // Drop redundant breakpoints where adjacent slopes coincide.
    std::vector<Dyadic> nb{breaks_.front()};
    std::vector<Dyadic> ni{images_.front()};
    std::vector<long> ns;
    for (std::size_t i = 0; i + 1 < breaks_.size(); ++i) {
        bool last = (i + 2 == breaks_.size());
        bool merge_next = !last && slopes_[i + 1] == slopes_[i];
        if (ns.empty() || ns.back() != slopes_[i])
            ns.push_back(slopes_[i]);
        if (!merge_next) {
            nb.push_back(breaks_[i + 1]);
            ni.push_back(images_[i + 1]);
        }
    }
    breaks_ = std::move(nb);
    images_ = std::move(ni);
    slopes_ = std::move(ns);
}

const PLMap & PLMap::identity()
{
    static const PLMap id;
    return id;
}

const PLMap & PLMap::x0()
{
    static const PLMap g({Dyadic(0), Dyadic(1, 1), Dyadic(3, 2), Dyadic(1)},
                         {Dyadic(0), Dyadic(1, 2), Dyadic(1, 1), Dyadic(1)});
    return g;
}

const PLMap & PLMap::x1()
{
    static const PLMap g({Dyadic(0), Dyadic(1, 1), Dyadic(3, 2), Dyadic(7, 3), Dyadic(1)},
                         {Dyadic(0), Dyadic(1, 1), Dyadic(5, 3), Dyadic(3, 2), Dyadic(1)});
    return g;
}

bool PLMap::is_identity() const
{
    return breaks_.size() == 2 && slopes_[0] == 0;
}

std::string PLMap::key() const
{
    std::ostringstream os;
    for (std::size_t i = 0; i < breaks_.size(); ++i)
        os << breaks_[i].numerator() << '.' << breaks_[i].exponent() << ';'
           << images_[i].numerator() << '.' << images_[i].exponent() << ';';
    return os.str();
}

bool PLMap::operator<(const PLMap & o) const
{
    auto cmp = [](const std::vector<Dyadic> & a, const std::vector<Dyadic> & b) {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                            [](const Dyadic & x, const Dyadic & y) { return x < y; });
    };
    if (breaks_ != o.breaks_)
        return cmp(breaks_, o.breaks_);
    return cmp(images_, o.images_);
}

namespace {

// breaks[i] <= t without building cpp_rationals: n/2^e vs p/q is decided
// by n*q vs p*2^e (q > 0).
bool break_le(const Dyadic & b, const Dyadic & t)
{
    return !(t < b);
}

bool break_le(const Dyadic & b, const Rational & t)
{
    BigInt lhs = b.numerator() * t.denominator();
    BigInt rhs = t.numerator() << b.exponent();
    return lhs <= rhs;
}

template <typename Num>
std::size_t segment_index(const std::vector<Dyadic> & breaks, const Num & t)
{
    // Largest i with breaks[i] <= t, capped at the last segment.
    std::size_t lo = 0, hi = breaks.size() - 1;
    while (lo + 1 < hi) {
        std::size_t mid = (lo + hi) / 2;
        if (break_le(breaks[mid], t))
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

} // namespace

Dyadic PLMap::eval(const Dyadic & t) const
{
    if (t < Dyadic(0) || Dyadic(1) < t)
        throw PreconditionError("eval: point " + t.str() + " outside [0,1]");
    std::size_t i = segment_index(breaks_, t);
    return images_[i] + (t - breaks_[i]).mul_pow2(slopes_[i]);
}

Rational PLMap::eval(const Rational & t) const
{
    if (t < Rational(0) || Rational(1) < t)
        throw PreconditionError("eval: point " + t.str() + " outside [0,1]");
    if (t.is_dyadic())
        return Rational(eval(t.to_dyadic()));
    std::size_t i = segment_index(breaks_, t);
    return Rational(images_[i]) + (t - Rational(breaks_[i])).mul_pow2(slopes_[i]);
}

Dyadic PLMap::eval_inverse(const Dyadic & y) const
{
    if (y < Dyadic(0) || Dyadic(1) < y)
        throw PreconditionError("eval_inverse: point outside [0,1]");
    std::size_t i = segment_index(images_, y);
    return breaks_[i] + (y - images_[i]).mul_pow2(-slopes_[i]);
}

long PLMap::slope_exp_right_of(const Rational & t) const
{
    if (!(t < Rational(1)))
        throw PreconditionError("slope_exp_right_of requires t < 1");
    std::size_t i = segment_index(breaks_, t);
    return slopes_[i];
}

PLMap PLMap::inverse() const
{
    return PLMap(images_, breaks_);
}

AbelianImage PLMap::abelianize() const
{
    return {slopes_.front(), slopes_.back()};
}

bool PLMap::in_commutator() const
{
    return abelianize() == AbelianImage{0, 0};
}

std::vector<Interval> PLMap::fixed_intervals() const
{
    std::vector<Interval> fixed;
    auto push = [&fixed](const Rational & lo, const Rational & hi) {
        if (!fixed.empty() && !(fixed.back().hi < lo)) {
            if (fixed.back().hi < hi)
                fixed.back().hi = hi;
            return;
        }
        fixed.push_back({lo, hi, true, true});
    };
    for (std::size_t i = 0; i + 1 < breaks_.size(); ++i) {
        Rational p(breaks_[i]), q(breaks_[i + 1]), ip(images_[i]);
        long k = slopes_[i];
        if (k == 0) {
            if (ip == p)
                push(p, q);
            continue;
        }
        // Fixed point of t -> ip + 2^k (t - p):  t* = (ip - 2^k p)/(1 - 2^k).
        Rational num = ip - p.mul_pow2(k);
        Rational den = Rational(1) - Rational(1).mul_pow2(k);
        Rational tstar = num / den;
        if (!(tstar < p) && !(q < tstar))
            push(tstar, tstar);
    }
    return fixed;
}

std::vector<Interval> PLMap::support() const
{
    auto fixed = fixed_intervals();
    std::vector<Interval> sup;
    Rational prev_hi(0);
    bool have_prev = false;
    auto push = [&sup](const Rational & lo, const Rational & hi) {
        if (!sup.empty() && sup.back().hi == lo) {
            sup.back().hi = hi; // closures touch at an isolated fixed point
            return;
        }
        sup.push_back({lo, hi, true, true});
    };
    for (const auto & f : fixed) {
        if (have_prev && prev_hi < f.lo)
            push(prev_hi, f.lo);
        if (!have_prev && Rational(0) < f.lo)
            push(Rational(0), f.lo);
        prev_hi = f.hi;
        have_prev = true;
    }
    if (!have_prev)
        push(Rational(0), Rational(1));
    else if (prev_hi < Rational(1))
        push(prev_hi, Rational(1));
    return sup;
}

bool PLMap::germ_trivial_at(const Rational & t) const
{
    for (const auto & f : fixed_intervals()) {
        if (f.lo == f.hi)
            continue;
        if (f.lo < t && t < f.hi)
            return true;
        if (t == Rational(0) && f.lo == t)
            return true;
        if (t == Rational(1) && f.hi == t)
            return true;
    }
    return false;
}

PLMap compose(const PLMap & g, const PLMap & h)
{
    std::vector<Dyadic> cuts = g.breakpoints();
    for (const auto & b : h.breakpoints())
        cuts.push_back(g.eval_inverse(b));
    std::sort(cuts.begin(), cuts.end(), [](const Dyadic & a, const Dyadic & b) { return a < b; });
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    std::vector<Dyadic> images;
    images.reserve(cuts.size());
    for (const auto & t : cuts)
        images.push_back(h.eval(g.eval(t)));
    return PLMap(std::move(cuts), std::move(images));
}

PLMap conjugate(const PLMap & g, const PLMap & h)
{
    return compose(compose(h.inverse(), g), h);
}

PLMap power(const PLMap & g, long k)
{
    PLMap base = k < 0 ? g.inverse() : g;
    unsigned long n = k < 0 ? static_cast<unsigned long>(-(k + 1)) + 1 : static_cast<unsigned long>(k);
    PLMap acc;
    PLMap sq = base;
    while (n > 0) {
        if (n & 1)
            acc = compose(acc, sq);
        n >>= 1;
        if (n > 0)
            sq = compose(sq, sq);
    }
    return acc;
}

PLMap bump(const Dyadic & a, const Dyadic & b)
{
    if (!(a < b))
        throw PreconditionError("bump requires a < b");
    if (a < Dyadic(0) || Dyadic(1) < b)
        throw PreconditionError("bump endpoints must lie in [0,1]");
    Dyadic len = b - a;
    Dyadic p1 = a + len.mul_pow2(-3);        // a + L/8
    Dyadic p2 = b - len.mul_pow2(-2);        // b - L/4
    Dyadic i1 = a + len.mul_pow2(-2);        // a + L/4
    Dyadic i2 = b - len.mul_pow2(-3);        // b - L/8
    std::vector<Dyadic> xs, ys;
    auto add = [&xs, &ys](const Dyadic & x, const Dyadic & y) {
        if (!xs.empty() && xs.back() == x)
            return;
        xs.push_back(x);
        ys.push_back(y);
    };
    add(Dyadic(0), Dyadic(0));
    add(a, a);
    add(p1, i1);
    add(p2, i2);
    add(b, b);
    add(Dyadic(1), Dyadic(1));
    return PLMap(std::move(xs), std::move(ys));
}

namespace {

using Piece = std::pair<Dyadic, Dyadic>;

// Greedy decomposition of [p,q] into standard dyadic intervals
// [k/2^n, (k+1)/2^n], largest aligned piece first.
std::vector<Piece> standard_decomposition(const Dyadic & p, const Dyadic & q)
{
    std::vector<Piece> out;
    Dyadic cur = p;
    while (cur < q) {
        unsigned n = cur.exponent();
        while (q < cur + Dyadic(1, n) )
            ++n;
        Dyadic next = cur + Dyadic(1, n);
        out.push_back({cur, next});
        cur = next;
    }
    return out;
}

void split_to_count(std::vector<Piece> & pieces, std::size_t count)
{
    while (pieces.size() < count) {
        // Split the leftmost largest piece in half; halves stay standard.
        std::size_t best = 0;
        Dyadic best_len = pieces[0].second - pieces[0].first;
        for (std::size_t i = 1; i < pieces.size(); ++i) {
            Dyadic len = pieces[i].second - pieces[i].first;
            if (best_len < len) {
                best = i;
                best_len = len;
            }
        }
        Dyadic mid = pieces[best].first + best_len.mul_pow2(-1);
        Piece right{mid, pieces[best].second};
        pieces[best].second = mid;
        pieces.insert(pieces.begin() + static_cast<long>(best) + 1, right);
    }
}

} // namespace

PLMap interval_map(const std::vector<Dyadic> & source,
                   const std::vector<Dyadic> & target,
                   MapMode mode)
{
    if (source.size() != target.size())
        throw PreconditionError("interval_map: tuple length mismatch");
    for (const auto * tup : {&source, &target}) {
        for (std::size_t i = 0; i < tup->size(); ++i) {
            if (!(Dyadic(0) < (*tup)[i]) || !((*tup)[i] < Dyadic(1)))
                throw PreconditionError("interval_map: tuple entries must lie in (0,1)");
            if (i > 0 && !((*tup)[i - 1] < (*tup)[i]))
                throw PreconditionError("interval_map: tuple entries must be strictly increasing");
        }
    }
    std::vector<Dyadic> src{Dyadic(0)}, tgt{Dyadic(0)};
    if (mode == MapMode::FPrime && !source.empty()) {
        // Sacrificial standard intervals near 0 and 1 mapped identically,
        // forcing slope 1 at both endpoints.
        Dyadic lo_bound = std::min(source.front(), target.front());
        unsigned m = 1;
        while (!(Dyadic(1, m) < lo_bound))
            ++m;
        src.push_back(Dyadic(1, m));
        tgt.push_back(Dyadic(1, m));
    }
    src.insert(src.end(), source.begin(), source.end());
    tgt.insert(tgt.end(), target.begin(), target.end());
    if (mode == MapMode::FPrime && !source.empty()) {
        Dyadic hi_bound = std::max(source.back(), target.back());
        unsigned m = 1;
        while (!(hi_bound < Dyadic(1) - Dyadic(1, m)))
            ++m;
        src.push_back(Dyadic(1) - Dyadic(1, m));
        tgt.push_back(Dyadic(1) - Dyadic(1, m));
    }
    src.push_back(Dyadic(1));
    tgt.push_back(Dyadic(1));

    std::vector<Dyadic> xs{Dyadic(0)}, ys{Dyadic(0)};
    for (std::size_t i = 0; i + 1 < src.size(); ++i) {
        auto sp = standard_decomposition(src[i], src[i + 1]);
        auto tp = standard_decomposition(tgt[i], tgt[i + 1]);
        split_to_count(sp, tp.size());
        split_to_count(tp, sp.size());
        for (std::size_t j = 0; j < sp.size(); ++j) {
            xs.push_back(sp[j].second);
            ys.push_back(tp[j].second);
        }
    }
    return PLMap(std::move(xs), std::move(ys));
}

} // namespace tf

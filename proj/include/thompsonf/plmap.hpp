#ifndef THOMPSONF_PLMAP_HPP
#define THOMPSONF_PLMAP_HPP

#include <string>
#include <vector>

#include "thompsonf/dyadic.hpp"

namespace tf {

// Closed/open interval with exact rational endpoints.
struct Interval {
    Rational lo;
    Rational hi;
    bool lo_closed = true;
    bool hi_closed = true;

    bool contains(const Rational & t) const
    {
        if (t < lo || hi < t)
            return false;
        if (t == lo && !lo_closed)
            return false;
        if (t == hi && !hi_closed)
            return false;
        return true;
    }
    bool operator==(const Interval & o) const = default;
    std::string str() const;
};

// Image of the abelianization map F -> Z^2: log2 slopes at 0 and at 1.
struct AbelianImage {
    long at_zero = 0;
    long at_one = 0;
    bool operator==(const AbelianImage & o) const = default;
    AbelianImage operator+(const AbelianImage & o) const
    {
        return {at_zero + o.at_zero, at_one + o.at_one};
    }
};

// An element of Thompson's group F as a canonical piecewise linear
// homeomorphism of [0,1]: dyadic breakpoints 0 = b_0 < ... < b_m = 1,
// dyadic images, and a power-of-two slope on each segment.  Canonical
// means adjacent segments never share a slope.
class PLMap {
public:
    PLMap(); // identity

    // Validates and canonicalizes.  Slopes are derived from the data and
    // must all be powers of two.
    PLMap(std::vector<Dyadic> breakpoints, std::vector<Dyadic> images);

    static const PLMap & identity();
    static const PLMap & x0();
    static const PLMap & x1();

    const std::vector<Dyadic> & breakpoints() const { return breaks_; }
    const std::vector<Dyadic> & images() const { return images_; }
    const std::vector<long> & slope_exponents() const { return slopes_; }

    bool is_identity() const;
    bool operator==(const PLMap & o) const
    {
        return breaks_ == o.breaks_ && images_ == o.images_;
    }

    // Compact stable key used for deduplication in ball enumerations.
    std::string key() const;
    // Lexicographic over (breakpoints, images); any total order works.
    bool operator<(const PLMap & o) const;

    Dyadic eval(const Dyadic & t) const;
    Rational eval(const Rational & t) const;
    Dyadic eval_inverse(const Dyadic & y) const;

    // Slope exponent on the segment immediately right of t (t < 1).
    long slope_exp_right_of(const Rational & t) const;

    PLMap inverse() const;
    AbelianImage abelianize() const;
    bool in_commutator() const;

    // Support = closure of the moved set, as disjoint closed intervals.
    std::vector<Interval> support() const;
    // Maximal closed intervals (possibly degenerate) of fixed points.
    std::vector<Interval> fixed_intervals() const;
    // True iff g is the identity on a neighborhood of t within [0,1].
    bool germ_trivial_at(const Rational & t) const;

private:
    void canonicalize();

    std::vector<Dyadic> breaks_;
    std::vector<Dyadic> images_;
    std::vector<long> slopes_;
};

// compose(g, h): apply g then h, i.e. t -> h(g(t)).  This is the group
// product gh under the right-action convention.
PLMap compose(const PLMap & g, const PLMap & h);

// h^{-1} g h under the same convention: t -> h(g(h^{-1}(t))).
// Its support is the image of support(g) under h.
PLMap conjugate(const PLMap & g, const PLMap & h);

PLMap power(const PLMap & g, long k);

// Nontrivial element supported exactly on [a,b]: slopes (2, 1, 1/2) with
// interior breakpoints a + L/8 and b - L/4, L = b - a.
PLMap bump(const Dyadic & a, const Dyadic & b);

enum class MapMode { F, FPrime };

// Element h of F (or F' when mode == FPrime) with h(source[i]) = target[i].
// Tuples must be strictly increasing, equal length, inside (0,1).
PLMap interval_map(const std::vector<Dyadic> & source,
                   const std::vector<Dyadic> & target,
                   MapMode mode = MapMode::F);

} // namespace tf

#endif

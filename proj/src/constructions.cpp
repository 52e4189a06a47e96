#include "thompsonf/constructions.hpp"

#include <algorithm>

#include "thompsonf/errors.hpp"

namespace tf {

ConfiningSet build_confining_set(const std::vector<Rational> & s)
{
    for (const auto & p : s)
        if (!(Rational(0) < p) || !(p < Rational(1)))
            throw PreconditionError("build_confining_set: points must lie in (0,1)");
    ConfiningSet out;
    std::size_t r = s.size() + 1;
    for (std::size_t i = 1; i <= r; ++i)
        out.elements.push_back(bump(Dyadic(1, static_cast<unsigned>(i + 1)),
                                    Dyadic(1, static_cast<unsigned>(i))));
    out.target = "germ_stab_commutator(S), |S|=" + std::to_string(s.size());
    return out;
}

ConfiningReport verify_confining(const SubgroupOracle & H,
                                 const std::vector<PLMap> & P,
                                 int radius)
{
    if (radius < 0)
        throw PreconditionError("verify_confining: radius must be >= 0");
    ConfiningReport report;
    report.radius = radius;
    auto ball = cayley_ball(radius);
    for (std::size_t v = 0; v < ball.elements.size(); ++v) {
        const PLMap & k = ball.elements[v];
        if (!k.in_commutator())
            continue;
        ++report.conjugators_checked;
        bool hit = false;
        for (const auto & g : P) {
            if (H.member(conjugate(g, k))) {
                hit = true;
                break;
            }
        }
        if (!hit) {
            report.pass = false;
            report.failing_conjugator = ball.words[v];
            return report;
        }
    }
    report.pass = true;
    return report;
}

bool IntervalChain::ordering_holds() const
{
    if (permuted_elements.size() != intervals.size())
        return false;
    Rational prev_hi(-1);
    for (std::size_t i = 0; i < intervals.size(); ++i) {
        const auto & u = intervals[i];
        if (!(u.lo < u.hi))
            return false;
        Rational img_lo = permuted_elements[i].eval(u.lo);
        Rational img_hi = permuted_elements[i].eval(u.hi);
        // prev < g_i(U_i) < U_i
        if (!(prev_hi < img_lo))
            return false;
        if (!(img_hi < u.lo))
            return false;
        prev_hi = u.hi;
    }
    return true;
}

namespace {

struct Tagged {
    PLMap g;
    std::size_t origin;
    bool inverted = false;
};

// Recursive step: chain the elements so that every interval endpoint
// stays strictly below `everything built so far` stays consistent.
void build_chain(std::vector<Tagged> items, IntervalChain & out)
{
    if (items.empty())
        return;
    // Element with maximal supremum of support goes last; ties keep the
    // earliest input.
    std::size_t best = 0;
    Rational best_sup = items[0].g.support().back().hi;
    for (std::size_t i = 1; i < items.size(); ++i) {
        Rational sup = items[i].g.support().back().hi;
        if (best_sup < sup) {
            best = i;
            best_sup = sup;
        }
    }
    Tagged last = items[best];
    items.erase(items.begin() + static_cast<long>(best));
    build_chain(std::move(items), out);

    Rational m(0);
    if (!out.intervals.empty())
        m = out.intervals.back().hi;

    Rational s = best_sup;
    // The last maximal moved interval is the gap (c, s) between the two
    // final fixed intervals; g - id has constant sign on it.
    Rational c(0);
    for (const auto & f : last.g.fixed_intervals()) {
        if (f.hi < s)
            c = f.hi;
    }
    PLMap g = last.g;
    Rational probe = Rational(c + s).mul_pow2(-1);
    if (probe < last.g.eval(probe)) {
        g = last.g.inverse();
        last.inverted = true;
    }

    // Scan dyadic candidates v -> s^- until m < g(g(v)) < g(v) < v; then
    // any dyadic u in (g(v), v) satisfies g(u) > g(g(v)) > m as well.
    Rational gap = s - (m < Rational(0) ? Rational(0) : m);
    while (true) {
        gap = gap.mul_pow2(-1);
        Dyadic v = dyadic_between(s - gap, s);
        Rational rv(v);
        Rational gv = g.eval(rv);
        if (!(gv < rv))
            continue;
        Rational ggv = g.eval(gv);
        if (!(m < ggv))
            continue;
        Dyadic u = dyadic_between(gv, rv);
        out.permuted_elements.push_back(g);
        out.permutation.push_back(last.origin);
        out.inverted.push_back(last.inverted);
        out.intervals.push_back({Rational(u), rv, false, false});
        return;
    }
}

} // namespace

IntervalChain lemma_interval_chain(const std::vector<PLMap> & gs)
{
    IntervalChain chain;
    std::vector<Tagged> items;
    for (std::size_t i = 0; i < gs.size(); ++i) {
        if (gs[i].is_identity())
            throw PreconditionError("lemma_interval_chain: element "
                                    + std::to_string(i) + " is the identity");
        items.push_back({gs[i], i, false});
    }
    build_chain(std::move(items), chain);
    return chain;
}

int push_left(const std::vector<Rational> & s)
{
    for (const auto & p : s)
        if (!(Rational(0) < p) || !(p < Rational(1)))
            throw PreconditionError("push_left: points must lie in (0,1)");
    const PLMap & x0 = PLMap::x0();
    std::vector<Rational> pts = s;
    int k = 0;
    auto all_left = [](const std::vector<Rational> & v) {
        for (const auto & p : v)
            if (!(p < Rational(1, 2)))
                return false;
        return true;
    };
    while (!all_left(pts)) {
        for (auto & p : pts)
            p = x0.eval(p);
        ++k;
    }
    return k;
}

std::vector<GermIdentityRow> germ_identity_check(const std::vector<Rational> & s,
                                                 const std::vector<PLMap> & samples)
{
    std::vector<GermIdentityRow> rows;
    rows.reserve(samples.size());
    for (const auto & g : samples) {
        GermIdentityRow row;
        row.lhs = g.in_commutator();
        for (const auto & p : s)
            row.lhs = row.lhs && g.germ_trivial_at(p);
        row.rhs = g.germ_trivial_at(Rational(0)) && g.germ_trivial_at(Rational(1));
        for (const auto & p : s)
            row.rhs = row.rhs && g.germ_trivial_at(p);
        rows.push_back(row);
    }
    return rows;
}

} // namespace tf

#include "thompsonf/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "thompsonf/errors.hpp"
#include "thompsonf/schreier.hpp"

namespace tf {

std::vector<std::size_t> GrowthTable::max_by_radius() const
{
    std::vector<std::size_t> out(static_cast<std::size_t>(max_n) + 1, 0);
    for (const auto & row : rows)
        out[static_cast<std::size_t>(row.n)] = std::max(out[static_cast<std::size_t>(row.n)],
                                                        row.ball_size);
    return out;
}

GrowthTable growth_table(const RootedLabelledGraph & g,
                         const std::vector<int> & roots, int max_n)
{
    if (max_n < 0)
        throw PreconditionError("growth_table: max_n must be >= 0");
    GrowthTable t;
    t.graph_id = g.description;
    t.max_n = max_n;
    t.roots = roots;
    for (int r : roots) {
        if (r < 0 || static_cast<std::size_t>(r) >= g.verts.size())
            throw PreconditionError("growth_table: root index out of range");
        if (g.verts[r].dist > g.radius - max_n)
            throw PreconditionError("growth_table: ball of radius "
                                    + std::to_string(max_n) + " at vertex "
                                    + std::to_string(r)
                                    + " is not complete in the computed region");
        auto dist = bfs_distances(g, r, max_n);
        std::vector<std::size_t> count(static_cast<std::size_t>(max_n) + 1, 0);
        for (int d : dist)
            if (d >= 0)
                ++count[static_cast<std::size_t>(d)];
        std::size_t acc = 0;
        for (int n = 0; n <= max_n; ++n) {
            acc += count[static_cast<std::size_t>(n)];
            t.rows.push_back({r, n, acc});
        }
    }
    return t;
}

GrowthEstimate uniform_growth_estimate(const GrowthTable & t,
                                       int window_lo, int window_hi,
                                       double rate_threshold, double r2_threshold)
{
    if (t.max_n < 3 || t.rows.empty())
        throw PreconditionError("uniform_growth_estimate: table needs at least 4 radii");
    if (window_hi < 0)
        window_hi = t.max_n;
    if (window_lo < 0)
        window_lo = t.max_n / 2;
    if (window_lo >= window_hi)
        throw PreconditionError("uniform_growth_estimate: empty fit window");
    auto sizes = t.max_by_radius();

    double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
    int m = 0;
    for (int n = window_lo; n <= window_hi; ++n) {
        double x = n;
        double y = std::log2(static_cast<double>(sizes[static_cast<std::size_t>(n)]));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        syy += y * y;
        ++m;
    }
    GrowthEstimate e;
    e.window_lo = window_lo;
    e.window_hi = window_hi;
    double det = m * sxx - sx * sx;
    e.fitted_rate = (m * sxy - sx * sy) / det;
    double ss_tot = syy - sy * sy / m;
    if (ss_tot <= 0) {
        // Flat data: a zero-slope line fits exactly.
        e.r_squared = 1.0;
    } else {
        double intercept = (sy - e.fitted_rate * sx) / m;
        double ss_res = 0;
        for (int n = window_lo; n <= window_hi; ++n) {
            double y = std::log2(static_cast<double>(sizes[static_cast<std::size_t>(n)]));
            double d = y - (intercept + e.fitted_rate * n);
            ss_res += d * d;
        }
        e.r_squared = 1.0 - ss_res / ss_tot;
    }
    e.exponential_evidence = e.fitted_rate >= rate_threshold && e.r_squared >= r2_threshold;
    return e;
}

bool growth_dominates(const GrowthTable & f, const GrowthTable & g, int c)
{
    if (c <= 0)
        throw PreconditionError("growth_dominates: C must be positive");
    auto fs = f.max_by_radius();
    auto gs = g.max_by_radius();
    bool any = false;
    for (int n = 0; n <= g.max_n; ++n) {
        long fn = static_cast<long>(c) * n;
        if (fn > f.max_n)
            break;
        any = true;
        if (!(gs[static_cast<std::size_t>(n)] < fs[static_cast<std::size_t>(fn)]))
            return false;
    }
    if (!any)
        throw PreconditionError("growth_dominates: no overlapping range");
    return true;
}

Rational foelner_ratio(const RootedLabelledGraph & g, const std::vector<int> & s)
{
    if (s.empty())
        throw PreconditionError("foelner_ratio: empty set");
    std::set<int> in(s.begin(), s.end());
    long boundary = 0;
    for (int v : in) {
        if (v < 0 || static_cast<std::size_t>(v) >= g.verts.size())
            throw PreconditionError("foelner_ratio: vertex index out of range");
        for (int gen = 0; gen < 2; ++gen) {
            for (bool inv : {false, true}) {
                int w = g.neighbor(v, gen, inv);
                if (w < 0)
                    throw PreconditionError("foelner_ratio: set touches the computed frontier");
                if (!in.count(w))
                    ++boundary;
            }
        }
    }
    // Each labelled edge with one endpoint inside was counted exactly once:
    // outgoing at its inner tail or incoming at its inner head.
    return Rational(BigInt(boundary), BigInt(static_cast<long>(in.size())));
}

DisplacementReport displacement(const Word & w, const RootedLabelledGraph & g)
{
    DisplacementReport rep;
    rep.word = w;
    int len = static_cast<int>(w.length());
    for (std::size_t v = 0; v < g.verts.size(); ++v) {
        int target = follow_word(g, static_cast<int>(v), w);
        if (target < 0) {
            ++rep.vertices_skipped;
            continue;
        }
        auto dist = bfs_distances(g, static_cast<int>(v), len);
        if (dist[static_cast<std::size_t>(target)] < 0) {
            // Unreachable within len steps cannot happen: the walk itself
            // is a path of length <= len inside the computed region.
            ++rep.vertices_skipped;
            continue;
        }
        rep.max_observed = std::max(rep.max_observed, dist[static_cast<std::size_t>(target)]);
        ++rep.vertices_checked;
    }
    return rep;
}

} // namespace tf

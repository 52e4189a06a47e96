#include "thompsonf/graph.hpp"

#include <deque>
#include <sstream>
#include <unordered_map>

#include "thompsonf/errors.hpp"

namespace tf {

std::vector<int> bfs_distances(const RootedLabelledGraph & g, int from, int max_dist)
{
    std::vector<int> dist(g.verts.size(), -1);
    std::deque<int> queue{from};
    dist[from] = 0;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        if (dist[v] >= max_dist)
            continue;
        for (int gen = 0; gen < 2; ++gen) {
            for (bool inv : {false, true}) {
                int w = g.neighbor(v, gen, inv);
                if (w >= 0 && dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
    }
    return dist;
}

bool ball_isomorphic(const RootedLabelledGraph & g1, int r1,
                     const RootedLabelledGraph & g2, int r2, int n)
{
    if (n < 0)
        throw PreconditionError("ball_isomorphic: negative radius");
    if (n == 0)
        return true;
    auto d1 = bfs_distances(g1, r1, n);
    auto d2 = bfs_distances(g2, r2, n);
    auto in_ball_edge = [n](const std::vector<int> & d, int u, int v) {
        // u known in ball; v = neighbor or -1 (outside computed region)
        if (v < 0 || d[v] < 0 || d[v] > n)
            return false;
        return d[u] <= n - 1 || d[v] <= n - 1;
    };
    std::unordered_map<int, int> fwd, bwd;
    std::deque<std::pair<int, int>> queue{{r1, r2}};
    fwd[r1] = r2;
    bwd[r2] = r1;
    while (!queue.empty()) {
        auto [a, b] = queue.front();
        queue.pop_front();
        for (int gen = 0; gen < 2; ++gen) {
            for (bool inv : {false, true}) {
                int na = g1.neighbor(a, gen, inv);
                int nb = g2.neighbor(b, gen, inv);
                bool ea = in_ball_edge(d1, a, na);
                bool eb = in_ball_edge(d2, b, nb);
                if (ea != eb)
                    return false;
                if (!ea)
                    continue;
                auto fa = fwd.find(na);
                auto fb = bwd.find(nb);
                if (fa == fwd.end() && fb == bwd.end()) {
                    fwd[na] = nb;
                    bwd[nb] = na;
                    queue.push_back({na, nb});
                } else if (fa == fwd.end() || fb == bwd.end()
                           || fa->second != nb || fb->second != na) {
                    return false;
                }
            }
        }
    }
    return true;
}

std::string canonical_code(const RootedLabelledGraph & g)
{
    std::vector<int> canon(g.verts.size(), -1);
    std::vector<int> order;
    order.reserve(g.verts.size());
    canon[g.root] = 0;
    order.push_back(g.root);
    for (std::size_t head = 0; head < order.size(); ++head) {
        int v = order[head];
        for (int gen = 0; gen < 2; ++gen) {
            for (bool inv : {false, true}) {
                int w = g.neighbor(v, gen, inv);
                if (w >= 0 && canon[w] < 0) {
                    canon[w] = static_cast<int>(order.size());
                    order.push_back(w);
                }
            }
        }
    }
    std::ostringstream os;
    os << order.size() << '|';
    for (int v : order) {
        for (int gen = 0; gen < 2; ++gen)
            for (bool inv : {false, true}) {
                int w = g.neighbor(v, gen, inv);
                os << (w >= 0 ? canon[w] : -1) << ',';
            }
        os << ';';
    }
    return os.str();
}

std::string ChabautyDistance::str() const
{
    if (is_upper_bound)
        return "<= " + value.str();
    return value.str();
}

ChabautyDistance chabauty_distance(const RootedLabelledGraph & g1,
                                   const RootedLabelledGraph & g2,
                                   int max_radius)
{
    if (max_radius > g1.radius || max_radius > g2.radius)
        throw PreconditionError("chabauty_distance: graphs not computed to max_radius");
    for (int n = 0; n <= max_radius; ++n)
        if (!ball_isomorphic(g1, g2, n))
            return {Rational(1, n + 1), n, false};
    return {Rational(1, max_radius + 2), std::nullopt, true};
}

std::vector<int> cayley_fragment_search(const RootedLabelledGraph & g,
                                        const RootedLabelledGraph & cayley,
                                        int n)
{
    if (n > cayley.radius)
        throw PreconditionError("cayley_fragment_search: reference ball too shallow");
    std::vector<int> hits;
    for (std::size_t v = 0; v < g.verts.size(); ++v) {
        if (g.verts[v].dist > g.radius - n)
            continue; // ball would be truncated
        if (ball_isomorphic(g, static_cast<int>(v), cayley, cayley.root, n))
            hits.push_back(static_cast<int>(v));
    }
    return hits;
}

} // namespace tf

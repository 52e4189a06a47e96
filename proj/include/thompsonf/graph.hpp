#ifndef THOMPSONF_GRAPH_HPP
#define THOMPSONF_GRAPH_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "thompsonf/dyadic.hpp"

namespace tf {

// Finite ball of a Schreier/Cayley graph: deterministic and
// co-deterministic generator-labelled graph with a distinguished root.
// Neighbor index -1 means "outside the computed region" (the action is
// total, so the neighbor exists but was not enumerated).
struct RootedLabelledGraph {
    struct Vertex {
        std::array<int, 2> out{-1, -1}; // out[g] = index of g(v)
        std::array<int, 2> in{-1, -1};  // in[g]  = index of g^-1(v)
        int dist = 0;                   // distance from the root
        std::string payload;            // exact point / representative word
    };

    std::vector<Vertex> verts;
    int root = 0;
    int radius = 0; // every vertex within this distance is present, with
                    // all edges between present vertices
    std::string description;

    std::size_t size() const { return verts.size(); }
    int neighbor(int v, int gen, bool inv) const
    {
        return inv ? verts[v].in[gen] : verts[v].out[gen];
    }
};

// BFS distances from `from`, capped at `max_dist` (-1 where unreached).
std::vector<int> bfs_distances(const RootedLabelledGraph & g, int from, int max_dist);

// Radius-n balls around r1/r2 compared as rooted labelled graphs.  A ball
// contains the vertices at distance <= n and the labelled edges reachable
// within n steps (an edge counts when one endpoint is at distance <= n-1);
// radius-0 balls are single roots and always isomorphic.  Decided by
// synchronized traversal; Schreier balls admit at most one root-preserving
// label-respecting isomorphism.
bool ball_isomorphic(const RootedLabelledGraph & g1, int r1,
                     const RootedLabelledGraph & g2, int r2, int n);

inline bool ball_isomorphic(const RootedLabelledGraph & g1,
                            const RootedLabelledGraph & g2, int n)
{
    return ball_isomorphic(g1, g1.root, g2, g2.root, n);
}

// Deterministic code of the whole computed graph: BFS from the root in
// fixed label/direction order, emitting canonical neighbor indices.
// Equal codes <=> label-isomorphic as rooted graphs (payloads ignored).
std::string canonical_code(const RootedLabelledGraph & g);

struct ChabautyDistance {
    // 1/(witness+1) when a least non-isomorphic radius was found;
    // otherwise an upper bound 1/(max_radius+2).
    Rational value;
    std::optional<int> witness_radius;
    bool is_upper_bound = false;
    std::string str() const;
};

ChabautyDistance chabauty_distance(const RootedLabelledGraph & g1,
                                   const RootedLabelledGraph & g2,
                                   int max_radius);

// Vertices v of g whose radius-n ball is isomorphic to the radius-n ball
// of `cayley` at its root.  Only vertices with complete balls
// (dist(root,v) <= g.radius - n) are examined.
std::vector<int> cayley_fragment_search(const RootedLabelledGraph & g,
                                        const RootedLabelledGraph & cayley,
                                        int n);

} // namespace tf

#endif

#ifndef THOMPSONF_SCHREIER_HPP
#define THOMPSONF_SCHREIER_HPP

#include "thompsonf/graph.hpp"
#include "thompsonf/oracle.hpp"
#include "thompsonf/word.hpp"

namespace tf {

// Default cap on enumerated vertices; override with the
// THOMPSONF_MAX_VERTICES environment variable (see read_vertex_cap).
inline constexpr std::size_t kDefaultMaxVertices = 200000;

std::size_t read_vertex_cap();

// Orbital graph ball of p under {x0,x1}: vertices are the exact orbit
// points within graph distance n of p, edges (v, s(v), s).
RootedLabelledGraph orbital_ball(const Rational & p, int n,
                                 std::size_t max_vertices = kDefaultMaxVertices);

// Returns the exact point carried by a vertex of an orbital graph.
Rational orbital_vertex_point(const RootedLabelledGraph & g, int v);

// Schreier coset graph ball of H: vertices are right cosets Hg, root H,
// edges (Hg, Hgs).  Coset equality is decided through the oracle with
// the quadratic representative scan.
RootedLabelledGraph coset_ball(const SubgroupOracle & H, int n,
                               std::size_t max_vertices = kDefaultMaxVertices);

// The Cayley ball as a RootedLabelledGraph (Schreier graph of {1}).
RootedLabelledGraph cayley_graph(int n,
                                 std::size_t max_vertices = kDefaultMaxVertices);
RootedLabelledGraph to_graph(const CayleyBall & ball);

// Follow the letters of w (rightmost letter first, matching eval_word)
// from vertex v; -1 if the walk leaves the computed region.
int follow_word(const RootedLabelledGraph & g, int v, const Word & w);

} // namespace tf

#endif

#include "thompsonf/schreier.hpp"

#include <cstdlib>
#include <unordered_map>

#include "thompsonf/errors.hpp"

namespace tf {

std::size_t read_vertex_cap()
{
    if (const char * env = std::getenv("THOMPSONF_MAX_VERTICES")) {
        char * end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end && *end == '\0' && v > 0)
            return static_cast<std::size_t>(v);
    }
    return kDefaultMaxVertices;
}

namespace {

// Shared BFS skeleton over a deterministic labelled action.  `step` must
// be total; states are deduplicated via `find`/`insert` callbacks.
template <typename State, typename Step, typename Find, typename Insert, typename Payload>
RootedLabelledGraph build_ball(const State & root_state, int n, std::size_t max_vertices,
                               Step step, Find find, Insert insert, Payload payload)
{
    RootedLabelledGraph g;
    g.radius = n;
    std::vector<State> states;

    auto add = [&](const State & s, int dist) -> int {
        if (states.size() >= max_vertices)
            throw ResourceError("vertex cap " + std::to_string(max_vertices)
                                + " exceeded (raise THOMPSONF_MAX_VERTICES)");
        int idx = static_cast<int>(states.size());
        states.push_back(s);
        insert(s, idx);
        RootedLabelledGraph::Vertex v;
        v.dist = dist;
        v.payload = payload(s);
        g.verts.push_back(std::move(v));
        return idx;
    };

    add(root_state, 0);
    for (std::size_t head = 0; head < states.size(); ++head) {
        int v = static_cast<int>(head);
        int d = g.verts[v].dist;
        for (int gen = 0; gen < 2; ++gen) {
            for (bool inv : {false, true}) {
                State img = step(states[v], gen, inv);
                int u = find(img);
                if (u < 0 && d < n)
                    u = add(img, d + 1);
                if (u >= 0) {
                    if (!inv) {
                        g.verts[v].out[gen] = u;
                        g.verts[u].in[gen] = v;
                    } else {
                        g.verts[v].in[gen] = u;
                        g.verts[u].out[gen] = v;
                    }
                }
            }
        }
    }
    return g;
}

const PLMap & generator(int gen)
{
    return gen == 0 ? PLMap::x0() : PLMap::x1();
}

const PLMap & generator_inverse(int gen)
{
    static const PLMap x0i = PLMap::x0().inverse();
    static const PLMap x1i = PLMap::x1().inverse();
    return gen == 0 ? x0i : x1i;
}

} // namespace

RootedLabelledGraph orbital_ball(const Rational & p, int n, std::size_t max_vertices)
{
    if (!(Rational(0) < p) || !(p < Rational(1)))
        throw PreconditionError("orbital_ball: point must lie in (0,1)");
    if (n < 0)
        throw PreconditionError("orbital_ball: radius must be >= 0");
    std::unordered_map<std::string, int> index;
    auto g = build_ball<Rational>(
        p, n, max_vertices,
        [](const Rational & t, int gen, bool inv) {
            return (inv ? generator_inverse(gen) : generator(gen)).eval(t);
        },
        [&index](const Rational & t) {
            auto it = index.find(t.str());
            return it == index.end() ? -1 : it->second;
        },
        [&index](const Rational & t, int idx) { index[t.str()] = idx; },
        [](const Rational & t) { return t.str(); });
    g.description = "orbital(" + p.str() + ")";
    return g;
}

Rational orbital_vertex_point(const RootedLabelledGraph & g, int v)
{
    return Rational::parse(g.verts[v].payload);
}

RootedLabelledGraph coset_ball(const SubgroupOracle & H, int n, std::size_t max_vertices)
{
    if (n < 0)
        throw PreconditionError("coset_ball: radius must be >= 0");
    std::vector<PLMap> reps;
    std::vector<PLMap> rep_inverses;
    std::unordered_map<std::string, int> exact; // element -> its coset
    auto g = build_ball<PLMap>(
        PLMap::identity(), n, max_vertices,
        [](const PLMap & rep, int gen, bool inv) {
            return compose(rep, inv ? generator_inverse(gen) : generator(gen));
        },
        [&](const PLMap & cand) {
            // Equal elements always share a coset; the hash lookup spares
            // the oracle scan on revisits.
            auto it = exact.find(cand.key());
            if (it != exact.end())
                return it->second;
            // Hg1 == Hg2  <=>  g1 g2^-1 in H (right-action product).
            for (std::size_t i = 0; i < reps.size(); ++i)
                if (H.member(compose(cand, rep_inverses[i]))) {
                    exact.emplace(cand.key(), static_cast<int>(i));
                    return static_cast<int>(i);
                }
            return -1;
        },
        [&](const PLMap & rep, int idx) {
            reps.push_back(rep);
            rep_inverses.push_back(rep.inverse());
            exact.emplace(rep.key(), idx);
        },
        [](const PLMap & rep) { return rep.key(); });
    g.description = "coset(" + H.name + ")";
    return g;
}

RootedLabelledGraph cayley_graph(int n, std::size_t max_vertices)
{
    return to_graph(cayley_ball(n, max_vertices));
}

RootedLabelledGraph to_graph(const CayleyBall & ball)
{
    RootedLabelledGraph g;
    g.radius = ball.radius;
    g.description = "cayley";
    g.verts.resize(ball.elements.size());
    for (std::size_t v = 0; v < ball.elements.size(); ++v) {
        g.verts[v].out = ball.edges[v];
        g.verts[v].in = ball.redges[v];
        g.verts[v].dist = ball.dist[v];
        g.verts[v].payload = ball.words[v].str();
    }
    return g;
}

int follow_word(const RootedLabelledGraph & g, int v, const Word & w)
{
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
        v = g.neighbor(v, static_cast<int>(it->gen), it->inv);
        if (v < 0)
            return -1;
    }
    return v;
}

} // namespace tf

#include "thompsonf/capi.h"

#include <cstring>
#include <string>

#include "json.hpp"

#include "thompsonf/analysis.hpp"
#include "thompsonf/constructions.hpp"
#include "thompsonf/errors.hpp"
#include "thompsonf/oracle.hpp"
#include "thompsonf/schreier.hpp"
#include "thompsonf/serialize.hpp"

using nlohmann::json;
using namespace tf;

struct tf_element {
    PLMap map;
};
struct tf_graph {
    RootedLabelledGraph graph;
};
struct tf_oracle {
    SubgroupOracle oracle;
};

namespace {

thread_local std::string g_last_error = "no error";

char * dup_string(const std::string & s)
{
    char * out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

// Runs the body, translating exceptions into statuses.
template <typename F>
tf_status guarded(F && body)
{
    try {
        body();
        return TF_OK;
    } catch (const ParseError & e) {
        g_last_error = e.what();
        return TF_ERR_PARSE;
    } catch (const PreconditionError & e) {
        g_last_error = e.what();
        return TF_ERR_PRECONDITION;
    } catch (const ResourceError & e) {
        g_last_error = e.what();
        return TF_ERR_RESOURCE;
    } catch (const std::exception & e) {
        g_last_error = e.what();
        return TF_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown failure";
        return TF_ERR_INTERNAL;
    }
}

void require(const void * p, const char * what)
{
    if (p == nullptr)
        throw PreconditionError(std::string(what) + " must not be NULL");
}

std::vector<Rational> points_arg(const char * points)
{
    if (points == nullptr || *points == '\0')
        return {};
    return parse_rational_list(points);
}

RootedLabelledGraph build_graph(const std::string & spec, int radius)
{
    if (spec == "cayley")
        return cayley_graph(radius, read_vertex_cap());
    if (spec.rfind("orbit:", 0) == 0)
        return orbital_ball(Rational::parse(spec.substr(6)), radius, read_vertex_cap());
    if (spec.rfind("coset:", 0) == 0) {
        std::string rest = spec.substr(6);
        std::string kind = rest;
        std::string data;
        auto colon = rest.find(':');
        if (colon != std::string::npos) {
            kind = rest.substr(0, colon);
            data = rest.substr(colon + 1);
        }
        if (kind == "cyclic")
            return coset_ball(cyclic_oracle(eval_word(Word::parse(data))),
                              radius, read_vertex_cap());
        auto H = make_oracle(kind, data.empty() ? std::vector<Rational>{}
                                                : parse_rational_list(data));
        return coset_ball(H, radius, read_vertex_cap());
    }
    throw ParseError("unknown graph spec '" + spec
                     + "' (expected cayley, orbit:<point> or coset:<kind>[:<data>])");
}

json interval_json(const Interval & u)
{
    return {{"lo", u.lo.str()}, {"hi", u.hi.str()}};
}

} // namespace

extern "C" {

const char * tf_last_error(void)
{
    return g_last_error.c_str();
}

void tf_string_free(char * s)
{
    delete[] s;
}
void tf_element_free(tf_element * e)
{
    delete e;
}
void tf_graph_free(tf_graph * g)
{
    delete g;
}
void tf_oracle_free(tf_oracle * o)
{
    delete o;
}

tf_status tf_element_from_word(const char * word, tf_element ** out)
{
    return guarded([&] {
        require(word, "word");
        require(out, "out");
        *out = new tf_element{eval_word(Word::parse(word))};
    });
}

tf_status tf_element_from_json(const char * text, tf_element ** out)
{
    return guarded([&] {
        require(text, "json");
        require(out, "out");
        *out = new tf_element{plmap_from_json(text)};
    });
}

tf_status tf_element_to_json(const tf_element * e, char ** out)
{
    return guarded([&] {
        require(e, "element");
        require(out, "out");
        *out = dup_string(plmap_to_json(e->map));
    });
}

tf_status tf_element_compose(const tf_element * g, const tf_element * h,
                             tf_element ** out)
{
    return guarded([&] {
        require(g, "g");
        require(h, "h");
        require(out, "out");
        *out = new tf_element{compose(g->map, h->map)};
    });
}

tf_status tf_element_inverse(const tf_element * e, tf_element ** out)
{
    return guarded([&] {
        require(e, "element");
        require(out, "out");
        *out = new tf_element{e->map.inverse()};
    });
}

tf_status tf_element_conjugate(const tf_element * g, const tf_element * h,
                               tf_element ** out)
{
    return guarded([&] {
        require(g, "g");
        require(h, "h");
        require(out, "out");
        *out = new tf_element{conjugate(g->map, h->map)};
    });
}

tf_status tf_element_eval(const tf_element * e, const char * point, char ** out)
{
    return guarded([&] {
        require(e, "element");
        require(point, "point");
        require(out, "out");
        *out = dup_string(e->map.eval(Rational::parse(point)).str());
    });
}

tf_status tf_element_equal(const tf_element * a, const tf_element * b, int * out)
{
    return guarded([&] {
        require(a, "a");
        require(b, "b");
        require(out, "out");
        *out = a->map == b->map ? 1 : 0;
    });
}

tf_status tf_element_is_identity(const tf_element * e, int * out)
{
    return guarded([&] {
        require(e, "element");
        require(out, "out");
        *out = e->map.is_identity() ? 1 : 0;
    });
}

tf_status tf_element_in_commutator(const tf_element * e, int * out)
{
    return guarded([&] {
        require(e, "element");
        require(out, "out");
        *out = e->map.in_commutator() ? 1 : 0;
    });
}

tf_status tf_element_abelianize(const tf_element * e, long * at_zero, long * at_one)
{
    return guarded([&] {
        require(e, "element");
        require(at_zero, "at_zero");
        require(at_one, "at_one");
        auto img = e->map.abelianize();
        *at_zero = img.at_zero;
        *at_one = img.at_one;
    });
}

tf_status tf_relations_check(char ** out)
{
    return guarded([&] {
        require(out, "out");
        bool r1 = eval_word(relator1()).is_identity();
        bool r2 = eval_word(relator2()).is_identity();
        bool inv0 = compose(PLMap::x0(), PLMap::x0().inverse()).is_identity();
        bool inv1 = compose(PLMap::x1(), PLMap::x1().inverse()).is_identity();
        json j{{"relator1", relator1().str()},
               {"relator1_ok", r1},
               {"relator2", relator2().str()},
               {"relator2_ok", r2},
               {"inverses_ok", inv0 && inv1},
               {"all_ok", r1 && r2 && inv0 && inv1}};
        *out = dup_string(j.dump());
    });
}

tf_status tf_oracle_make(const char * kind, const char * points,
                         const tf_element * base, tf_oracle ** out)
{
    return guarded([&] {
        require(kind, "kind");
        require(out, "out");
        *out = new tf_oracle{make_oracle(kind, points_arg(points),
                                         base ? base->map : PLMap::identity())};
    });
}

tf_status tf_oracle_member(const tf_oracle * o, const tf_element * e, int * out)
{
    return guarded([&] {
        require(o, "oracle");
        require(e, "element");
        require(out, "out");
        *out = o->oracle.member(e->map) ? 1 : 0;
    });
}

tf_status tf_graph_build(const char * spec, int radius, tf_graph ** out)
{
    return guarded([&] {
        require(spec, "spec");
        require(out, "out");
        if (radius < 0)
            throw PreconditionError("radius must be >= 0");
        *out = new tf_graph{build_graph(spec, radius)};
    });
}

tf_status tf_graph_from_json(const char * text, tf_graph ** out)
{
    return guarded([&] {
        require(text, "json");
        require(out, "out");
        *out = new tf_graph{graph_from_json(text)};
    });
}

tf_status tf_graph_to_json(const tf_graph * g, char ** out)
{
    return guarded([&] {
        require(g, "graph");
        require(out, "out");
        *out = dup_string(graph_to_json(g->graph));
    });
}

tf_status tf_graph_to_dot(const tf_graph * g, char ** out)
{
    return guarded([&] {
        require(g, "graph");
        require(out, "out");
        *out = dup_string(graph_to_dot(g->graph));
    });
}

tf_status tf_graph_size(const tf_graph * g, size_t * out)
{
    return guarded([&] {
        require(g, "graph");
        require(out, "out");
        *out = g->graph.size();
    });
}

tf_status tf_graph_radius(const tf_graph * g, int * out)
{
    return guarded([&] {
        require(g, "graph");
        require(out, "out");
        *out = g->graph.radius;
    });
}

tf_status tf_graph_ball_isomorphic(const tf_graph * a, const tf_graph * b,
                                   int n, int * out)
{
    return guarded([&] {
        require(a, "a");
        require(b, "b");
        require(out, "out");
        *out = ball_isomorphic(a->graph, b->graph, n) ? 1 : 0;
    });
}

tf_status tf_chabauty_distance(const tf_graph * a, const tf_graph * b,
                               int max_radius, char ** out)
{
    return guarded([&] {
        require(a, "a");
        require(b, "b");
        require(out, "out");
        auto d = chabauty_distance(a->graph, b->graph, max_radius);
        json j{{"value", d.value.str()},
               {"is_upper_bound", d.is_upper_bound},
               {"display", d.str()}};
        if (d.witness_radius)
            j["witness_radius"] = *d.witness_radius;
        else
            j["witness_radius"] = nullptr;
        *out = dup_string(j.dump());
    });
}

tf_status tf_cayley_fragments(const tf_graph * g, const tf_graph * cayley,
                              int n, char ** out)
{
    return guarded([&] {
        require(g, "graph");
        require(cayley, "cayley");
        require(out, "out");
        auto hits = cayley_fragment_search(g->graph, cayley->graph, n);
        json verts = json::array();
        for (int v : hits)
            verts.push_back({{"vertex", v},
                             {"payload", g->graph.verts[static_cast<std::size_t>(v)].payload}});
        json j{{"radius", n}, {"count", hits.size()}, {"vertices", verts}};
        *out = dup_string(j.dump());
    });
}

tf_status tf_growth_table(const tf_graph * g, const int * roots,
                          size_t nroots, int max_n, char ** out)
{
    return guarded([&] {
        require(g, "graph");
        require(out, "out");
        std::vector<int> rs;
        if (roots == nullptr) {
            for (std::size_t v = 0; v < g->graph.size(); ++v)
                if (g->graph.verts[v].dist <= g->graph.radius - max_n)
                    rs.push_back(static_cast<int>(v));
            if (rs.empty())
                throw PreconditionError("no vertex has a complete ball of radius "
                                        + std::to_string(max_n));
        } else {
            rs.assign(roots, roots + nroots);
        }
        *out = dup_string(growth_table_to_json(growth_table(g->graph, rs, max_n)));
    });
}

tf_status tf_growth_table_csv(const char * table_json, char ** out)
{
    return guarded([&] {
        require(table_json, "table_json");
        require(out, "out");
        *out = dup_string(growth_table_to_csv(growth_table_from_json(table_json)));
    });
}

tf_status tf_growth_estimate(const char * table_json,
                             int window_lo, int window_hi, char ** out)
{
    return guarded([&] {
        require(table_json, "table_json");
        require(out, "out");
        auto e = uniform_growth_estimate(growth_table_from_json(table_json),
                                         window_lo, window_hi);
        json j{{"fitted_rate", e.fitted_rate},
               {"r_squared", e.r_squared},
               {"window", {e.window_lo, e.window_hi}},
               {"exponential_evidence", e.exponential_evidence}};
        *out = dup_string(j.dump());
    });
}

tf_status tf_foelner_ratio(const tf_graph * g, int r, char ** out)
{
    return guarded([&] {
        require(g, "graph");
        require(out, "out");
        if (r < 0)
            throw PreconditionError("radius must be >= 0");
        std::vector<int> s;
        for (std::size_t v = 0; v < g->graph.size(); ++v)
            if (g->graph.verts[v].dist <= r)
                s.push_back(static_cast<int>(v));
        auto ratio = foelner_ratio(g->graph, s);
        json j{{"set_radius", r},
               {"set_size", s.size()},
               {"ratio", ratio.str()}};
        *out = dup_string(j.dump());
    });
}

tf_status tf_displacement(const tf_graph * g, const char * word, char ** out)
{
    return guarded([&] {
        require(g, "graph");
        require(word, "word");
        require(out, "out");
        auto rep = displacement(Word::parse(word), g->graph);
        json j{{"word", rep.word.str()},
               {"max_observed", rep.max_observed},
               {"vertices_checked", rep.vertices_checked},
               {"vertices_skipped", rep.vertices_skipped}};
        *out = dup_string(j.dump());
    });
}

tf_status tf_confine_build(const char * points, char ** out)
{
    return guarded([&] {
        require(points, "points");
        require(out, "out");
        auto cs = build_confining_set(parse_rational_list(points));
        json elems = json::array();
        for (const auto & g : cs.elements) {
            auto s = g.support().front();
            elems.push_back({{"element", json::parse(plmap_to_json(g))},
                             {"support", interval_json(s)}});
        }
        json j{{"target", cs.target}, {"elements", elems}};
        *out = dup_string(j.dump());
    });
}

tf_status tf_confine_verify(const char * points, int radius, char ** out)
{
    return guarded([&] {
        require(points, "points");
        require(out, "out");
        auto pts = parse_rational_list(points);
        auto cs = build_confining_set(pts);
        auto H = germ_stab_commutator_oracle(pts);
        auto rep = verify_confining(H, cs.elements, radius);
        json j{{"pass", rep.pass},
               {"radius", rep.radius},
               {"conjugators_checked", rep.conjugators_checked},
               {"exhaustive_proof", rep.exhaustive_proof}};
        if (rep.failing_conjugator)
            j["failing_conjugator"] = rep.failing_conjugator->str();
        else
            j["failing_conjugator"] = nullptr;
        *out = dup_string(j.dump());
    });
}

tf_status tf_lemma_chain(const char * words, char ** out)
{
    return guarded([&] {
        require(words, "words");
        require(out, "out");
        std::vector<PLMap> gs;
        std::string text(words);
        std::size_t pos = 0;
        while (pos <= text.size()) {
            auto semi = text.find(';', pos);
            std::string piece = text.substr(pos, semi == std::string::npos
                                                     ? std::string::npos
                                                     : semi - pos);
            gs.push_back(eval_word(Word::parse(piece)));
            if (semi == std::string::npos)
                break;
            pos = semi + 1;
        }
        auto chain = lemma_interval_chain(gs);
        json items = json::array();
        for (std::size_t i = 0; i < chain.intervals.size(); ++i)
            items.push_back({{"source_index", chain.permutation[i]},
                             {"inverted", static_cast<bool>(chain.inverted[i])},
                             {"interval", interval_json(chain.intervals[i])}});
        json j{{"chain", items}, {"ordering_holds", chain.ordering_holds()}};
        *out = dup_string(j.dump());
    });
}

tf_status tf_push_left(const char * points, int * out)
{
    return guarded([&] {
        require(points, "points");
        require(out, "out");
        *out = push_left(parse_rational_list(points));
    });
}

tf_status tf_germ_check(const char * points, int radius, char ** out)
{
    return guarded([&] {
        require(points, "points");
        require(out, "out");
        if (radius < 0)
            throw PreconditionError("radius must be >= 0");
        auto pts = parse_rational_list(points);
        auto ball = cayley_ball(radius, read_vertex_cap());
        auto rows = germ_identity_check(pts, ball.elements);
        std::size_t members = 0, mismatches = 0;
        json bad = json::array();
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].lhs)
                ++members;
            if (rows[i].lhs != rows[i].rhs) {
                ++mismatches;
                bad.push_back(ball.words[i].str());
            }
        }
        json j{{"samples", rows.size()},
               {"members", members},
               {"mismatches", mismatches},
               {"counterexamples", bad},
               {"identity_holds", mismatches == 0}};
        *out = dup_string(j.dump());
    });
}

} // extern "C"

#include "thompsonf/serialize.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "thompsonf/errors.hpp"

namespace tf {

using nlohmann::json;

namespace {

json parse_json(const std::string & text)
{
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded())
        throw ParseError("malformed JSON");
    return j;
}

} // namespace

std::string plmap_to_json(const PLMap & g)
{
    json points = json::array();
    for (std::size_t i = 0; i < g.breakpoints().size(); ++i)
        points.push_back({g.breakpoints()[i].str(), g.images()[i].str()});
    json j{{"points", points}, {"slopes", g.slope_exponents()}};
    return j.dump();
}

PLMap plmap_from_json(const std::string & text)
{
    json j = parse_json(text);
    if (!j.contains("points") || !j["points"].is_array())
        throw ParseError("PLMap JSON: missing 'points' array");
    if (!j.contains("slopes") || !j["slopes"].is_array())
        throw ParseError("PLMap JSON: missing 'slopes' array");
    std::vector<Dyadic> breaks, images;
    for (std::size_t i = 0; i < j["points"].size(); ++i) {
        const auto & p = j["points"][i];
        if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string())
            throw ParseError("PLMap JSON: points[" + std::to_string(i)
                             + "] must be a pair of exact strings");
        breaks.push_back(Dyadic::parse(p[0].get<std::string>()));
        images.push_back(Dyadic::parse(p[1].get<std::string>()));
    }
    PLMap g(breaks, images); // validates monotonicity and slopes
    if (j["slopes"].size() != g.slope_exponents().size())
        throw ParseError("PLMap JSON: 'slopes' length does not match canonical form "
                         "(input may contain redundant breakpoints)");
    for (std::size_t i = 0; i < g.slope_exponents().size(); ++i) {
        if (!j["slopes"][i].is_number_integer()
            || j["slopes"][i].get<long>() != g.slope_exponents()[i])
            throw ParseError("PLMap JSON: slopes[" + std::to_string(i)
                             + "] disagrees with the breakpoint data");
    }
    return g;
}

std::string graph_to_json(const RootedLabelledGraph & g)
{
    json verts = json::array();
    for (const auto & v : g.verts)
        verts.push_back({{"payload", v.payload}, {"dist", v.dist}});
    json edges = json::array();
    for (std::size_t v = 0; v < g.verts.size(); ++v)
        for (int gen = 0; gen < 2; ++gen)
            if (g.verts[v].out[gen] >= 0)
                edges.push_back({static_cast<int>(v), g.verts[v].out[gen],
                                 gen == 0 ? "x0" : "x1"});
    json j{{"description", g.description},
           {"root", g.root},
           {"radius", g.radius},
           {"vertices", verts},
           {"edges", edges}};
    return j.dump();
}

RootedLabelledGraph graph_from_json(const std::string & text)
{
    json j = parse_json(text);
    for (const char * field : {"root", "radius", "vertices", "edges"})
        if (!j.contains(field))
            throw ParseError(std::string("graph JSON: missing '") + field + "'");
    RootedLabelledGraph g;
    g.description = j.value("description", "");
    g.root = j["root"].get<int>();
    g.radius = j["radius"].get<int>();
    for (const auto & v : j["vertices"]) {
        RootedLabelledGraph::Vertex vert;
        vert.payload = v.value("payload", "");
        vert.dist = v.value("dist", 0);
        g.verts.push_back(std::move(vert));
    }
    if (g.root < 0 || static_cast<std::size_t>(g.root) >= g.verts.size())
        throw ParseError("graph JSON: root index out of range");
    for (const auto & e : j["edges"]) {
        if (!e.is_array() || e.size() != 3)
            throw ParseError("graph JSON: edge must be [from, to, label]");
        int from = e[0].get<int>();
        int to = e[1].get<int>();
        std::string label = e[2].get<std::string>();
        int gen = label == "x0" ? 0 : label == "x1" ? 1 : -1;
        if (gen < 0)
            throw ParseError("graph JSON: unknown edge label '" + label + "'");
        if (from < 0 || to < 0 || static_cast<std::size_t>(from) >= g.verts.size()
            || static_cast<std::size_t>(to) >= g.verts.size())
            throw ParseError("graph JSON: edge endpoint out of range");
        if (g.verts[from].out[gen] >= 0 || g.verts[to].in[gen] >= 0)
            throw ParseError("graph JSON: duplicate edge label at vertex "
                             + std::to_string(from) + " (graph must be deterministic)");
        g.verts[from].out[gen] = to;
        g.verts[to].in[gen] = from;
    }
    return g;
}

std::string graph_to_dot(const RootedLabelledGraph & g)
{
    std::ostringstream os;
    os << "digraph schreier {\n";
    os << "  rankdir=LR;\n";
    for (std::size_t v = 0; v < g.verts.size(); ++v) {
        os << "  v" << v << " [label=\"" << g.verts[v].payload << "\"";
        if (static_cast<int>(v) == g.root)
            os << ", peripheries=2";
        os << "];\n";
    }
    for (std::size_t v = 0; v < g.verts.size(); ++v)
        for (int gen = 0; gen < 2; ++gen)
            if (g.verts[v].out[gen] >= 0)
                os << "  v" << v << " -> v" << g.verts[v].out[gen]
                   << " [label=\"x" << gen << "\"];\n";
    os << "}\n";
    return os.str();
}

std::string growth_table_to_csv(const GrowthTable & t)
{
    std::ostringstream os;
    os << "graph_id,root,n,ball_size\n";
    for (const auto & row : t.rows)
        os << t.graph_id << ',' << row.root << ',' << row.n << ',' << row.ball_size << '\n';
    return os.str();
}

std::string growth_table_to_json(const GrowthTable & t)
{
    json rows = json::array();
    for (const auto & row : t.rows)
        rows.push_back({row.root, row.n, row.ball_size});
    json j{{"graph_id", t.graph_id}, {"max_n", t.max_n}, {"roots", t.roots}, {"rows", rows}};
    return j.dump();
}

GrowthTable growth_table_from_json(const std::string & text)
{
    json j = parse_json(text);
    GrowthTable t;
    t.graph_id = j.value("graph_id", "");
    t.max_n = j.value("max_n", 0);
    if (j.contains("roots"))
        t.roots = j["roots"].get<std::vector<int>>();
    for (const auto & row : j["rows"]) {
        if (!row.is_array() || row.size() != 3)
            throw ParseError("growth table JSON: row must be [root, n, ball_size]");
        t.rows.push_back({row[0].get<int>(), row[1].get<int>(), row[2].get<std::size_t>()});
    }
    return t;
}

void write_file_atomic(const std::string & path, const std::string & content)
{
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw ResourceError("cannot open '" + tmp + "' for writing");
        out << content;
        if (!out.flush())
            throw ResourceError("write to '" + tmp + "' failed");
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw ResourceError("atomic rename to '" + path + "' failed");
}

} // namespace tf

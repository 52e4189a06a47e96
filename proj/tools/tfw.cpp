// tfw: command-line workbench for Thompson's group F, built on the
// shared-library C interface.
#include <cstdio>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "thompsonf/capi.h"

namespace {

using nlohmann::json;

constexpr int kExitInternal = 5;

struct Options {
    bool raw_json = false;
    std::string out_path;
    unsigned long seed = 0; // reserved for sampling commands; recorded in output
};

// RAII wrappers around the C handles.
struct StringOut {
    char * s = nullptr;
    ~StringOut() { tf_string_free(s); }
    std::string str() const { return s ? s : ""; }
};
struct GraphOut {
    tf_graph * g = nullptr;
    ~GraphOut() { tf_graph_free(g); }
};

[[noreturn]] void fail(tf_status st)
{
    std::cerr << "error: " << tf_last_error() << "\n";
    std::exit(st == TF_OK ? kExitInternal : static_cast<int>(st));
}

void check(tf_status st)
{
    if (st != TF_OK)
        fail(st);
}

void write_atomic(const std::string & path, const std::string & content)
{
    std::string tmp = path + ".tmp";
    std::FILE * f = std::fopen(tmp.c_str(), "wb");
    if (f == nullptr) {
        std::cerr << "error: cannot open '" << tmp << "' for writing\n";
        std::exit(TF_ERR_RESOURCE);
    }
    bool ok = std::fwrite(content.data(), 1, content.size(), f) == content.size();
    ok = std::fclose(f) == 0 && ok;
    if (!ok || std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::cerr << "error: failed to write '" << path << "'\n";
        std::exit(TF_ERR_RESOURCE);
    }
}

void emit(const Options & opt, const std::string & payload)
{
    if (!opt.out_path.empty()) {
        write_atomic(opt.out_path, payload + "\n");
        return;
    }
    std::cout << payload << "\n";
}

// Human-readable rendering of a JSON report: flat key: value lines.
void emit_report(const Options & opt, const std::string & payload)
{
    if (opt.raw_json || !opt.out_path.empty()) {
        emit(opt, payload);
        return;
    }
    json j = json::parse(payload, nullptr, false);
    if (j.is_discarded() || !j.is_object()) {
        std::cout << payload << "\n";
        return;
    }
    for (const auto & [key, value] : j.items())
        std::cout << key << ": "
                  << (value.is_string() ? value.get<std::string>() : value.dump())
                  << "\n";
}

GraphOut build(const std::string & spec, int radius)
{
    GraphOut g;
    check(tf_graph_build(spec.c_str(), radius, &g.g));
    return g;
}

std::string graph_payload(const tf_graph * g, bool dot)
{
    StringOut s;
    check(dot ? tf_graph_to_dot(g, &s.s) : tf_graph_to_json(g, &s.s));
    return s.str();
}

} // namespace

int main(int argc, char ** argv)
{
    CLI::App app{"Workbench for Thompson's group F: exact elements, "
                 "Schreier graphs, and subgroup diagnostics"};
    app.require_subcommand(1);

    Options opt;
    app.add_flag("--json", opt.raw_json, "emit raw JSON instead of a summary");
    app.add_option("--out", opt.out_path, "write output to FILE (atomically)");
    app.add_option("--seed", opt.seed, "seed recorded for reproducibility");

    // ---- relations-check ----
    app.add_subcommand("relations-check",
                       "verify the defining relators of F on exact maps")
        ->callback([&] {
            StringOut s;
            check(tf_relations_check(&s.s));
            emit_report(opt, s.str());
            json j = json::parse(s.str());
            if (!j["all_ok"].get<bool>())
                std::exit(kExitInternal);
        });

    // ---- graph builders ----
    struct {
        int radius = 3;
        bool dot = false;
        std::string point = "1/2";
        std::string oracle = "trivial";
        std::string points;
        std::string word;
    } gopt;

    auto * cay = app.add_subcommand("cayley-ball", "Cayley graph ball of F");
    cay->add_option("--radius", gopt.radius, "ball radius")->required();
    cay->add_flag("--dot", gopt.dot, "emit Graphviz DOT instead of JSON");
    cay->callback([&] {
        auto g = build("cayley", gopt.radius);
        emit(opt, graph_payload(g.g, gopt.dot));
    });

    auto * orb = app.add_subcommand("orbit-graph",
                                    "orbital graph ball of a rational point");
    orb->add_option("--point", gopt.point, "exact point in (0,1)")->required();
    orb->add_option("--radius", gopt.radius, "ball radius")->required();
    orb->add_flag("--dot", gopt.dot, "emit Graphviz DOT instead of JSON");
    orb->callback([&] {
        auto g = build("orbit:" + gopt.point, gopt.radius);
        emit(opt, graph_payload(g.g, gopt.dot));
    });

    auto * cos = app.add_subcommand("coset-graph",
                                    "Schreier coset graph ball of a subgroup");
    cos->add_option("--oracle", gopt.oracle,
                    "trivial|full|commutator|point_stab|tuple_stab|germ_stab|"
                    "germ_stab_commutator|cyclic")
        ->required();
    cos->add_option("--points", gopt.points, "comma-separated rationals");
    cos->add_option("--word", gopt.word, "generator word (cyclic oracle)");
    cos->add_option("--radius", gopt.radius, "ball radius")->required();
    cos->add_flag("--dot", gopt.dot, "emit Graphviz DOT instead of JSON");
    cos->callback([&] {
        std::string data = gopt.oracle == "cyclic" ? gopt.word : gopt.points;
        std::string spec = "coset:" + gopt.oracle;
        if (!data.empty())
            spec += ":" + data;
        auto g = build(spec, gopt.radius);
        emit(opt, graph_payload(g.g, gopt.dot));
    });

    // ---- comparisons ----
    struct {
        std::string left, right, graph;
        int radius = 6;
        int ball = 2;
    } copt;

    auto * cha = app.add_subcommand(
        "chabauty", "approximate Chabauty distance between two Schreier graphs");
    cha->add_option("--left", copt.left, "graph spec (cayley|orbit:p|coset:...)")
        ->required();
    cha->add_option("--right", copt.right, "graph spec")->required();
    cha->add_option("--radius", copt.radius, "largest compared ball radius");
    cha->callback([&] {
        auto a = build(copt.left, copt.radius);
        auto b = build(copt.right, copt.radius);
        StringOut s;
        check(tf_chabauty_distance(a.g, b.g, copt.radius, &s.s));
        emit_report(opt, s.str());
    });

    auto * frag = app.add_subcommand(
        "cayley-fragments", "vertices whose local ball matches the Cayley graph");
    frag->add_option("--graph", copt.graph, "graph spec")->required();
    frag->add_option("--radius", copt.radius, "computed graph radius");
    frag->add_option("--ball", copt.ball, "local ball radius to match");
    frag->callback([&] {
        auto g = build(copt.graph, copt.radius);
        auto c = build("cayley", copt.ball);
        StringOut s;
        check(tf_cayley_fragments(g.g, c.g, copt.ball, &s.s));
        emit_report(opt, s.str());
    });

    // ---- constructions ----
    struct {
        std::string points, words;
        int radius = 3;
    } kopt;

    auto * cb = app.add_subcommand("confine-build",
                                   "build a confining set for a germ stabilizer");
    cb->add_option("--points", kopt.points, "comma-separated rationals in (0,1)")
        ->required();
    cb->callback([&] {
        StringOut s;
        check(tf_confine_build(kopt.points.c_str(), &s.s));
        emit_report(opt, s.str());
    });

    auto * cv = app.add_subcommand(
        "confine-verify", "test the confining set against sampled conjugators");
    cv->add_option("--points", kopt.points, "comma-separated rationals in (0,1)")
        ->required();
    cv->add_option("--radius", kopt.radius, "conjugator ball radius");
    cv->callback([&] {
        StringOut s;
        check(tf_confine_verify(kopt.points.c_str(), kopt.radius, &s.s));
        emit_report(opt, s.str());
        json j = json::parse(s.str());
        if (!j["pass"].get<bool>())
            std::exit(kExitInternal);
    });

    auto * lc = app.add_subcommand(
        "lemma-chain", "order elements into a chain of moved dyadic intervals");
    lc->add_option("--words", kopt.words, "semicolon-separated generator words")
        ->required();
    lc->callback([&] {
        StringOut s;
        check(tf_lemma_chain(kopt.words.c_str(), &s.s));
        emit_report(opt, s.str());
    });

    auto * pl = app.add_subcommand(
        "push-left", "least k with x0^k moving a finite set into (0,1/2)");
    pl->add_option("--points", kopt.points, "comma-separated rationals in (0,1)")
        ->required();
    pl->callback([&] {
        int k = 0;
        check(tf_push_left(kopt.points.c_str(), &k));
        json j{{"exponent", k}};
        emit_report(opt, j.dump());
    });

    auto * gc = app.add_subcommand(
        "germ-check", "compare the two germ-stabilizer descriptions on a ball");
    gc->add_option("--points", kopt.points, "comma-separated rationals in (0,1)")
        ->required();
    gc->add_option("--radius", kopt.radius, "sample ball radius");
    gc->callback([&] {
        StringOut s;
        check(tf_germ_check(kopt.points.c_str(), kopt.radius, &s.s));
        emit_report(opt, s.str());
    });

    // ---- analysis ----
    struct {
        std::string graph = "cayley";
        std::string word;
        int radius = 6;
        int max_n = 3;
        int ball = 1;
        int window_lo = -1, window_hi = -1;
        bool csv = false;
        bool estimate = false;
    } aopt;

    auto * gr = app.add_subcommand("growth", "exact ball-size table of a graph");
    gr->add_option("--graph", aopt.graph, "graph spec");
    gr->add_option("--radius", aopt.radius, "computed graph radius");
    gr->add_option("--max-n", aopt.max_n, "largest measured ball radius");
    gr->add_option("--window-lo", aopt.window_lo, "estimate fit window start");
    gr->add_option("--window-hi", aopt.window_hi, "estimate fit window end");
    gr->add_flag("--csv", aopt.csv, "emit the table as CSV");
    gr->add_flag("--estimate", aopt.estimate, "emit the growth-rate fit instead");
    gr->callback([&] {
        auto g = build(aopt.graph, aopt.radius);
        StringOut table;
        check(tf_growth_table(g.g, nullptr, 0, aopt.max_n, &table.s));
        if (aopt.estimate) {
            StringOut est;
            check(tf_growth_estimate(table.s, aopt.window_lo, aopt.window_hi,
                                     &est.s));
            emit_report(opt, est.str());
        } else if (aopt.csv) {
            StringOut csv;
            check(tf_growth_table_csv(table.s, &csv.s));
            emit(opt, csv.str());
        } else {
            emit(opt, table.str());
        }
    });

    auto * dis = app.add_subcommand(
        "displacement", "max displacement of a word over a graph's vertices");
    dis->add_option("--graph", aopt.graph, "graph spec");
    dis->add_option("--radius", aopt.radius, "computed graph radius");
    dis->add_option("--word", aopt.word, "generator word")->required();
    dis->callback([&] {
        auto g = build(aopt.graph, aopt.radius);
        StringOut s;
        check(tf_displacement(g.g, aopt.word.c_str(), &s.s));
        emit_report(opt, s.str());
    });

    auto * fo = app.add_subcommand(
        "foelner", "exact boundary-to-size ratio of a ball around the root");
    fo->add_option("--graph", aopt.graph, "graph spec");
    fo->add_option("--radius", aopt.radius, "computed graph radius");
    fo->add_option("--ball", aopt.ball, "radius of the measured set");
    fo->callback([&] {
        auto g = build(aopt.graph, aopt.radius);
        StringOut s;
        check(tf_foelner_ratio(g.g, aopt.ball, &s.s));
        emit_report(opt, s.str());
    });

    // let --json/--out/--seed appear after the subcommand name too
    for (CLI::App * sub : app.get_subcommands([](const CLI::App *) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError & e) {
        int code = app.exit(e);
        return code == 0 ? 0 : TF_ERR_PARSE;
    }
    return 0;
}

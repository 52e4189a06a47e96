#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>

#include "json.hpp"

#include "thompsonf/capi.h"

using nlohmann::json;

namespace {

struct Str {
    char * s = nullptr;
    ~Str() { tf_string_free(s); }
    std::string str() const { return s ? s : ""; }
    json parsed() const { return json::parse(str()); }
};
struct Elem {
    tf_element * e = nullptr;
    ~Elem() { tf_element_free(e); }
};
struct Graph {
    tf_graph * g = nullptr;
    ~Graph() { tf_graph_free(g); }
};
struct Oracle {
    tf_oracle * o = nullptr;
    ~Oracle() { tf_oracle_free(o); }
};

} // namespace

TEST_CASE("element lifecycle through the C interface")
{
    Elem x0, x1, prod, inv;
    REQUIRE(tf_element_from_word("x0", &x0.e) == TF_OK);
    REQUIRE(tf_element_from_word("x1", &x1.e) == TF_OK);
    REQUIRE(tf_element_compose(x0.e, x1.e, &prod.e) == TF_OK);
    REQUIRE(tf_element_inverse(prod.e, &inv.e) == TF_OK);

    Elem round;
    REQUIRE(tf_element_compose(prod.e, inv.e, &round.e) == TF_OK);
    int is_id = 0;
    REQUIRE(tf_element_is_identity(round.e, &is_id) == TF_OK);
    CHECK(is_id == 1);

    Str img;
    REQUIRE(tf_element_eval(x0.e, "1/2", &img.s) == TF_OK);
    CHECK(img.str() == "1/4");

    long a0 = 99, a1 = 99;
    REQUIRE(tf_element_abelianize(x0.e, &a0, &a1) == TF_OK);
    CHECK(a0 == -1);
    CHECK(a1 == 1);

    Str text;
    REQUIRE(tf_element_to_json(x0.e, &text.s) == TF_OK);
    Elem back;
    REQUIRE(tf_element_from_json(text.s, &back.e) == TF_OK);
    int eq = 0;
    REQUIRE(tf_element_equal(x0.e, back.e, &eq) == TF_OK);
    CHECK(eq == 1);
}

TEST_CASE("status codes and last-error reporting")
{
    Elem e;
    CHECK(tf_element_from_word("zz", &e.e) == TF_ERR_PARSE);
    CHECK(std::string(tf_last_error()).size() > 0);
    CHECK(tf_element_from_word(nullptr, &e.e) == TF_ERR_PRECONDITION);
    Graph g;
    CHECK(tf_graph_build("nope", 2, &g.g) == TF_ERR_PARSE);
    CHECK(tf_graph_build("cayley", -1, &g.g) == TF_ERR_PRECONDITION);
    Str s;
    CHECK(tf_element_eval(nullptr, "1/2", &s.s) == TF_ERR_PRECONDITION);
    // rejected: decimal points are not exact input
    REQUIRE(tf_element_from_word("x0", &e.e) == TF_OK);
    CHECK(tf_element_eval(e.e, "0.5", &s.s) == TF_ERR_PARSE);
}

TEST_CASE("relations check reports success")
{
    Str s;
    REQUIRE(tf_relations_check(&s.s) == TF_OK);
    auto j = s.parsed();
    CHECK(j["relator1_ok"].get<bool>());
    CHECK(j["relator2_ok"].get<bool>());
    CHECK(j["all_ok"].get<bool>());
}

TEST_CASE("oracle construction and membership")
{
    Oracle stab;
    REQUIRE(tf_oracle_make("point_stab", "1/2", nullptr, &stab.o) == TF_OK);
    Elem x1, x0;
    REQUIRE(tf_element_from_word("x1", &x1.e) == TF_OK);
    REQUIRE(tf_element_from_word("x0", &x0.e) == TF_OK);
    int in = -1;
    REQUIRE(tf_oracle_member(stab.o, x1.e, &in) == TF_OK);
    CHECK(in == 1);
    REQUIRE(tf_oracle_member(stab.o, x0.e, &in) == TF_OK);
    CHECK(in == 0);

    Oracle cyc;
    REQUIRE(tf_oracle_make("cyclic", nullptr, x0.e, &cyc.o) == TF_OK);
    Elem x0sq;
    REQUIRE(tf_element_compose(x0.e, x0.e, &x0sq.e) == TF_OK);
    REQUIRE(tf_oracle_member(cyc.o, x0sq.e, &in) == TF_OK);
    CHECK(in == 1);

    Oracle bad;
    CHECK(tf_oracle_make("mystery", nullptr, nullptr, &bad.o) == TF_ERR_PARSE);
}

TEST_CASE("graph specs, serialization, and comparisons")
{
    Graph cay, orb, cos;
    REQUIRE(tf_graph_build("cayley", 3, &cay.g) == TF_OK);
    REQUIRE(tf_graph_build("orbit:1/2", 3, &orb.g) == TF_OK);
    REQUIRE(tf_graph_build("coset:point_stab:1/2", 3, &cos.g) == TF_OK);

    size_t ncay = 0, norb = 0, ncos = 0;
    REQUIRE(tf_graph_size(cay.g, &ncay) == TF_OK);
    REQUIRE(tf_graph_size(orb.g, &norb) == TF_OK);
    REQUIRE(tf_graph_size(cos.g, &ncos) == TF_OK);
    CHECK(norb == ncos);
    CHECK(norb < ncay);

    int iso = -1;
    REQUIRE(tf_graph_ball_isomorphic(orb.g, cos.g, 3, &iso) == TF_OK);
    CHECK(iso == 1);
    REQUIRE(tf_graph_ball_isomorphic(orb.g, cay.g, 1, &iso) == TF_OK);
    CHECK(iso == 0);

    Str text;
    REQUIRE(tf_graph_to_json(orb.g, &text.s) == TF_OK);
    Graph back;
    REQUIRE(tf_graph_from_json(text.s, &back.g) == TF_OK);
    size_t nback = 0;
    REQUIRE(tf_graph_size(back.g, &nback) == TF_OK);
    CHECK(nback == norb);

    Str dot;
    REQUIRE(tf_graph_to_dot(orb.g, &dot.s) == TF_OK);
    CHECK(dot.str().find("digraph") != std::string::npos);

    Str dist;
    REQUIRE(tf_chabauty_distance(orb.g, cay.g, 3, &dist.s) == TF_OK);
    auto j = dist.parsed();
    CHECK(j["value"].get<std::string>() == "1/2");
    CHECK(j["witness_radius"].get<int>() == 1);

    Graph cay1;
    REQUIRE(tf_graph_build("cayley", 1, &cay1.g) == TF_OK);
    Str frag;
    REQUIRE(tf_cayley_fragments(orb.g, cay1.g, 1, &frag.s) == TF_OK);
    auto fj = frag.parsed();
    // the root's x1 loop disqualifies it
    for (const auto & v : fj["vertices"])
        CHECK(v["payload"].get<std::string>() != "1/2");
}

TEST_CASE("growth, foelner, displacement through the C interface")
{
    Graph cay;
    REQUIRE(tf_graph_build("cayley", 4, &cay.g) == TF_OK);
    int root = 0;
    Str table;
    REQUIRE(tf_growth_table(cay.g, &root, 1, 2, &table.s) == TF_OK);
    auto rows = table.parsed()["rows"];
    REQUIRE(rows.size() == 3);
    CHECK(rows[2][2].get<int>() == 17);

    Str csv;
    REQUIRE(tf_growth_table_csv(table.s, &csv.s) == TF_OK);
    CHECK(csv.str().rfind("graph_id,root,n,ball_size", 0) == 0);

    Str est;
    CHECK(tf_growth_estimate(table.s, -1, -1, &est.s) == TF_ERR_PRECONDITION);

    Str ratio;
    REQUIRE(tf_foelner_ratio(cay.g, 0, &ratio.s) == TF_OK);
    CHECK(ratio.parsed()["ratio"].get<std::string>() == "4");

    Str disp;
    REQUIRE(tf_displacement(cay.g, "x0", &disp.s) == TF_OK);
    CHECK(disp.parsed()["max_observed"].get<int>() == 1);
}

TEST_CASE("constructions through the C interface")
{
    Str built;
    REQUIRE(tf_confine_build("1/2", &built.s) == TF_OK);
    CHECK(built.parsed()["elements"].size() == 2);

    Str verify;
    REQUIRE(tf_confine_verify("1/2", 2, &verify.s) == TF_OK);
    CHECK(verify.parsed()["pass"].get<bool>());

    Str chain;
    REQUIRE(tf_lemma_chain("x0;x1", &chain.s) == TF_OK);
    CHECK(chain.parsed()["ordering_holds"].get<bool>());
    CHECK(tf_lemma_chain("x0x0'", &chain.s) == TF_ERR_PRECONDITION);

    int k = -1;
    REQUIRE(tf_push_left("3/4", &k) == TF_OK);
    CHECK(k == 2);
    CHECK(tf_push_left("2", &k) == TF_ERR_PRECONDITION);

    Str germ;
    REQUIRE(tf_germ_check("1/2", 3, &germ.s) == TF_OK);
    CHECK(germ.parsed()["identity_holds"].get<bool>());
    CHECK(germ.parsed()["mismatches"].get<int>() == 0);
}

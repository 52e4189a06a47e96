#include "doctest.h"

#include "thompsonf/word.hpp"

using namespace tf;

TEST_CASE("word parsing and printing")
{
    Word w = Word::parse("x0x1'x0^-1 x1");
    REQUIRE(w.length() == 4);
    CHECK(w.letters[0] == Letter{Gen::X0, false});
    CHECK(w.letters[1] == Letter{Gen::X1, true});
    CHECK(w.letters[2] == Letter{Gen::X0, true});
    CHECK(w.letters[3] == Letter{Gen::X1, false});
    CHECK(Word::parse(w.str()).letters == w.letters);
    CHECK_THROWS_AS(Word::parse("y0"), ParseError);
    CHECK_THROWS_AS(Word::parse("x2"), ParseError);
}

TEST_CASE("eval_word basics")
{
    CHECK(eval_word(Word::parse("x0x0'")) == PLMap::identity());
    CHECK(eval_word(Word{}) == PLMap::identity());
    CHECK(eval_word(relator1()) == PLMap::identity());
    // Written juxtaposition is classical composition: x0x1 applies x1 first.
    CHECK(eval_word(Word::parse("x0x1")).eval(Dyadic(1)) == Dyadic(1));
    CHECK(eval_word(Word::parse("x0x1")) == compose(PLMap::x1(), PLMap::x0()));
}

TEST_CASE("word inverse")
{
    Word w = Word::parse("x0x1x0'");
    CHECK(eval_word(w * w.inverse()) == PLMap::identity());
    CHECK(eval_word(w.inverse()) == eval_word(w).inverse());
}

TEST_CASE("cayley ball sizes")
{
    CHECK(cayley_ball(0).elements.size() == 1);
    CHECK(cayley_ball(1).elements.size() == 5);
    CHECK(cayley_ball(2).elements.size() == 17);
}

TEST_CASE("cayley ball words evaluate to their elements")
{
    auto ball = cayley_ball(3);
    for (std::size_t v = 0; v < ball.elements.size(); ++v) {
        CHECK(eval_word(ball.words[v]) == ball.elements[v]);
        CHECK(static_cast<int>(ball.words[v].length()) == ball.dist[v]);
    }
}

TEST_CASE("cayley ball sizes strictly increase")
{
    std::size_t prev = 0;
    for (int n = 0; n <= 4; ++n) {
        auto ball = cayley_ball(n);
        CHECK(ball.elements.size() > prev);
        prev = ball.elements.size();
    }
}

TEST_CASE("commutator ball")
{
    auto c0 = enumerate_commutator_ball(0);
    REQUIRE(c0.size() == 1);
    CHECK(c0[0] == PLMap::identity());
    auto c1 = enumerate_commutator_ball(1);
    REQUIRE(c1.size() == 1); // no generator has zero abelianization
    auto c4 = enumerate_commutator_ball(4);
    CHECK(c4.size() > 1);
    for (const auto & g : c4)
        CHECK(g.in_commutator());
}

TEST_CASE("resource cap raises a resource error")
{
    CHECK_THROWS_AS(cayley_ball(4, 10), ResourceError);
}

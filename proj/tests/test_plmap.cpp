#include "doctest.h"

#include <random>

#include "thompsonf/plmap.hpp"
#include "thompsonf/word.hpp"

using namespace tf;

namespace {

// Independent piecewise formulas for the generators, used as an oracle
// against the PLMap representation.
Rational x0_formula(const Rational & t)
{
    if (!(Rational(1, 2) < t))
        return t.mul_pow2(-1);
    if (!(Rational(3, 4) < t))
        return t - Rational(1, 4);
    return t.mul_pow2(1) - Rational(1);
}

Rational x1_formula(const Rational & t)
{
    if (!(Rational(1, 2) < t))
        return t;
    if (!(Rational(3, 4) < t))
        return t.mul_pow2(-1) + Rational(1, 4);
    if (!(Rational(7, 8) < t))
        return t - Rational(1, 8);
    return t.mul_pow2(1) - Rational(1);
}

Dyadic random_unit_dyadic(std::mt19937 & rng)
{
    unsigned e = 1 + rng() % 24;
    BigInt den = BigInt(1) << e;
    BigInt num = BigInt(rng()) % (den - 1) + 1;
    return Dyadic(num, e);
}

} // namespace

TEST_CASE("generator evaluation matches the piecewise formulas")
{
    CHECK(PLMap::x0().eval(Dyadic(1, 1)) == Dyadic(1, 2));       // x0(1/2) = 1/4
    CHECK(PLMap::x1().eval(Dyadic(3, 2)) == Dyadic(5, 3));       // x1(3/4) = 5/8
    CHECK(PLMap::identity().eval(Rational(1, 3)) == Rational(1, 3));
    std::mt19937 rng(2024);
    for (int i = 0; i < 300; ++i) {
        Rational t(random_unit_dyadic(rng));
        CHECK(PLMap::x0().eval(t) == x0_formula(t));
        CHECK(PLMap::x1().eval(t) == x1_formula(t));
    }
}

TEST_CASE("composition convention: compose(g,h) applies g then h")
{
    // Discriminating point: x1(x0(3/4)) = 1/2 but x0(x1(3/4)) = 3/8.
    PLMap gh = compose(PLMap::x0(), PLMap::x1());
    CHECK(gh.eval(Dyadic(3, 2)) == Dyadic(1, 1));
}

TEST_CASE("inverse and identity")
{
    CHECK(compose(PLMap::x0(), PLMap::x0().inverse()) == PLMap::identity());
    CHECK(compose(PLMap::identity(), PLMap::x1()) == PLMap::x1());
    CHECK(PLMap::x0().inverse().eval(Dyadic(1, 1)) == Dyadic(3, 2));
    CHECK(PLMap::x1().inverse().inverse() == PLMap::x1());
}

TEST_CASE("both presentation relators evaluate to the identity")
{
    CHECK(eval_word(relator1()) == PLMap::identity());
    CHECK(eval_word(relator2()) == PLMap::identity());
    // First relator says the two halves commute.
    PLMap a = eval_word(Word::parse("x0x1'"));
    PLMap b = eval_word(Word::parse("x0'x1x0"));
    CHECK(compose(a, b) == compose(b, a));
}

TEST_CASE("support")
{
    auto s1 = PLMap::x1().support();
    REQUIRE(s1.size() == 1);
    CHECK(s1[0].lo == Rational(1, 2));
    CHECK(s1[0].hi == Rational(1));
    CHECK(PLMap::identity().support().empty());
    auto s0 = PLMap::x0().support();
    REQUIRE(s0.size() == 1);
    CHECK(s0[0].lo == Rational(0));
    CHECK(s0[0].hi == Rational(1));
}

TEST_CASE("abelianization")
{
    CHECK(PLMap::x0().abelianize() == AbelianImage{-1, 1});
    CHECK(PLMap::x1().abelianize() == AbelianImage{0, 1});
    CHECK(PLMap::identity().abelianize() == AbelianImage{0, 0});
    CHECK_FALSE(PLMap::x0().in_commutator());
    CHECK(PLMap::identity().in_commutator());
}

TEST_CASE("abelianize is a homomorphism")
{
    std::mt19937 rng(5);
    for (int i = 0; i < 100; ++i) {
        Word w1, w2;
        for (unsigned j = 0; j < 1 + rng() % 6; ++j)
            w1.letters.push_back({static_cast<Gen>(rng() % 2), rng() % 2 == 0});
        for (unsigned j = 0; j < 1 + rng() % 6; ++j)
            w2.letters.push_back({static_cast<Gen>(rng() % 2), rng() % 2 == 0});
        PLMap g = eval_word(w1), h = eval_word(w2);
        CHECK(compose(g, h).abelianize() == g.abelianize() + h.abelianize());
    }
}

TEST_CASE("in_commutator for a conjugated bump")
{
    PLMap g = bump(Dyadic(1, 2), Dyadic(1, 1));
    PLMap h = eval_word(Word::parse("x0x1"));
    CHECK(conjugate(g, h).in_commutator());
}

TEST_CASE("conjugation support identity")
{
    CHECK(conjugate(PLMap::x1(), PLMap::identity()) == PLMap::x1());
    CHECK(conjugate(PLMap::identity(), PLMap::x0()) == PLMap::identity());
    // support(h^-1 g h) = h(support(g))
    PLMap h = interval_map({Dyadic(1, 1)}, {Dyadic(1, 2)});
    PLMap c = conjugate(PLMap::x1(), h);
    auto sup = c.support();
    REQUIRE(sup.size() == 1);
    CHECK(sup[0].lo == h.eval(Rational(1, 2)));
    CHECK(sup[0].hi == h.eval(Rational(1)));
}

TEST_CASE("powers")
{
    CHECK(power(PLMap::x0(), 0) == PLMap::identity());
    CHECK(power(PLMap::x0(), 2).eval(Dyadic(3, 2)) == Dyadic(1, 2)); // x0^2(3/4) = 1/4
    CHECK(power(PLMap::x0(), -1) == PLMap::x0().inverse());
    CHECK(power(PLMap::x1(), 3) == compose(compose(PLMap::x1(), PLMap::x1()), PLMap::x1()));
}

TEST_CASE("bump construction")
{
    PLMap b = bump(Dyadic(1, 1), Dyadic(1));
    CHECK(b.eval(Dyadic(9, 4)) == Dyadic(5, 3)); // bump(1/2,1) at 9/16 -> 5/8
    auto sup = bump(Dyadic(1, 2), Dyadic(1, 1)).support();
    REQUIRE(sup.size() == 1);
    CHECK(sup[0].lo == Rational(1, 4));
    CHECK(sup[0].hi == Rational(1, 2));
    CHECK_THROWS_AS(bump(Dyadic(1, 1), Dyadic(1, 1)), PreconditionError);

    // bump(a,b)(t) > t inside (a,b)
    std::mt19937 rng(11);
    PLMap g = bump(Dyadic(1, 2), Dyadic(3, 2));
    for (int i = 0; i < 100; ++i) {
        Dyadic t = random_unit_dyadic(rng);
        Rational rt(t);
        Rational img = g.eval(rt);
        if (Rational(1, 4) < rt && rt < Rational(3, 4))
            CHECK(rt < img);
        else
            CHECK(rt == img);
    }

    // disjoint-support bumps commute and restrict correctly
    PLMap b1 = bump(Dyadic(0), Dyadic(1, 1));
    PLMap b2 = bump(Dyadic(1, 1), Dyadic(1));
    PLMap both = compose(b1, b2);
    CHECK(both == compose(b2, b1));
    auto sup_both = both.support();
    REQUIRE(sup_both.size() == 1);
    CHECK(sup_both[0].lo == Rational(0));
    CHECK(sup_both[0].hi == Rational(1));
    CHECK(both.eval(Dyadic(1, 2)) == b1.eval(Dyadic(1, 2)));
    CHECK(both.eval(Dyadic(3, 2)) == b2.eval(Dyadic(3, 2)));
}

TEST_CASE("interval_map hits every tuple entry")
{
    PLMap h = interval_map({Dyadic(1, 2)}, {Dyadic(1, 1)});
    CHECK(h.eval(Dyadic(1, 2)) == Dyadic(1, 1));

    std::vector<Dyadic> t{Dyadic(1, 3), Dyadic(1, 1), Dyadic(7, 3)};
    CHECK(interval_map(t, t) == PLMap::identity());

    PLMap f = interval_map({Dyadic(1, 2), Dyadic(1, 1)},
                           {Dyadic(1, 1), Dyadic(3, 2)}, MapMode::FPrime);
    CHECK(f.eval(Dyadic(1, 2)) == Dyadic(1, 1));
    CHECK(f.eval(Dyadic(1, 1)) == Dyadic(3, 2));
    CHECK(f.abelianize() == AbelianImage{0, 0});

    CHECK_THROWS_AS(interval_map({Dyadic(1, 1)}, {}), PreconditionError);
    CHECK_THROWS_AS(interval_map({Dyadic(1, 1), Dyadic(1, 2)},
                                 {Dyadic(1, 2), Dyadic(1, 1)}),
                    PreconditionError);
    CHECK_THROWS_AS(interval_map({Dyadic(0)}, {Dyadic(1, 1)}), PreconditionError);
}

TEST_CASE("interval_map random property")
{
    std::mt19937 rng(31);
    for (int iter = 0; iter < 50; ++iter) {
        std::size_t n = 1 + rng() % 3;
        auto make_tuple = [&rng, n]() {
            std::vector<Dyadic> v;
            while (v.size() < n) {
                Dyadic d = random_unit_dyadic(rng);
                if (v.empty() || v.back() < d)
                    v.push_back(d);
            }
            return v;
        };
        auto src = make_tuple();
        auto tgt = make_tuple();
        for (auto mode : {MapMode::F, MapMode::FPrime}) {
            PLMap h = interval_map(src, tgt, mode);
            for (std::size_t i = 0; i < n; ++i)
                CHECK(h.eval(src[i]) == tgt[i]);
            if (mode == MapMode::FPrime)
                CHECK(h.abelianize() == AbelianImage{0, 0});
        }
    }
}

TEST_CASE("group axioms on random words")
{
    std::mt19937 rng(77);
    auto random_word = [&rng]() {
        Word w;
        unsigned len = rng() % 11;
        for (unsigned j = 0; j < len; ++j)
            w.letters.push_back({static_cast<Gen>(rng() % 2), rng() % 2 == 0});
        return w;
    };
    for (int i = 0; i < 200; ++i) {
        PLMap g = eval_word(random_word());
        PLMap h = eval_word(random_word());
        PLMap k = eval_word(random_word());
        CHECK(compose(compose(g, h), k) == compose(g, compose(h, k)));
        CHECK(compose(g, g.inverse()) == PLMap::identity());
        CHECK(compose(g, h).inverse() == compose(h.inverse(), g.inverse()));
    }
}

TEST_CASE("canonicity: no redundant breakpoints after compose")
{
    std::mt19937 rng(13);
    for (int i = 0; i < 100; ++i) {
        Word w;
        for (unsigned j = 0; j < 1 + rng() % 8; ++j)
            w.letters.push_back({static_cast<Gen>(rng() % 2), rng() % 2 == 0});
        PLMap g = eval_word(w);
        const auto & s = g.slope_exponents();
        for (std::size_t j = 0; j + 1 < s.size(); ++j)
            CHECK(s[j] != s[j + 1]);
        // eval preserves dyadicity on breakpoints
        for (const auto & b : g.breakpoints())
            CHECK(Rational(g.eval(b)).is_dyadic());
    }
}

#ifndef THOMPSONF_WORD_HPP
#define THOMPSONF_WORD_HPP

#include <array>
#include <string>
#include <vector>

#include "thompsonf/plmap.hpp"

namespace tf {

// Generator label: 0 = x0, 1 = x1.
enum class Gen : int { X0 = 0, X1 = 1 };

struct Letter {
    Gen gen;
    bool inv;
    bool operator==(const Letter & o) const = default;
};

// Formal (not necessarily reduced) word over {x0, x1, x0^-1, x1^-1}.
struct Word {
    std::vector<Letter> letters;

    std::size_t length() const { return letters.size(); }
    Word inverse() const;
    Word operator*(const Word & o) const;

    // "x0x1'x0" or "x0 x1^-1 x0"; apostrophe and ^-1 both mean inverse.
    static Word parse(const std::string & s);
    std::string str() const;
};

// Juxtaposition is classical composition: the leftmost letter is
// applied last, so the word "x0 x1" is the map t -> x0(x1(t)).
// (Only this reading makes relator1/relator2 evaluate to the identity.)
PLMap eval_word(const Word & w);
PLMap eval_letter(const Letter & l);

// a^-1 b^-1 a b.
Word commutator_word(const Word & a, const Word & b);

// The two defining relators of F over {x0, x1}:
// [x0 x1^-1, x0^-1 x1 x0] and [x0 x1^-1, x0^-2 x1 x0^2].
Word relator1();
Word relator2();

struct CayleyBall {
    int radius = 0;
    std::vector<PLMap> elements;        // elements[0] is the identity
    std::vector<Word> words;            // a shortest representative each
    std::vector<int> dist;              // word length of that representative
    // edges[v][g] = index of v * gen g, or -1 if outside the ball;
    // redges[v][g] = index of v * gen g^-1.
    std::vector<std::array<int, 2>> edges;
    std::vector<std::array<int, 2>> redges;
};

// All distinct elements of F with word length <= n, deduplicated by
// canonical PLMap equality, with labelled edges inside the ball.
CayleyBall cayley_ball(int n, std::size_t max_elements = 2000000);

// Elements of cayley_ball(n) with trivial abelianization.
std::vector<PLMap> enumerate_commutator_ball(int n);

} // namespace tf

#endif

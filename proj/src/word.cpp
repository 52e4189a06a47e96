#include "thompsonf/word.hpp"

#include <algorithm>
#include <array>
#include <unordered_map>

#include "thompsonf/errors.hpp"

namespace tf {

Word Word::inverse() const
{
    Word w;
    w.letters.reserve(letters.size());
    for (auto it = letters.rbegin(); it != letters.rend(); ++it)
        w.letters.push_back({it->gen, !it->inv});
    return w;
}

Word Word::operator*(const Word & o) const
{
    Word w = *this;
    w.letters.insert(w.letters.end(), o.letters.begin(), o.letters.end());
    return w;
}

Word Word::parse(const std::string & s)
{
    Word w;
    std::size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (c == ' ' || c == '\t' || c == '*') {
            ++i;
            continue;
        }
        if (c != 'x' && c != 'X')
            throw ParseError("bad word '" + s + "': expected 'x' at position " + std::to_string(i));
        ++i;
        if (i >= s.size() || (s[i] != '0' && s[i] != '1'))
            throw ParseError("bad word '" + s + "': expected generator index 0 or 1");
        Gen g = s[i] == '0' ? Gen::X0 : Gen::X1;
        ++i;
        bool inv = false;
        if (i < s.size() && s[i] == '\'') {
            inv = true;
            ++i;
        } else if (i + 2 < s.size() + 1 && s.compare(i, 3, "^-1") == 0) {
            inv = true;
            i += 3;
        }
        w.letters.push_back({g, inv});
    }
    return w;
}

std::string Word::str() const
{
    if (letters.empty())
        return "e";
    std::string s;
    for (const auto & l : letters) {
        s += l.gen == Gen::X0 ? "x0" : "x1";
        if (l.inv)
            s += "'";
    }
    return s;
}

PLMap eval_letter(const Letter & l)
{
    const PLMap & g = l.gen == Gen::X0 ? PLMap::x0() : PLMap::x1();
    return l.inv ? g.inverse() : g;
}

PLMap eval_word(const Word & w)
{
    // Juxtaposition in written words is classical composition: the word
    // "x0 x1" denotes x0 o x1, i.e. apply x1 first.  In terms of the
    // right-action product this folds letters back to front.
    PLMap acc;
    for (const auto & l : w.letters)
        acc = compose(eval_letter(l), acc);
    return acc;
}

Word commutator_word(const Word & a, const Word & b)
{
    return a.inverse() * b.inverse() * a * b;
}

Word relator1()
{
    Word a = Word::parse("x0x1'");
    Word b = Word::parse("x0'x1x0");
    return commutator_word(a, b);
}

Word relator2()
{
    Word a = Word::parse("x0x1'");
    Word b = Word::parse("x0'x0'x1x0x0");
    return commutator_word(a, b);
}

CayleyBall cayley_ball(int n, std::size_t max_elements)
{
    if (n < 0)
        throw PreconditionError("cayley_ball: radius must be >= 0");
    CayleyBall ball;
    ball.radius = n;
    std::unordered_map<std::string, int> index;

    auto add = [&](const PLMap & g, const Word & w, int d) -> int {
        auto [it, fresh] = index.try_emplace(g.key(), static_cast<int>(ball.elements.size()));
        if (fresh) {
            if (ball.elements.size() >= max_elements)
                throw ResourceError("cayley_ball: element cap " + std::to_string(max_elements)
                                    + " exceeded at radius " + std::to_string(n));
            ball.elements.push_back(g);
            ball.words.push_back(w);
            ball.dist.push_back(d);
            ball.edges.push_back({-1, -1});
            ball.redges.push_back({-1, -1});
        }
        return it->second;
    };

    add(PLMap::identity(), Word{}, 0);
    std::size_t head = 0;
    while (head < ball.elements.size()) {
        int v = static_cast<int>(head++);
        int d = ball.dist[v];
        PLMap g = ball.elements[v];
        Word w = ball.words[v];
        for (int gi = 0; gi < 2; ++gi) {
            for (bool inv : {false, true}) {
                Letter l{static_cast<Gen>(gi), inv};
                PLMap img = compose(g, eval_letter(l));
                std::string k = img.key();
                auto it = index.find(k);
                int u = -1;
                if (it != index.end())
                    u = it->second;
                else if (d < n)
                    u = add(img, Word{{l}} * w, d + 1); // prepend: edge appends on the action side
                if (u >= 0) {
                    if (!inv) {
                        ball.edges[v][gi] = u;
                        ball.redges[u][gi] = v;
                    } else {
                        ball.redges[v][gi] = u;
                        ball.edges[u][gi] = v;
                    }
                }
            }
        }
    }
    return ball;
}

std::vector<PLMap> enumerate_commutator_ball(int n)
{
    auto ball = cayley_ball(n);
    std::vector<PLMap> out;
    for (const auto & g : ball.elements)
        if (g.in_commutator())
            out.push_back(g);
    return out;
}

} // namespace tf

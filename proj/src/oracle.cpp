#include "thompsonf/oracle.hpp"

#include "thompsonf/errors.hpp"

namespace tf {

SubgroupOracle trivial_oracle()
{
    return {"trivial", [](const PLMap & g) { return g.is_identity(); }};
}

SubgroupOracle full_oracle()
{
    return {"full", [](const PLMap &) { return true; }};
}

SubgroupOracle commutator_oracle()
{
    return {"commutator", [](const PLMap & g) { return g.in_commutator(); }};
}

SubgroupOracle point_stab_oracle(const Rational & p)
{
    if (p < Rational(0) || Rational(1) < p)
        throw PreconditionError("point_stab: point outside [0,1]");
    return {"point_stab(" + p.str() + ")",
            [p](const PLMap & g) { return g.eval(p) == p; }};
}

SubgroupOracle tuple_stab_oracle(const std::vector<Rational> & pts)
{
    std::string name = "tuple_stab(";
    for (const auto & p : pts)
        name += p.str() + ",";
    name += ")";
    return {name, [pts](const PLMap & g) {
                for (const auto & p : pts)
                    if (!(g.eval(p) == p))
                        return false;
                return true;
            }};
}

SubgroupOracle germ_stab_oracle(const std::vector<Rational> & pts)
{
    std::string name = "germ_stab(";
    for (const auto & p : pts)
        name += p.str() + ",";
    name += ")";
    return {name, [pts](const PLMap & g) {
                for (const auto & p : pts)
                    if (!g.germ_trivial_at(p))
                        return false;
                return true;
            }};
}

SubgroupOracle germ_stab_commutator_oracle(const std::vector<Rational> & pts)
{
    auto extended = pts;
    extended.push_back(Rational(0));
    extended.push_back(Rational(1));
    auto inner = germ_stab_oracle(extended);
    std::string name = "germ_stab_commutator(";
    for (const auto & p : pts)
        name += p.str() + ",";
    name += ")";
    return {name, inner.member};
}

SubgroupOracle cyclic_oracle(const PLMap & g0)
{
    if (g0.is_identity())
        return {"cyclic(identity)", [](const PLMap & g) { return g.is_identity(); }};
    // Reference datum: the slope exponent just right of the left support
    // endpoint a.  g0 fixes a with nontrivial germ there, so the exponent
    // is nonzero and under powers it scales linearly.
    Rational a = g0.support().front().lo;
    long e0 = g0.slope_exp_right_of(a);
    return {"cyclic", [g0, a, e0](const PLMap & g) {
                if (g.is_identity())
                    return true;
                if (!(g.eval(a) == a))
                    return false;
                long e = g.slope_exp_right_of(a);
                if (e % e0 != 0)
                    return false;
                return power(g0, e / e0) == g;
            }};
}

SubgroupOracle make_oracle(const std::string & kind,
                           const std::vector<Rational> & points,
                           const PLMap & base)
{
    if (kind == "trivial")
        return trivial_oracle();
    if (kind == "full")
        return full_oracle();
    if (kind == "commutator")
        return commutator_oracle();
    if (kind == "point_stab") {
        if (points.size() != 1)
            throw PreconditionError("point_stab needs exactly one point");
        return point_stab_oracle(points[0]);
    }
    if (kind == "tuple_stab")
        return tuple_stab_oracle(points);
    if (kind == "germ_stab")
        return germ_stab_oracle(points);
    if (kind == "germ_stab_commutator")
        return germ_stab_commutator_oracle(points);
    if (kind == "cyclic")
        return cyclic_oracle(base);
    throw ParseError("unknown oracle kind '" + kind + "'");
}

} // namespace tf

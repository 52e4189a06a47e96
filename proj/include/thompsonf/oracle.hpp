#ifndef THOMPSONF_ORACLE_HPP
#define THOMPSONF_ORACLE_HPP

#include <functional>
#include <string>
#include <vector>

#include "thompsonf/plmap.hpp"

namespace tf {

// Decidable membership predicate g in H for a named subgroup of F.
struct SubgroupOracle {
    std::string name;
    std::function<bool(const PLMap &)> member;
};

SubgroupOracle trivial_oracle();
SubgroupOracle full_oracle();                   // F as its own subgroup
SubgroupOracle commutator_oracle();             // F' via abelianization
SubgroupOracle point_stab_oracle(const Rational & p);
SubgroupOracle tuple_stab_oracle(const std::vector<Rational> & pts);
// Elements acting trivially on a neighborhood of every point of S.
SubgroupOracle germ_stab_oracle(const std::vector<Rational> & pts);
// St^0_{F'}(S) = St^0_F(S u {0,1}).
SubgroupOracle germ_stab_commutator_oracle(const std::vector<Rational> & pts);
SubgroupOracle cyclic_oracle(const PLMap & g0);

// kind in {trivial, full, point_stab, tuple_stab, germ_stab,
// germ_stab_commutator, cyclic, commutator}.  `points` feeds the
// stabilizer kinds, `base` the cyclic kind.
SubgroupOracle make_oracle(const std::string & kind,
                           const std::vector<Rational> & points = {},
                           const PLMap & base = PLMap::identity());

} // namespace tf

#endif

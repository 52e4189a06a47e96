#ifndef THOMPSONF_CONSTRUCTIONS_HPP
#define THOMPSONF_CONSTRUCTIONS_HPP

#include <optional>

#include "thompsonf/oracle.hpp"
#include "thompsonf/plmap.hpp"
#include "thompsonf/word.hpp"

namespace tf {

// Finite set of nontrivial elements meeting every conjugate k H k^-1.
struct ConfiningSet {
    std::vector<PLMap> elements;
    std::string target;          // description of the subgroup it confines
    int certificate_radius = -1; // conjugator ball radius verified so far
};

// r = |S|+1 bumps on the pairwise disjoint intervals [1/2^{i+1}, 1/2^i]:
// for any conjugator, at least one conjugate has support disjoint from S
// and therefore lands in the germ stabilizer of S.
ConfiningSet build_confining_set(const std::vector<Rational> & s);

struct ConfiningReport {
    bool pass = false;
    int radius = 0;
    std::size_t conjugators_checked = 0;
    std::optional<Word> failing_conjugator;
    // A pass over a finite conjugator sample is evidence, not proof;
    // a failure is a genuine counterexample.
    bool exhaustive_proof = false;
};

// For every k in the F' portion of the radius-`radius` Cayley ball,
// checks that some conjugate k^-1 g_i k lies in H.
ConfiningReport verify_confining(const SubgroupOracle & H,
                                 const std::vector<PLMap> & P,
                                 int radius);

struct IntervalChain {
    std::vector<PLMap> permuted_elements; // after permutation/inversion
    std::vector<Interval> intervals;      // open, dyadic endpoints
    std::vector<std::size_t> permutation; // permuted_elements[i] comes from input[permutation[i]]
    std::vector<bool> inverted;
    bool ordering_holds() const;
};

// The interval-chain construction: after permuting and possibly
// inverting, finds open dyadic intervals U_i with
// g_1(U_1) < U_1 < g_2(U_2) < U_2 < ... ("(a,b) < (c,d)" means b < c).
IntervalChain lemma_interval_chain(const std::vector<PLMap> & gs);

// Least k >= 0 with x0^k(S) inside (0, 1/2).
int push_left(const std::vector<Rational> & s);

struct GermIdentityRow {
    bool lhs = false; // g in St^0_{F'}(S)
    bool rhs = false; // g in St^0_F(S u {0,1})
};

// Checks St^0_{F'}(S) = St^0_F(S u {0,1}) sample by sample.
std::vector<GermIdentityRow> germ_identity_check(const std::vector<Rational> & s,
                                                 const std::vector<PLMap> & samples);

} // namespace tf

#endif

#ifndef THOMPSONF_ANALYSIS_HPP
#define THOMPSONF_ANALYSIS_HPP

#include "thompsonf/graph.hpp"
#include "thompsonf/word.hpp"

namespace tf {

struct GrowthTable {
    struct Row {
        int root;
        int n;
        std::size_t ball_size;
    };
    std::vector<Row> rows;
    std::string graph_id;
    int max_n = 0;
    std::vector<int> roots;

    // max over sampled roots of |B(v,n)|; lower bound on the uniform
    // growth function.
    std::vector<std::size_t> max_by_radius() const;
};

// Exact ball sizes |B(v,n)| for each sampled root, n = 0..max_n.  Every
// sampled root must satisfy dist(root, v) <= g.radius - max_n so no ball
// is truncated.
GrowthTable growth_table(const RootedLabelledGraph & g,
                         const std::vector<int> & roots, int max_n);

struct GrowthEstimate {
    double fitted_rate = 0.0; // least-squares slope of log2 |B(n)|
    double r_squared = 0.0;
    int window_lo = 0;
    int window_hi = 0;
    bool exponential_evidence = false;
};

// Log-linear fit of the root-maximum ball sizes over [window_lo,
// window_hi] (defaults to the last half of the table's radius range).
// Thresholds are heuristics for desk-scale separation.
GrowthEstimate uniform_growth_estimate(const GrowthTable & t,
                                       int window_lo = -1, int window_hi = -1,
                                       double rate_threshold = 0.3,
                                       double r2_threshold = 0.9);

// True iff g(n) < f(C n) on the whole overlapping range.
bool growth_dominates(const GrowthTable & f, const GrowthTable & g, int c);

// |edge boundary of S| / |S| exactly.  Fails if any vertex of S has a
// neighbor outside the computed region.
Rational foelner_ratio(const RootedLabelledGraph & g, const std::vector<int> & s);

struct DisplacementReport {
    Word word;
    int max_observed = 0;
    std::size_t vertices_checked = 0;
    std::size_t vertices_skipped = 0;
};

// max over checkable vertices of d(v, v.g) where g is the element of w,
// acting by following the word's letters along graph edges.
DisplacementReport displacement(const Word & w, const RootedLabelledGraph & g);

} // namespace tf

#endif

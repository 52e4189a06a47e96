#ifndef THOMPSONF_SERIALIZE_HPP
#define THOMPSONF_SERIALIZE_HPP

#include <string>

#include "thompsonf/analysis.hpp"
#include "thompsonf/graph.hpp"
#include "thompsonf/plmap.hpp"

namespace tf {

// PLMap <-> JSON: ordered (breakpoint, image) pairs plus slope exponents.
// The parser re-validates all invariants and rejects non-canonical input
// with a diagnostic.
std::string plmap_to_json(const PLMap & g);
PLMap plmap_from_json(const std::string & text);

std::string graph_to_json(const RootedLabelledGraph & g);
RootedLabelledGraph graph_from_json(const std::string & text);

// DOT export: edges labelled x0/x1 with direction, root double-circled.
std::string graph_to_dot(const RootedLabelledGraph & g);

std::string growth_table_to_csv(const GrowthTable & t);
std::string growth_table_to_json(const GrowthTable & t);
GrowthTable growth_table_from_json(const std::string & text);

// Write via temp file + rename so readers never observe partial output.
void write_file_atomic(const std::string & path, const std::string & content);

} // namespace tf

#endif

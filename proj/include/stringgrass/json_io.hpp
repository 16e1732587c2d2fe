#pragma once

#include <string>

#include "stringgrass/chi.hpp"
#include "stringgrass/degrees.hpp"
#include "stringgrass/quiver.hpp"

namespace stringgrass {

// Schema:
// {
//   "vertices": [1, 2],
//   "arrows":   [{"label": "a", "source": 2, "target": 1}],
//   "dims":     {"1": 2, "2": 2},
//   "matrices": {"a": [{"row": 1, "col": 1, "value": "1"}]}
// }
// Values are exact rationals ("p" or "p/q"). Absent matrices are zero maps.
// Serialization is canonical: sorted keys, entries ordered by (row, col),
// every declared arrow present.
std::string representation_to_json(const Representation& rep);

// Throws Error{ParseError} on malformed JSON or schema violations; structural
// issues (bad indices, duplicates, stored zeros) surface via require_valid.
Representation representation_from_json(const std::string& text);

Representation load_representation(const std::string& path);
void save_representation(const Representation& rep, const std::string& path);

// {"vertex_degrees": {"1.1": "0", ...}, "arrow_degrees": {"a": "1", ...}};
// degrees as decimal strings (they are arbitrary-precision integers).
std::string degree_assignment_to_json(const CoefficientQuiver& cq, const DegreeAssignment& deg);

// [{"e": [0, 0], "chi": "1"}, ...] in ascending lexicographic e order.
std::string chi_table_to_json(const ChiTable& table);

}  // namespace stringgrass

#ifndef UAW_JSON_IO_HPP
#define UAW_JSON_IO_HPP

#include <string>

#include "uaw/admissibility.hpp"

namespace uaw {

// Algebra files:
//   {"name": str, "signature": "bdl"|...|"kl", "size": int,
//    "ops": {"meet": [[int]], "join": [[int]], "neg": [int], "star": [int],
//            "bot": int, "top": int},
//    "elements": [str]?}          -- optional display labels
// Only the signature's operations may appear.  Malformed input is rejected
// with a field diagnostic (DataError).
FiniteAlgebra algebra_from_json_text(const std::string& text,
                                     const std::string& context = "algebra");
std::string algebra_to_json_text(const FiniteAlgebra& a);
FiniteAlgebra load_algebra(const std::string& path);
void save_algebra(const FiniteAlgebra& a, const std::string& path);

// Space files:
//   {"kind": "priestley"|"stone"|"demorgan"|"kleene", "size": int,
//    "order": [[i,j]...],                -- i <= j, reflexive pairs implied
//    "unary": {"d": [...]}, "rels": {"sim": [[i,j]...]}, "subsets": {"Y": [...]}}
StructuredSpace space_from_json_text(const std::string& text,
                                     const std::string& context = "space");
std::string space_to_json_text(const StructuredSpace& s);
StructuredSpace load_space(const std::string& path);
void save_space(const StructuredSpace& s, const std::string& path);

// Report JSON: {profile, bounds, members_checked, disagreements[], verdicts[]}.
std::string report_to_json_text(const LemmaSuiteReport& r);
std::string report_to_json_text(const CompletenessReport& r);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace uaw

#endif

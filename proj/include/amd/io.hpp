#pragma once

#include <iosfwd>
#include <string>

#include "amd/groebner.hpp"

namespace amd {

// Ideal file format:
//   ring <var> <var> ... mod <p> order <degrevlex | block:k>
//   one polynomial per line
// Blank lines and text after '#' are ignored.
GradedIdeal parse_ideal(const std::string& text);
GradedIdeal read_ideal_file(const std::string& path);
std::string format_ideal(const GradedIdeal& I);

// {"ring": {...}, "generators": [...]} with stable key order.
std::string ideal_to_json(const GradedIdeal& I);

}  // namespace amd

// Text input formats and JSON output.
//
// Lattice text: either three lines of three reals (basis rows) or a single
// line "a b c alpha beta gamma" with angles in degrees. '#' starts a comment.
// CSV batch: one lattice per row with 9 or 6 comma-separated reals; an
// optional non-numeric header row is skipped.

#ifndef ROOTINV_IO_HPP_
#define ROOTINV_IO_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "rootinv/invariant.hpp"
#include "rootinv/linalg.hpp"
#include "rootinv/superbase.hpp"

namespace rootinv {

// All parsers throw ParseError on malformed input.
Basis3 parse_lattice(std::string_view text);
Basis3 read_lattice_file(const std::string& path);
std::vector<Basis3> parse_csv_batch(std::string_view text);
std::string read_text_file(const std::string& path);

// "%.12g".
std::string format_number(double x);
// x rounded to 12 significant digits.
double round12(double x);

nlohmann::json to_json(const Vec3& v);
nlohmann::json to_json(const CoForm& cf);
nlohmann::json to_json(const VoForm& vf);
// {"vtype": "V1".."V5", "values": [...], "tol": tol}
nlohmann::json to_json(const RootInvariant& ri, double tol);

struct ParsedInvariant {
  RootInvariant invariant;
  double tol = kDefaultCompareTol;
};
// Checks the type tag and the value count; "tol" is optional.
ParsedInvariant parse_invariant_json(std::string_view text);

} // namespace rootinv
#endif

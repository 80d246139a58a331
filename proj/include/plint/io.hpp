#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "plint/constructions.hpp"
#include "plint/families.hpp"
#include "plint/heights.hpp"
#include "plint/orbits.hpp"
#include "plint/pencils.hpp"
#include "plint/search.hpp"

namespace plint::io {

using json = nlohmann::ordered_json;

// Malformed documents raise ParseError; semantic failures keep the kind of
// the underlying constructor (DegreeMismatch, InvalidInput, ...).

/// "num/den", or "n" for integers.
json to_json(const Rat& r);
/// Accepts a JSON integer or a string "n" / "num/den".
Rat rat_from_json(const json& j);

/// {"degree": d, "terms": [{"e": [i, j, k], "c": "num/den"}, ...]}.
json to_json(const Form& f);
/// Also accepts {"expr": "Y^2*Z - X^3"} or a bare expression string.
Form form_from_json(const json& j);

/// {"factors": [{"form": ..., "mult": m, "irreducible_hint": bool}, ...]}.
json to_json(const FactoredDivisor& d);
/// A bare form (string or object with "degree"/"expr") is read as a single
/// reduced factor.
FactoredDivisor divisor_from_json(const json& j);

/// Array of decimal strings.
json to_json(const ProjPoint& p);
ProjPoint point_from_json(const json& j);
/// "3,2,1" (also accepts ':' separators and surrounding brackets).
ProjPoint parse_point(const std::string& text);

/// {"F": ..., "G": ..., "special_members": [{"st": [s, t], "factors": ...}],
///  "base_witnesses": [[x, y, z], ...]}.
json to_json(const Pencil& p);
Pencil pencil_from_json(const json& j);

/// {"d": d, "components": [form, form, form]}.
json to_json(const Endo& e);
Endo endo_from_json(const json& j);

/// {"family": "TONO_BICUSP_1", parameter fields...}; "chain" is a list of
/// J vectors.
json to_json(const FamilySpec& s);
FamilySpec family_spec_from_json(const json& j);
json to_json(const FamilyCurve& c);

/// Exact fields; with `decimal` an additional "approx" member carries a
/// floating-point rendering of the logarithmic height.
json to_json(const HeightReport& r, bool decimal = false);
json to_json(const WeightReport& r);
json to_json(const ConstructedPoint& c);
json fibers_to_json(const std::map<FiberKey, long>& hits);
json s_unit_solutions_to_json(const std::vector<std::pair<Rat, Rat>>& sols, long exponent_bound);

/// "x,y,z" rows with a header line.
void write_points_csv(std::ostream& out, const std::vector<ProjPoint>& points);
/// Skips blank lines, '#' comments and a non-numeric header.
std::vector<ProjPoint> read_points_csv(std::istream& in);

/// index,x,y,z,removed_content,s_integral; s_integral is true, false,
/// ON_DIVISOR, or empty when not scanned.
void write_orbit_csv(std::ostream& out, const Orbit& orbit);

json read_json_file(const std::string& path);

}  // namespace plint::io

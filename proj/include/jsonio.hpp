#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "arrangement.hpp"
#include "cluster.hpp"
#include "cones.hpp"
#include "gp_paths.hpp"
#include "words.hpp"

/**
 * JSON and plain-text serialization.
 *
 * Every top-level document carries "schema": 1.  Output is deterministic:
 * object keys are sorted, integers are canonical, and list orders follow the
 * canonical orders of the underlying objects.
 */
namespace jsonio {

using json = nlohmann::json;

json word_json(const words::ReducedWord& word);
json crossing_json(const arrangement::Crossing& c);
json face_json(const arrangement::Face& f, const arrangement::Arrangement& arr);
json arrangement_json(const arrangement::Arrangement& arr);
json path_json(const gp::GpPath& p, const arrangement::Arrangement& arr);
json paths_json(const std::vector<gp::GpPath>& ps, const arrangement::Arrangement& arr);
json cone_json(const cones::HCone& cone);
json map_json(const cones::UnimodularMap& map);
json quiver_json(const arrangement::Quiver& q);

/** Bands first (by level), then pair faces; exponents permuted to match. */
json expr_json(const cluster::LaurentExpr& e);

/** One "lhs >= 0" line per row; pair coordinates print as x(a,b). */
std::string inequality_text(const cones::HCone& cone);

/** Parse "1,2,1" or "1 2 1"; rank is n_hint, or the maximal letter when 0. */
words::ReducedWord parse_word(const std::string& text, int n_hint);

/** Parse a comma/space separated integer vector. */
std::vector<long long> parse_vector(const std::string& text);

}  // namespace jsonio

#pragma once

#include <string>

#include <json.hpp>

#include "cubicstring/burgers.hpp"
#include "cubicstring/forward.hpp"
#include "cubicstring/heine.hpp"
#include "cubicstring/inverse.hpp"
#include "cubicstring/string_model.hpp"

namespace cubicstring {

using Json = nlohmann::ordered_json;

/// Rationals travel as strings "p/q"; plain JSON integers are accepted on input.
Json rational_to_json(const Rational &r);
Rational rational_from_json(const Json &j);

/// {"masses": [...], "gaps": [...], "anchor": "..."}. Throws Error(Parse).
Json string_to_json(const CubicString &s);
CubicString string_from_json(const Json &j);

/// {"lambdas", "residues_b", "total_mass"}; when some eigenvalue is only
/// enclosed, values are decimal midpoints and "precision_bits" is present.
Json spectral_to_json(const WeylData &w, const Rational &total_mass);
Json spectral_to_json(const SpectralData &sd);
/// Exact data only; throws Error(Parse) on decimal or approximate input.
SpectralData spectral_from_json(const Json &j);

Json audit_to_json(const RecoveryAudit &a);
Json report_to_json(const IdentityReport &r);

/// Header t, x_1..x_n, m_1..m_n, M, M_plus, M_1..M_n; 17 significant digits.
std::string trajectory_csv(const Trajectory &t);

/// Throws Error(Parse) when the file cannot be read or is not JSON.
Json read_json_file(const std::string &path);

} // namespace cubicstring

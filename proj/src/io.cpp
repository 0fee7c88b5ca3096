#include "cubicstring/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cubicstring/error.hpp"

namespace cubicstring {

namespace {

Json rational_array(const std::vector<Rational> &v) {
  Json a = Json::array();
  for (const auto &r : v)
    a.push_back(rational_to_json(r));
  return a;
}

std::vector<Rational> rational_vector(const Json &j, const char *key) {
  if (!j.contains(key) || !j.at(key).is_array())
    throw Error(ErrorKind::Parse, std::string("missing array \"") + key + "\"");
  std::vector<Rational> v;
  for (const auto &e : j.at(key))
    v.push_back(rational_from_json(e));
  return v;
}

const Json &field(const Json &j, const char *key) {
  if (!j.is_object() || !j.contains(key))
    throw Error(ErrorKind::Parse, std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

} // namespace

Json rational_to_json(const Rational &r) { return format_rational(r); }

Rational rational_from_json(const Json &j) {
  if (j.is_string())
    return parse_rational(j.get<std::string>());
  if (j.is_number_integer())
    return Rational(j.get<long long>());
  throw Error(ErrorKind::Parse, "expected a rational string, got " + j.dump());
}

Json string_to_json(const CubicString &s) {
  Json j;
  j["masses"] = rational_array(s.masses);
  j["gaps"] = rational_array(s.gaps);
  j["anchor"] = rational_to_json(s.anchor);
  return j;
}

CubicString string_from_json(const Json &j) {
  CubicString s;
  s.masses = rational_vector(j, "masses");
  s.gaps = rational_vector(j, "gaps");
  s.anchor = j.contains("anchor") ? rational_from_json(j.at("anchor"))
                                  : Rational(0);
  return s;
}

Json spectral_to_json(const WeylData &w, const Rational &total_mass) {
  Json j;
  if (w.all_exact()) {
    j["lambdas"] = rational_array(w.exact_lambdas());
    j["residues_b"] = rational_array(w.exact_b());
    j["total_mass"] = rational_to_json(total_mass);
    return j;
  }
  // about log10(2) decimal digits per bit of enclosure width
  const int digits = std::max(17, w.precision_bits * 30103 / 100000);
  Json lam = Json::array(), b = Json::array();
  for (const auto &iv : w.lambdas)
    lam.push_back(to_decimal(iv.mid(), digits));
  for (const auto &iv : w.b_res)
    b.push_back(to_decimal(iv.mid(), digits));
  j["lambdas"] = lam;
  j["residues_b"] = b;
  j["total_mass"] = rational_to_json(total_mass);
  j["precision_bits"] = w.precision_bits;
  return j;
}

Json spectral_to_json(const SpectralData &sd) {
  Json j;
  j["lambdas"] = rational_array(sd.lambdas);
  j["residues_b"] = rational_array(sd.b);
  j["total_mass"] = rational_to_json(sd.M);
  return j;
}

SpectralData spectral_from_json(const Json &j) {
  if (j.is_object() && j.contains("precision_bits"))
    throw Error(ErrorKind::Parse,
                "spectral data is approximate; exact rationals are required");
  SpectralData sd;
  sd.lambdas = rational_vector(j, "lambdas");
  sd.b = rational_vector(j, "residues_b");
  sd.M = rational_from_json(field(j, "total_mass"));
  return sd;
}

Json audit_to_json(const RecoveryAudit &a) {
  const auto &d = a.determinants;
  Json j;
  Json dets;
  dets["A"] = rational_array(d.A);
  dets["B"] = rational_array(d.B);
  dets["C"] = rational_array(d.C);
  dets["D"] = rational_array(d.D);
  dets["D_prime"] = rational_array(d.D_prime);
  dets["D_double_prime"] = rational_array(d.D_double_prime);
  j["determinants"] = dets;
  j["m_leading"] = rational_array(a.m_leading);
  j["m_cramer"] = rational_array(a.m_cramer);
  j["m_printed"] = rational_array(a.m_printed);
  j["l_leading"] = rational_array(a.l_leading);
  j["l_determinant"] = rational_array(a.l_determinant);
  j["l_agrees"] = a.l_agrees();
  j["m_cramer_agrees"] = a.m_cramer_agrees();
  j["m_printed_agrees"] = a.m_printed_agrees();
  return j;
}

Json report_to_json(const IdentityReport &r) {
  Json rows = Json::array();
  for (const auto &row : r.rows) {
    Json e;
    e["identity"] = row.identity;
    e["k"] = row.k;
    e["lhs"] = rational_to_json(row.lhs);
    e["rhs"] = rational_to_json(row.rhs);
    e["pass"] = row.pass;
    e["gating"] = row.gating;
    rows.push_back(e);
  }
  Json j;
  j["all_pass"] = r.all_pass();
  j["rows"] = rows;
  return j;
}

std::string trajectory_csv(const Trajectory &t) {
  std::ostringstream os;
  const std::size_t n =
      t.samples.empty() ? 0 : t.samples.front().state.positions.size();
  os << "t";
  for (std::size_t k = 1; k <= n; ++k)
    os << ",x_" << k;
  for (std::size_t k = 1; k <= n; ++k)
    os << ",m_" << k;
  os << ",M,M_plus";
  for (std::size_t k = 1; k <= n; ++k)
    os << ",M_" << k;
  os << '\n';
  for (const auto &s : t.samples) {
    os << fmt17(s.state.time);
    for (double x : s.state.positions)
      os << ',' << fmt17(x);
    for (double m : s.state.momenta)
      os << ',' << fmt17(m);
    os << ',' << fmt17(s.conserved.M) << ',' << fmt17(s.conserved.M_plus);
    for (double mk : s.conserved.M_higher)
      os << ',' << fmt17(mk);
    os << '\n';
  }
  return os.str();
}

Json read_json_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw Error(ErrorKind::Parse, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error &e) {
    throw Error(ErrorKind::Parse, path + ": " + e.what());
  }
}

} // namespace cubicstring

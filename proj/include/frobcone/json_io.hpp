#pragma once

// JSON input parsing and report serialization. Reports are deterministic
// byte-for-byte: object keys are sorted, exact rationals are rendered as
// canonical "num" / "num/den" strings, and nothing is ever emitted as a
// float.

#include <json.hpp>

#include <string>
#include <vector>

#include "frobcone/class_vector.hpp"
#include "frobcone/hk.hpp"
#include "frobcone/series.hpp"
#include "frobcone/toric.hpp"

namespace frobcone {

using Json = nlohmann::json;

inline Json rat_json(const Rat& r) { return rat_string(r); }

inline Json int_json(const Int& v) {
  // JSON numbers are only faithful up to 2^53; larger values go out as strings.
  static const Int kSafe = Int(1) << 53;
  if (v > -kSafe && v < kSafe) return static_cast<std::int64_t>(v);
  return v.str();
}

inline Json veci_json(const VecZ& v) {
  Json arr = Json::array();
  for (Index i = 0; i < v.size(); ++i) arr.push_back(int_json(v(i)));
  return arr;
}

inline Json series_json(const TruncSeries& s) {
  Json arr = Json::array();
  for (int k = 0; k < s.trunc(); ++k) arr.push_back(rat_json(s.coeff(k)));
  return arr;
}

namespace detail {

inline Int parse_int_field(const Json& j, const std::string& field) {
  if (!j.is_number_integer())
    fail_validation("ParseError", "field '" + field + "' must be an integer");
  return Int(j.get<std::int64_t>());
}

}  // namespace detail

inline ToricRing parse_ring(const Json& j) {
  if (!j.is_object()) fail_validation("ParseError", "ring spec must be a JSON object");
  ToricRing ring;
  ring.name = j.contains("name") && j.at("name").is_string() ? j.at("name").get<std::string>() : "";
  if (!j.contains("p")) fail_validation("ParseError", "ring spec missing field 'p'");
  if (!j.contains("d")) fail_validation("ParseError", "ring spec missing field 'd'");
  if (!j.contains("facets")) fail_validation("ParseError", "ring spec missing field 'facets'");
  ring.p = detail::parse_int_field(j.at("p"), "p");
  Int d = detail::parse_int_field(j.at("d"), "d");
  if (d < 1 || d > 64) fail_validation("ParseError", "field 'd' out of range");
  ring.d = static_cast<int>(d);
  const Json& rows = j.at("facets");
  if (!rows.is_array() || rows.empty())
    fail_validation("ParseError", "field 'facets' must be a nonempty array of rows");
  ring.facets = MatZ(static_cast<Index>(rows.size()), ring.d);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const Json& row = rows[i];
    if (!row.is_array() || static_cast<int>(row.size()) != ring.d)
      fail_validation("ParseError", "facet row " + std::to_string(i) + " must have d entries");
    for (int k = 0; k < ring.d; ++k)
      ring.facets(static_cast<Index>(i), k) = detail::parse_int_field(row[static_cast<std::size_t>(k)], "facets");
  }
  return ring;
}

inline std::vector<VecZ> parse_vector_list(const Json& j, int d, const std::string& field) {
  if (!j.is_array() || j.empty())
    fail_validation("ParseError", "field '" + field + "' must be a nonempty array of vectors");
  std::vector<VecZ> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const Json& row = j[i];
    if (!row.is_array() || static_cast<int>(row.size()) != d)
      fail_validation("ParseError", field + " entry " + std::to_string(i) + " must have length d");
    VecZ v(d);
    for (int k = 0; k < d; ++k) v(k) = detail::parse_int_field(row[static_cast<std::size_t>(k)], field);
    out.push_back(std::move(v));
  }
  return out;
}

inline MonomialIdeal parse_ideal(const Json& j, int d) {
  if (!j.is_object() || !j.contains("generators"))
    fail_validation("ParseError", "ideal spec must be an object with a 'generators' field");
  return MonomialIdeal{parse_vector_list(j.at("generators"), d, "generators")};
}

inline Json ring_json(const ToricRing& ring) {
  Json rows = Json::array();
  for (Index i = 0; i < ring.facets.rows(); ++i)
    rows.push_back(veci_json(VecZ(ring.facets.row(i).transpose())));
  return Json{{"name", ring.name}, {"p", int_json(ring.p)}, {"d", ring.d}, {"facets", rows}};
}

inline Json class_rat_map_json(const CheckedRing& ring, const std::map<int, Rat>& values) {
  Json obj = Json::object();
  for (const auto& [idx, value] : values)
    obj[ring.class_table().classes[static_cast<std::size_t>(idx)].name] = rat_json(value);
  return obj;
}

inline Json class_int_map_json(const CheckedRing& ring, const std::map<int, Int>& values) {
  Json obj = Json::object();
  for (const auto& [idx, value] : values)
    obj[ring.class_table().classes[static_cast<std::size_t>(idx)].name] = int_json(value);
  return obj;
}

inline Json class_vector_json(const ClassVector& v) {
  Json obj = Json::object();
  for (const auto& [form, value] : v.support) obj[detail::format_class_name(form)] = rat_json(value);
  return obj;
}

inline Json certificate_json(const CMConeModel& model, const MembershipCertificate& cert) {
  Json obj = Json::object();
  switch (cert.verdict) {
    case MembershipCertificate::Verdict::Inside: obj["verdict"] = "inside"; break;
    case MembershipCertificate::Verdict::Interior: obj["verdict"] = "interior"; break;
    case MembershipCertificate::Verdict::Outside: obj["verdict"] = "outside"; break;
  }
  if (cert.verdict == MembershipCertificate::Verdict::Outside) {
    Json sep = Json::array();
    for (Index i = 0; i < cert.separating.size(); ++i) sep.push_back(rat_json(cert.separating(i)));
    obj["separating"] = sep;
  } else {
    Json coeffs = Json::object();
    for (Index i = 0; i < cert.coefficients.size(); ++i)
      coeffs[model.class_order[static_cast<std::size_t>(i)].name] = rat_json(cert.coefficients(i));
    obj["coefficients"] = coeffs;
  }
  return obj;
}

inline Json fit_json(const HKFit& fit) {
  Json coeffs = Json::array(), eps = Json::array(), beta = Json::array();
  for (const Rat& c : fit.coefficients) coeffs.push_back(rat_json(c));
  for (int e : fit.eps) eps.push_back(e);
  for (const Rat& b : fit.beta) beta.push_back(rat_json(b));
  Json residuals = Json::object();
  for (const auto& [e, r] : fit.residuals) residuals[std::to_string(e)] = rat_json(r);
  return Json{{"d", fit.d},          {"coefficients", coeffs}, {"eps", eps},
              {"alpha", rat_json(fit.alpha)}, {"beta", beta},  {"residuals", residuals},
              {"exact_fit", fit.exact_fit}};
}

}  // namespace frobcone

#include "chromsym/serialize.hpp"

#include <limits>

#include "chromsym/error.hpp"

namespace chromsym {

Json to_json(const BigInt& value) {
  if (value.fits_slong_p()) return static_cast<std::int64_t>(value.get_si());
  return value.get_str();
}

BigInt bigint_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) {
    BigInt v;
    if (v.set_str(j.get<std::string>(), 10) != 0) throw Error(ErrorCode::Parse, "invalid integer string");
    return v;
  }
  throw Error(ErrorCode::Parse, "expected an integer, got " + j.dump());
}

Json to_json(const ReverseHessenberg& r) {
  Json out = Json::array();
  for (int v : r.values()) out.push_back(v);
  return out;
}

ReverseHessenberg hessenberg_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorCode::Parse, "expected an array of integers");
  std::vector<int> values;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw Error(ErrorCode::Parse, "expected an integer, got " + v.dump());
    values.push_back(v.get<int>());
  }
  return ReverseHessenberg::validate(values);
}

Json to_json(const QPoly& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(to_json(c));
  Json out;
  out["offset"] = p.offset();
  out["coeffs"] = std::move(coeffs);
  return out;
}

QPoly qpoly_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("offset") || !j.contains("coeffs") || !j["coeffs"].is_array()) {
    throw Error(ErrorCode::Parse, "expected {offset, coeffs}");
  }
  std::vector<BigInt> coeffs;
  for (const auto& c : j["coeffs"]) coeffs.push_back(bigint_from_json(c));
  QPoly p = QPoly::from_coeffs(j["offset"].get<int>(), coeffs);
  if (p.coeffs() != coeffs) throw Error(ErrorCode::Parse, "polynomial is not in canonical form");
  return p;
}

Json to_json(const Partition& p) {
  Json out = Json::array();
  for (int part : p.parts()) out.push_back(part);
  return out;
}

Json to_json(const KostkaTable& table) {
  Json index = Json::array();
  for (const auto& p : table.index()) index.push_back(to_json(p));
  Json matrix = Json::array();
  for (std::size_t a = 0; a < table.index().size(); ++a) {
    Json row = Json::array();
    for (std::size_t b = 0; b < table.index().size(); ++b) row.push_back(table.entry(a, b));
    matrix.push_back(std::move(row));
  }
  Json out;
  out["index"] = std::move(index);
  out["matrix"] = std::move(matrix);
  return out;
}

Json to_json(const VerificationReport& report) {
  Json per_lambda = Json::array();
  for (const auto& c : report.per_lambda) {
    Json entry;
    entry["partition"] = to_json(c.lambda);
    entry["nonnegative"] = c.nonnegative;
    entry["palindromic"] = c.palindromic;
    entry["supported"] = c.supported;
    entry["support"] = c.low ? Json::array({*c.low, *c.high}) : Json(nullptr);
    per_lambda.push_back(std::move(entry));
  }
  Json out;
  out["pass"] = report.pass;
  out["center2"] = report.center2;
  out["reconstruction"] = report.reconstruction;
  out["per_lambda"] = std::move(per_lambda);
  return out;
}

Json to_json(const GeometryReport& report) {
  Json out;
  out["d_r"] = report.dimension;
  out["fibre_dims"] = report.fibre_dims;
  out["poincare_product"] = to_json(report.poincare_product);
  out["poincare_bb"] = to_json(report.poincare_bb);
  out["equal"] = report.poincare_equal();
  out["identities_pass"] = report.identities_pass;
  return out;
}

Json csp_document(const SchurExpansion& expansion, const VerificationReport& report) {
  const CSPoly& csp = expansion.source;
  Json monomial = Json::array();
  for (const auto& [mu, poly] : csp.monomial) {
    Json entry;
    entry["weight"] = mu.padded(csp.m);
    entry["poly"] = to_json(poly);
    monomial.push_back(std::move(entry));
  }
  Json schur = Json::array();
  for (const auto& [lambda, poly] : expansion.coefficients) {
    Json entry;
    entry["partition"] = to_json(lambda);
    entry["poly"] = to_json(poly);
    schur.push_back(std::move(entry));
  }
  Json out;
  out["n"] = csp.n();
  out["m"] = csp.m;
  out["r"] = to_json(csp.r);
  out["E_r"] = csp.edge_count;
  out["d_r"] = is_feasible(csp.r, csp.m) ? Json((csp.m - 1) * csp.n() - csp.edge_count) : Json(nullptr);
  out["monomial"] = std::move(monomial);
  out["schur"] = std::move(schur);
  out["verification"] = to_json(report);
  return out;
}

}  // namespace chromsym

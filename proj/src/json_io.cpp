#include "liecoh/json_io.hpp"

#include <stdexcept>

namespace liecoh {

Json algebra_to_json(const LieAlgebra& L) {
  Json j;
  j["dim"] = L.dim();
  j["labels"] = L.labels();
  Json brackets = Json::array();
  for (const auto& [ij, terms] : L.brackets()) {
    Json entry;
    entry["i"] = ij.first;
    entry["j"] = ij.second;
    Json ts = Json::array();
    for (const auto& [k, c] : terms) {
      Json t;
      t["k"] = k;
      t["num"] = c.num_string();
      t["den"] = c.den_string();
      ts.push_back(std::move(t));
    }
    entry["terms"] = std::move(ts);
    brackets.push_back(std::move(entry));
  }
  j["brackets"] = std::move(brackets);
  return j;
}

LieAlgebra algebra_from_json(const Json& j, bool defer_validation) {
  if (!j.contains("dim") || !j["dim"].is_number_integer())
    throw std::invalid_argument("algebra json: missing integer \"dim\"");
  const int dim = j["dim"].get<int>();
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j["labels"].get<std::vector<std::string>>();
  LieAlgebra::BracketTable table;
  if (j.contains("brackets")) {
    for (const auto& entry : j["brackets"]) {
      const int i = entry.at("i").get<int>();
      const int jj = entry.at("j").get<int>();
      SparseVec terms;
      for (const auto& t : entry.at("terms")) {
        terms.emplace_back(t.at("k").get<int>(),
                           Rational::from_strings(t.at("num").get<std::string>(),
                                                  t.at("den").get<std::string>()));
      }
      if (table.count({i, jj})) throw std::invalid_argument("algebra json: duplicate bracket key");
      table[{i, jj}] = std::move(terms);
    }
  }
  return LieAlgebra::make(dim, std::move(labels), std::move(table), defer_validation);
}

Json basis_to_json(const SubspaceBasis& b) {
  Json j;
  j["ambient_dim"] = b.ambient_dim();
  j["dim"] = b.dim();
  Json vectors = Json::array();
  for (const auto& row : b.rows()) {
    Json v = Json::array();
    for (const auto& [c, val] : row) {
      Json e;
      e["index"] = c;
      e["num"] = val.num_string();
      e["den"] = val.den_string();
      v.push_back(std::move(e));
    }
    vectors.push_back(std::move(v));
  }
  j["vectors"] = std::move(vectors);
  return j;
}

Json cohomology_to_json(const std::string& algebra_label, const std::string& coefficients,
                        const CohomologyReport& rep) {
  Json j;
  j["algebra"] = algebra_label;
  j["coefficients"] = coefficients;
  Json degrees;
  for (const auto& [n, r] : rep.degrees) {
    Json d;
    d["dim_C"] = r.dim_C;
    d["dim_Z"] = r.dim_Z;
    d["dim_B"] = r.dim_B;
    d["dim_H"] = r.dim_H;
    if (r.cocycle_basis) d["cocycle_basis"] = basis_to_json(*r.cocycle_basis);
    if (r.coboundary_basis) d["coboundary_basis"] = basis_to_json(*r.coboundary_basis);
    degrees[std::to_string(n)] = std::move(d);
  }
  j["degrees"] = std::move(degrees);
  return j;
}

Json invariant_to_json(const std::string& algebra_label, const std::string& coefficients,
                       const InvariantReport& rep) {
  Json j;
  j["algebra"] = algebra_label;
  j["coefficients"] = coefficients;
  j["degree"] = rep.degree;
  j["dim_Z_inv"] = rep.dim_Z_inv;
  j["dim_B_inv"] = rep.dim_B_inv;
  j["dim_H_inv"] = rep.dim_H_inv;
  if (rep.invariant_cocycle_basis)
    j["invariant_cocycle_basis"] = basis_to_json(*rep.invariant_cocycle_basis);
  return j;
}

Json hs_to_json(const std::string& algebra_label, const std::string& coefficients,
                const HSReport& rep) {
  Json j;
  j["algebra"] = algebra_label;
  j["coefficients"] = coefficients;
  j["degree"] = rep.degree;
  j["predicted_dim"] = rep.predicted_dim;
  j["direct_dim"] = rep.direct_dim;
  j["match"] = rep.match;
  Json terms = Json::array();
  for (const auto& t : rep.terms) {
    Json e;
    e["s_degree"] = t.s_degree;
    e["inv_degree"] = t.inv_degree;
    e["dim_s"] = t.dim_s;
    e["dim_inv"] = t.dim_inv;
    terms.push_back(std::move(e));
  }
  j["terms"] = std::move(terms);
  return j;
}

}  // namespace liecoh

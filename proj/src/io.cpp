#include "gracekit/io.hpp"

#include "gracekit/labeling.hpp"

namespace gracekit {

json labeling_report_json(const Endofunction& f) {
  json j;
  j["f"] = to_text(f);
  auto sigma = find_graceful_labeling(f);
  j["graceful"] = sigma.has_value();
  j["sigma"] = sigma ? to_text(*sigma) : "";
  j["grl_size"] = grl(f).size();
  j["min_labels"] = min_distinct_labels(f);
  j["max_labels"] = max_distinct_labels(f);
  return j;
}

json expansion_json(const ExpansionBasis& basis) {
  return json{{"gamma", to_text(basis.gamma)},
              {"sign", basis.sign},
              {"sigma", to_text(basis.sigma)},
              {"t", basis.t}};
}

ExpansionBasis expansion_from_json(const json& j) {
  ExpansionBasis basis;
  basis.gamma = parse_endofunction(j.at("gamma").get<std::string>());
  basis.sign = j.at("sign").get<std::vector<int>>();
  basis.sigma = parse_endofunction(j.at("sigma").get<std::string>());
  basis.t = j.at("t").get<int>();
  return basis;
}

json certificate_json(const Endofunction& f, const CertificateReport& report) {
  json j;
  j["f"] = to_text(f);
  j["graceful"] = report.graceful;
  j["witness"] = report.witness ? to_text(*report.witness) : "";
  j["points_examined"] = report.points_examined;
  return j;
}

json factored_polynomial_json(const FactoredPolynomial& poly) {
  json j;
  j["scalar"] = poly.scalar().get_str();
  j["zero_factors"] = poly.zero_factor_count();
  j["factors"] = json::array();
  for (const auto& [form, exp] : poly.factors()) {
    json entry;
    entry["coeffs"] = json::array();
    for (const auto& c : form.coeffs) entry["coeffs"].push_back(c.get_str());
    entry["constant"] = form.constant.get_str();
    entry["exponent"] = exp;
    j["factors"].push_back(std::move(entry));
  }
  return j;
}

json sweep_summary_json(const SweepReport& report) {
  json j;
  j["n"] = report.n;
  j["universe"] = report.universe;
  j["instances_checked"] = report.instances_checked;
  j["vacuous"] = report.vacuous;
  j["pass"] = report.passed();
  // wall time stays off the record: reports must be byte-identical across
  // runs and shard orders for a fixed configuration
  j["violations"] = json::array();
  for (const auto& v : report.violations)
    j["violations"].push_back(json{{"f", to_text(v.f)}, {"predicate", v.predicate}, {"detail", v.detail}});
  return j;
}

std::string sweep_csv(const SweepReport& report) {
  std::string out = "n,universe,f,predicate,pass,witness\n";
  if (report.passed()) {
    out += std::to_string(report.n) + "," + report.universe + ",*,all," +
           "true," + "\n";
    return out;
  }
  for (const auto& v : report.violations)
    out += std::to_string(report.n) + "," + report.universe + "," + to_text(v.f) + "," +
           v.predicate + ",false," + v.detail + "\n";
  return out;
}

std::string decomposition_edge_list(const DecompositionReport& report) {
  std::string out;
  for (const auto& shift : report.shifts) {
    bool first = true;
    for (auto [u, v] : shift) {
      if (!first) out += ' ';
      out += std::to_string(u) + "-" + std::to_string(v);
      first = false;
    }
    out += '\n';
  }
  return out;
}

}  // namespace gracekit

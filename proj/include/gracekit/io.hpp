#ifndef GRACEKIT_IO_HPP
#define GRACEKIT_IO_HPP

#include <string>

#include "json.hpp"

#include "gracekit/algebra.hpp"
#include "gracekit/decomposition.hpp"
#include "gracekit/expansion.hpp"
#include "gracekit/theorems.hpp"

namespace gracekit {

using nlohmann::json;

// {"f": "...", "graceful": bool, "sigma": "...", "grl_size": k,
//  "min_labels": a, "max_labels": b}
json labeling_report_json(const Endofunction& f);

// {"gamma": "...", "sign": [...], "sigma": "...", "t": 0}
json expansion_json(const ExpansionBasis& basis);
ExpansionBasis expansion_from_json(const json& j);

json certificate_json(const Endofunction& f, const CertificateReport& report);

// (coefficient vector, exponent) pairs with an exact rational scalar
json factored_polynomial_json(const FactoredPolynomial& poly);

json sweep_summary_json(const SweepReport& report);
// rows: n, universe, f, predicate, pass, witness
std::string sweep_csv(const SweepReport& report);

// one line per shift, space-separated "u-v" pairs
std::string decomposition_edge_list(const DecompositionReport& report);

}  // namespace gracekit

#endif

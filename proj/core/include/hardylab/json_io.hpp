#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "hardylab/counting.hpp"
#include "hardylab/criteria.hpp"
#include "hardylab/operator_lab.hpp"
#include "hardylab/polytorus.hpp"
#include "hardylab/symbol.hpp"

namespace hardylab {

using json = nlohmann::json;

/// Complex numbers are [re, im] pairs; a bare number is read as real.
json complex_to_json(cplx z);
cplx complex_from_json(const json& j);

/// {"N": n, "re": [...], "im": [...]}.
json to_json(const DirichletSeries& f);
DirichletSeries series_from_json(const json& j);

/// Symbol spec:
///   {"descriptor": {"kind": "affine", "c": [1, 0], "r": [0.25, 0]}}
///   {"descriptor": {"kind": "constant", "c": 1}}
///   {"descriptor": {"kind": "disk_lift", "poly": [[1, 0], [0.25, 0]]}}
///   {"descriptor": {"kind": "sector_lift", "alpha": 2, "order": 32}}
///   {"c0": 1, "descriptor": {"kind": "generic"}, "coeffs": {"1": [0.5, 0], "2": [0.1, 0]}}
/// "coeffs" may also be a series object. Throws SpecError on malformed input and
/// ClassViolation when validation fails.
Symbol symbol_from_json(const json& j);
Symbol symbol_from_file(const std::string& path);
json to_json(const Symbol& s);

json to_json(const ValidationReport& r);
json to_json(const SchattenReport& r);
json to_json(const CriterionReport& r);
json to_json(const McEstimate& e);
json to_json(const CountingSample& s);
json to_json(const IdentityCheck& c);
json to_json(const CompactnessReport& r);

}  // namespace hardylab

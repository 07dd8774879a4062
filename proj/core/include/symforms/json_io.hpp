#ifndef SYMFORMS_JSON_IO_HPP
#define SYMFORMS_JSON_IO_HPP

#include <nlohmann/json.hpp>

#include "symforms/invariants.hpp"
#include "symforms/series.hpp"

namespace symforms {

/// Stable schema:
///   {characteristic, n, q, hodge: [h00, h10, h20], dimension, method, basis?}
/// Basis vectors are exact scalars rendered as strings ("1", "-1", "3/2").
nlohmann::json report_to_json(const InvariantReport& report);
InvariantReport report_from_json(const nlohmann::json& j);

nlohmann::json discrepancies_to_json(const std::vector<Discrepancy>& ds);

}  // namespace symforms

#endif

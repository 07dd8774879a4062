#include "symforms/json_io.hpp"

namespace symforms {

using nlohmann::json;

json report_to_json(const InvariantReport& report) {
  json j;
  j["characteristic"] = report.data.field.characteristic();
  j["n"] = report.n;
  j["q"] = report.q;
  j["hodge"] = {report.data.h00, report.data.h10, report.data.h20};
  j["dimension"] = report.dimension;
  j["method"] = method_name(report.method);
  if (report.basis) {
    json basis = json::array();
    for (const auto& vec : *report.basis) {
      json row = json::array();
      for (const auto& s : vec) row.push_back(s.to_string());
      basis.push_back(std::move(row));
    }
    j["basis"] = std::move(basis);
  }
  return j;
}

InvariantReport report_from_json(const json& j) {
  InvariantReport report;
  report.data.field = FieldSpec(j.at("characteristic").get<std::uint64_t>());
  const auto& hodge = j.at("hodge");
  report.data.h00 = hodge.at(0).get<unsigned>();
  report.data.h10 = hodge.at(1).get<unsigned>();
  report.data.h20 = hodge.at(2).get<unsigned>();
  report.n = j.at("n").get<unsigned>();
  report.q = j.at("q").get<unsigned>();
  report.dimension = j.at("dimension").get<std::size_t>();
  auto method = method_from_name(j.at("method").get<std::string>());
  if (!method) throw std::invalid_argument("unknown method in report JSON");
  report.method = *method;
  if (j.contains("basis")) {
    std::vector<std::vector<FieldScalar>> basis;
    for (const auto& row : j.at("basis")) {
      std::vector<FieldScalar> vec;
      for (const auto& s : row) {
        vec.emplace_back(report.data.field,
                         BigRational(s.get<std::string>()));
      }
      basis.push_back(std::move(vec));
    }
    report.basis = std::move(basis);
  }
  return report;
}

json discrepancies_to_json(const std::vector<Discrepancy>& ds) {
  json arr = json::array();
  for (const auto& d : ds) {
    arr.push_back({{"n", d.n},
                   {"q", d.q},
                   {"char0", d.char0_value},
                   {"engine", d.engine_value}});
  }
  return arr;
}

}  // namespace symforms

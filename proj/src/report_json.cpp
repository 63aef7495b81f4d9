#include "scc/report_json.hpp"

namespace scc {

nlohmann::json complex_to_json(Complex z) {
  return {{"re", z.real()}, {"im", z.imag()}};
}

Complex complex_from_json(const nlohmann::json& j) {
  return {j.at("re").get<double>(), j.at("im").get<double>()};
}

void to_json(nlohmann::json& j, const VerificationReport& report) {
  j = nlohmann::json{{"criterion_value", report.criterion_value},
                     {"criterion_budget", report.criterion_budget},
                     {"margin", report.margin},
                     {"min_re_phi", report.min_re_phi},
                     {"argmin_z", complex_to_json(report.argmin_z)},
                     {"passed_criterion", report.passed_criterion},
                     {"passed_numeric", report.passed_numeric}};
}

void from_json(const nlohmann::json& j, VerificationReport& report) {
  j.at("criterion_value").get_to(report.criterion_value);
  j.at("criterion_budget").get_to(report.criterion_budget);
  j.at("margin").get_to(report.margin);
  j.at("min_re_phi").get_to(report.min_re_phi);
  report.argmin_z = complex_from_json(j.at("argmin_z"));
  j.at("passed_criterion").get_to(report.passed_criterion);
  j.at("passed_numeric").get_to(report.passed_numeric);
}

void to_json(nlohmann::json& j, const CriterionResult& result) {
  j = nlohmann::json{{"value", result.value},
                     {"budget", result.budget},
                     {"satisfied", result.satisfied}};
  if (result.per_term) {
    nlohmann::json terms = nlohmann::json::array();
    for (const TermContribution& term : *result.per_term) {
      terms.push_back({{"n", term.n},
                       {"weight", term.weight},
                       {"contribution", term.contribution}});
    }
    j["per_term"] = std::move(terms);
  }
}

void from_json(const nlohmann::json& j, CriterionResult& result) {
  j.at("value").get_to(result.value);
  j.at("budget").get_to(result.budget);
  j.at("satisfied").get_to(result.satisfied);
  result.per_term.reset();
  if (j.contains("per_term")) {
    result.per_term.emplace();
    for (const auto& term : j.at("per_term")) {
      result.per_term->push_back({term.at("n").get<int>(),
                                  term.at("weight").get<double>(),
                                  term.at("contribution").get<double>()});
    }
  }
}

}  // namespace scc

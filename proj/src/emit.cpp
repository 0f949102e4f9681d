#include "qess/emit.hpp"

#include <charconv>
#include <ostream>

namespace qess {

std::string format_double(double v) {
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string format_bool(bool v) { return v ? "true" : "false"; }

nlohmann::json report_json(const ClassificationReport& report) {
  nlohmann::json j;
  j["is_ne"] = report.is_ne;
  j["is_strict_ne"] = report.is_strict_ne;
  j["is_ess"] = report.is_ess;
  j["min_ne_gap"] = report.min_ne_gap;
  j["strict_margin"] = report.strict_margin;
  if (report.ess_second_condition_margin) {
    j["ess_second_condition_margin"] = *report.ess_second_condition_margin;
  }
  if (const auto* q = std::get_if<QuantumStrategy>(&report.witness)) {
    j["witness"] = {{"theta", q->theta()}, {"phi", q->phi()}};
  } else {
    j["witness"] = {{"p", std::get<MixedStrategy>(report.witness).p()}};
  }
  j["probes_evaluated"] = report.probes_evaluated;
  j["alt_best_responses"] = report.alt_best_responses;
  return j;
}

void write_sweep_csv(
    std::ostream& os,
    std::span<const std::pair<EntanglementLevel, ClassificationReport>> rows) {
  os << "gamma,min_ne_gap,strict_margin,is_ne,is_strict,is_ess,"
        "witness_theta,witness_phi\n";
  for (const auto& [gamma, report] : rows) {
    const auto& witness = std::get<QuantumStrategy>(report.witness);
    os << format_double(gamma.gamma()) << ','
       << format_double(report.min_ne_gap) << ','
       << format_double(report.strict_margin) << ','
       << format_bool(report.is_ne) << ',' << format_bool(report.is_strict_ne)
       << ',' << format_bool(report.is_ess) << ','
       << format_double(witness.theta()) << ','
       << format_double(witness.phi()) << '\n';
  }
}

void write_invasion_csv(std::ostream& os, const InvasionTrace& trace) {
  os << "step,time,epsilon\n";
  for (std::size_t k = 0; k < trace.epsilon_series.size(); ++k) {
    os << k << ',' << format_double(static_cast<double>(k) * trace.dt) << ','
       << format_double(trace.epsilon_series[k]) << '\n';
  }
  os << "VERDICT=" << to_string(trace.verdict) << '\n';
}

}  // namespace qess

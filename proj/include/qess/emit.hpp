#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <utility>

#include <nlohmann/json.hpp>

#include "qess/dynamics.hpp"
#include "qess/types.hpp"

namespace qess {

// Shortest decimal representation that parses back to the identical double.
std::string format_double(double v);

std::string format_bool(bool v);

nlohmann::json report_json(const ClassificationReport& report);

// Header: gamma,min_ne_gap,strict_margin,is_ne,is_strict,is_ess,
// witness_theta,witness_phi. One row per gamma, LF line endings.
void write_sweep_csv(
    std::ostream& os,
    std::span<const std::pair<EntanglementLevel, ClassificationReport>> rows);

// Columns step,time,epsilon followed by a final VERDICT=<...> line.
void write_invasion_csv(std::ostream& os, const InvasionTrace& trace);

}  // namespace qess

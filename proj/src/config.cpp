#include "qess/config.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "qess/errors.hpp"
#include "qess/types.hpp"

namespace qess {

double parse_angle(const std::string& token) {
  if (token == "pi") return pi;
  if (token == "pi/2") return half_pi;
  if (token == "pi/4") return quarter_pi;
  double value = 0.0;
  const char* begin = token.data();
  const char* end = begin + token.size();
  const auto res = std::from_chars(begin, end, value);
  if (res.ec != std::errc{} || res.ptr != end) {
    throw ParameterError("cannot parse angle '" + token +
                         "' (expected radians or pi, pi/2, pi/4)");
  }
  return value;
}

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream is(text);
  while (std::getline(is, item, sep)) out.push_back(item);
  if (!text.empty() && text.back() == sep) out.push_back("");
  return out;
}

double parse_real(const std::string& token, const std::string& field) {
  double value = 0.0;
  const auto res =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (res.ec != std::errc{} || res.ptr != token.data() + token.size()) {
    throw ParameterError("field '" + field + "': cannot parse real '" + token +
                         "'");
  }
  return value;
}

std::size_t parse_count(const std::string& token, const std::string& field) {
  std::size_t value = 0;
  const auto res =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (res.ec != std::errc{} || res.ptr != token.data() + token.size()) {
    throw ParameterError("field '" + field + "': cannot parse count '" +
                         token + "'");
  }
  return value;
}

double parse_angle_field(const std::string& token, const std::string& field) {
  try {
    return parse_angle(token);
  } catch (const ParameterError&) {
    throw ParameterError("field '" + field + "': cannot parse angle '" +
                         token + "'");
  }
}

std::array<double, 4> parse_game(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 4) {
    throw ParameterError("field 'game': expected r,s,t,u");
  }
  return {parse_real(parts[0], "game"), parse_real(parts[1], "game"),
          parse_real(parts[2], "game"), parse_real(parts[3], "game")};
}

std::array<double, 2> parse_strategy(const std::string& text,
                                     const std::string& field) {
  const auto parts = split(text, ',');
  if (parts.size() != 2) {
    throw ParameterError("field '" + field + "': expected theta,phi");
  }
  return {parse_angle_field(parts[0], field),
          parse_angle_field(parts[1], field)};
}

SweepSpec parse_sweep(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 3) {
    throw ParameterError("field 'gamma_sweep': expected start,end,count");
  }
  return {parse_angle_field(parts[0], "gamma_sweep"),
          parse_angle_field(parts[1], "gamma_sweep"),
          parse_count(parts[2], "gamma_sweep")};
}

std::vector<std::string> parse_formats(const std::string& text) {
  const auto parts = split(text, ',');
  for (const auto& p : parts) {
    if (p != "csv" && p != "json" && p != "svg") {
      throw ParameterError("field 'format': unknown format '" + p +
                           "' (expected csv, json, svg)");
    }
  }
  return parts;
}

std::vector<double> parse_mu(const std::string& text) {
  std::vector<double> out;
  for (const auto& p : split(text, ',')) out.push_back(parse_real(p, "mu"));
  return out;
}

// JSON values may be given either natively (numbers, arrays) or as the exact
// string a flag would take.
std::string json_as_flag_string(const nlohmann::json& v,
                                const std::string& field) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number()) {
    std::ostringstream os;
    os.precision(17);
    os << v.get<double>();
    return os.str();
  }
  if (v.is_array()) {
    std::ostringstream os;
    os.precision(17);
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) os << ',';
      if (v[i].is_string()) {
        os << v[i].get<std::string>();
      } else if (v[i].is_number()) {
        os << v[i].get<double>();
      } else {
        throw ParameterError("field '" + field + "': unsupported JSON value");
      }
    }
    return os.str();
  }
  throw ParameterError("field '" + field + "': unsupported JSON value");
}

void apply_config_file(RunConfig& config, const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParameterError("field 'config': cannot open '" + path + "'");
  }
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw ParameterError("field 'config': invalid JSON in '" + path +
                         "': " + e.what());
  }
  if (!doc.is_object()) {
    throw ParameterError("field 'config': top-level JSON object expected");
  }

  for (const auto& [key, value] : doc.items()) {
    if (key == "game") {
      config.game = parse_game(json_as_flag_string(value, key));
    } else if (key == "gamma") {
      config.gamma = parse_angle_field(json_as_flag_string(value, key), key);
    } else if (key == "gamma_sweep") {
      config.gamma_sweep = parse_sweep(json_as_flag_string(value, key));
    } else if (key == "strategy") {
      config.strategy = {parse_strategy(json_as_flag_string(value, key), key)};
    } else if (key == "classical") {
      config.classical = parse_real(json_as_flag_string(value, key), key);
    } else if (key == "incumbent") {
      config.incumbent = parse_strategy(json_as_flag_string(value, key), key);
    } else if (key == "mutant") {
      config.mutant = parse_strategy(json_as_flag_string(value, key), key);
    } else if (key == "epsilon0") {
      config.epsilon0 = parse_real(json_as_flag_string(value, key), key);
    } else if (key == "dt") {
      config.dt = parse_real(json_as_flag_string(value, key), key);
    } else if (key == "steps") {
      config.steps = parse_count(json_as_flag_string(value, key), key);
    } else if (key == "gap_tol") {
      config.gap_tol = parse_real(json_as_flag_string(value, key), key);
    } else if (key == "exclusion_radius") {
      config.exclusion_radius =
          parse_real(json_as_flag_string(value, key), key);
    } else if (key == "grid_points") {
      config.grid_points = parse_count(json_as_flag_string(value, key), key);
    } else if (key == "theta_points") {
      config.theta_points = parse_count(json_as_flag_string(value, key), key);
    } else if (key == "phi_points") {
      config.phi_points = parse_count(json_as_flag_string(value, key), key);
    } else if (key == "refinement_levels") {
      config.refinement_levels =
          parse_count(json_as_flag_string(value, key), key);
    } else if (key == "zoom_factor") {
      config.zoom_factor = parse_real(json_as_flag_string(value, key), key);
    } else if (key == "out") {
      config.out = json_as_flag_string(value, key);
    } else if (key == "format") {
      config.format = parse_formats(json_as_flag_string(value, key));
    } else if (key == "mu") {
      config.mu = parse_mu(json_as_flag_string(value, key));
    } else {
      throw ParameterError("field 'config': unknown key '" + key + "'");
    }
  }
}

}  // namespace

RunConfig resolve_config(const CliOverrides& flags,
                         const std::optional<std::string>& config_path) {
  RunConfig config;
  if (config_path) apply_config_file(config, *config_path);

  if (flags.game) config.game = parse_game(*flags.game);
  if (flags.gamma) config.gamma = parse_angle_field(*flags.gamma, "gamma");
  if (flags.gamma_sweep) config.gamma_sweep = parse_sweep(*flags.gamma_sweep);
  if (!flags.strategy.empty()) {
    config.strategy.clear();
    for (const auto& s : flags.strategy) {
      config.strategy.push_back(parse_strategy(s, "strategy"));
    }
  }
  if (flags.classical) {
    config.classical = parse_real(*flags.classical, "classical");
  }
  if (flags.incumbent) {
    config.incumbent = parse_strategy(*flags.incumbent, "incumbent");
  }
  if (flags.mutant) config.mutant = parse_strategy(*flags.mutant, "mutant");
  if (flags.epsilon0) {
    config.epsilon0 = parse_real(*flags.epsilon0, "epsilon0");
  }
  if (flags.dt) config.dt = parse_real(*flags.dt, "dt");
  if (flags.steps) config.steps = parse_count(*flags.steps, "steps");
  if (flags.gap_tol) config.gap_tol = parse_real(*flags.gap_tol, "gap_tol");
  if (flags.exclusion_radius) {
    config.exclusion_radius =
        parse_real(*flags.exclusion_radius, "exclusion_radius");
  }
  if (flags.grid_points) {
    config.grid_points = parse_count(*flags.grid_points, "grid_points");
  }
  if (flags.theta_points) {
    config.theta_points = parse_count(*flags.theta_points, "theta_points");
  }
  if (flags.phi_points) {
    config.phi_points = parse_count(*flags.phi_points, "phi_points");
  }
  if (flags.refinement_levels) {
    config.refinement_levels =
        parse_count(*flags.refinement_levels, "refinement_levels");
  }
  if (flags.zoom_factor) {
    config.zoom_factor = parse_real(*flags.zoom_factor, "zoom_factor");
  }
  if (flags.out) config.out = *flags.out;
  if (flags.format) config.format = parse_formats(*flags.format);
  if (flags.mu) config.mu = parse_mu(*flags.mu);
  config.closed = flags.closed;
  config.base2 = flags.base2;
  return config;
}

std::string resolve_out_dir(const RunConfig& config) {
  if (!config.out.empty()) return config.out;
  if (const char* env = std::getenv("QESS_OUT_DIR"); env && *env) return env;
  return ".";
}

}  // namespace qess

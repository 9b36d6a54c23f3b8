// Copyright 2026 The AQC Shield Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "aqcs/runner/config.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <boost/algorithm/string.hpp>
#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <charconv>
#include <fstream>
#include <sstream>

namespace aqcs {

namespace {

std::string trim(const std::string& s) { return boost::algorithm::trim_copy(s); }

double to_double(const std::string& path, const std::string& text) {
  const std::string t = trim(text);
  double v = 0.0;
  const auto [end, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || end != t.data() + t.size() || t.empty()) {
    throw ConfigError(fmt::format("{}: '{}' is not a number", path, text));
  }
  return v;
}

std::uint64_t to_unsigned(const std::string& path, const std::string& text) {
  const std::string t = trim(text);
  std::uint64_t v = 0;
  const auto [end, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || end != t.data() + t.size() || t.empty()) {
    throw ConfigError(fmt::format("{}: '{}' is not a non-negative integer", path, text));
  }
  return v;
}

bool to_bool(const std::string& path, const std::string& text) {
  const std::string t = boost::algorithm::to_lower_copy(trim(text));
  if (t == "true" || t == "on" || t == "yes" || t == "1") return true;
  if (t == "false" || t == "off" || t == "no" || t == "0") return false;
  throw ConfigError(fmt::format("{}: '{}' is not a boolean", path, text));
}

std::string fmt_double(double v) { return fmt::format("{:.17g}", v); }

std::string bath_initial_name(BathInitialState s) {
  return s == BathInitialState::ground ? "ground" : "maximally-mixed";
}

}  // namespace

TermList parse_terms(const std::string& text, std::size_t n) {
  TermList terms;
  std::vector<std::string> parts;
  boost::algorithm::split(parts, text, boost::algorithm::is_any_of(";"));
  for (const auto& raw : parts) {
    const std::string part = trim(raw);
    if (part.empty()) continue;
    const auto star = part.find('*');
    if (star == std::string::npos) throw ConfigError(fmt::format("term '{}' is not of the form coef*LETTERS", part));
    const double coef = to_double("term coefficient", part.substr(0, star));
    PauliString p = PauliString::parse(trim(part.substr(star + 1)));
    if (p.size() != n) {
      throw ConfigError(fmt::format("term '{}' acts on {} qubits, expected {}", part, p.size(), n));
    }
    if (p.phase_exponent() != 0) throw ConfigError(fmt::format("term '{}' must not carry a phase", part));
    terms.push_back(PauliTerm{coef, std::move(p)});
  }
  if (terms.empty()) throw ConfigError("term list is empty");
  return terms;
}

std::string format_terms(const TermList& terms) {
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) out += "; ";
    out += fmt_double(terms[i].coefficient) + "*" + terms[i].string.letters_str();
  }
  return out;
}

void set_field(ExperimentConfig& cfg, const std::string& path, const std::string& value) {
  const auto dot = path.find('.');
  if (dot == std::string::npos) throw ConfigError(fmt::format("'{}' is not a section.key path", path));
  const std::string section = path.substr(0, dot);
  const std::string key = path.substr(dot + 1);
  const std::string v = trim(value);
  auto unknown = [&] { return ConfigError(fmt::format("unknown key '{}'", path)); };

  if (section == "model") {
    ModelConfig& m = cfg.model;
    if (key == "preset") m.preset = v;
    else if (key == "n") m.n = to_unsigned(path, v);
    else if (key == "n_bath") m.n_bath = to_unsigned(path, v);
    else if (key == "code") m.code = to_bool(path, v);
    else if (key == "h0") m.h0 = v;
    else if (key == "h1") m.h1 = v;
    else if (key == "schedule") {
      try {
        m.schedule = parse_schedule_kind(v);
      } catch (const std::exception& e) {
        throw ConfigError(fmt::format("{}: {}", path, e.what()));
      }
    } else if (key == "delta0") m.delta0 = to_double(path, v);
    else if (key == "total_time") m.total_time = to_double(path, v);
    else if (key == "coupling") m.coupling = to_double(path, v);
    else if (key == "bath_norm") m.bath_norm = to_double(path, v);
    else if (key == "penalty") m.penalty = to_double(path, v);
    else if (key == "penalty_during_pulses") m.penalty_during_pulses = to_bool(path, v);
    else if (key == "bath_seed") m.bath_seed = to_unsigned(path, v);
    else throw unknown();
  } else if (section == "protocol") {
    if (!cfg.protocol) cfg.protocol.emplace();
    ProtocolConfig& p = *cfg.protocol;
    if (key == "group") p.group = v;
    else if (key == "tau") p.tau = to_double(path, v);
    else if (key == "width") p.width = to_double(path, v);
    else if (key == "cycles") p.cycles = to_unsigned(path, v);
    else throw unknown();
  } else if (section == "scaling") {
    if (!cfg.scaling) cfg.scaling.emplace();
    ScalingConfig& s = *cfg.scaling;
    if (key == "z") s.z = to_double(path, v);
    else if (key == "regime") s.regime = v;
    else if (key == "zeta") s.zeta = to_double(path, v);
    else if (key == "eps1") s.eps1 = to_double(path, v);
    else if (key == "eps2") s.eps2 = to_double(path, v);
    else if (key == "c_tau") s.c_tau = to_double(path, v);
    else if (key == "c_w") s.c_w = to_double(path, v);
    else throw unknown();
  } else if (section == "run") {
    RunConfig& r = cfg.run;
    if (key == "dilation") r.dilation = to_double(path, v);
    else if (key == "tolerance") r.tolerance = to_double(path, v);
    else if (key == "order") r.order = static_cast<int>(to_unsigned(path, v));
    else if (key == "alpha") r.alpha = to_double(path, v);
    else if (key == "bath_initial") {
      if (v == "maximally-mixed") r.bath_initial = BathInitialState::maximally_mixed;
      else if (v == "ground") r.bath_initial = BathInitialState::ground;
      else throw ConfigError(fmt::format("{}: expected maximally-mixed or ground, got '{}'", path, v));
    } else throw unknown();
  } else if (section == "output") {
    OutputConfig& o = cfg.output;
    if (key == "directory") o.directory = v;
    else if (key == "prefix") o.prefix = v;
    else if (key == "formats") {
      o.csv = o.json = false;
      std::vector<std::string> parts;
      boost::algorithm::split(parts, v, boost::algorithm::is_any_of(","));
      for (const auto& raw : parts) {
        const std::string f = trim(raw);
        if (f == "csv") o.csv = true;
        else if (f == "json") o.json = true;
        else if (!f.empty()) throw ConfigError(fmt::format("{}: unknown format '{}'", path, f));
      }
    } else throw unknown();
  } else {
    throw ConfigError(fmt::format("unknown section '{}'", section));
  }
}

void ExperimentConfig::validate() const {
  auto fail = [](const std::string& field, const std::string& why) { return ConfigError(field + ": " + why); };
  const ModelConfig& m = model;
  if (m.preset != "universal-2local" && m.preset != "custom") {
    throw fail("model.preset", "expected universal-2local or custom, got '" + m.preset + "'");
  }
  if (m.n < 1) throw fail("model.n", "must be positive");
  if (m.n + m.n_bath > kDefaultMaxQubits) {
    throw fail("model.n_bath", fmt::format("system plus bath exceeds {} qubits", kDefaultMaxQubits));
  }
  if (m.code && (m.n < 4 || m.n % 2 != 0)) throw fail("model.n", "encoded mode needs an even n >= 4");
  if (m.preset == "custom") {
    if (m.code) throw fail("model.code", "custom term lists are taken as physical; set code = false");
    if (m.h0.empty()) throw fail("model.h0", "required by the custom preset");
    if (m.h1.empty()) throw fail("model.h1", "required by the custom preset");
    try {
      parse_terms(m.h0, m.n);
    } catch (const std::exception& e) {
      throw fail("model.h0", e.what());
    }
    try {
      parse_terms(m.h1, m.n);
    } catch (const std::exception& e) {
      throw fail("model.h1", e.what());
    }
  } else if (!m.h0.empty() || !m.h1.empty()) {
    throw fail("model.h0", "term lists are only read by the custom preset");
  }
  if (!(m.delta0 > 0.0)) throw fail("model.delta0", "must be positive");
  if (m.total_time && !(*m.total_time > 0.0)) throw fail("model.total_time", "must be positive");
  if (!(m.coupling >= 0.0)) throw fail("model.coupling", "must be non-negative");
  if (!(m.bath_norm >= 0.0)) throw fail("model.bath_norm", "must be non-negative");
  if (!(m.penalty >= 0.0)) throw fail("model.penalty", "must be non-negative");
  if (m.penalty > 0.0 && !m.code) throw fail("model.penalty", "needs encoded mode");

  if (protocol.has_value() == scaling.has_value()) {
    throw fail("protocol", "exactly one of [protocol] and [scaling] must be present");
  }
  if (protocol) {
    const ProtocolConfig& p = *protocol;
    if (p.group != "universal" && p.group != "none") {
      throw fail("protocol.group", "expected universal or none, got '" + p.group + "'");
    }
    if (p.group == "universal" && m.n % 2 != 0) throw fail("protocol.group", "the universal group needs even n");
    if (!(p.tau > 0.0)) throw fail("protocol.tau", "must be positive");
    if (!(p.width >= 0.0)) throw fail("protocol.width", "must be non-negative");
    if (p.width > 0.0 && p.width >= p.tau) throw fail("protocol.width", "pulse width must be smaller than tau");
    if (p.cycles && *p.cycles == 0) throw fail("protocol.cycles", "must be positive");
    if (!p.cycles && !m.total_time) throw fail("protocol.cycles", "required when model.total_time is absent");
  }
  if (scaling) {
    const ScalingConfig& s = *scaling;
    if (s.regime != "twice-differentiable" && s.regime != "smooth") {
      throw fail("scaling.regime", "expected twice-differentiable or smooth");
    }
    if (!(s.eps1 > 1.0)) throw fail("scaling.eps1", "must exceed 1");
    if (!(s.eps2 > 0.0)) throw fail("scaling.eps2", "must be positive");
    if (!(s.c_tau > 0.0)) throw fail("scaling.c_tau", "must be positive");
    if (!(s.c_w > 0.0)) throw fail("scaling.c_w", "must be positive");
    if (!(m.coupling > 0.0)) throw fail("model.coupling", "the scaling rule needs J > 0");
    if (m.n % 2 != 0) throw fail("model.n", "the scaling rule uses the universal group, which needs even n");
  }
  if (!(run.dilation >= 1.0)) throw fail("run.dilation", "must be at least 1");
  if (!(run.tolerance > 0.0)) throw fail("run.tolerance", "must be positive");
  if (run.order != 2 && run.order != 4) throw fail("run.order", "must be 2 or 4");
  if (!(run.alpha >= 0.0)) throw fail("run.alpha", "must be non-negative");
  if (!output.csv && !output.json) throw fail("output.formats", "select at least one of csv, json");
  if (output.prefix.empty()) throw fail("output.prefix", "must not be empty");
}

ExperimentConfig parse_config(const std::string& text) {
  namespace pt = boost::property_tree;
  pt::ptree tree;
  std::istringstream in(text);
  try {
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ConfigError(fmt::format("line {}: {}", e.line(), e.message()));
  }
  ExperimentConfig cfg;
  for (const auto& [section, body] : tree) {
    if (!body.data().empty()) throw ConfigError(fmt::format("key '{}' appears outside any section", section));
    if (section == "sweep") {
      for (const auto& [key, value] : body) {
        SweepAxis axis{key, {}};
        std::vector<std::string> parts;
        const std::string list = value.data();
        boost::algorithm::split(parts, list, boost::algorithm::is_any_of(","));
        for (const auto& p : parts) {
          if (!trim(p).empty()) axis.values.push_back(trim(p));
        }
        if (axis.values.empty()) throw ConfigError(fmt::format("sweep.{}: axis has no values", key));
        cfg.sweep.push_back(std::move(axis));
      }
      continue;
    }
    if (section == "protocol" && !cfg.protocol) cfg.protocol.emplace();
    if (section == "scaling" && !cfg.scaling) cfg.scaling.emplace();
    for (const auto& [key, value] : body) set_field(cfg, section + "." + key, value.data());
  }
  cfg.validate();
  for (const auto& axis : cfg.sweep) {
    for (const auto& v : axis.values) {
      ExperimentConfig probe = cfg;
      set_field(probe, axis.path, v);
    }
  }
  return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(fmt::format("cannot open config file '{}'", path.string()));
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_config(buffer.str());
  } catch (const ConfigError& e) {
    throw ConfigError(fmt::format("{}: {}", path.string(), e.what()));
  }
}

std::string serialize(const ExperimentConfig& cfg) {
  const ModelConfig& m = cfg.model;
  std::string out = "[model]\n";
  out += fmt::format("preset = {}\nn = {}\nn_bath = {}\ncode = {}\n", m.preset, m.n, m.n_bath, m.code ? "true" : "false");
  if (!m.h0.empty()) out += fmt::format("h0 = {}\n", m.h0);
  if (!m.h1.empty()) out += fmt::format("h1 = {}\n", m.h1);
  out += fmt::format("schedule = {}\ndelta0 = {}\n", to_string(m.schedule), fmt_double(m.delta0));
  if (m.total_time) out += fmt::format("total_time = {}\n", fmt_double(*m.total_time));
  out += fmt::format("coupling = {}\nbath_norm = {}\npenalty = {}\npenalty_during_pulses = {}\nbath_seed = {}\n",
                     fmt_double(m.coupling), fmt_double(m.bath_norm), fmt_double(m.penalty),
                     m.penalty_during_pulses ? "true" : "false", m.bath_seed);
  if (cfg.protocol) {
    const ProtocolConfig& p = *cfg.protocol;
    out += fmt::format("\n[protocol]\ngroup = {}\ntau = {}\nwidth = {}\n", p.group, fmt_double(p.tau), fmt_double(p.width));
    if (p.cycles) out += fmt::format("cycles = {}\n", *p.cycles);
  }
  if (cfg.scaling) {
    const ScalingConfig& s = *cfg.scaling;
    out += fmt::format("\n[scaling]\nz = {}\nregime = {}\n", fmt_double(s.z), s.regime);
    if (s.zeta) out += fmt::format("zeta = {}\n", fmt_double(*s.zeta));
    out += fmt::format("eps1 = {}\neps2 = {}\nc_tau = {}\nc_w = {}\n", fmt_double(s.eps1), fmt_double(s.eps2),
                       fmt_double(s.c_tau), fmt_double(s.c_w));
  }
  const RunConfig& r = cfg.run;
  out += fmt::format("\n[run]\ndilation = {}\ntolerance = {}\norder = {}\nbath_initial = {}\nalpha = {}\n",
                     fmt_double(r.dilation), fmt_double(r.tolerance), r.order, bath_initial_name(r.bath_initial),
                     fmt_double(r.alpha));
  const OutputConfig& o = cfg.output;
  std::string formats = o.csv && o.json ? "csv, json" : (o.csv ? "csv" : "json");
  out += fmt::format("\n[output]\ndirectory = {}\nprefix = {}\nformats = {}\n", o.directory, o.prefix, formats);
  if (!cfg.sweep.empty()) {
    out += "\n[sweep]\n";
    for (const auto& axis : cfg.sweep) out += fmt::format("{} = {}\n", axis.path, boost::algorithm::join(axis.values, ", "));
  }
  return out;
}

}  // namespace aqcs

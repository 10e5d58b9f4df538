// SPDX-License-Identifier: Apache-2.0
//
// dmaswipt: DMA-aided multiuser MISO power-splitting SWIPT optimization
// Copyright (C) 2026 The dmaswipt authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "dmaswipt/scenario.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <nlohmann/json.hpp>
#include <sstream>

#include "dmaswipt/energy_harvesting.hpp"
#include "dmaswipt/errors.hpp"
#include "dmaswipt/units.hpp"

namespace dmaswipt {

using json = nlohmann::ordered_json;

std::string SchemeVariant::scheme_name() const {
  return fully_digital ? "fd" : to_string(mapping);
}

std::string SchemeVariant::label() const {
  std::string s = scheme_name();
  if (ps_override) s += "+" + format_ps_mode(*ps_override);
  return s;
}

SchemeVariant parse_scheme_variant(std::string_view text) {
  SchemeVariant v;
  const auto plus = text.find('+');
  const std::string_view head = text.substr(0, plus);
  if (head == "fd") {
    v.fully_digital = true;
  } else {
    v.mapping = parse_mapping_scheme(head);
  }
  if (plus != std::string_view::npos)
    v.ps_override = parse_ps_mode(text.substr(plus + 1));
  return v;
}

ScenarioConfig::ScenarioConfig() {
  eh_models.push_back("linear:eta=0.5");
  for (const auto& m : placeholder_logistic_models())
    eh_models.push_back(format_eh_model(m));
}

ScenarioConfig ScenarioConfig::desk_scale() { return ScenarioConfig(); }

ScenarioConfig ScenarioConfig::full_scale() {
  ScenarioConfig c;
  c.geometry.n_rows = 8;
  c.geometry.n_cols = 64;
  return c;
}

namespace {

[[noreturn]] void fail(const std::string& msg) { throw ConfigError(msg); }

void require(bool ok, const std::string& msg) {
  if (!ok) fail(msg);
}

}  // namespace

void ScenarioConfig::validate() const {
  try {
    geometry.validate();
  } catch (const std::exception& e) {
    fail(e.what());
  }
  require(alpha >= 0.0 && std::isfinite(beta), "alpha must be >= 0");
  const int k = users.empty() ? static_cast<int>(user_distances_df.size())
                              : static_cast<int>(users.size());
  require(k <= geometry.n_rows,
          "more users than microstrips (K must not exceed n_rows)");
  for (double d : user_distances_df)
    require(d > 0.0, "user distances must be positive");
  for (double v : {sinr_db, eh_threshold_dbm, antenna_noise_dbm,
                   conversion_noise_dbm})
    require(std::isfinite(v), "QoS and noise figures must be finite");
  parse_eh_model(eh_model);
  parse_scheme_variant(scheme);
  parse_ps_mode(ps_mode);
  require(max_iterations >= 1, "max_iterations must be >= 1");
  require(solver_tolerance > 0.0 && solver_tolerance < 1e-2,
          "solver_tolerance must lie in (0, 1e-2)");
  require(stop_threshold >= 0.0, "stop_threshold must be >= 0");
  require(stop_patience >= 1, "stop_patience must be >= 1");
  require(max_initializations >= 1, "max_initializations must be >= 1");

  require(!eh_grid_dbm.empty(), "eh_grid_dbm must not be empty");
  require(!eh_models.empty(), "eh_models must not be empty");
  for (const auto& m : eh_models) parse_eh_model(m);
  require(!zeta_grid.empty(), "zeta_grid must not be empty");
  for (double z : zeta_grid) require(z > 0.0, "zeta values must be positive");
  require(sep_anchor_df > 0.0, "sep_anchor_df must be positive");
  require(!sep_conversion_noise_dbm.empty(),
          "sep_conversion_noise_dbm must not be empty");
  require(!sep_ps_modes.empty(), "sep_ps_modes must not be empty");
  for (const auto& m : sep_ps_modes) parse_ps_mode(m);
  require(!sep_schemes.empty(), "sep_schemes must not be empty");
  for (const auto& s : sep_schemes) parse_scheme_variant(s);
  require(2 <= geometry.n_rows, "separation sweep needs two users");
  require(!mc_sinr_grid_db.empty(), "mc_sinr_grid_db must not be empty");
  require(mc_realizations >= 1, "mc_realizations must be >= 1");
  require(mc_users >= 1 && mc_users <= geometry.n_rows,
          "mc_users must lie in [1, n_rows]");
  require(mc_radius_min_df > 0.0 && mc_radius_max_df > mc_radius_min_df,
          "need 0 < mc_radius_min_df < mc_radius_max_df");
  require(!mc_schemes.empty(), "mc_schemes must not be empty");
  for (const auto& s : mc_schemes) parse_scheme_variant(s);
}

std::vector<UserPosition> ScenarioConfig::resolved_users() const {
  if (!users.empty()) return users;
  std::vector<UserPosition> out;
  const double df = fraunhofer();
  for (double d : user_distances_df) out.push_back({0.0, 0.0, d * df});
  return out;
}

QosTargets ScenarioConfig::targets(int k) const {
  return QosTargets::uniform(k, db_to_linear(sinr_db),
                             dbm_to_watts(eh_threshold_dbm),
                             dbm_to_watts(antenna_noise_dbm),
                             dbm_to_watts(conversion_noise_dbm));
}

WaveguideModel ScenarioConfig::waveguide() const {
  return WaveguideModel::uniform(geometry, alpha, beta);
}

OptimizerConfig ScenarioConfig::optimizer(const SchemeVariant& variant) const {
  OptimizerConfig c;
  c.max_iterations = max_iterations;
  c.seed = seed;
  c.scheme = variant.mapping;
  c.ps_mode = variant.ps_override ? *variant.ps_override : parse_ps_mode(ps_mode);
  c.solver_tolerance = solver_tolerance;
  c.stop_threshold = stop_threshold;
  c.stop_patience = stop_patience;
  c.max_initializations = max_initializations;
  return c;
}

SystemModel ScenarioConfig::system(const std::vector<UserPosition>& u) const {
  return make_system_model(geometry, waveguide(), u,
                           targets(static_cast<int>(u.size())),
                           parse_eh_model(eh_model));
}

// ---------------------------------------------------------------------------
// Key/value (de)serialization

namespace {

enum class Kind {
  Number,
  Integer,
  Unsigned,
  Boolean,
  Text,
  OptionalNumber,
  NumberList,
  TextList,
  Users
};

struct Field {
  const char* key;
  Kind kind;
  std::function<json(const ScenarioConfig&)> get;
  std::function<void(ScenarioConfig&, const json&)> set;
};

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  if (trim(s).empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

double to_number(const std::string& key, const std::string& s) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    fail("key '" + key + "': '" + s + "' is not a number");
  return v;
}

template <class T>
T to_integer(const std::string& key, const std::string& s) {
  T v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    fail("key '" + key + "': '" + s + "' is not an integer");
  return v;
}

json flat_to_json(const Field& f, const std::string& raw) {
  const std::string key = f.key;
  switch (f.kind) {
    case Kind::Number:
      return to_number(key, raw);
    case Kind::Integer:
      return to_integer<int>(key, raw);
    case Kind::Unsigned:
      return to_integer<std::uint64_t>(key, raw);
    case Kind::Boolean:
      if (raw == "true" || raw == "1") return true;
      if (raw == "false" || raw == "0") return false;
      fail("key '" + key + "': expected true or false");
    case Kind::Text:
      return raw;
    case Kind::OptionalNumber:
      if (raw == "auto") return nullptr;
      return to_number(key, raw);
    case Kind::NumberList: {
      json a = json::array();
      for (const auto& s : split(raw, ',')) a.push_back(to_number(key, s));
      return a;
    }
    case Kind::TextList: {
      json a = json::array();
      for (const auto& s : split(raw, ';')) a.push_back(s);
      return a;
    }
    case Kind::Users: {
      json a = json::array();
      for (const auto& u : split(raw, ';')) {
        const auto xyz = split(u, ',');
        if (xyz.size() != 3) fail("key '" + key + "': users are x,y,z triples");
        a.push_back({to_number(key, xyz[0]), to_number(key, xyz[1]),
                     to_number(key, xyz[2])});
      }
      return a;
    }
  }
  return nullptr;
}

std::string json_to_flat(const Field& f, const json& v) {
  auto num = [](const json& x) { return format_double(x.get<double>()); };
  switch (f.kind) {
    case Kind::Number:
      return num(v);
    case Kind::Integer:
    case Kind::Unsigned:
      return v.dump();
    case Kind::Boolean:
      return v.get<bool>() ? "true" : "false";
    case Kind::Text:
      return v.get<std::string>();
    case Kind::OptionalNumber:
      return v.is_null() ? "auto" : num(v);
    case Kind::NumberList: {
      std::string s;
      for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? ", " : "") + num(v[i]);
      return s;
    }
    case Kind::TextList: {
      std::string s;
      for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "; " : "") + v[i].get<std::string>();
      return s;
    }
    case Kind::Users: {
      std::string s;
      for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "; " : "") + num(v[i][0]) + ", " + num(v[i][1]) + ", " +
             num(v[i][2]);
      return s;
    }
  }
  return {};
}

double get_number(const char* key, const json& v) {
  if (!v.is_number()) fail(std::string("key '") + key + "' expects a number");
  return v.get<double>();
}

int get_int(const char* key, const json& v) {
  if (!v.is_number_integer())
    fail(std::string("key '") + key + "' expects an integer");
  return v.get<int>();
}

std::string get_text(const char* key, const json& v) {
  if (!v.is_string()) fail(std::string("key '") + key + "' expects a string");
  return v.get<std::string>();
}

std::vector<double> get_numbers(const char* key, const json& v) {
  if (!v.is_array()) fail(std::string("key '") + key + "' expects a list");
  std::vector<double> out;
  for (const auto& x : v) out.push_back(get_number(key, x));
  return out;
}

std::vector<std::string> get_texts(const char* key, const json& v) {
  if (!v.is_array()) fail(std::string("key '") + key + "' expects a list");
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(get_text(key, x));
  return out;
}

std::optional<double> get_optional(const char* key, const json& v) {
  if (v.is_null()) return std::nullopt;
  return get_number(key, v);
}

json optional_json(const std::optional<double>& v) {
  return v ? json(*v) : json(nullptr);
}

#define DMASWIPT_NUMBER(name, member)                                   \
  Field {                                                               \
    name, Kind::Number,                                                 \
        [](const ScenarioConfig& c) { return json(c.member); },         \
        [](ScenarioConfig& c, const json& v) { c.member = get_number(name, v); } \
  }
#define DMASWIPT_INT(name, member)                                      \
  Field {                                                               \
    name, Kind::Integer,                                                \
        [](const ScenarioConfig& c) { return json(c.member); },         \
        [](ScenarioConfig& c, const json& v) { c.member = get_int(name, v); } \
  }
#define DMASWIPT_TEXT(name, member)                                     \
  Field {                                                               \
    name, Kind::Text,                                                   \
        [](const ScenarioConfig& c) { return json(c.member); },         \
        [](ScenarioConfig& c, const json& v) { c.member = get_text(name, v); } \
  }
#define DMASWIPT_NUMBERS(name, member)                                  \
  Field {                                                               \
    name, Kind::NumberList,                                             \
        [](const ScenarioConfig& c) { return json(c.member); },         \
        [](ScenarioConfig& c, const json& v) { c.member = get_numbers(name, v); } \
  }
#define DMASWIPT_TEXTS(name, member)                                    \
  Field {                                                               \
    name, Kind::TextList,                                               \
        [](const ScenarioConfig& c) { return json(c.member); },         \
        [](ScenarioConfig& c, const json& v) { c.member = get_texts(name, v); } \
  }

const std::vector<Field>& fields() {
  static const std::vector<Field> table = {
      DMASWIPT_INT("n_rows", geometry.n_rows),
      DMASWIPT_INT("n_cols", geometry.n_cols),
      DMASWIPT_NUMBER("carrier_frequency_hz", geometry.carrier_frequency),
      Field{"spacing_x_m", Kind::OptionalNumber,
            [](const ScenarioConfig& c) { return optional_json(c.geometry.spacing_x); },
            [](ScenarioConfig& c, const json& v) {
              c.geometry.spacing_x = get_optional("spacing_x_m", v);
            }},
      Field{"spacing_y_m", Kind::OptionalNumber,
            [](const ScenarioConfig& c) { return optional_json(c.geometry.spacing_y); },
            [](ScenarioConfig& c, const json& v) {
              c.geometry.spacing_y = get_optional("spacing_y_m", v);
            }},
      DMASWIPT_NUMBER("gain_exponent", geometry.gain_exponent),
      Field{"array_origin", Kind::Text,
            [](const ScenarioConfig& c) {
              return json(c.geometry.origin == ArrayOrigin::Center
                              ? "center"
                              : "first-element");
            },
            [](ScenarioConfig& c, const json& v) {
              const std::string s = get_text("array_origin", v);
              if (s == "center")
                c.geometry.origin = ArrayOrigin::Center;
              else if (s == "first-element")
                c.geometry.origin = ArrayOrigin::FirstElement;
              else
                fail("array_origin must be center or first-element");
            }},
      Field{"aperture_m", Kind::OptionalNumber,
            [](const ScenarioConfig& c) {
              return optional_json(c.geometry.aperture_override);
            },
            [](ScenarioConfig& c, const json& v) {
              c.geometry.aperture_override = get_optional("aperture_m", v);
            }},
      DMASWIPT_NUMBER("alpha", alpha),
      DMASWIPT_NUMBER("beta", beta),
      Field{"users", Kind::Users,
            [](const ScenarioConfig& c) {
              json a = json::array();
              for (const auto& u : c.users) a.push_back({u[0], u[1], u[2]});
              return a;
            },
            [](ScenarioConfig& c, const json& v) {
              if (!v.is_array()) fail("key 'users' expects a list");
              c.users.clear();
              for (const auto& u : v) {
                const auto xyz = get_numbers("users", u);
                if (xyz.size() != 3) fail("users are x,y,z triples");
                c.users.push_back({xyz[0], xyz[1], xyz[2]});
              }
            }},
      DMASWIPT_NUMBERS("user_distances_df", user_distances_df),
      DMASWIPT_NUMBER("sinr_db", sinr_db),
      DMASWIPT_NUMBER("eh_threshold_dbm", eh_threshold_dbm),
      DMASWIPT_NUMBER("antenna_noise_dbm", antenna_noise_dbm),
      DMASWIPT_NUMBER("conversion_noise_dbm", conversion_noise_dbm),
      DMASWIPT_TEXT("eh_model", eh_model),
      DMASWIPT_TEXT("scheme", scheme),
      DMASWIPT_TEXT("ps_mode", ps_mode),
      DMASWIPT_INT("max_iterations", max_iterations),
      DMASWIPT_NUMBER("solver_tolerance", solver_tolerance),
      DMASWIPT_NUMBER("stop_threshold", stop_threshold),
      DMASWIPT_INT("stop_patience", stop_patience),
      DMASWIPT_INT("max_initializations", max_initializations),
      Field{"seed", Kind::Unsigned,
            [](const ScenarioConfig& c) { return json(c.seed); },
            [](ScenarioConfig& c, const json& v) {
              if (!v.is_number_unsigned() &&
                  !(v.is_number_integer() && v.get<long long>() >= 0))
                fail("key 'seed' expects a nonnegative integer");
              c.seed = v.get<std::uint64_t>();
            }},
      Field{"cross_refine", Kind::Boolean,
            [](const ScenarioConfig& c) { return json(c.cross_refine); },
            [](ScenarioConfig& c, const json& v) {
              if (!v.is_boolean()) fail("key 'cross_refine' expects a boolean");
              c.cross_refine = v.get<bool>();
            }},
      DMASWIPT_NUMBERS("eh_grid_dbm", eh_grid_dbm),
      DMASWIPT_TEXTS("eh_models", eh_models),
      DMASWIPT_NUMBERS("zeta_grid", zeta_grid),
      DMASWIPT_NUMBER("sep_anchor_df", sep_anchor_df),
      DMASWIPT_NUMBERS("sep_conversion_noise_dbm", sep_conversion_noise_dbm),
      DMASWIPT_TEXTS("sep_ps_modes", sep_ps_modes),
      DMASWIPT_TEXTS("sep_schemes", sep_schemes),
      DMASWIPT_NUMBERS("mc_sinr_grid_db", mc_sinr_grid_db),
      DMASWIPT_INT("mc_realizations", mc_realizations),
      DMASWIPT_INT("mc_users", mc_users),
      DMASWIPT_NUMBER("mc_radius_min_df", mc_radius_min_df),
      DMASWIPT_NUMBER("mc_radius_max_df", mc_radius_max_df),
      DMASWIPT_TEXTS("mc_schemes", mc_schemes),
  };
  return table;
}

#undef DMASWIPT_NUMBER
#undef DMASWIPT_INT
#undef DMASWIPT_TEXT
#undef DMASWIPT_NUMBERS
#undef DMASWIPT_TEXTS

const Field& find_field(const std::string& key) {
  for (const auto& f : fields())
    if (key == f.key) return f;
  fail("unknown configuration key '" + key + "'");
}

ScenarioConfig apply_fields(const json& obj, ScenarioConfig c) {
  if (!obj.is_object()) fail("configuration must be a JSON object");
  for (const auto& [key, value] : obj.items()) find_field(key).set(c, value);
  return c;
}

}  // namespace

ScenarioConfig parse_scenario(std::string_view text, ScenarioConfig base) {
  const std::string body = trim(text);
  if (!body.empty() && body.front() == '{') {
    json obj;
    try {
      obj = json::parse(body);
    } catch (const json::parse_error& e) {
      fail(std::string("invalid JSON configuration: ") + e.what());
    }
    return apply_fields(obj, std::move(base));
  }
  json obj = json::object();
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      fail("line " + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(std::string_view(line).substr(0, eq));
    const std::string value = trim(std::string_view(line).substr(eq + 1));
    obj[key] = flat_to_json(find_field(key), value);
  }
  return apply_fields(obj, std::move(base));
}

ScenarioConfig load_scenario(const std::string& path, ScenarioConfig base) {
  std::ifstream in(path);
  if (!in) fail("cannot open configuration file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_scenario(ss.str(), std::move(base));
}

std::string format_scenario_flat(const ScenarioConfig& c) {
  std::string out;
  for (const auto& f : fields())
    out += std::string(f.key) + " = " + json_to_flat(f, f.get(c)) + "\n";
  return out;
}

std::string format_scenario_json(const ScenarioConfig& c) {
  json obj = json::object();
  for (const auto& f : fields()) obj[f.key] = f.get(c);
  return obj.dump(2) + "\n";
}

}  // namespace dmaswipt

#pragma once

// Scan configuration shared by the experiment commands.  A JSON file with the
// same field names can seed it; command-line flags override afterwards.

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "charsum/residue/arithmetic.hpp"

namespace charsum::experiments {

enum class YPolicy { q, log_q, explicit_y };
enum class OutputFormat { csv, json };

struct ScanConfig {
  u64 q_min = 3;
  u64 q_max = 100;
  bool primes_only = true;
  std::vector<u64> orders;  // empty: every order
  YPolicy y_policy = YPolicy::q;
  u64 explicit_y = 0;
  u64 conductor_bound = 30;
  unsigned smoothness_exponent = 12;
  unsigned threads = 1;
  u64 seed = 1;
  std::string output_path;  // empty: stdout
  OutputFormat format = OutputFormat::csv;

  void validate() const {
    if (q_min < 3) throw std::invalid_argument("q_min must be at least 3");
    if (q_max < q_min) throw std::invalid_argument("q_max must be at least q_min");
    if (threads < 1) throw std::invalid_argument("threads must be at least 1");
    if (conductor_bound < 1) throw std::invalid_argument("conductor_bound must be positive");
    if (smoothness_exponent < 1) throw std::invalid_argument("smoothness_exponent must be positive");
    if (y_policy == YPolicy::explicit_y && explicit_y < 2) throw std::invalid_argument("explicit y must be at least 2");
  }

  /// y used for distances at modulus q.
  [[nodiscard]] u64 y_for(u64 q) const {
    switch (y_policy) {
      case YPolicy::q:
        return q;
      case YPolicy::log_q:
        return std::max<u64>(2, static_cast<u64>(std::log(static_cast<double>(q))));
      case YPolicy::explicit_y:
        break;
    }
    return explicit_y;
  }

  /// Q of the arc conventions: q, or log q under the conditional policy.
  [[nodiscard]] bool conditional() const { return y_policy == YPolicy::log_q; }

  [[nodiscard]] bool wants_order(u64 order) const {
    return orders.empty() || std::find(orders.begin(), orders.end(), order) != orders.end();
  }
};

NLOHMANN_JSON_SERIALIZE_ENUM(YPolicy, {{YPolicy::q, "q"}, {YPolicy::log_q, "logq"}, {YPolicy::explicit_y, "explicit"}})
NLOHMANN_JSON_SERIALIZE_ENUM(OutputFormat, {{OutputFormat::csv, "csv"}, {OutputFormat::json, "json"}})

inline void to_json(nlohmann::json& j, const ScanConfig& c) {
  j = {{"q_min", c.q_min},
       {"q_max", c.q_max},
       {"primes_only", c.primes_only},
       {"orders", c.orders},
       {"y_policy", c.y_policy},
       {"explicit_y", c.explicit_y},
       {"conductor_bound", c.conductor_bound},
       {"smoothness_exponent", c.smoothness_exponent},
       {"threads", c.threads},
       {"seed", c.seed},
       {"output_path", c.output_path},
       {"format", c.format}};
}

/// Missing keys keep their defaults; unknown keys are rejected.
inline void from_json(const nlohmann::json& j, ScanConfig& c) {
  if (!j.is_object()) throw std::invalid_argument("config: expected a JSON object");
  static const std::vector<std::string> known{"q_min",  "q_max",   "primes_only", "orders",
                                              "y_policy", "explicit_y", "conductor_bound",
                                              "smoothness_exponent", "threads", "seed",
                                              "output_path", "format"};
  for (const auto& [key, _] : j.items()) {
    if (std::find(known.begin(), known.end(), key) == known.end()) {
      throw std::invalid_argument("config: unknown key '" + key + "'");
    }
  }
  auto get = [&](const char* key, auto& field) {
    if (j.contains(key)) j.at(key).get_to(field);
  };
  get("q_min", c.q_min);
  get("q_max", c.q_max);
  get("primes_only", c.primes_only);
  get("orders", c.orders);
  get("y_policy", c.y_policy);
  get("explicit_y", c.explicit_y);
  get("conductor_bound", c.conductor_bound);
  get("smoothness_exponent", c.smoothness_exponent);
  get("threads", c.threads);
  get("seed", c.seed);
  get("output_path", c.output_path);
  get("format", c.format);
}

inline ScanConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file " + path);
  ScanConfig cfg;
  nlohmann::json::parse(in).get_to(cfg);
  return cfg;
}

/// Moduli in [q_min, q_max], primes only when requested, ascending.
inline std::vector<u64> moduli(const ScanConfig& cfg) {
  std::vector<u64> out;
  for (u64 q = cfg.q_min; q <= cfg.q_max; ++q) {
    if (!cfg.primes_only || is_prime(q)) out.push_back(q);
  }
  return out;
}

}  // namespace charsum::experiments

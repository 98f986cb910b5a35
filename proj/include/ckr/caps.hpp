#pragma once

#include <cstdlib>
#include <sstream>
#include <string>

namespace ckr {

struct Caps {
  long max_ground_atoms = 200000;
  long max_models = 100000;
  long max_subsets = 1 << 20;  // oracle candidate-space cap
  long max_sat_vars = 20;
};

struct CapExceeded {
  std::string what;
};

/// Defaults overridable via CKR_CAPS="ground=N,models=N,subsets=N,satvars=N".
inline Caps caps_from_env() {
  Caps c;
  const char* env = std::getenv("CKR_CAPS");
  if (!env) return c;
  std::stringstream ss(env);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) continue;
    std::string key = item.substr(0, eq);
    long val = std::atol(item.c_str() + eq + 1);
    if (val <= 0) continue;
    if (key == "ground") c.max_ground_atoms = val;
    else if (key == "models") c.max_models = val;
    else if (key == "subsets") c.max_subsets = val;
    else if (key == "satvars") c.max_sat_vars = val;
  }
  return c;
}

}  // namespace ckr

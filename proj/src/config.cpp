#include "hlf/config.hpp"

namespace hlf {

const char* variant_name(Variant v) {
  switch (v) {
    case Variant::hermite_leapfrog: return "hermite-leapfrog";
    case Variant::modified: return "modified";
    case Variant::dual_hermite: return "dual-hermite";
  }
  return "?";
}

bool parse_variant(const std::string& s, Variant& out) {
  if (s == "hermite-leapfrog" || s == "hl") {
    out = Variant::hermite_leapfrog;
  } else if (s == "modified") {
    out = Variant::modified;
  } else if (s == "dual-hermite" || s == "dual") {
    out = Variant::dual_hermite;
  } else {
    return false;
  }
  return true;
}

void SchemeConfig::validate() const {
  if (m < 0 || m > m_cap)
    throw ConfigError("scheme order m must be in [0, " + std::to_string(m_cap) + "]");
  if (!(cfl > 0.0) || !std::isfinite(cfl))
    throw ConfigError("cfl must be positive and finite");
}

int step_count(double T, double dt_nominal) {
  if (!(T > 0.0)) throw ConfigError("final time must be positive");
  if (!(dt_nominal > 0.0)) throw ConfigError("nominal dt must be positive");
  return static_cast<int>(std::ceil(T / dt_nominal));
}

}  // namespace hlf

#include "casimir/format.hpp"

#include <cmath>
#include <cstdio>

#include "json.hpp"

namespace casimir {

std::string fmt_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string json_double(double v) { return std::isfinite(v) ? fmt_double(v) : "null"; }

std::string json_string(const std::string& s) { return nlohmann::json(s).dump(); }

}  // namespace casimir

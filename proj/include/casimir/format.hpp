#pragma once

#include <string>

namespace casimir {

/// Round-trip-safe text ("%.17g"); "nan" / "inf" for non-finite values.
std::string fmt_double(double v);

/// As fmt_double, but non-finite values become null.
std::string json_double(double v);

std::string json_string(const std::string& s);

}  // namespace casimir

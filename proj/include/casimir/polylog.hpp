#pragma once

namespace casimir {

/// Li_s(z) = sum_{k>=1} z^k / k^s for integer s >= 2 and -1 <= z <= 1, to
/// near machine precision. Throws std::domain_error outside that range.
double polylog(int s, double z);

}  // namespace casimir

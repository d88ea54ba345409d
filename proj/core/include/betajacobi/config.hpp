#pragma once

namespace betajacobi {

inline constexpr int kDefaultMaxOrder = 12;
inline constexpr int kDefaultWorkingDigits = 32;

// Cap on the symbolic truncation order: BETAJACOBI_MAX_ORDER if set to a
// positive integer, otherwise kDefaultMaxOrder.
int max_supported_order();

// Throws std::out_of_range unless 1 <= order <= max_supported_order().
void require_supported_order(int order, const char* what);

}  // namespace betajacobi

#include "betajacobi/config.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>
#include <stdexcept>
#include <string>

namespace betajacobi {

int max_supported_order() {
  const char* env = std::getenv("BETAJACOBI_MAX_ORDER");
  if (env == nullptr) return kDefaultMaxOrder;
  int value = 0;
  const char* end = env + std::strlen(env);
  const auto [ptr, ec] = std::from_chars(env, end, value);
  if (ec != std::errc() || ptr != end || value < 1) return kDefaultMaxOrder;
  return value;
}

void require_supported_order(int order, const char* what) {
  const int cap = max_supported_order();
  if (order < 1 || order > cap) {
    throw std::out_of_range(std::string(what) + ": order " + std::to_string(order) + " outside 1.." +
                            std::to_string(cap));
  }
}

}  // namespace betajacobi

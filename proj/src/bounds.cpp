#include "osw/bounds.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace osw {

namespace {

int ceil_log2(int n) {
  return std::bit_width(static_cast<std::uint32_t>(n) - 1);
}

}  // namespace

BoundsReport bounds_report(int n) {
  if (n < 1) {
    throw std::invalid_argument("size parameter must be >= 1, got " +
                                std::to_string(n));
  }
  BoundsReport b;
  b.n = n;
  const double log_n1 = std::log(n + 1.0);
  const double log_2en = std::log(2.0 * n) + 1.0;  // ln(2en)
  const double log_2n = std::log(2.0 * n);

  b.zu_upper = 1.0 / log_n1;
  b.zu_lower = 1.0 / (6.0 * log_2en);
  b.routing_upper = (ceil_log2(n) + 1) * (192.0 * log_2en) + 2.0;

  b.e1 = 3.0 / log_n1;
  b.e2 = 4.5 / log_n1;
  b.e3 = 36.0 * kZeta3 / (log_n1 * log_n1);
  b.e4 = 3.0 / log_n1;
  b.e5 = b.e3;
  b.e6 = b.e3;
  b.e7 = 36.0 * (3.0 * kZeta3 + 0.125) * log_2n / (log_n1 * log_n1 * log_n1);
  b.eu_bound = 10.5 / log_n1 + 108.0 * kZeta3 / (log_n1 * log_n1) + b.e7;
  return b;
}

}  // namespace osw

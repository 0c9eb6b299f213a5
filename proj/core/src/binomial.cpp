#include "qpert/binomial.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qpert {

namespace {

uint128 gcd(uint128 a, uint128 b) {
  while (b != 0) {
    const uint128 r = a % b;
    a = b;
    b = r;
  }
  return a;
}

}  // namespace

std::optional<uint128> exact_binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) {
    return uint128{0};
  }
  k = std::min(k, n - k);
  const uint128 max = ~uint128{0};
  uint128 c = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    // c == C(n - k + i - 1, i - 1) here and i divides c * (n - k + i);
    // splitting i across both factors avoids an oversized intermediate.
    const uint128 g = gcd(c, static_cast<uint128>(i));
    const uint128 factor = static_cast<uint128>(n - k + i) / (static_cast<uint128>(i) / g);
    const uint128 reduced = c / g;
    if (reduced > max / factor) {
      return std::nullopt;
    }
    c = reduced * factor;
  }
  return c;
}

double binomial(std::int64_t n, std::int64_t k) {
  if (auto exact = exact_binomial(n, k)) {
    return static_cast<double>(*exact);
  }
  k = std::min(k, n - k);
  return std::exp(std::lgamma(static_cast<double>(n) + 1.0) - std::lgamma(static_cast<double>(k) + 1.0) -
                  std::lgamma(static_cast<double>(n - k) + 1.0));
}

int128 signed_central_binomial(int t) {
  if (t < 1) {
    throw std::invalid_argument("signed_central_binomial: t must be >= 1");
  }
  auto c = exact_binomial(2 * static_cast<std::int64_t>(t) - 2, t - 1);
  if (!c || *c > (~uint128{0} >> 1)) {
    throw std::overflow_error("signed_central_binomial: coefficient exceeds 128 bits");
  }
  const auto v = static_cast<int128>(*c);
  return (t % 2 == 1) ? v : -v;
}

double series_weight(int t) {
  if (t < 1) {
    throw std::invalid_argument("series_weight: t must be >= 1");
  }
  // Exact integer path up to C(78, 39); beyond that the ratio
  // w(t+1) / w(t) = 2(2t - 1) / (t + 1) carries the value forward.
  constexpr int kExactLimit = 40;
  if (t <= kExactLimit) {
    return 2.0 * binomial(2 * t - 2, t - 1) / t;
  }
  double w = 2.0 * binomial(2 * kExactLimit - 2, kExactLimit - 1) / kExactLimit;
  for (int u = kExactLimit; u < t; ++u) {
    w *= 2.0 * (2.0 * u - 1.0) / (u + 1.0);
  }
  return w;
}

std::string to_string(int128 v) {
  if (v == 0) {
    return "0";
  }
  const bool negative = v < 0;
  uint128 mag = negative ? static_cast<uint128>(-(v + 1)) + 1 : static_cast<uint128>(v);
  std::string digits;
  while (mag > 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(mag % 10)));
    mag /= 10;
  }
  if (negative) {
    digits.push_back('-');
  }
  std::reverse(digits.begin(), digits.end());
  return digits;
}

}  // namespace qpert

#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace qpert {

__extension__ typedef unsigned __int128 uint128;
__extension__ typedef __int128 int128;

/// Exact binomial coefficient, or nullopt when it does not fit in 128 bits.
/// Every central coefficient C(2m, m) with m <= 64 fits.
std::optional<uint128> exact_binomial(std::int64_t n, std::int64_t k);

/// Binomial coefficient as a double. Exact whenever the value is below 2^53.
double binomial(std::int64_t n, std::int64_t k);

/// (-1)^(t+1) C(2t-2, t-1), the normalized coefficient of the t-th even
/// correction. Exact; throws std::overflow_error past t = 66.
int128 signed_central_binomial(int t);

/// (2/t) C(2t-2, t-1) = 2 Catalan(t-1): the unsigned weight of
/// (alpha |W| / 2E)^(2t) in the resummed energy series.
double series_weight(int t);

std::string to_string(int128 v);

}  // namespace qpert

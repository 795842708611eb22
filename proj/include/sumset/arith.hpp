#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace sumset {

/// Cardinalities and products of cardinalities.
using Wide = __int128;

std::optional<Wide> checked_mul(Wide a, Wide b);
std::optional<Wide> checked_add(Wide a, Wide b);
std::optional<Wide> checked_pow(Wide base, unsigned exp);

/// Exact C(n, k); nullopt when the value does not fit in 127 bits.
std::optional<Wide> binomial(std::int64_t n, std::int64_t k);

Wide gcd(Wide a, Wide b);

std::string to_string(Wide v);
bool fits_int64(Wide v);

}  // namespace sumset

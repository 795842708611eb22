#include "sumset/arith.hpp"

#include <algorithm>
#include <limits>

namespace sumset {

std::optional<Wide> checked_mul(Wide a, Wide b) {
  Wide r;
  if (__builtin_mul_overflow(a, b, &r)) return std::nullopt;
  return r;
}

std::optional<Wide> checked_add(Wide a, Wide b) {
  Wide r;
  if (__builtin_add_overflow(a, b, &r)) return std::nullopt;
  return r;
}

std::optional<Wide> checked_pow(Wide base, unsigned exp) {
  Wide r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    auto next = checked_mul(r, base);
    if (!next) return std::nullopt;
    r = *next;
  }
  return r;
}

std::optional<Wide> binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return Wide{0};
  k = std::min(k, n - k);
  Wide r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    // r * (n - k + i) is divisible by i at every step
    Wide num = n - k + i;
    Wide g = gcd(r, i);
    Wide rr = r / g;
    Wide ii = i / g;
    auto next = checked_mul(rr, num / ii);
    if (!next) return std::nullopt;
    r = *next;
  }
  return r;
}

Wide gcd(Wide a, Wide b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::string to_string(Wide v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  // unsigned magnitude handles the minimum value
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1
                            : static_cast<unsigned __int128>(v);
  std::string s;
  while (u > 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  if (neg) s.push_back('-');
  std::reverse(s.begin(), s.end());
  return s;
}

bool fits_int64(Wide v) {
  return v >= std::numeric_limits<std::int64_t>::min() &&
         v <= std::numeric_limits<std::int64_t>::max();
}

}  // namespace sumset

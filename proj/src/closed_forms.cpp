#include "mislab/closed_forms.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace mislab {

BigNat parse_bignat(std::string_view text) {
  if (text.empty() ||
      !std::all_of(text.begin(), text.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
    throw std::invalid_argument("expected a natural number, got '" + std::string(text) + "'");
  }
  return BigNat(std::string(text));
}

namespace {

BigNat pow3(std::size_t k) { return boost::multiprecision::pow(BigNat(3), static_cast<unsigned>(k)); }

}  // namespace

BigNat ell(std::size_t n) {
  if (n == 0) throw std::invalid_argument("ell: n must be positive");
  if (n == 1) return 1;
  const std::size_t i = n / 3;
  switch (n % 3) {
    case 0:
      return pow3(i);
    case 1:
      return 4 * pow3(i - 1);
    default:
      return 2 * pow3(i);
  }
}

std::size_t s_of(const BigNat& m) {
  if (m <= 0) throw std::invalid_argument("s: m must be positive");
  if (m == 1) return 1;
  if (m == 2) return 2;
  BigNat prev = 1;  // 3^(i-1)
  for (std::size_t i = 1;; ++i) {
    const BigNat cur = prev * 3;
    if (m <= cur) return 3 * i;  // 2*3^(i-1) < m holds from the previous round
    if (m <= 4 * prev) return 3 * i + 1;
    if (m <= 2 * cur) return 3 * i + 2;
    prev = cur;
  }
}

BigNat perrin(std::size_t j) {
  if (j == 0) throw std::invalid_argument("perrin: j must be at least 1");
  std::vector<BigNat> p{0, 0, 2, 3};  // index 0 unused
  for (std::size_t k = 4; k <= j; ++k) p.push_back(p[k - 2] + p[k - 3]);
  return p[j];
}

BigNat max_with_ones(std::size_t n) {
  if (n == 0) throw std::invalid_argument("max_with_ones: n must be positive");
  std::vector<BigNat> best(n + 1);
  best[1] = 1;
  for (std::size_t k = 2; k <= n; ++k) {
    for (std::size_t a = 1; a <= k / 2; ++a) {
      const BigNat& x = best[a];
      const BigNat& y = best[k - a];
      best[k] = std::max({best[k], BigNat(x + y), BigNat(x * y)});
    }
  }
  return best[n];
}

}  // namespace mislab

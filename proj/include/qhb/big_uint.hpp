#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "qhb/errors.hpp"

// Minimal unsigned big integer: enough for exact binomial coefficients and
// hook-content products at any n+l a user can type, without overflow.

namespace qhb {

class BigUint {
public:
  BigUint() : limbs_{0} {}
  explicit BigUint(std::uint64_t v) {
    limbs_.push_back(static_cast<std::uint32_t>(v & 0xffffffffu));
    limbs_.push_back(static_cast<std::uint32_t>(v >> 32));
    trim();
  }

  bool is_zero() const { return limbs_.size() == 1 && limbs_[0] == 0; }

  BigUint& mul_small(std::uint32_t m) {
    std::uint64_t carry = 0;
    for (auto& limb : limbs_) {
      const std::uint64_t prod = static_cast<std::uint64_t>(limb) * m + carry;
      limb = static_cast<std::uint32_t>(prod & 0xffffffffu);
      carry = prod >> 32;
    }
    while (carry != 0) {
      limbs_.push_back(static_cast<std::uint32_t>(carry & 0xffffffffu));
      carry >>= 32;
    }
    trim();
    return *this;
  }

  // Exact division by a small divisor; throws if a remainder is left.
  BigUint& div_small_exact(std::uint32_t d) {
    std::uint64_t rem = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
      const std::uint64_t cur = (rem << 32) | limbs_[i];
      limbs_[i] = static_cast<std::uint32_t>(cur / d);
      rem = cur % d;
    }
    if (rem != 0) throw DomainError("BigUint::div_small_exact: division not exact");
    trim();
    return *this;
  }

  // Division with remainder by a small divisor (for decimal printing).
  std::uint32_t div_small(std::uint32_t d) {
    std::uint64_t rem = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
      const std::uint64_t cur = (rem << 32) | limbs_[i];
      limbs_[i] = static_cast<std::uint32_t>(cur / d);
      rem = cur % d;
    }
    trim();
    return static_cast<std::uint32_t>(rem);
  }

  bool fits_u64() const { return limbs_.size() <= 2; }

  std::uint64_t to_u64() const {
    if (!fits_u64()) throw DomainError("BigUint::to_u64: value exceeds 64 bits");
    std::uint64_t v = limbs_[0];
    if (limbs_.size() == 2) v |= static_cast<std::uint64_t>(limbs_[1]) << 32;
    return v;
  }

  double to_double() const {
    double v = 0.0;
    for (std::size_t i = limbs_.size(); i-- > 0;) v = v * 4294967296.0 + limbs_[i];
    return v;
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    BigUint tmp = *this;
    std::string digits;
    while (!tmp.is_zero()) {
      const std::uint32_t r = tmp.div_small(1000000000u);
      if (tmp.is_zero()) {
        digits.insert(0, std::to_string(r));
      } else {
        std::string chunk = std::to_string(r);
        digits.insert(0, std::string(9 - chunk.size(), '0') + chunk);
      }
    }
    return digits;
  }

  friend bool operator==(const BigUint& a, const BigUint& b) { return a.limbs_ == b.limbs_; }
  friend bool operator!=(const BigUint& a, const BigUint& b) { return !(a == b); }

private:
  void trim() {
    while (limbs_.size() > 1 && limbs_.back() == 0) limbs_.pop_back();
  }

  std::vector<std::uint32_t> limbs_;  // little-endian base 2^32
};

// binom(n, k) exactly, by the multiplicative rule with exact intermediate
// divisions: C(n, 0..k) built as C *= (n-k+i), C /= i.
inline BigUint binomial_exact(std::uint64_t n, std::uint64_t k) {
  if (k > n) return BigUint(0);
  if (n > 0xffffffffull) throw DomainError("binomial_exact: n exceeds 32 bits");
  if (k > n - k) k = n - k;
  BigUint c(1);
  for (std::uint64_t i = 1; i <= k; ++i) {
    c.mul_small(static_cast<std::uint32_t>(n - k + i));
    c.div_small_exact(static_cast<std::uint32_t>(i));
  }
  return c;
}

// binom(n, k) as uint64, throwing DomainError on overflow.
inline std::uint64_t binomial_u64(std::uint64_t n, std::uint64_t k) {
  const BigUint b = binomial_exact(n, k);
  if (!b.fits_u64()) throw DomainError("binomial_u64: value exceeds 64 bits");
  return b.to_u64();
}

}  // namespace qhb

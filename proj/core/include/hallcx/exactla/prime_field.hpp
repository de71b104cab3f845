#pragma once

#include <cstdint>

namespace hallcx {

/// Residue in 0..p-1.
using Elem = std::uint32_t;

bool is_prime(std::uint64_t n) noexcept;

/// The prime field F_p. Moduli are restricted to p < 2^16 so that products of
/// two residues fit comfortably in 32 bits before reduction.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p);

  std::uint32_t p() const noexcept { return p_; }

  Elem add(Elem a, Elem b) const noexcept {
    const Elem s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  Elem neg(Elem a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const noexcept {
    return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p_);
  }
  /// Throws std::domain_error for a == 0.
  Elem inv(Elem a) const;
  Elem pow(Elem a, std::uint64_t e) const noexcept;
  Elem reduce(std::int64_t v) const noexcept;
  /// Signed lift in (-p/2, p/2], handy for printing.
  std::int64_t lift(Elem a) const noexcept;

  bool operator==(const PrimeField&) const = default;

 private:
  std::uint32_t p_;
};

}  // namespace hallcx

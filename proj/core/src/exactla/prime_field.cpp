#include "hallcx/exactla/prime_field.hpp"

#include <stdexcept>
#include <string>

namespace hallcx {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (!is_prime(p)) throw std::domain_error("field modulus " + std::to_string(p) + " is not prime");
  if (p >= (1u << 16)) throw std::domain_error("field modulus must be below 65536");
}

Elem PrimeField::inv(Elem a) const {
  if (a % p_ == 0) throw std::domain_error("inverse of zero in F_p");
  // extended Euclid on (a, p)
  std::int64_t t = 0, new_t = 1, r = p_, new_r = a;
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  return reduce(t);
}

Elem PrimeField::pow(Elem a, std::uint64_t e) const noexcept {
  Elem result = 1 % p_;
  Elem base = a % p_;
  while (e) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Elem PrimeField::reduce(std::int64_t v) const noexcept {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Elem>(r);
}

std::int64_t PrimeField::lift(Elem a) const noexcept {
  return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : static_cast<std::int64_t>(a);
}

}  // namespace hallcx

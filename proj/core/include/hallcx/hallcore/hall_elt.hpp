#pragma once

#include <map>

#include "hallcx/rational.hpp"

namespace hallcx {

/// Finite rational combination of iso-class keys. Zero coefficients are never stored.
template <class Key>
class HallElt {
 public:
  using Terms = std::map<Key, Rational>;

  HallElt() = default;
  static HallElt basis(const Key& k, const Rational& c = 1) {
    HallElt x;
    x.add(k, c);
    return x;
  }

  void add(const Key& k, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(k, c);
    if (fresh) return;
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }

  HallElt& operator+=(const HallElt& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  HallElt& operator-=(const HallElt& o) {
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
  }
  HallElt& operator*=(const Rational& s) {
    if (s == 0) terms_.clear();
    for (auto& [k, c] : terms_) c *= s;
    return *this;
  }
  friend HallElt operator+(HallElt a, const HallElt& b) { return a += b; }
  friend HallElt operator-(HallElt a, const HallElt& b) { return a -= b; }
  friend HallElt operator*(const Rational& s, HallElt a) { return a *= s; }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Rational coeff(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Rational(0) : it->second;
  }
  bool operator==(const HallElt&) const = default;

 private:
  Terms terms_;
};

}  // namespace hallcx

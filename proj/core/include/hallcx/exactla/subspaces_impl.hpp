#pragma once

#include <stdexcept>
#include <utility>

namespace hallcx {

template <class Visit>
void for_each_subspace(const PrimeField& f, std::size_t d, std::size_t k, Visit&& visit) {
  if (k > d) throw std::domain_error("enumerate_subspaces: k exceeds ambient dimension");
  const Elem p = f.p();
  std::vector<std::size_t> piv(k);
  for (std::size_t i = 0; i < k; ++i) piv[i] = i;
  for (;;) {
    // Free slots: (row, col) with col > pivot(row) and col not a pivot column.
    std::vector<bool> is_pivot(d, false);
    for (auto c : piv) is_pivot[c] = true;
    std::vector<std::pair<std::size_t, std::size_t>> free;
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = piv[r] + 1; c < d; ++c)
        if (!is_pivot[c]) free.emplace_back(r, c);

    Matrix m(k, d);
    for (std::size_t r = 0; r < k; ++r) m(r, piv[r]) = 1;
    std::vector<Elem> digits(free.size(), 0);
    for (;;) {
      if (!visit(static_cast<const Matrix&>(m))) return;
      std::size_t i = 0;
      for (; i < digits.size(); ++i) {
        auto [r, c] = free[i];
        if (++digits[i] == p) {
          digits[i] = 0;
          m(r, c) = 0;
        } else {
          m(r, c) = digits[i];
          break;
        }
      }
      if (i == digits.size()) break;
    }

    // Next pivot combination in lexicographic order.
    if (k == 0) return;
    std::size_t i = k;
    while (i > 0 && piv[i - 1] == d - k + (i - 1)) --i;
    if (i == 0) return;
    ++piv[i - 1];
    for (std::size_t j = i; j < k; ++j) piv[j] = piv[j - 1] + 1;
  }
}

}  // namespace hallcx

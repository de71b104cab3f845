#include "hallcx/exactla/matrix.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "hallcx/exactla/subspaces.hpp"

namespace hallcx {

Matrix::Matrix(const PrimeField& field, std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    for (auto v : r) data_.push_back(field.reduce(v));
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_columns(std::size_t rows, std::span<const Vec> cols) {
  Matrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    assert(cols[c].size() == rows);
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

Vec Matrix::column(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

bool Matrix::is_zero() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](Elem e) { return e == 0; });
}

Matrix multiply(const PrimeField& f, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("multiply: shape mismatch");
  Matrix c(a.rows(), b.cols());
  const std::uint64_t p = f.p();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::vector<std::uint64_t> acc(b.cols(), 0);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const std::uint64_t aik = a(i, k);
      if (!aik) continue;
      auto brow = b.row(k);
      for (std::size_t j = 0; j < b.cols(); ++j) acc[j] += aik * brow[j];
    }
    for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = static_cast<Elem>(acc[j] % p);
  }
  return c;
}

Vec multiply(const PrimeField& f, const Matrix& a, std::span<const Elem> v) {
  if (a.cols() != v.size()) throw std::invalid_argument("multiply: shape mismatch");
  Vec out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::uint64_t acc = 0;
    for (std::size_t k = 0; k < a.cols(); ++k) acc += static_cast<std::uint64_t>(a(i, k)) * v[k];
    out[i] = static_cast<Elem>(acc % f.p());
  }
  return out;
}

Matrix add(const PrimeField& f, const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("add: shape mismatch");
  Matrix c = a;
  for (std::size_t i = 0; i < c.data().size(); ++i) c.data()[i] = f.add(a.data()[i], b.data()[i]);
  return c;
}

Matrix sub(const PrimeField& f, const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("sub: shape mismatch");
  Matrix c = a;
  for (std::size_t i = 0; i < c.data().size(); ++i) c.data()[i] = f.sub(a.data()[i], b.data()[i]);
  return c;
}

Matrix scale(const PrimeField& f, const Matrix& a, Elem s) {
  Matrix c = a;
  for (auto& e : c.data()) e = f.mul(e, s);
  return c;
}

void axpy(const PrimeField& f, Matrix& a, Elem s, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("axpy: shape mismatch");
  if (s == 0) return;
  for (std::size_t i = 0; i < a.data().size(); ++i) a.data()[i] = f.add(a.data()[i], f.mul(s, b.data()[i]));
}

Matrix transpose(const Matrix& a) {
  Matrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack: row mismatch");
  Matrix c(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) c(i, a.cols() + j) = b(i, j);
  }
  return c;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("vstack: column mismatch");
  Matrix c(a.rows() + b.rows(), a.cols());
  std::copy(a.data().begin(), a.data().end(), c.data().begin());
  std::copy(b.data().begin(), b.data().end(), c.data().begin() + static_cast<std::ptrdiff_t>(a.data().size()));
  return c;
}

Matrix block_diag(const Matrix& a, const Matrix& b) {
  Matrix c(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) c(a.rows() + i, a.cols() + j) = b(i, j);
  return c;
}

Matrix submatrix(const Matrix& a, std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) {
  if (r0 + rows > a.rows() || c0 + cols > a.cols()) throw std::out_of_range("submatrix");
  Matrix s(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) s(i, j) = a(r0 + i, c0 + j);
  return s;
}

Matrix select_columns(const Matrix& a, std::span<const std::size_t> idx) {
  Matrix s(a.rows(), idx.size());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) s(i, j) = a(i, idx[j]);
  return s;
}

Echelon rref(const PrimeField& f, Matrix m) {
  Echelon e;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, c) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
    const Elem inv = f.inv(m(r, c));
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = f.mul(m(r, j), inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r) continue;
      const Elem factor = m(i, c);
      if (!factor) continue;
      const Elem nf = f.neg(factor);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (m(r, j)) m(i, j) = f.add(m(i, j), f.mul(nf, m(r, j)));
    }
    e.pivots.push_back(c);
    ++r;
  }
  e.reduced = std::move(m);
  return e;
}

std::size_t rank(const PrimeField& f, const Matrix& m) {
  if (m.empty()) return 0;
  return rref(f, m).pivots.size();
}

std::vector<Vec> solve_kernel(const PrimeField& f, const Matrix& m) {
  const std::size_t n = m.cols();
  std::vector<Vec> basis;
  if (n == 0) return basis;
  if (m.rows() == 0) {
    for (std::size_t j = 0; j < n; ++j) {
      Vec v(n, 0);
      v[j] = 1;
      basis.push_back(std::move(v));
    }
    return basis;
  }
  const Echelon e = rref(f, m);
  std::vector<bool> is_pivot(n, false);
  for (auto c : e.pivots) is_pivot[c] = true;
  for (std::size_t freec = 0; freec < n; ++freec) {
    if (is_pivot[freec]) continue;
    Vec v(n, 0);
    v[freec] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = f.neg(e.reduced(r, freec));
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> solve(const PrimeField& f, const Matrix& a, std::span<const Elem> b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve: shape mismatch");
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  const Echelon e = rref(f, aug);
  Vec x(a.cols(), 0);
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] == a.cols()) return std::nullopt;
    x[e.pivots[r]] = e.reduced(r, a.cols());
  }
  return x;
}

std::optional<Matrix> solve(const PrimeField& f, const Matrix& a, const Matrix& b) {
  if (b.rows() != a.rows()) throw std::invalid_argument("solve: shape mismatch");
  const Echelon e = rref(f, hstack(a, b));
  Matrix x(a.cols(), b.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] >= a.cols()) return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j) x(e.pivots[r], j) = e.reduced(r, a.cols() + j);
  }
  return x;
}

std::optional<Matrix> inverse(const PrimeField& f, const Matrix& a) {
  if (a.rows() != a.cols()) return std::nullopt;
  const std::size_t n = a.rows();
  const Echelon e = rref(f, hstack(a, Matrix::identity(n)));
  if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1)) return std::nullopt;
  return submatrix(e.reduced, 0, n, n, n);
}

bool is_invertible(const PrimeField& f, const Matrix& a) {
  return a.rows() == a.cols() && rank(f, a) == a.rows();
}

Matrix column_basis(const PrimeField& f, const Matrix& m) {
  if (m.empty()) return Matrix(m.rows(), 0);
  const Echelon e = rref(f, m);
  return select_columns(m, e.pivots);
}

Matrix kernel_matrix(const PrimeField& f, const Matrix& m) {
  const auto ker = solve_kernel(f, m);
  return Matrix::from_columns(m.cols(), ker);
}

Matrix complement_columns(const PrimeField& f, const Matrix& basis, std::size_t dim) {
  // Greedily append standard vectors that raise the rank.
  std::vector<Vec> extra;
  Matrix current = basis.cols() ? column_basis(f, basis) : Matrix(dim, 0);
  std::size_t r = current.cols();
  for (std::size_t j = 0; j < dim && r < dim; ++j) {
    Matrix e(dim, 1);
    e(j, 0) = 1;
    Matrix trial = hstack(current, e);
    if (rank(f, trial) > r) {
      current = std::move(trial);
      ++r;
      Vec v(dim, 0);
      v[j] = 1;
      extra.push_back(std::move(v));
    }
  }
  return Matrix::from_columns(dim, extra);
}

std::uint64_t gaussian_binomial(std::uint64_t p, std::size_t d, std::size_t k) {
  if (k > d) return 0;
  // prod_{i<k} (p^{d-i} - 1) / (p^{i+1} - 1), computed exactly in 128 bits
  unsigned __int128 num = 1, den = 1;
  auto pw = [p](std::size_t e) {
    unsigned __int128 r = 1;
    for (std::size_t i = 0; i < e; ++i) r *= p;
    return r;
  };
  for (std::size_t i = 0; i < k; ++i) {
    num *= pw(d - i) - 1;
    den *= pw(i + 1) - 1;
  }
  return static_cast<std::uint64_t>(num / den);
}

std::vector<Matrix> enumerate_subspaces(const PrimeField& f, std::size_t d, std::size_t k) {
  std::vector<Matrix> out;
  for_each_subspace(f, d, k, [&](const Matrix& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

}  // namespace hallcx

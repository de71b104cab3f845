#include "hallcx/quiverrep/ext.hpp"

namespace hallcx {

ExtSpace ext1_space(const PathAlgebra& A, const Rep& M, const Rep& N) {
  const auto& F = A.field();
  const auto& Q = A.quiver();
  const auto& arrows = Q.arrows();

  std::vector<std::size_t> offset(arrows.size() + 1, 0);
  for (std::size_t ai = 0; ai < arrows.size(); ++ai)
    offset[ai + 1] = offset[ai] + N.dims[arrows[ai].target] * M.dims[arrows[ai].source];
  const std::size_t unknowns = offset.back();
  ExtSpace ext;
  if (unknowns == 0) return ext;

  auto slot = [&](std::size_t ai, std::size_t r, std::size_t c) {
    return offset[ai] + r * M.dims[arrows[ai].source] + c;
  };

  // cocycles: the (1,2) block of every relation evaluated on L vanishes
  std::size_t eqs = 0;
  for (const auto& rel : Q.relations()) {
    if (rel.terms.empty()) continue;
    const auto& t0 = rel.terms.front();
    eqs += N.dims[arrows[t0.second].target] * M.dims[arrows[t0.first].source];
  }
  Matrix sys(eqs, unknowns);
  std::size_t row0 = 0;
  for (const auto& rel : Q.relations()) {
    if (rel.terms.empty()) continue;
    const auto& t0 = rel.terms.front();
    const std::size_t rows = N.dims[arrows[t0.second].target];
    const std::size_t cols = M.dims[arrows[t0.first].source];
    for (const auto& t : rel.terms) {
      const std::size_t x = t.first, y = t.second;
      const std::size_t mid = arrows[x].target;
      for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
          const std::size_t r = row0 + i * cols + j;
          // N_y h_x
          for (std::size_t l = 0; l < N.dims[mid]; ++l) {
            const Elem c = F.mul(t.coeff, N.maps[y](i, l));
            if (c) sys(r, slot(x, l, j)) = F.add(sys(r, slot(x, l, j)), c);
          }
          // h_y M_x
          for (std::size_t l = 0; l < M.dims[mid]; ++l) {
            const Elem c = F.mul(t.coeff, M.maps[x](l, j));
            if (c) sys(r, slot(y, i, l)) = F.add(sys(r, slot(y, i, l)), c);
          }
        }
    }
    row0 += rows * cols;
  }
  const auto cocycles = solve_kernel(F, sys);
  ext.cocycle_dim = cocycles.size();

  // coboundaries of elementary s_v = E_{ij}
  std::vector<Vec> cob;
  for (std::size_t v = 0; v < A.n(); ++v)
    for (std::size_t i = 0; i < N.dims[v]; ++i)
      for (std::size_t j = 0; j < M.dims[v]; ++j) {
        Vec h(unknowns, 0);
        for (std::size_t ai = 0; ai < arrows.size(); ++ai) {
          const auto& a = arrows[ai];
          if (a.source == v)  // N_a s: column j gets N_a[:, i]
            for (std::size_t r = 0; r < N.dims[a.target]; ++r) {
              auto& e = h[slot(ai, r, j)];
              e = F.add(e, N.maps[ai](r, i));
            }
          if (a.target == v)  // - s M_a: row i gets -M_a[j, :]
            for (std::size_t c = 0; c < M.dims[a.source]; ++c) {
              auto& e = h[slot(ai, i, c)];
              e = F.sub(e, M.maps[ai](j, c));
            }
        }
        cob.push_back(std::move(h));
      }

  Matrix B = Matrix::from_columns(unknowns, cob);
  Matrix Z = Matrix::from_columns(unknowns, cocycles);
  const Echelon e = rref(F, hstack(B, Z));
  for (auto c : e.pivots) {
    if (c < B.cols()) {
      ++ext.coboundary_dim;
      continue;
    }
    const Vec& z = cocycles[c - B.cols()];
    Cocycle h;
    for (std::size_t ai = 0; ai < arrows.size(); ++ai) {
      Matrix m(N.dims[arrows[ai].target], M.dims[arrows[ai].source]);
      std::copy(z.begin() + static_cast<std::ptrdiff_t>(offset[ai]),
                z.begin() + static_cast<std::ptrdiff_t>(offset[ai + 1]), m.data().begin());
      h.push_back(std::move(m));
    }
    ext.basis.push_back(std::move(h));
  }
  return ext;
}

std::size_t ext1_dim(const PathAlgebra& A, const Rep& M, const Rep& N) { return ext1_space(A, M, N).dim(); }

Rep extension(const Rep& M, const Rep& N, const Cocycle& h) {
  Rep L;
  for (std::size_t v = 0; v < M.dims.size(); ++v) L.dims.push_back(N.dims[v] + M.dims[v]);
  for (std::size_t ai = 0; ai < M.maps.size(); ++ai) {
    const Matrix& Na = N.maps[ai];
    const Matrix& Ma = M.maps[ai];
    Matrix m(Na.rows() + Ma.rows(), Na.cols() + Ma.cols());
    for (std::size_t i = 0; i < Na.rows(); ++i)
      for (std::size_t j = 0; j < Na.cols(); ++j) m(i, j) = Na(i, j);
    for (std::size_t i = 0; i < Ma.rows(); ++i)
      for (std::size_t j = 0; j < Ma.cols(); ++j) m(Na.rows() + i, Na.cols() + j) = Ma(i, j);
    for (std::size_t i = 0; i < h[ai].rows(); ++i)
      for (std::size_t j = 0; j < h[ai].cols(); ++j) m(i, Na.cols() + j) = h[ai](i, j);
    L.maps.push_back(std::move(m));
  }
  return L;
}

std::int64_t euler_form(const Quiver& Q, const DimVec& dM, const DimVec& dN) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < Q.vertex_count(); ++i) s += static_cast<std::int64_t>(dM[i] * dN[i]);
  for (const auto& a : Q.arrows()) s -= static_cast<std::int64_t>(dM[a.source] * dN[a.target]);
  return s;
}

}  // namespace hallcx

#include "hallcx/quiverrep/rep.hpp"

#include <numeric>
#include <stdexcept>

#include "hallcx/errors.hpp"

namespace hallcx {

std::size_t Rep::total_dim() const noexcept { return std::accumulate(dims.begin(), dims.end(), std::size_t{0}); }

DimVec Subrep::dims() const {
  DimVec d;
  for (const auto& b : basis) d.push_back(b.cols());
  return d;
}

Rep zero_rep(const PathAlgebra& A) { return semisimple(A, DimVec(A.n(), 0)); }

Rep semisimple(const PathAlgebra& A, const DimVec& dims) {
  Rep M;
  M.dims = dims;
  for (const auto& a : A.quiver().arrows()) M.maps.emplace_back(dims[a.target], dims[a.source]);
  return M;
}

bool satisfies_relations(const PathAlgebra& A, const Rep& M) {
  const auto& F = A.field();
  const auto& arrows = A.quiver().arrows();
  for (const auto& rel : A.quiver().relations()) {
    if (rel.terms.empty()) continue;
    const auto& t0 = rel.terms.front();
    Matrix acc(M.dims[arrows[t0.second].target], M.dims[arrows[t0.first].source]);
    for (const auto& t : rel.terms) axpy(F, acc, t.coeff, multiply(F, M.maps[t.second], M.maps[t.first]));
    if (!acc.is_zero()) return false;
  }
  return true;
}

void validate(const PathAlgebra& A, const Rep& M) {
  const auto& arrows = A.quiver().arrows();
  if (M.dims.size() != A.n()) throw std::domain_error("representation has wrong number of vertices");
  if (M.maps.size() != arrows.size()) throw std::domain_error("representation has wrong number of arrow maps");
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    const auto& m = M.maps[i];
    if (m.rows() != M.dims[arrows[i].target] || m.cols() != M.dims[arrows[i].source])
      throw std::domain_error("arrow matrix shape does not match dimension vector");
    for (auto e : m.data())
      if (e >= A.p()) throw std::domain_error("matrix entry not reduced modulo p");
  }
  if (!satisfies_relations(A, M)) throw std::domain_error("representation violates the quiver relations");
}

Matrix path_map(const PathAlgebra& A, const Rep& M, std::size_t from, const Path& path) {
  Matrix acc = Matrix::identity(M.dims[from]);
  for (auto ai : path) acc = multiply(A.field(), M.maps[ai], acc);
  return acc;
}

Rep direct_sum(const Rep& M, const Rep& N) {
  Rep S;
  S.dims.resize(M.dims.size());
  for (std::size_t v = 0; v < M.dims.size(); ++v) S.dims[v] = M.dims[v] + N.dims[v];
  for (std::size_t i = 0; i < M.maps.size(); ++i) S.maps.push_back(block_diag(M.maps[i], N.maps[i]));
  return S;
}

RepMap direct_sum(const RepMap& f, const RepMap& g) {
  RepMap h;
  for (std::size_t v = 0; v < f.at.size(); ++v) h.at.push_back(block_diag(f.at[v], g.at[v]));
  return h;
}

RepMap identity_map(const Rep& M) {
  RepMap f;
  for (auto d : M.dims) f.at.push_back(Matrix::identity(d));
  return f;
}

RepMap zero_map(const Rep& M, const Rep& N) {
  RepMap f;
  for (std::size_t v = 0; v < M.dims.size(); ++v) f.at.emplace_back(N.dims[v], M.dims[v]);
  return f;
}

RepMap compose(const PathAlgebra& A, const RepMap& g, const RepMap& f) {
  RepMap h;
  for (std::size_t v = 0; v < f.at.size(); ++v) h.at.push_back(multiply(A.field(), g.at[v], f.at[v]));
  return h;
}

RepMap add(const PathAlgebra& A, const RepMap& f, const RepMap& g) {
  RepMap h;
  for (std::size_t v = 0; v < f.at.size(); ++v) h.at.push_back(add(A.field(), f.at[v], g.at[v]));
  return h;
}

RepMap scale(const PathAlgebra& A, const RepMap& f, Elem c) {
  RepMap h;
  for (const auto& m : f.at) h.at.push_back(scale(A.field(), m, c));
  return h;
}

bool is_zero(const RepMap& f) {
  for (const auto& m : f.at)
    if (!m.is_zero()) return false;
  return true;
}

bool is_morphism(const PathAlgebra& A, const RepMap& f, const Rep& M, const Rep& N) {
  const auto& F = A.field();
  const auto& arrows = A.quiver().arrows();
  if (f.at.size() != A.n()) return false;
  for (std::size_t v = 0; v < A.n(); ++v)
    if (f.at[v].rows() != N.dims[v] || f.at[v].cols() != M.dims[v]) return false;
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    const auto& a = arrows[i];
    if (multiply(F, f.at[a.target], M.maps[i]) != multiply(F, N.maps[i], f.at[a.source])) return false;
  }
  return true;
}

bool is_injective(const PathAlgebra& A, const RepMap& f) {
  for (const auto& m : f.at)
    if (rank(A.field(), m) != m.cols()) return false;
  return true;
}

bool is_surjective(const PathAlgebra& A, const RepMap& f) {
  for (const auto& m : f.at)
    if (rank(A.field(), m) != m.rows()) return false;
  return true;
}

bool is_isomorphism(const PathAlgebra& A, const RepMap& f) {
  for (const auto& m : f.at)
    if (!is_invertible(A.field(), m)) return false;
  return true;
}

Subrep kernel(const PathAlgebra& A, const RepMap& f, const Rep& M) {
  Subrep K;
  for (std::size_t v = 0; v < M.dims.size(); ++v) {
    if (f.at[v].rows() == 0) {
      K.basis.push_back(Matrix::identity(M.dims[v]));
    } else {
      K.basis.push_back(kernel_matrix(A.field(), f.at[v]));
    }
  }
  return K;
}

Subrep image(const PathAlgebra& A, const RepMap& f) {
  Subrep I;
  for (const auto& m : f.at) I.basis.push_back(column_basis(A.field(), m));
  return I;
}

Subrep generated_subrep(const PathAlgebra& A, const Rep& M,
                        const std::vector<std::pair<std::size_t, Vec>>& gens) {
  const auto& F = A.field();
  const auto& arrows = A.quiver().arrows();
  std::vector<Matrix> span(M.dims.size());
  for (std::size_t v = 0; v < M.dims.size(); ++v) span[v] = Matrix(M.dims[v], 0);
  for (const auto& [v, g] : gens) {
    Matrix col(M.dims[v], 1);
    for (std::size_t r = 0; r < g.size(); ++r) col(r, 0) = g[r];
    span[v] = hstack(span[v], col);
  }
  for (auto& s : span) s = column_basis(F, s);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < arrows.size(); ++i) {
      const auto& a = arrows[i];
      if (span[a.source].cols() == 0) continue;
      Matrix grown = column_basis(F, hstack(span[a.target], multiply(F, M.maps[i], span[a.source])));
      if (grown.cols() > span[a.target].cols()) {
        span[a.target] = std::move(grown);
        changed = true;
      }
    }
  }
  return Subrep{std::move(span)};
}

Subrep sum(const PathAlgebra& A, const Subrep& U, const Subrep& V) {
  Subrep S;
  for (std::size_t v = 0; v < U.basis.size(); ++v)
    S.basis.push_back(column_basis(A.field(), hstack(U.basis[v], V.basis[v])));
  return S;
}

bool is_stable(const PathAlgebra& A, const Rep& M, const Subrep& U) {
  const auto& F = A.field();
  const auto& arrows = A.quiver().arrows();
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    const auto& a = arrows[i];
    if (U.basis[a.source].cols() == 0) continue;
    const Matrix img = multiply(F, M.maps[i], U.basis[a.source]);
    if (!solve(F, U.basis[a.target], img)) return false;
  }
  return true;
}

Rep restrict_to(const PathAlgebra& A, const Rep& M, const Subrep& U) {
  const auto& F = A.field();
  const auto& arrows = A.quiver().arrows();
  Rep S;
  S.dims = U.dims();
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    const auto& a = arrows[i];
    const Matrix img = multiply(F, M.maps[i], U.basis[a.source]);
    auto x = solve(F, U.basis[a.target], img);
    if (!x) throw std::domain_error("restrict_to: subspace is not arrow-stable");
    S.maps.push_back(std::move(*x));
  }
  return S;
}

Quotient quotient(const PathAlgebra& A, const Rep& M, const Subrep& U) {
  const auto& F = A.field();
  const auto& arrows = A.quiver().arrows();
  Quotient Q;
  std::vector<Matrix> complement(M.dims.size());
  for (std::size_t v = 0; v < M.dims.size(); ++v) {
    const std::size_t k = U.basis[v].cols();
    complement[v] = complement_columns(F, U.basis[v], M.dims[v]);
    const Matrix T = hstack(U.basis[v], complement[v]);
    auto Tinv = inverse(F, T);
    if (!Tinv) throw InconsistencyError("quotient: subspace basis is not independent");
    Q.projection.at.push_back(submatrix(*Tinv, k, 0, M.dims[v] - k, M.dims[v]));
    Q.rep.dims.push_back(M.dims[v] - k);
  }
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    const auto& a = arrows[i];
    Q.rep.maps.push_back(multiply(F, Q.projection.at[a.target], multiply(F, M.maps[i], complement[a.source])));
  }
  return Q;
}

Quotient cokernel(const PathAlgebra& A, const RepMap& f, const Rep& N) { return quotient(A, N, image(A, f)); }

Rep transport(const PathAlgebra& A, const Rep& M, const std::vector<Matrix>& g) {
  const auto& F = A.field();
  const auto& arrows = A.quiver().arrows();
  Rep out;
  out.dims = M.dims;
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    const auto& a = arrows[i];
    auto ginv = inverse(F, g[a.source]);
    if (!ginv) throw std::domain_error("transport: basis change is not invertible");
    out.maps.push_back(multiply(F, g[a.target], multiply(F, M.maps[i], *ginv)));
  }
  return out;
}

}  // namespace hallcx

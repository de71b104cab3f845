#include "hallcx/quiverrep/projective.hpp"

#include <stdexcept>

#include "hallcx/errors.hpp"

namespace hallcx {

namespace {

// columns of the top complement at vertex w (standard vectors)
Matrix top_generators(const PathAlgebra& A, const Rep& M, const Subrep& rad, std::size_t w) {
  return complement_columns(A.field(), rad.basis[w], M.dims[w]);
}

}  // namespace

Rep projective(const PathAlgebra& A, std::size_t i) {
  const auto& Q = A.quiver();
  Rep P;
  for (std::size_t j = 0; j < A.n(); ++j) P.dims.push_back(Q.paths(i, j).size());
  for (std::size_t ai = 0; ai < Q.arrows().size(); ++ai) {
    const auto [s, t] = Q.arrows()[ai];
    Matrix m(P.dims[t], P.dims[s]);
    const auto& from = Q.paths(i, s);
    for (std::size_t c = 0; c < from.size(); ++c) {
      Path q = from[c];
      q.push_back(ai);
      m(Q.path_index(i, t, q), c) = 1;
    }
    P.maps.push_back(std::move(m));
  }
  return P;
}

Rep projective_sum(const PathAlgebra& A, const DimVec& mult) {
  Rep S = zero_rep(A);
  for (std::size_t i = 0; i < A.n(); ++i) {
    if (!mult[i]) continue;
    const Rep Pi = projective(A, i);
    for (std::size_t k = 0; k < mult[i]; ++k) S = direct_sum(S, Pi);
  }
  return S;
}

DimVec projective_dims(const PathAlgebra& A, const std::vector<std::int64_t>& mult) {
  DimVec d(A.n(), 0);
  for (std::size_t i = 0; i < A.n(); ++i) {
    if (mult[i] < 0) throw std::domain_error("negative projective multiplicity");
    for (std::size_t j = 0; j < A.n(); ++j) d[j] += static_cast<std::size_t>(mult[i]) * A.quiver().paths(i, j).size();
  }
  return d;
}

Subrep radical_subrep(const PathAlgebra& A, const Rep& M) {
  const auto& F = A.field();
  const auto& arrows = A.quiver().arrows();
  Subrep rad;
  for (std::size_t w = 0; w < A.n(); ++w) {
    Matrix span(M.dims[w], 0);
    for (std::size_t ai = 0; ai < arrows.size(); ++ai)
      if (arrows[ai].target == w) span = hstack(span, M.maps[ai]);
    rad.basis.push_back(column_basis(F, span));
  }
  return rad;
}

Rep radical(const PathAlgebra& A, const Rep& M) { return restrict_to(A, M, radical_subrep(A, M)); }

Rep top(const PathAlgebra& A, const Rep& M) { return quotient(A, M, radical_subrep(A, M)).rep; }

DimVec top_dims(const PathAlgebra& A, const Rep& M) {
  const Subrep rad = radical_subrep(A, M);
  DimVec d;
  for (std::size_t w = 0; w < A.n(); ++w) d.push_back(M.dims[w] - rad.basis[w].cols());
  return d;
}

DimVec projective_multiplicity(const PathAlgebra& A, const Rep& P) { return top_dims(A, P); }

bool is_projective(const PathAlgebra& A, const Rep& M) {
  const DimVec t = top_dims(A, M);
  return projective_dims(A, std::vector<std::int64_t>(t.begin(), t.end())) == M.dims;
}

ProjectiveCover projective_cover(const PathAlgebra& A, const Rep& M) {
  const auto& F = A.field();
  const auto& Q = A.quiver();
  const Subrep rad = radical_subrep(A, M);
  ProjectiveCover cover;
  cover.mult.assign(A.n(), 0);
  std::vector<Matrix> gens(A.n());
  for (std::size_t w = 0; w < A.n(); ++w) {
    gens[w] = top_generators(A, M, rad, w);
    cover.mult[w] = gens[w].cols();
  }
  cover.P = projective_sum(A, cover.mult);
  // summands are ordered by vertex, then generator; each contributes paths(w, j) columns at j
  for (std::size_t j = 0; j < A.n(); ++j) {
    Matrix e(M.dims[j], cover.P.dims[j]);
    std::size_t col = 0;
    for (std::size_t w = 0; w < A.n(); ++w)
      for (std::size_t k = 0; k < gens[w].cols(); ++k) {
        const Vec g = gens[w].column(k);
        for (const auto& path : Q.paths(w, j)) {
          const Vec img = multiply(F, path_map(A, M, w, path), g);
          for (std::size_t r = 0; r < img.size(); ++r) e(r, col) = img[r];
          ++col;
        }
      }
    cover.epi.at.push_back(std::move(e));
  }
  if (!is_surjective(A, cover.epi)) throw InconsistencyError("projective cover is not surjective");
  return cover;
}

ProjResolution min_proj_resolution(const PathAlgebra& A, const Rep& M) {
  ProjectiveCover cover = projective_cover(A, M);
  const Subrep K = kernel(A, cover.epi, cover.P);
  ProjResolution res;
  res.Omega = restrict_to(A, cover.P, K);
  res.PM = std::move(cover.P);
  res.delta.at = K.basis;
  res.epi = std::move(cover.epi);
  return res;
}

DimVec top_rank(const PathAlgebra& A, const RepMap& f, const Rep& Q, const Rep& P) {
  const auto& F = A.field();
  const Subrep radQ = radical_subrep(A, Q);
  const Subrep radP = radical_subrep(A, P);
  DimVec r;
  for (std::size_t w = 0; w < A.n(); ++w) {
    const Matrix g = multiply(F, f.at[w], top_generators(A, Q, radQ, w));
    r.push_back(rank(F, hstack(radP.basis[w], g)) - radP.basis[w].cols());
  }
  return r;
}

StrippedMap strip_common_summand(const PathAlgebra& A, const RepMap& f, const Rep& Q, const Rep& P) {
  if (!is_injective(A, f)) throw std::domain_error("strip_common_summand: map is not injective");
  if (!is_projective(A, Q) || !is_projective(A, P))
    throw std::domain_error("strip_common_summand: ends must be projective");
  StrippedMap out;
  out.Y = cokernel(A, f, P).rep;
  out.R = top_rank(A, f, Q, P);
  const DimVec multP = projective_multiplicity(A, P);
  const DimVec topY = top_dims(A, out.Y);
  for (std::size_t i = 0; i < A.n(); ++i)
    if (multP[i] != topY[i] + out.R[i]) throw InconsistencyError("common summand does not match P = P_Y + R");
  out.R_rep = projective_sum(A, out.R);
  return out;
}

}  // namespace hallcx

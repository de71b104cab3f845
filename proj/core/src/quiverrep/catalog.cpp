#include "hallcx/quiverrep/catalog.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "hallcx/quiverrep/hom.hpp"
#include "hallcx/quiverrep/projective.hpp"

namespace hallcx {

std::string to_string(const RepClassId& id) {
  std::string s = "(";
  for (std::size_t i = 0; i < id.dims.size(); ++i) s += (i ? "," : "") + std::to_string(id.dims[i]);
  return s + ")#" + std::to_string(id.index);
}

std::vector<DimVec> dims_up_to(const DimVec& dmax) {
  std::vector<DimVec> out;
  DimVec d(dmax.size(), 0);
  for (;;) {
    out.push_back(d);
    std::size_t i = d.size();
    for (;;) {
      if (i == 0) return out;
      --i;
      if (d[i] < dmax[i]) {
        ++d[i];
        break;
      }
      d[i] = 0;
    }
  }
}

RepCatalog::RepCatalog(PathAlgebra A, std::uint64_t budget) : A_(std::move(A)), budget_(budget) {}

namespace {

mpz_class gl_order(std::uint64_t p, std::size_t n) {
  const mpz_class P(static_cast<unsigned long>(p));
  mpz_class pn, out = 1;
  mpz_pow_ui(pn.get_mpz_t(), P.get_mpz_t(), n);
  for (std::size_t i = 0; i < n; ++i) {
    mpz_class pi;
    mpz_pow_ui(pi.get_mpz_t(), P.get_mpz_t(), i);
    out *= pn - pi;
  }
  return out;
}

}  // namespace

RepCatalog::Entry& RepCatalog::entry(const DimVec& d) {
  std::lock_guard lock(mu_);
  if (d.size() != A_.n()) throw std::domain_error("dimension vector has wrong length");
  auto it = entries_.find(d);
  if (it != entries_.end()) return *it->second;

  const auto& F = A_.field();
  auto e = std::make_unique<Entry>();
  auto add_class = [&](Rep r, std::vector<RepClassId> parts) {
    e->prints.push_back(fingerprint(A_, r));
    e->reps.push_back(std::move(r));
    e->parts.push_back(std::move(parts));
  };

  // decomposable classes: sums of at least two indecomposables of smaller dims
  std::vector<RepClassId> smaller;
  for (const auto& c : dims_up_to(d)) {
    if (c == d || std::accumulate(c.begin(), c.end(), std::size_t{0}) == 0) continue;
    const Entry& sub = entry(c);
    for (std::size_t i = 0; i < sub.reps.size(); ++i)
      if (sub.parts[i].size() == 1) smaller.push_back({c, i});
  }
  std::sort(smaller.begin(), smaller.end());
  const std::size_t total_dim = std::accumulate(d.begin(), d.end(), std::size_t{0});
  if (total_dim == 0) {
    add_class(semisimple(A_, d), {});
  } else {
    std::vector<RepClassId> chosen;
    DimVec rest = d;
    std::function<void(std::size_t)> go = [&](std::size_t from) {
      if (std::all_of(rest.begin(), rest.end(), [](std::size_t x) { return x == 0; })) {
        Rep r = zero_rep(A_);
        for (const auto& id : chosen) r = direct_sum(r, entries_.at(id.dims)->reps[id.index]);
        add_class(std::move(r), chosen);
        return;
      }
      for (std::size_t i = from; i < smaller.size(); ++i) {
        const auto& c = smaller[i].dims;
        bool fits = true;
        for (std::size_t v = 0; v < d.size(); ++v) fits = fits && c[v] <= rest[v];
        if (!fits) continue;
        for (std::size_t v = 0; v < d.size(); ++v) rest[v] -= c[v];
        chosen.push_back(smaller[i]);
        go(i);
        chosen.pop_back();
        for (std::size_t v = 0; v < d.size(); ++v) rest[v] += c[v];
      }
    };
    go(0);
  }

  const auto& arrows = A_.quiver().arrows();
  std::size_t cells_count = 0;
  for (const auto& a : arrows) cells_count += d[a.target] * d[a.source];
  // without relations, orbits |GL_d| / |Aut M| partition all p^cells tuples
  const bool free_algebra = A_.quiver().relations().empty();
  mpz_class tuples;
  mpz_ui_pow_ui(tuples.get_mpz_t(), F.p(), cells_count);
  mpz_class gl = 1;
  for (auto x : d) gl *= gl_order(F.p(), x);
  mpz_class covered = 0;
  auto orbit = [&](std::size_t i) {
    Integer a = 0;
    if (e->parts[i].size() <= 1) {
      a = aut_count(A_, e->reps[i], budget_);
    } else {
      std::vector<IsotypicBlock> blocks;
      const auto& parts = e->parts[i];
      for (std::size_t j = 0; j < parts.size();) {
        std::size_t k = j;
        while (k < parts.size() && parts[k] == parts[j]) ++k;
        const Rep& x = entries_.at(parts[j].dims)->reps[parts[j].index];
        blocks.push_back({aut(parts[j]), hom_dim(A_, x, x), k - j});
        j = k;
      }
      a = aut_from_blocks(F.p(), hom_dim(A_, e->reps[i], e->reps[i]), blocks);
    }
    e->aut[i] = a;
    covered += gl / a;
  };
  for (std::size_t i = 0; i < e->reps.size(); ++i) orbit(i);

  if (total_dim > 0 && (!free_algebra || covered != tuples)) {
    // sweep for the indecomposables of this dimension vector
    checked_power(F.p(), cells_count, budget_, "representation enumeration");
    Rep cur = semisimple(A_, d);
    std::vector<Elem*> cells;
    for (auto& m : cur.maps)
      for (auto& x : m.data()) cells.push_back(&x);
    for (;;) {
      if (satisfies_relations(A_, cur)) {
        const Fingerprint fp = fingerprint(A_, cur);
        bool known = false;
        for (std::size_t i = 0; i < e->reps.size() && !known; ++i)
          known = e->prints[i] == fp && is_isomorphic(A_, e->reps[i], cur, budget_);
        if (!known) {
          const RepClassId id{d, e->reps.size()};
          add_class(cur, {id});
          orbit(id.index);
          if (free_algebra && covered == tuples) break;
        }
      }
      std::size_t i = 0;
      for (; i < cells.size(); ++i) {
        if (++*cells[i] < F.p()) break;
        *cells[i] = 0;
      }
      if (i == cells.size()) break;
    }
    if (free_algebra && covered != tuples) throw InconsistencyError("orbit sizes do not account for every tuple");
  }
  auto& slot = entries_[d];
  slot = std::move(e);
  return *slot;
}

std::size_t RepCatalog::class_count(const DimVec& d) { return entry(d).reps.size(); }

const Rep& RepCatalog::rep(const RepClassId& id) {
  auto& e = entry(id.dims);
  if (id.index >= e.reps.size()) throw std::out_of_range("unknown representation class " + to_string(id));
  return e.reps[id.index];
}

RepClassId RepCatalog::classify(const Rep& M) {
  auto& e = entry(M.dims);
  const Fingerprint fp = fingerprint(A_, M);
  std::lock_guard lock(mu_);
  for (std::size_t i = 0; i < e.reps.size(); ++i)
    if (e.prints[i] == fp && is_isomorphic(A_, e.reps[i], M, budget_)) return {M.dims, i};
  throw InconsistencyError("representation matches no enumerated class");
}

Integer RepCatalog::aut(const RepClassId& id) {
  rep(id);
  std::lock_guard lock(mu_);
  return entry(id.dims).aut.at(id.index);
}

const std::vector<RepClassId>& RepCatalog::summands(const RepClassId& id) {
  rep(id);
  std::lock_guard lock(mu_);
  return entry(id.dims).parts[id.index];
}

bool RepCatalog::is_indecomposable(const RepClassId& id) {
  const auto& s = summands(id);
  return s.size() == 1 && s.front() == id;
}

std::vector<RepClassId> RepCatalog::classes_up_to(const DimVec& dmax) {
  std::vector<RepClassId> out;
  for (const auto& d : dims_up_to(dmax)) {
    const std::size_t n = class_count(d);
    for (std::size_t i = 0; i < n; ++i) out.push_back({d, i});
  }
  return out;
}

std::vector<RepClassId> RepCatalog::indecomposables_up_to(const DimVec& dmax) {
  std::vector<RepClassId> out;
  for (const auto& id : classes_up_to(dmax))
    if (std::accumulate(id.dims.begin(), id.dims.end(), std::size_t{0}) > 0 && is_indecomposable(id))
      out.push_back(id);
  return out;
}

RepClassId RepCatalog::projective_class(std::size_t i) { return classify(projective(A_, i)); }

std::vector<Rep> enumerate_iso_classes(const PathAlgebra& A, const DimVec& dmax, std::uint64_t budget) {
  RepCatalog cat(A, budget);
  std::vector<Rep> out;
  for (const auto& id : cat.classes_up_to(dmax)) out.push_back(cat.rep(id));
  return out;
}

}  // namespace hallcx

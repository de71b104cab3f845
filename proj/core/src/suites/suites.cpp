#include "hallcx/suites/suites.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "hallcx/complexcat/cxhom.hpp"
#include "hallcx/hallcore/theorem.hpp"
#include "hallcx/integration/integration.hpp"
#include "hallcx/quiverrep/ext.hpp"
#include "hallcx/quiverrep/hom.hpp"
#include "hallcx/quiverrep/projective.hpp"

namespace hallcx {

namespace {

std::string str(const Rational& x) { return x.get_str(); }

DimVec unit_dims(std::size_t n) { return DimVec(n, 1); }

template <class Cat>
void riedtmann_peng(Report& rep, HallAlgebra<Cat>& H, const std::vector<typename Cat::Key>& keys,
                    const std::string& where) {
  auto& cat = H.category();
  for (const auto& M : keys)
    for (const auto& N : keys) {
      const std::string ps = where + " " + cat.name(M) + " " + cat.name(N);
      const auto counts = H.ext_counts(M, N);
      const Rational hom = power_of(cat.p(), static_cast<std::int64_t>(H.hom_dim(M, N)));
      std::uint64_t total = 0;
      for (const auto& [L, e] : counts) {
        const Rational lhs = rational_of(H.hall_number_g(M, N, L)) * hom * rational_of(cat.aut(M)) *
                             rational_of(cat.aut(N));
        const Rational rhs = rational_of(e) * rational_of(cat.aut(L));
        rep.add("g |Hom| a_M a_N = |Ext_L| a_L", ps + " " + cat.name(L), lhs == rhs, str(lhs), str(rhs));
        total += e;
      }
      const Rational want = power_of(cat.p(), static_cast<std::int64_t>(H.ext1_dim(M, N)));
      rep.add("sum rule", ps, rational_of(total) == want, std::to_string(total), str(want));
      // every middle term seen by subobject counting is an extension
      const auto by_sub = H.basis_product_by_subobjects(M, N);
      for (const auto& [L, c] : by_sub.terms())
        rep.add("middle terms agree", ps + " " + cat.name(L), counts.count(L) == 1);
    }
}

template <class Cat>
void associativity(Report& rep, HallAlgebra<Cat>& H, const std::vector<typename Cat::Key>& keys, std::size_t samples,
                   std::uint64_t seed, const std::string& where) {
  std::mt19937_64 rng(seed);
  auto& cat = H.category();
  for (std::size_t t = 0; t < samples; ++t) {
    const auto& a = keys[rng() % keys.size()];
    const auto& b = keys[rng() % keys.size()];
    const auto& c = keys[rng() % keys.size()];
    const auto x = H.basis(a), y = H.basis(b), z = H.basis(c);
    rep.add("(xy)z = x(yz)", where + " " + cat.name(a) + " " + cat.name(b) + " " + cat.name(c),
            H.product(H.product(x, y), z) == H.product(x, H.product(y, z)));
  }
}

std::vector<CxKey> grid(CxContext& ctx, CxKind kind, std::size_t m, const SuiteConfig& cfg) {
  return key_grid(ctx, kind, m, cfg.dmax, std::max<std::size_t>(cfg.max_summands, 1), cfg.levels.lo, cfg.levels.hi);
}

std::string amb(const char* kind, std::size_t m) { return std::string(kind) + "(" + std::to_string(m) + ")"; }

Report suite_riedtmann_peng(const SuiteConfig& cfg) {
  Report rep{"riedtmann-peng", {}};
  CxContext ctx(cfg.algebra, cfg.budget);
  ModuleCategory mc(ctx.catalog());
  HallAlgebra Hm(mc);
  riedtmann_peng(rep, Hm, ctx.catalog().classes_up_to(cfg.dmax), "modules");
  for (std::size_t m : cfg.ms)
    for (const CxKind kind : {CxKind::cyclic, CxKind::window}) {
      ComplexCategory C(ctx, kind, m);
      HallAlgebra H(C);
      riedtmann_peng(rep, H, grid(ctx, kind, m, cfg), amb(kind == CxKind::cyclic ? "cyclic" : "window", m));
    }
  return rep;
}

Report suite_assoc(const SuiteConfig& cfg) {
  Report rep{"assoc", {}};
  const std::size_t samples = std::max<std::size_t>(cfg.samples, 50);
  CxContext ctx(cfg.algebra, cfg.budget);
  ModuleCategory mc(ctx.catalog());
  HallAlgebra Hm(mc);
  associativity(rep, Hm, ctx.catalog().classes_up_to(cfg.dmax), samples, cfg.seed, "modules");
  for (std::size_t m : cfg.ms)
    for (const CxKind kind : {CxKind::cyclic, CxKind::window}) {
      ComplexCategory C(ctx, kind, m);
      HallAlgebra H(C);
      associativity(rep, H, grid(ctx, kind, m, cfg), samples, cfg.seed + m,
                    amb(kind == CxKind::cyclic ? "cyclic" : "window", m));
    }
  return rep;
}

Report suite_thm_3_4(const SuiteConfig& cfg) {
  Report rep{"thm-3-4", {}};
  CxContext ctx(cfg.algebra, cfg.budget);
  for (std::size_t m : cfg.ms) {
    ComplexCategory cyc(ctx, CxKind::cyclic, m);
    ComplexCategory win(ctx, CxKind::window, m);
    HallAlgebra Hc(cyc);
    HallAlgebra Hw(win);
    const auto keys = grid(ctx, CxKind::cyclic, m, cfg);
    for (const auto& a : keys)
      for (const auto& b : keys) {
        const auto xy = Hc.product(Hc.basis(a), Hc.basis(b));
        const auto lhs = chi(cyc, xy);
        const auto rhs = Hw.product(chi(cyc, Hc.basis(a)), chi(cyc, Hc.basis(b)));
        rep.add("chi(xy) = chi(x) chi(y)", amb("m", m) + " " + to_string(a) + " " + to_string(b), lhs == rhs);
      }
    // d_0 = 0 classes up to one more summand than the product grid
    std::set<CxKey> image;
    std::size_t d0 = 0;
    bool sections = true;
    for (const auto& k : key_grid(ctx, CxKind::cyclic, m, cfg.dmax, std::max<std::size_t>(cfg.max_summands, 1) + 1))
      if (auto w = chi(cyc, k)) {
        ++d0;
        image.insert(*w);
        sections = sections && chi_section(cyc, *w) == k;
      }
    rep.add("rho injective on d_0 = 0 keys", amb("m", m), image.size() == d0, std::to_string(image.size()),
            std::to_string(d0));
    rep.add("section inverts rho on d_0 = 0 keys", amb("m", m), sections);
    bool onto = true;
    for (const auto& w : key_grid(ctx, CxKind::window, m, cfg.dmax, std::max<std::size_t>(cfg.max_summands, 1) + 1)) {
      const auto back = chi(cyc, chi_section(cyc, w));
      onto = onto && back && *back == w;
    }
    rep.add("rho surjective onto window keys", amb("m", m), onto);
  }
  return rep;
}

Report suite_lemma_3_3(const SuiteConfig& cfg) {
  Report rep{"lemma-3-3", {}};
  CxContext ctx(cfg.algebra, cfg.budget);
  for (std::size_t m : cfg.ms) {
    ComplexCategory cyc(ctx, CxKind::cyclic, m);
    HallAlgebra Hc(cyc);
    const auto keys = grid(ctx, CxKind::cyclic, m, cfg);
    for (const auto& a : keys)
      for (const auto& b : keys) {
        if (d0_vanishes(cyc, a) && d0_vanishes(cyc, b)) continue;
        const auto xy = Hc.product(Hc.basis(a), Hc.basis(b));
        rep.add("product with a factor in I stays in I", amb("m", m) + " " + to_string(a) + " " + to_string(b),
                ideal_I_part(cyc, xy) == xy);
      }
  }
  return rep;
}

Report suite_lemma_5_1(const SuiteConfig& cfg) {
  Report rep{"lemma-5-1", {}};
  CxContext ctx(cfg.algebra, cfg.budget);
  const auto& A = ctx.base();
  const auto classes = ctx.catalog().indecomposables_up_to(cfg.dmax);
  for (const auto& a : classes)
    for (const auto& b : classes) {
      const Rep& M = ctx.catalog().rep(a);
      const Rep& N = ctx.catalog().rep(b);
      const auto hom = static_cast<std::int64_t>(hom_dim(A, M, N));
      const auto ext = static_cast<std::int64_t>(ext1_dim(A, M, N));
      const std::int64_t chi = euler_form(A.quiver(), M.dims, N.dims);
      for (std::int64_t r = -1; r <= 1; ++r)
        for (std::int64_t l = -1; l <= 1; ++l) {
          const Cx X = shift(ctx, make_CM(ctx, M, 0), r), Y = shift(ctx, make_CM(ctx, N, 0), l);
          const std::string ps = "M=" + to_string(a) + " N=" + to_string(b) + " r=" + std::to_string(r) +
                                 " l=" + std::to_string(l);
          for (std::int64_t i = 1; i <= 3; ++i) {
            const auto got = static_cast<std::int64_t>(homotopy_hom_dim(ctx, X, Y, i));
            const std::int64_t e = l - r + i;
            const std::int64_t want = e == 0 ? hom : (e == 1 ? ext : 0);
            const char* item = l == r ? (i >= 2 ? "(1) Ext^i vanishes for i >= 2" : "(2) Ext^1 is Ext^1_A")
                                      : (l == r + 1 ? "(3) Ext^i into the next shift vanishes" : "Ext^i oracle");
            rep.add(item, ps + " i=" + std::to_string(i), got == want, std::to_string(got), std::to_string(want));
          }
          const std::int64_t e = euler_form_cb(ctx, X, Y);
          if (r - l >= 1) {
            const std::int64_t want = (r - l) % 2 ? -chi : chi;
            rep.add("(4) Euler form alternates", ps, e == want, std::to_string(e), std::to_string(want));
          }
          if (l - r > 1) rep.add("(5) Euler form vanishes", ps, e == 0, std::to_string(e), "0");
        }
    }
  return rep;
}

std::vector<RepClassId> relation_classes(CxContext& ctx, const SuiteConfig& cfg) {
  return ctx.catalog().classes_up_to(cfg.dmax);
}

void merge(Report& into, const Report& from) { into.checks.insert(into.checks.end(), from.checks.begin(), from.checks.end()); }

Report suite_rel_5_5(const SuiteConfig& cfg) {
  CxContext ctx(cfg.algebra, cfg.budget);
  auto mh = MHAlgebra::bounded(ctx);
  return verify_relations_55(*mh, relation_classes(ctx, cfg), cfg.levels);
}

Report suite_rel_5_7(const SuiteConfig& cfg) {
  CxContext ctx(cfg.algebra, cfg.budget);
  auto mh = MHAlgebra::bounded(ctx);
  return verify_relations_57(*mh, relation_classes(ctx, cfg), cfg.levels);
}

Report suite_rel_6_4(const SuiteConfig& cfg) {
  CxContext ctx(cfg.algebra, cfg.budget);
  Report rep{"rel-6-4", {}};
  for (std::size_t m : cfg.ms) {
    auto w = MHAlgebra::window(ctx, m);
    merge(rep, verify_relations_64(*w, relation_classes(ctx, cfg)));
  }
  return rep;
}

Report suite_basis_5_4(const SuiteConfig& cfg) {
  CxContext ctx(cfg.algebra, cfg.budget);
  auto mh = MHAlgebra::bounded(ctx);
  return basis_check_cb(*mh, relation_classes(ctx, cfg), cfg.levels, std::max<std::size_t>(cfg.samples, 200), cfg.seed);
}

Report suite_basis_6_1(const SuiteConfig& cfg) {
  CxContext ctx(cfg.algebra, cfg.budget);
  Report rep{"basis-6-1", {}};
  for (std::size_t m : cfg.ms) {
    auto w = MHAlgebra::window(ctx, m);
    merge(rep, basis_check_cm(*w, relation_classes(ctx, cfg), std::max<std::size_t>(cfg.samples, 200), cfg.seed + m));
  }
  return rep;
}

Report suite_embed(const SuiteConfig& cfg) {
  CxContext ctx(cfg.algebra, cfg.budget);
  auto mh = MHAlgebra::bounded(ctx);
  Report rep{"embed-psi-lambda-phi", {}};
  for (std::size_t m : cfg.ms) {
    auto w = MHAlgebra::window(ctx, m);
    merge(rep, verify_embeddings(*mh, *w, relation_classes(ctx, cfg), cfg.levels));
  }
  return rep;
}

Report suite_psi_hat(const SuiteConfig& cfg) {
  CxContext ctx(cfg.algebra, cfg.budget);
  auto mh = MHAlgebra::bounded(ctx);
  return verify_psi_hat(*mh, relation_classes(ctx, cfg), cfg.levels);
}

Report suite_integration(const SuiteConfig& cfg) {
  for (std::size_t m : cfg.ms)
    if (m != 2) throw std::domain_error("integration is defined on C^2(P) only (m = 2)");
  CxContext ctx(cfg.algebra, cfg.budget);
  ComplexCategory C(ctx, CxKind::window, 2);
  HallAlgebra H(C);
  QuantumTorus T(ctx);
  return verify_integration(H, T, grid(ctx, CxKind::window, 2, cfg), cfg.seed);
}

Report suite_krull_schmidt(const SuiteConfig& cfg) {
  Report rep{"krull-schmidt", {}};
  CxContext ctx(cfg.algebra, cfg.budget);
  std::mt19937_64 rng(cfg.seed);
  struct Amb {
    CxKind kind;
    std::size_t m;
  };
  std::vector<Amb> ambients{{CxKind::bounded, 0}};
  for (std::size_t m : cfg.ms) {
    ambients.push_back({CxKind::cyclic, m});
    ambients.push_back({CxKind::window, m});
  }
  const std::size_t trials = std::max<std::size_t>(cfg.samples, 100);
  for (const auto& a : ambients) {
    std::vector<Label> letters;
    for (const auto& k : key_grid(ctx, a.kind, a.m, cfg.dmax, 1, cfg.levels.lo, cfg.levels.hi))
      if (k.labels.size() == 1) letters.push_back(k.labels[0]);
    const std::string where = a.kind == CxKind::bounded ? std::string("bounded")
                                                         : amb(a.kind == CxKind::cyclic ? "cyclic" : "window", a.m);
    if (letters.empty()) continue;
    for (std::size_t t = 0; t < trials; ++t) {
      CxKey key{a.kind, a.m, {}};
      const std::size_t size = 1 + rng() % 3;
      for (std::size_t i = 0; i < size; ++i) key.labels.push_back(letters[rng() % letters.size()]);
      std::sort(key.labels.begin(), key.labels.end());
      const CxKey got = decompose(ctx, scramble(ctx, realize(ctx, key), rng));
      rep.add("scrambled sum recovers its summands", where + " " + to_string(key), got == key, to_string(got),
              to_string(key));
    }
  }
  // exhaustive: every window complex whose components are projectives with dims <= (1, .., 1)
  const auto& A = ctx.base();
  std::vector<Rep> projs;
  for (const auto& mult : dims_up_to(unit_dims(ctx.n()))) {
    const Rep P = projective_sum(A, mult);
    bool small = true;
    for (auto d : P.dims) small = small && d <= 1;
    if (small) projs.push_back(P);
  }
  for (std::size_t m : cfg.ms) {
    const CxShape s = window_shape(m);
    std::size_t seen = 0;
    bool labels_ok = true;
    std::vector<std::size_t> idx(m, 0);
    for (;;) {
      std::vector<Rep> comps;
      for (auto i : idx) comps.push_back(projs[i]);
      for_each_complex(ctx, s, comps, [&](const Cx& X) {
        const CxKey k = decompose(ctx, X);
        for (const auto& l : k.labels) labels_ok = labels_ok && label_in_range(k, l);
        ++seen;
      });
      std::size_t i = 0;
      for (; i < idx.size(); ++i) {
        if (++idx[i] < projs.size()) break;
        idx[i] = 0;
      }
      if (i == idx.size()) break;
    }
    rep.add("small window complexes decompose into listed labels",
            amb("window", m) + " " + std::to_string(seen) + " complexes", labels_ok && seen > 0);
  }
  return rep;
}

Report suite_line_count(const SuiteConfig& cfg) {
  Report rep{"line-count", {}};
  for (std::uint32_t p : {2u, 3u, 5u}) {
    RepCatalog cat(PathAlgebra(Quiver::acyclic(1, {}), PrimeField(p)), cfg.budget);
    ModuleCategory C(cat);
    HallAlgebra H(C);
    const RepClassId k{{1}, 0}, k2{{2}, 0};
    const auto g = H.hall_number_g(k, k, k2);
    rep.add("g^{k^2}_{k,k} = p + 1", "p=" + std::to_string(p), g == p + 1, std::to_string(g), std::to_string(p + 1));
  }
  return rep;
}

Report suite_hall_values(const SuiteConfig& cfg) {
  Report rep{"hall-values", {}};
  const PathAlgebra A(Quiver::acyclic(2, {{0, 1}}), PrimeField(2));
  RepCatalog cat(A, cfg.budget);
  ModuleCategory C(cat);
  HallAlgebra H(C);
  const auto s1 = cat.classify(semisimple(A, {1, 0}));
  const auto s2 = cat.classify(semisimple(A, {0, 1}));
  const auto p1 = cat.projective_class(0);
  const auto sum = cat.classify(semisimple(A, {1, 1}));
  using E = HallElt<RepClassId>;
  const E want12 = E::basis(sum) + E::basis(p1);
  const E want21 = E::basis(sum);
  const E r1 = E(E::basis(s1)), r2 = E::basis(s2);
  rep.add("[S1][S2] by extensions", "A2 p=2", H.product(r1, r2) == want12);
  rep.add("[S1][S2] by subobjects", "A2 p=2", H.basis_product_by_subobjects(s1, s2) == want12);
  rep.add("[S2][S1] by extensions", "A2 p=2", H.product(r2, r1) == want21);
  rep.add("[S2][S1] by subobjects", "A2 p=2", H.basis_product_by_subobjects(s2, s1) == want21);
  return rep;
}

}  // namespace

const std::vector<SuiteInfo>& suite_registry() {
  static const std::vector<SuiteInfo> reg{
      {"riedtmann-peng", "Riedtmann-Peng identity and the Ext sum rule", suite_riedtmann_peng},
      {"line-count", "Hall numbers of the one-vertex quiver", suite_line_count},
      {"assoc", "associativity of Hall products", suite_assoc},
      {"thm-3-4", "chi is a homomorphism and rho a bijection on keys", suite_thm_3_4},
      {"lemma-3-3", "classes with d_0 != 0 span an ideal", suite_lemma_3_3},
      {"lemma-5-1", "Ext and Euler identities between shifted C_M", suite_lemma_5_1},
      {"rel-5-5", "defining relations of MH(A)", suite_rel_5_5},
      {"rel-6-4", "defining relations of MH_m(A)", suite_rel_6_4},
      {"rel-5-7", "derived Hall relations on Z images", suite_rel_5_7},
      {"psi-hat", "Psi-hat round trips on generators", suite_psi_hat},
      {"basis-5-4", "ordered monomial basis of MH(A)", suite_basis_5_4},
      {"basis-6-1", "ordered monomial basis of MH_m(A)", suite_basis_6_1},
      {"embed-psi-lambda-phi", "embeddings psi_r, phi_r and lambda", suite_embed},
      {"krull-schmidt", "decomposition round trips", suite_krull_schmidt},
      {"integration-7", "integration map on the Hall algebra of C^2(P)", suite_integration},
      {"hall-values", "worked products on A2 at p = 2", suite_hall_values},
  };
  return reg;
}

Report run_suite(const std::string& name, const SuiteConfig& cfg) {
  for (const auto& s : suite_registry())
    if (s.name == name) return s.run(cfg);
  throw std::out_of_range("unknown suite " + name);
}

}  // namespace hallcx

// Runs every acceptance criterion on the fixture grid and prints one line each.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "hallcx/suites/suites.hpp"

using namespace hallcx;

namespace {

struct Fixture {
  const char* name;
  PathAlgebra algebra;
  DimVec dmax;
};

std::vector<Fixture> fixtures() {
  const Quiver a2 = Quiver::acyclic(2, {{0, 1}});
  const Quiver a3 = Quiver::acyclic(3, {{0, 1}, {1, 2}});
  return {{"A2 p=2", PathAlgebra(a2, PrimeField(2)), {2, 2}},
          {"A2 p=3", PathAlgebra(a2, PrimeField(3)), {2, 2}},
          {"A3 p=2", PathAlgebra(a3, PrimeField(2)), {1, 1, 1}},
          {"A3 p=3", PathAlgebra(a3, PrimeField(3)), {1, 1, 1}}};
}

struct Run {
  std::vector<std::string> suites;
  std::vector<std::size_t> ms{2, 3};
  LevelRange levels{-2, 3};
  bool unit_dims = false;  // dims <= (1, .., 1) instead of the fixture bound
  bool once = false;       // fixture independent
};

struct Tally {
  std::size_t passed = 0, failed = 0;
  std::string first_failure;
};

void run(const Run& r, Tally& t) {
  for (const auto& f : fixtures()) {
    SuiteConfig cfg{f.algebra, r.unit_dims ? DimVec(f.algebra.n(), 1) : f.dmax};
    cfg.ms = r.ms;
    cfg.levels = r.levels;
    for (const auto& s : r.suites) {
      const Report rep = run_suite(s, cfg);
      t.passed += rep.passed();
      t.failed += rep.failed();
      for (const auto& c : rep.checks)
        if (!c.pass && t.first_failure.empty())
          t.first_failure = std::string(f.name) + " " + s + " " + c.relation + " [" + c.params + "]";
    }
    if (r.once) break;
  }
}

}  // namespace

int main() {
  struct Criterion {
    const char* text;
    Run run;
  };
  const std::vector<Criterion> criteria{
      {"Riedtmann-Peng identity and Ext sum rule", {{"riedtmann-peng"}, {2, 3}, {-2, 3}, true}},
      {"g^{k^2}_{k,k} = p + 1 on the one-vertex quiver, p in {2,3,5}", {{"line-count"}, {}, {}, false, true}},
      {"associativity in H(A), H(C_m(P)), H(C^m(P))", {{"assoc"}, {2, 3}, {-2, 3}, true}},
      {"chi is a homomorphism and rho a bijection on keys (m = 2, 3)", {{"thm-3-4"}, {2, 3}, {-2, 3}, true}},
      {"ideal closure of I", {{"lemma-3-3"}, {2, 3}, {-2, 3}, true}},
      {"Ext vanishing and Euler identities between shifted C_M", {{"lemma-5-1"}, {}, {}, true}},
      {"relations in MH(A) and MH_m(A) (m = 2, 3)", {{"rel-5-5", "rel-6-4"}, {2, 3}, {-2, 3}}},
      {"derived Hall relations on Z images; psi-hat round trips for |level| <= 2",
       {{"rel-5-7", "psi-hat"}, {}, {-2, 2}}},
      {"ordered monomial bases of MH(A) and MH_m(A)", {{"basis-5-4", "basis-6-1"}, {2, 3}, {-2, 3}}},
      {"Krull-Schmidt round trips and exhaustive small decompositions", {{"krull-schmidt"}, {1, 2, 3}, {-1, 1}, true}},
      {"integration map on H(C^2(P)): homomorphism, additivity, Lambda", {{"integration-7"}, {2}, {-2, 3}, true}},
      {"[S1][S2] = [S1+S2] + [P1] and [S2][S1] = [S1+S2] on A2, p = 2", {{"hall-values"}, {}, {}, false, true}},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Tally t;
    std::string error;
    try {
      run(criteria[i].run, t);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = error.empty() && t.failed == 0 && t.passed > 0;
    failures += !pass;
    std::printf("%s %2zu  %s  (%zu/%zu checks, %.1fs)%s%s\n", pass ? "PASS" : "FAIL", i + 1, criteria[i].text,
                t.passed, t.passed + t.failed, secs, error.empty() ? "" : "  error: ", error.c_str());
    if (!t.first_failure.empty()) std::printf("        first failure: %s\n", t.first_failure.c_str());
  }
  return failures == 0 ? 0 : 1;
}

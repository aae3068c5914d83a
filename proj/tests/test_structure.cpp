#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>
#include <string>

#include <nlohmann/json.hpp>

#include "weylreal/structure.hpp"

using namespace weylreal;

namespace {

/// Graded Jacobi residuals recomputed directly from the two defining
/// identities, independent of validate()'s looping strategy.
bool graded_jacobi_ok(const AlgebraSpec& s) {
  for (int mu = 1; mu <= s.n; ++mu)
    for (int al = 1; al <= s.n; ++al)
      for (int be = 1; be <= s.n; ++be)
        for (int nu = 1; nu <= s.n; ++nu) {
          Rational r = 0;
          for (int rho = 1; rho <= s.n; ++rho)
            r += s.c(mu, al, rho) * s.c(rho, be, nu) +
                 s.c(al, be, rho) * s.c(rho, mu, nu) +
                 s.c(be, mu, rho) * s.c(rho, al, nu);
          if (r != 0) return false;
        }
  for (int a = 1; a <= s.m; ++a)
    for (int mu = 1; mu <= s.n; ++mu)
      for (int nu = 1; nu <= s.n; ++nu)
        for (int c = 1; c <= s.m; ++c) {
          Rational r = 0;
          for (int b = 1; b <= s.m; ++b)
            r += s.k(a, nu, b) * s.k(b, mu, c) - s.k(a, mu, b) * s.k(b, nu, c);
          for (int rho = 1; rho <= s.n; ++rho)
            r += s.c(mu, nu, rho) * s.k(a, rho, c);
          if (r != 0) return false;
        }
  return true;
}

int count_family(const ValidationReport& rep, const std::string& fam) {
  int k = 0;
  for (const auto& v : rep.violations)
    if (v.family == fam) ++k;
  return k;
}

}  // namespace

TEST_CASE("spec accessors and antisymmetric writes") {
  AlgebraSpec s;
  s.n = 3;
  s.m = 2;
  s.set_c(1, 2, 3, Rational(1, 2));
  CHECK(s.c(1, 2, 3) == Rational(1, 2));
  CHECK(s.c(2, 1, 3) == Rational(-1, 2));
  CHECK(s.c(1, 2, 1) == 0);
  s.set_c(2, 1, 3, Rational(1));  // overwrites both orientations
  CHECK(s.c(1, 2, 3) == Rational(-1));
  s.set_c(1, 2, 3, Rational(0));  // zero erases
  CHECK(s.C.empty());
  CHECK_THROWS_AS(s.set_c(1, 1, 2, Rational(1)), std::invalid_argument);
  s.set_k(2, 3, 1, Rational(-1, 2));
  CHECK(s.k(2, 3, 1) == Rational(-1, 2));
  CHECK(s.k(3, 2, 1) == 0);  // no symmetry in K
}

TEST_CASE("validate: abelian and hand-built corpus are valid") {
  CHECK(validate(abelian_spec(3, 2)).ok());
  CHECK(validate(abelian_spec(1, 0)).ok());
  CHECK(validate(solvable_2d_spec()).ok());
  CHECK(validate(heisenberg_spec()).ok());
  CHECK(validate(super_n1m1_spec()).ok());
  CHECK(validate(super_n2m1_spec()).ok());
}

TEST_CASE("validate: antisymmetry violation located at its index triple") {
  AlgebraSpec s;
  s.n = 2;
  s.C[{1, 2, 1}] = Rational(1);  // raw write, no mirrored orientation
  auto rep = validate(s);
  CHECK_FALSE(rep.ok());
  REQUIRE(count_family(rep, "antisymmetry") == 1);
  const auto& v = rep.violations.front();
  CHECK(v.family == "antisymmetry");
  CHECK(v.indices == std::vector<int>{1, 2, 1});
  CHECK(v.residual == Rational(1));  // C_{121} + C_{211}
}

TEST_CASE("validate: even Jacobi failure") {
  // [X1,X2]=X2, [X2,X3]=X1 leaves the cyclic sum with an uncancelled -X1.
  AlgebraSpec s;
  s.n = 3;
  s.set_c(1, 2, 2, Rational(1));
  s.set_c(2, 3, 1, Rational(1));
  auto rep = validate(s);
  CHECK_FALSE(rep.ok());
  CHECK(count_family(rep, "antisymmetry") == 0);
  CHECK(count_family(rep, "evenJacobi") > 0);
  CHECK_FALSE(graded_jacobi_ok(s));
}

TEST_CASE("validate: mixed Jacobi failure") {
  // K_{111}=1 with C_{121}=1 breaks the K-compatibility at (a,mu,nu,c)=(1,1,2,1).
  AlgebraSpec s;
  s.n = 2;
  s.m = 1;
  s.set_c(1, 2, 1, Rational(1));
  s.set_k(1, 1, 1, Rational(1));
  auto rep = validate(s);
  CHECK_FALSE(rep.ok());
  CHECK(count_family(rep, "mixedJacobi") > 0);
  bool found = false;
  for (const auto& v : rep.violations)
    if (v.family == "mixedJacobi" && v.indices == std::vector<int>{1, 1, 2, 1}) {
      found = true;
      CHECK(v.residual == Rational(1));
    }
  CHECK(found);
}

TEST_CASE("validate: out-of-range indices reported, not silently read") {
  AlgebraSpec s;
  s.n = 2;
  s.C[{1, 3, 1}] = Rational(1);
  s.C[{3, 1, 1}] = Rational(-1);
  auto rep = validate(s);
  CHECK_FALSE(rep.ok());
  CHECK(count_family(rep, "indexRange") == 2);
}

TEST_CASE("validation report rendering and serialization") {
  AlgebraSpec s;
  s.n = 2;
  s.C[{1, 2, 1}] = Rational(1);
  auto rep = validate(s);
  CHECK(rep.str().find("antisymmetry") != std::string::npos);
  auto j = rep.to_json();
  CHECK(j["valid"] == false);
  // the one-sided entry also breaks Jacobi downstream; the first violation
  // is the antisymmetry one
  CHECK(j["violations"].size() >= 1);
  CHECK(j["violations"][0]["family"] == "antisymmetry");
  CHECK(j["violations"][0]["residual"] == "1");

  auto okj = validate(abelian_spec(1, 1)).to_json();
  CHECK(okj["valid"] == true);
  CHECK(okj["violations"].empty());
  CHECK(validate(abelian_spec(1, 1)).str() == "valid");
}

TEST_CASE("flatten: sparsity pattern for the n=1, m=1 example") {
  auto flat = flatten(super_n1m1_spec());  // K_{111} = 1
  CHECK(flat.n == 1);
  CHECK(flat.m == 1);
  CHECK(flat.dim() == 2);
  CHECK(flat.parity(1) == 0);
  CHECK(flat.parity(2) == 1);
  CHECK(flat.ct(1, 2, 2) == Rational(-1));
  CHECK(flat.ct(2, 1, 2) == Rational(1));
  CHECK(flat.ctilde.size() == 2);  // nothing else nonzero
}

TEST_CASE("flatten: even sector passes through unchanged") {
  auto flat = flatten(solvable_2d_spec());  // C_{121} = 1
  CHECK(flat.ct(1, 2, 1) == Rational(1));
  CHECK(flat.ct(2, 1, 1) == Rational(-1));
  CHECK(flat.ctilde.size() == 2);
}

TEST_CASE("flatten rejects invalid specs; unchecked variant does not") {
  AlgebraSpec s;
  s.n = 3;
  s.set_c(1, 2, 2, Rational(1));
  s.set_c(2, 3, 1, Rational(1));
  CHECK_THROWS_AS(flatten(s), std::invalid_argument);
  auto flat = flatten_unchecked(s);
  CHECK_FALSE(flat_jacobi_violations(flat).empty());
}

TEST_CASE("flat tensor is antisymmetric in its first two indices") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 6; ++trial) {
    auto flat = flatten(random_valid_spec(rng, 3, 2));
    for (int A = 1; A <= flat.dim(); ++A)
      for (int B = 1; B <= flat.dim(); ++B)
        for (int J = 1; J <= flat.dim(); ++J)
          CHECK(flat.ct(A, B, J) == -flat.ct(B, A, J));
  }
}

TEST_CASE("graded Jacobi holds iff flat ungraded Jacobi holds") {
  // Both directions, over valid samples and perturbed ones. Perturbations
  // go through set_c/set_k so antisymmetry stays intact and only the
  // quadratic identities are at stake.
  std::mt19937_64 rng(2024);
  int valid_seen = 0, invalid_seen = 0, trials = 0;
  while ((valid_seen < 25 || invalid_seen < 25) && trials < 400) {
    ++trials;
    int n = 1 + static_cast<int>(rng() % 3);
    int m = static_cast<int>(rng() % 3);
    AlgebraSpec s = random_valid_spec(rng, n, m);
    if (trials % 2 == 1) {
      // perturb two entries; may or may not break Jacobi
      static const Rational pool[] = {Rational(1), Rational(-1),
                                      Rational(1, 2), Rational(2)};
      for (int hit = 0; hit < 2; ++hit) {
        if (s.n >= 2 && (s.m == 0 || rng() % 2 == 0)) {
          int mu = 1 + static_cast<int>(rng() % s.n);
          int nu = 1 + static_cast<int>(rng() % s.n);
          int al = 1 + static_cast<int>(rng() % s.n);
          if (mu != nu) s.set_c(mu, nu, al, pool[rng() % 4]);
        } else if (s.m >= 1 && s.n >= 1) {
          int a = 1 + static_cast<int>(rng() % s.m);
          int nu = 1 + static_cast<int>(rng() % s.n);
          int b = 1 + static_cast<int>(rng() % s.m);
          s.set_k(a, nu, b, pool[rng() % 4]);
        }
      }
    }
    bool graded = validate(s).ok();
    CHECK(graded == graded_jacobi_ok(s));
    bool flat_ok = flat_jacobi_violations(flatten_unchecked(s)).empty();
    CHECK(graded == flat_ok);
    (graded ? valid_seen : invalid_seen)++;
  }
  CHECK(valid_seen >= 25);    // both branches genuinely exercised
  CHECK(invalid_seen >= 25);
}

TEST_CASE("parse_spec: minimal file and rational coefficients") {
  auto s = parse_spec(R"({"n": 2, "m": 0, "C": [[1, 2, 1, "1"]]})");
  CHECK(s == solvable_2d_spec());

  auto t = parse_spec(R"({"n": 2, "m": 1,
                          "C": [[1, 2, 1, "1/3"]],
                          "K": [[1, 1, 1, -2]]})");
  CHECK(t.c(1, 2, 1) == Rational(1, 3));
  CHECK(t.c(2, 1, 1) == Rational(-1, 3));
  CHECK(t.k(1, 1, 1) == Rational(-2));
}

TEST_CASE("parse_spec: antisymmetric completion and explicit consistency") {
  auto s = parse_spec(R"({"n": 2, "m": 0, "C": [[2, 1, 1, "-1"]]})");
  CHECK(s.c(1, 2, 1) == Rational(1));
  // both orientations given and consistent
  auto t = parse_spec(R"({"n": 2, "m": 0, "C": [[1, 2, 1, "1"], [2, 1, 1, "-1"]]})");
  CHECK(t == s);
}

TEST_CASE("parse_spec: malformed inputs throw") {
  CHECK_THROWS_AS(parse_spec("not json"), std::invalid_argument);
  CHECK_THROWS_AS(parse_spec(R"([1,2,3])"), std::invalid_argument);
  CHECK_THROWS_AS(parse_spec(R"({"m": 1})"), std::invalid_argument);  // n missing
  CHECK_THROWS_AS(parse_spec(R"({"n": 2})"), std::invalid_argument);  // m missing
  CHECK_THROWS_AS(parse_spec(R"({"n": -1, "m": 0})"), std::invalid_argument);
  // conflicting orientations
  CHECK_THROWS_AS(parse_spec(R"({"n": 2, "m": 0, "C": [[1,2,1,"1"], [2,1,1,"1"]]})"),
                  std::invalid_argument);
  // duplicate triple
  CHECK_THROWS_AS(parse_spec(R"({"n": 2, "m": 0, "C": [[1,2,1,"1"], [1,2,1,"1"]]})"),
                  std::invalid_argument);
  // diagonal C entry
  CHECK_THROWS_AS(parse_spec(R"({"n": 2, "m": 0, "C": [[1,1,2,"1"]]})"),
                  std::invalid_argument);
  // out-of-range indices
  CHECK_THROWS_AS(parse_spec(R"({"n": 2, "m": 0, "C": [[1,3,1,"1"]]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_spec(R"({"n": 1, "m": 1, "K": [[2,1,1,"1"]]})"),
                  std::invalid_argument);
  // duplicate K triple
  CHECK_THROWS_AS(
      parse_spec(R"({"n": 1, "m": 1, "K": [[1,1,1,"1"],[1,1,1,"1"]]})"),
      std::invalid_argument);
  // bad coefficient forms
  CHECK_THROWS_AS(parse_spec(R"({"n": 2, "m": 0, "C": [[1,2,1,"1/0"]]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_spec(R"({"n": 2, "m": 0, "C": [[1,2,1,1.5]]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_spec(R"({"n": 2, "m": 0, "C": [[1,2,1]]})"),
                  std::invalid_argument);
  // unknown top-level field
  CHECK_THROWS_AS(parse_spec(R"({"n": 2, "m": 0, "check": true})"),
                  std::invalid_argument);
}

TEST_CASE("render_spec round-trips through parse_spec") {
  std::mt19937_64 rng(7);
  std::vector<AlgebraSpec> specs = {
      abelian_spec(2, 1), solvable_2d_spec(),   heisenberg_spec(),
      super_n1m1_spec(),  super_n2m1_spec(),
  };
  for (int i = 0; i < 8; ++i)
    specs.push_back(random_valid_spec(rng, 1 + i % 3, i % 3));
  for (const auto& s : specs) {
    auto text = render_spec(s);
    CHECK(parse_spec(text) == s);
    CHECK(render_spec(parse_spec(text)) == text);  // canonical form is stable
  }
}

TEST_CASE("scaling preserves validity and scales entries linearly") {
  std::mt19937_64 rng(99);
  for (const Rational& h :
       {Rational(2), Rational(-1, 2), Rational(0), Rational(7, 3)}) {
    auto s = random_valid_spec(rng, 3, 1);
    auto sh = scaled(s, h);
    CHECK(validate(sh).ok());
    for (const auto& [key, val] : s.C) CHECK(sh.c(key[0], key[1], key[2]) == h * val);
    for (const auto& [key, val] : s.K) CHECK(sh.k(key[0], key[1], key[2]) == h * val);
    if (h == 0) {
      CHECK(sh.C.empty());
      CHECK(sh.K.empty());
    }
  }
}

TEST_CASE("random_valid_spec: deterministic, valid, and not all abelian") {
  std::mt19937_64 a(5), b(5);
  for (int i = 0; i < 10; ++i) {
    auto s1 = random_valid_spec(a, 3, 2);
    auto s2 = random_valid_spec(b, 3, 2);
    CHECK(s1 == s2);
    CHECK(validate(s1).ok());
  }
  std::mt19937_64 rng(5);
  int nontrivial = 0;
  for (int i = 0; i < 10; ++i) {
    auto s = random_valid_spec(rng, 3, 2);
    if (!s.C.empty() || !s.K.empty()) ++nontrivial;
  }
  CHECK(nontrivial >= 5);  // sampler finds genuinely nonabelian structures
}

TEST_CASE("corpus spot values") {
  auto h = heisenberg_spec();
  CHECK(h.n == 3);
  CHECK(h.c(1, 2, 3) == Rational(1));
  CHECK(h.c(2, 1, 3) == Rational(-1));
  CHECK(h.c(1, 3, 2) == 0);

  auto s21 = super_n2m1_spec();
  CHECK(s21.n == 2);
  CHECK(s21.m == 1);
  CHECK(s21.c(1, 2, 1) == Rational(1));
  CHECK(s21.k(1, 2, 1) == Rational(1));
  CHECK(s21.k(1, 1, 1) == 0);
}

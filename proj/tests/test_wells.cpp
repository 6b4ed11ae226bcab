#include <doctest.h>

#include <set>

#include "support.hpp"

using namespace bolext;
using namespace bolext::test;

namespace {

using Pair = AutPair<PrimeField>;

std::string key(const Pair& p) { return p.alpha.to_string() + p.beta.to_string(); }

PrimeField::Element det2(const Matrix<PrimeField>& a) {
  const PrimeField f = a.field();
  return f.sub(f.mul(a(0, 0), a(1, 1)), f.mul(a(0, 1), a(1, 0)));
}

std::vector<Pair> all_pairs(const BolAlgebra<PrimeField>& base, const BolAlgebra<PrimeField>& fiber) {
  std::vector<Pair> out;
  for (const auto& a : enumerate_automorphisms(base))
    for (const auto& b : enumerate_automorphisms(fiber)) out.push_back({a, b});
  return out;
}

/// Pairs reached by kappa from the full automorphism group of H3, which
/// preserves span(e3) = H3 * H3.
std::set<std::string> kappa_image_from_aut_h3(const Extension<PrimeField>& e) {
  const auto s = canonical_section(e);
  std::set<std::string> out;
  for (const auto& g : enumerate_automorphisms(e.total)) out.insert(key(kappa(e, s, g)));
  return out;
}

}  // namespace

TEST_CASE("exactly the pairs with beta = det alpha are inducible on E_H3") {
  const PrimeField f = gf5();
  auto e = fixture_e_h3(f);
  auto pairs = all_pairs(e.base, e.fiber);
  REQUIRE(pairs.size() == 1920);
  const auto image = kappa_image_from_aut_h3(e);
  CHECK(image.size() == 480);
  const auto s = canonical_section(e);
  std::size_t inducible = 0;
  for (const auto& p : pairs) {
    auto r = solve_inducibility(e, p);
    REQUIRE(r.verdict != Verdict::kUndecided);
    const bool found = r.verdict == Verdict::kFound;
    CHECK(found == (p.beta(0, 0) == det2(p.alpha)));
    CHECK(found == (image.count(key(p)) == 1));
    if (found) {
      CHECK(inducible_via(e, s, p, *r.witness).valid());
      auto gamma = lift_automorphism(e, s, p, *r.witness);
      CHECK_NOTHROW(check_fiber_automorphism(e, gamma));
      CHECK(kappa(e, s, gamma) == p);
    } else {
      CHECK(r.failing_tag == "Iam2");
    }
    inducible += found;
  }
  CHECK(inducible == 480);
}

TEST_CASE("a pair is inducible exactly when its Wells class is zero") {
  const PrimeField f = gf5();
  auto e = fixture_e_h3(f);
  for (const auto& p : all_pairs(e.base, e.fiber)) {
    auto w = wells_map(e, p);
    CHECK(w.abelian_mode);
    CHECK(w.compatible);
    REQUIRE(w.class_zero() != Verdict::kUndecided);
    CHECK((w.class_zero() == Verdict::kFound) == (solve_inducibility(e, p).verdict == Verdict::kFound));
  }
}

TEST_CASE("the Wells sequence of E_H3 over GF(5) is exact") {
  auto e = fixture_e_h3(gf5());
  auto r = verify_wells_exactness(e);
  CHECK(r.aut_base == 480);
  CHECK(r.aut_fiber == 4);
  CHECK(r.pairs == 1920);
  CHECK(r.aut_v_total == 12000);
  CHECK(r.kernel_kappa == 25);
  CHECK(r.z1 == 25);
  CHECK(r.image_kappa == 480);
  CHECK(r.kernel_wells == 480);
  CHECK(r.inducible == 480);
  CHECK(r.undecided == 0);
  CHECK(r.aut_v_total == r.kernel_kappa * r.image_kappa);
  CHECK(r.inducible_matches_lifts);
  CHECK(r.inducible_matches_wells);
  CHECK(r.exact());
  CHECK(r.records.size() == 1920);
}

TEST_CASE("fiber automorphisms of E_H3 are all of Aut(H3)") {
  auto e = fixture_e_h3(gf5());
  auto fib = enumerate_fiber_automorphisms(e);
  auto all = enumerate_automorphisms(e.total);
  CHECK(fib.size() == 12000);
  std::set<std::string> a, b;
  for (const auto& g : fib) a.insert(g.to_string());
  for (const auto& g : all) b.insert(g.to_string());
  CHECK(a == b);
}

TEST_CASE("Z1 of the E_H3 cocycle has 25 elements and matches the kernel of kappa") {
  const PrimeField f = gf5();
  auto e = fixture_e_h3(f);
  auto c = theta_map(e);
  auto z = z1_nab(c);
  REQUIRE(z.verdict == Verdict::kFound);
  std::size_t count = z.space ? static_cast<std::size_t>(*checked_power(5, z.space->dim(), 1u << 20)) : z.maps.size();
  CHECK(count == 25);
  // Every phi : Z2 -> Z1 satisfies the conditions; the kernel of kappa is e_i -> e_i + c_i e3.
  const auto s = canonical_section(e);
  std::set<std::string> from_kernel;
  for (const auto& g : enumerate_automorphisms(e.total)) {
    if (kappa(e, s, g) == identity_pair(e.base, e.fiber)) from_kernel.insert(s_map(e, s, g).to_string());
  }
  CHECK(from_kernel.size() == 25);
  for (const auto& v : VectorEnumeration(f, 2)) {
    auto phi = map_from_coords(v, 1, 2);
    CHECK(is_nab_one_cocycle(c, phi).valid());
    CHECK(from_kernel.count(phi.to_string()) == 1);
  }
}

TEST_CASE("compatible pairs for S2 acting on R_S2") {
  const PrimeField f = gf5();
  auto s2 = fixture_s2(f);
  auto r = fixture_r_s2(f);
  auto pairs = compatible_pairs(s2, r);
  CHECK(pairs.size() == 80);
  std::size_t oracle = 0;
  for (const auto& p : all_pairs(s2, zero_algebra(f, 1))) {
    // beta mu(x) = mu(alpha x) beta with mu(e1) = 0, mu(e2) = 1
    bool ok = true;
    for (std::size_t x = 0; x < 2; ++x) ok = ok && p.alpha(1, x) == r.mu(x)(0, 0);
    CHECK(is_compatible(p, r) == ok);
    oracle += ok;
  }
  CHECK(oracle == 80);
}

TEST_CASE("an incompatible pair is reported without a class") {
  const PrimeField f = gf5();
  auto c = NonAbelianCocycle<PrimeField>::zero(zero_algebra(f, 2), zero_algebra(f, 1));
  c.actions.mu(0)(0, 0) = 1;
  REQUIRE(validate_nab_cocycle(c).valid());
  auto e = as_extension(c);
  Pair swap{Matrix<PrimeField>::from_ints(f, 2, 2, {0, 1, 1, 0}), Matrix<PrimeField>::identity(f, 1)};
  CHECK_FALSE(is_compatible(swap, c.actions));
  auto w = wells_map(e, swap);
  CHECK(w.abelian_mode);
  CHECK_FALSE(w.compatible);
  CHECK(w.class_zero() == Verdict::kNone);
  CHECK(w.equivalence.failing_tag == "incompatible pair");
  auto ind = solve_inducibility(e, swap);
  CHECK(ind.verdict == Verdict::kNone);
  CHECK(ind.failing_tag == "AEE3");
  CHECK(solve_inducibility(e, identity_pair(e.base, e.fiber)).verdict == Verdict::kFound);
}

TEST_CASE("the pair action on cocycles composes") {
  const PrimeField f = gf5();
  Rng rng(71);
  auto e = fixture_e_h3(f);
  auto c = theta_map(e);
  auto pairs = all_pairs(e.base, e.fiber);
  CHECK(act_on_cocycle(c, identity_pair(e.base, e.fiber)) == c);
  for (int t = 0; t < 50; ++t) {
    const auto& p1 = pairs[rng() % pairs.size()];
    const auto& p2 = pairs[rng() % pairs.size()];
    CHECK(act_on_cocycle(act_on_cocycle(c, p1), p2) == act_on_cocycle(c, compose(p2, p1)));
    CHECK(validate_nab_cocycle(act_on_cocycle(c, p1)).valid());
  }
  // Non-abelian fiber: the cocycle of S2 + S2 for a shifted section.
  auto sum = as_extension(NonAbelianCocycle<PrimeField>::zero(fixture_s2(f), fixture_s2(f)));
  auto s = canonical_section(sum);
  s += sum.inj * random_matrix(f, 2, 2, rng);
  auto cn = extract_cocycle(sum, s);
  auto npairs = all_pairs(fixture_s2(f), fixture_s2(f));
  for (int t = 0; t < 20; ++t) {
    const auto& p1 = npairs[rng() % npairs.size()];
    const auto& p2 = npairs[rng() % npairs.size()];
    CHECK(act_on_cocycle(act_on_cocycle(cn, p1), p2) == act_on_cocycle(cn, compose(p2, p1)));
    CHECK(validate_nab_cocycle(act_on_cocycle(cn, p1)).valid());
  }
  CHECK_THROWS_AS(check_aut_pair(Pair{Matrix<PrimeField>(f, 2, 2), Matrix<PrimeField>::identity(f, 1)}, e.base, e.fiber),
                  UsageError);
}

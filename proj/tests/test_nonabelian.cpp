#include <doctest.h>

#include "support.hpp"

using namespace bolext;
using namespace bolext::test;

namespace {

using Cocycle = NonAbelianCocycle<PrimeField>;

/// B + V assembled entry by entry in the test and checked by the dense oracle.
template <class F>
bool oracle_nab(const NonAbelianCocycle<F>& c) {
  auto [nu, om] = full_coords(CochainPair<F>{c.nu, c.omega});
  return dense_is_bol(twisted(c.base, c.actions, nu, om, &c.fiber));
}

/// Cocycle of the direct sum B + V for the section x -> x + phi(x).
template <class F>
NonAbelianCocycle<F> shifted_direct_sum(const BolAlgebra<F>& base, const BolAlgebra<F>& fiber, const Matrix<F>& phi) {
  auto e = as_extension(NonAbelianCocycle<F>::zero(base, fiber));
  Matrix<F> s = canonical_section(e);
  s += e.inj * phi;
  return extract_cocycle(e, s);
}

/// Nonabelian cocycle with abelian fiber from a module and a cochain pair.
Cocycle from_module(const BolAlgebra<PrimeField>& a, const Actions<PrimeField>& r, const CochainPair<PrimeField>& c) {
  Cocycle out = Cocycle::zero(a, zero_algebra(gf5(), r.module_dim()));
  out.nu = c.nu;
  out.omega = c.omega;
  out.actions = r;
  return out;
}

/// Changes one random entry of one random component by a nonzero amount.
void perturb(Cocycle& c, Rng& rng) {
  const PrimeField f = c.field();
  const std::size_t n = c.base_dim(), m = c.fiber_dim();
  const auto delta = static_cast<std::uint32_t>(1 + rng() % 4);
  const std::size_t x = rng() % n, y = rng() % n, z = rng() % n, u = rng() % m, w = rng() % m;
  auto bump = [&](std::uint32_t& v) { v = f.add(v, delta); };
  switch (rng() % 5) {
    case 0: bump(c.nu.at(x, y)[w]); break;
    case 1: bump(c.omega.at(x, y, z)[w]); break;
    case 2: bump(c.actions.mu(x)(w, u)); break;
    case 3: bump(c.actions.theta(x, y)(w, u)); break;
    default: bump(c.actions.dd(x, y)(w, u)); break;
  }
}

/// A mix of valid and invalid cocycles over GF(5).
std::vector<Cocycle> cocycle_family(Rng& rng) {
  const PrimeField f = gf5();
  std::vector<Cocycle> out;
  auto algebras = enumerate_bol_algebras(FieldDescriptor::prime(5), 2, false);
  const std::vector<BolAlgebra<PrimeField>> fibers = {zero_algebra(f, 1), fixture_s2(f), zero_algebra(f, 2),
                                                      algebras[rng() % algebras.size()]};
  for (int t = 0; t < 120; ++t) {
    const auto& base = t % 3 ? algebras[rng() % algebras.size()] : fixture_s2(f);
    const auto& fiber = fibers[t % fibers.size()];
    auto c = shifted_direct_sum(base, fiber, random_matrix(f, fiber.dim(), 2, rng));
    out.push_back(c);
    perturb(c, rng);
    out.push_back(c);
  }
  for (const auto& [a, r] : random_valid_modules(40, rng)) {
    auto h = cohomology23(a, r);
    CochainCoordinates<PrimeField> coords(f, 2, r.module_dim());
    Vector<PrimeField> v(f, coords.size());
    for (std::size_t i = 0; i < h.z_basis.dim(); ++i) v.add_scaled(random_scalar(f, rng), h.z_basis.basis_vector(i));
    auto c = from_module(a, r, coords.from_coords(v));
    out.push_back(c);
    perturb(c, rng);
    out.push_back(c);
  }
  return out;
}

}  // namespace

TEST_CASE("the cocycle of E_H3 is nu(e1,e2) = e3 with zero actions") {
  Rationals q;
  auto e = fixture_e_h3(q);
  auto c = theta_map(e);
  CHECK(validate_nab_cocycle(c).valid());
  CHECK(validate_nab_cocycle(c, Variant::kLiteral).valid());
  CHECK(c.nu.at(0, 1)[0] == 1);
  CHECK(c.nu.at(1, 0)[0] == -1);
  CHECK(c.omega.is_zero());
  CHECK(c.actions.all_zero());
  CHECK(build_extension_algebra(c) == fixture_h3(q));
  CHECK(oracle_nab(theta_map(fixture_e_h3(gf5()))));
}

TEST_CASE("build then extract returns the cocycle exactly") {
  Rationals q;
  auto c = theta_map(fixture_e_h3(q));
  auto e = as_extension(c);
  CHECK(validate_extension(e).valid());
  CHECK(extract_cocycle(e, canonical_section(e)) == c);

  const PrimeField f = gf5();
  auto base = zero_algebra(f, 2), fiber = zero_algebra(f, 1);
  std::size_t count = 0;
  for (const auto& v : VectorEnumeration(f, 3)) {
    auto x = Cocycle::zero(base, fiber);
    x.nu.set_skew(0, 1, v.slice(0, 1));
    x.omega.set_skew(0, 1, 0, v.slice(1, 1));
    x.omega.set_skew(0, 1, 1, v.slice(2, 1));
    REQUIRE(validate_nab_cocycle(x).valid());
    auto ex = as_extension(x);
    CHECK(extract_cocycle(ex, canonical_section(ex)) == x);
    ++count;
  }
  CHECK(count == 125);

  Rng rng(51);
  for (const auto& x : cocycle_family(rng)) {
    if (!validate_nab_cocycle(x).valid()) continue;
    auto ex = as_extension(x);
    CHECK(extract_cocycle(ex, canonical_section(ex)) == x);
  }
}

TEST_CASE("a cocycle is valid exactly when its extension algebra is Bol") {
  Rng rng(52);
  int valid = 0, invalid = 0;
  for (const auto& c : cocycle_family(rng)) {
    const bool ok = validate_nab_cocycle(c).valid();
    CHECK(ok == validate_bol(build_extension_algebra(c)).valid());
    CHECK(ok == oracle_nab(c));
    (ok ? valid : invalid)++;
  }
  CHECK(valid > 100);
  CHECK(invalid > 50);
}

TEST_CASE("with an abelian fiber the cocycle conditions split into module and cocycle identities") {
  Rng rng(53);
  const PrimeField f = gf5();
  auto algebras = enumerate_bol_algebras(FieldDescriptor::prime(5), 2, false);
  int split_valid = 0, split_invalid = 0;
  auto compare = [&](const BolAlgebra<PrimeField>& a, const Actions<PrimeField>& r, const CochainPair<PrimeField>& cp) {
    const bool split = validate_representation(a, r).valid() && is_cocycle23(a, r, cp).valid();
    CHECK(validate_nab_cocycle(from_module(a, r, cp)).valid() == split);
    (split ? split_valid : split_invalid)++;
  };
  for (int t = 0; t < 200; ++t) {
    const auto& a = algebras[rng() % algebras.size()];
    auto r = random_actions(f, 2, 1, rng);
    for (std::size_t x = 0; x < 2; ++x)
      for (std::size_t y = 0; y < 2; ++y) {
        if (rng() % 2) r.theta(x, y) = Matrix<PrimeField>(f, 1, 1);
        if (rng() % 2) r.dd(x, y) = Matrix<PrimeField>(f, 1, 1);
      }
    compare(a, r, random_skew_cochains(f, 2, 1, rng));
  }
  for (const auto& [a, r] : random_valid_modules(60, rng)) {
    const std::size_t m = r.module_dim();
    auto h = cohomology23(a, r);
    CochainCoordinates<PrimeField> coords(f, 2, m);
    Vector<PrimeField> v(f, coords.size());
    for (std::size_t i = 0; i < h.z_basis.dim(); ++i) v.add_scaled(random_scalar(f, rng), h.z_basis.basis_vector(i));
    compare(a, r, coords.from_coords(v));
    compare(a, r, random_skew_cochains(f, 2, m, rng));
  }
  CHECK(split_valid > 50);
  CHECK(split_invalid > 50);
}

TEST_CASE("the literal reading differs from the extension algebra on some cocycles") {
  Rng rng(54);
  int differ = 0;
  for (const auto& c : cocycle_family(rng)) differ += validate_nab_cocycle(c, Variant::kLiteral).valid() != oracle_nab(c);
  CHECK(differ > 0);
}

TEST_CASE("equivalent cocycles are found with a verified witness") {
  Rationals q;
  auto e = fixture_e_h3(q);
  auto c = theta_map(e);
  Matrix<Rationals> s = canonical_section(e);
  s(2, 0) = 1;  // e1 -> e1 + e3
  auto c2 = extract_cocycle(e, s);
  auto res = solve_equivalence(c, c2);
  REQUIRE(res.verdict == Verdict::kFound);
  CHECK(res.method == "linear");
  CHECK(cocycles_equivalent_via(c, c2, *res.witness).valid());

  auto zero = NonAbelianCocycle<Rationals>::zero(c.base, c.fiber);
  res = solve_equivalence(c, zero);
  CHECK(res.verdict == Verdict::kNone);
  CHECK(res.failing_tag == "E2");
  CHECK(cocycles_equivalent_via(c, zero, Matrix<Rationals>(q, 1, 2)).first_tag() == "E2");

  const PrimeField f = gf5();
  Rng rng(55);
  for (int t = 0; t < 10; ++t) {
    auto phi = random_matrix(f, 2, 2, rng);
    auto c1 = shifted_direct_sum(fixture_s2(f), fixture_s2(f), phi);
    auto c0 = Cocycle::zero(fixture_s2(f), fixture_s2(f));
    auto r = solve_equivalence(c1, c0);
    REQUIRE(r.verdict == Verdict::kFound);
    CHECK(r.method == "exhaustive");
    CHECK(cocycles_equivalent_via(c1, c0, *r.witness).valid());
  }
  auto qs = shifted_direct_sum(fixture_s2(q), fixture_s2(q), Matrix<Rationals>::identity(q, 2));
  CHECK(solve_equivalence(qs, NonAbelianCocycle<Rationals>::zero(fixture_s2(q), fixture_s2(q))).verdict ==
        Verdict::kUndecided);
}

TEST_CASE("malformed cocycles are rejected") {
  Rationals q;
  auto c = theta_map(fixture_e_h3(q));
  c.nu.at(0, 1) = Vector<Rationals>(q, {q.parse("2")});
  CHECK(validate_nab_cocycle(c).first_tag() == "B00");
  auto bad = c;
  bad.actions = Actions<Rationals>(q, 3, 1);
  CHECK_THROWS_AS(validate_nab_cocycle(bad), UsageError);
}

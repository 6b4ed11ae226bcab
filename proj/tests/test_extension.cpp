#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"

using namespace bolext;
using namespace bolext::test;

namespace {

template <class F>
Extension<F> rebased(const Extension<F>& e, const Matrix<F>& g) {
  return {e.fiber, change_basis(e.total, g), e.base, *inverse(g) * e.inj, e.proj * g};
}

}  // namespace

TEST_CASE("E_H3 is a valid extension and malformed sequences carry their tag") {
  Rationals q;
  auto e = fixture_e_h3(q);
  CHECK(validate_extension(e).valid());

  auto bad = e;
  bad.proj = Matrix<Rationals>::from_ints(q, 2, 3, {1, 0, 0, 0, 0, 1});
  CHECK(validate_extension(bad).first_tag() == "morphism-p");
  bad = e;
  bad.inj = Matrix<Rationals>(q, 3, 1);
  CHECK(validate_extension(bad).first_tag() == "injective");
  bad = e;
  bad.proj = Matrix<Rationals>::from_ints(q, 2, 3, {1, 0, 0, 1, 0, 0});
  auto tags = validate_extension(bad).failed_tags();
  CHECK(std::find(tags.begin(), tags.end(), "surjective") != tags.end());
  bad = e;
  bad.inj = Matrix<Rationals>::from_ints(q, 3, 1, {1, 0, 0});
  tags = validate_extension(bad).failed_tags();
  CHECK(std::find(tags.begin(), tags.end(), "exact") != tags.end());
  bad = e;
  bad.inj = Matrix<Rationals>(q, 2, 1);
  CHECK(validate_extension(bad).first_tag() == "shape");
}

TEST_CASE("the canonical section of E_H3 is the coordinate inclusion") {
  Rationals q;
  auto e = fixture_e_h3(q);
  auto s = canonical_section(e);
  CHECK(s == Matrix<Rationals>::from_ints(q, 3, 2, {1, 0, 0, 1, 0, 0}));
  CHECK_NOTHROW(check_section(e, s));
  CHECK_THROWS_AS(check_section(e, Matrix<Rationals>::from_ints(q, 3, 2, {1, 0, 1, 1, 0, 0})), UsageError);
  auto coords = adapted_coordinates(e, s);
  CHECK((coords * Matrix<Rationals>::from_columns(q, 3, {s.column(0), s.column(1), e.inj.column(0)})).is_identity());
  CHECK(fiber_coordinates(e, Vector<Rationals>(q, {q.zero(), q.zero(), q.parse("3")})) ==
        Vector<Rationals>(q, {q.parse("3")}));
  CHECK_THROWS_AS(fiber_coordinates(e, Vector<Rationals>(q, {q.one(), q.zero(), q.zero()})), ConsistencyError);
}

TEST_CASE("cocycles from two sections are equivalent via their difference") {
  Rationals q;
  auto e = fixture_e_h3(q);
  auto s = canonical_section(e);
  auto s2 = s;
  s2(2, 0) = 1;  // e1 -> e1 + e3
  auto c1 = extract_cocycle(e, s), c2 = extract_cocycle(e, s2);
  CHECK(validate_nab_cocycle(c2).valid());
  Matrix<Rationals> phi(q, 1, 2);
  for (std::size_t j = 0; j < 2; ++j) phi(0, j) = fiber_coordinates(e, (s - s2).column(j))[0];
  CHECK(cocycles_equivalent_via(c1, c2, phi).valid());
  CHECK(solve_equivalence(c1, c2).verdict == Verdict::kFound);

  Rng rng(61);
  const PrimeField f = gf5();
  auto ep = fixture_e_h3(f);
  for (int t = 0; t < 20; ++t) {
    auto sp = canonical_section(ep);
    sp += ep.inj * random_matrix(f, 1, 2, rng);
    auto g = random_invertible(f, 3, rng);
    auto er = rebased(ep, g);
    REQUIRE(validate_extension(er).valid());
    auto sr = *inverse(g) * sp;
    auto cr = extract_cocycle(er, sr);
    CHECK(validate_nab_cocycle(cr).valid());
    CHECK(solve_equivalence(theta_map(ep), cr).verdict == Verdict::kFound);
  }
}

TEST_CASE("extension equivalence finds a verified morphism") {
  Rng rng(62);
  const PrimeField f = gf5();
  auto e = fixture_e_h3(f);
  for (int t = 0; t < 10; ++t) {
    auto g = random_invertible(f, 3, rng);
    auto e2 = rebased(e, g);
    auto res = extensions_equivalent(e, e2);
    REQUIRE(res.search.verdict == Verdict::kFound);
    REQUIRE(res.f.has_value());
    CHECK(is_morphism(*res.f, e.total, e2.total));
    CHECK(*res.f * e.inj == e2.inj);
    CHECK(e2.proj * *res.f == e.proj);
  }
  auto split = as_extension(NonAbelianCocycle<PrimeField>::zero(zero_algebra(f, 2), zero_algebra(f, 1)));
  auto res = extensions_equivalent(e, split);
  CHECK(res.search.verdict == Verdict::kNone);
  CHECK_FALSE(res.f.has_value());
}

TEST_CASE("classification of cocycles with one-dimensional zero fiber matches the orbit oracle") {
  const PrimeField f = gf5();
  const Actions<PrimeField> zero(f, 2, 1);
  auto z2 = classify_corpus(zero_algebra(f, 2), zero_algebra(f, 1), zero);
  CHECK(z2.summary.candidates == 125);
  CHECK(z2.summary.cocycles == 125);
  CHECK(z2.summary.classes == 125);
  CHECK(oracle_classes(zero_algebra(f, 2)) == std::pair<std::size_t, std::size_t>{125, 125});

  auto s2 = classify_corpus(fixture_s2(f), zero_algebra(f, 1), zero);
  CHECK(s2.summary.cocycles == 125);
  CHECK(s2.summary.classes == 25);
  CHECK(oracle_classes(fixture_s2(f)) == std::pair<std::size_t, std::size_t>{125, 25});
  std::size_t total = 0;
  for (auto k : s2.summary.class_sizes) {
    CHECK(k == 5);
    total += k;
  }
  CHECK(total == 125);
  CHECK(s2.representatives.size() == 25);
  for (std::size_t i = 0; i < s2.representatives.size(); ++i)
    for (std::size_t j = i + 1; j < s2.representatives.size(); ++j)
      CHECK(solve_equivalence(s2.representatives[i], s2.representatives[j]).verdict == Verdict::kNone);

  SearchBounds tight;
  tight.max_candidates = 100;
  CHECK_THROWS_AS(classify_corpus(zero_algebra(f, 2), zero_algebra(f, 1), zero, Variant::kCorrected, tight),
                  UnsupportedEnumeration);
}

#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"

using namespace bolext;
using namespace bolext::test;


TEST_CASE("the fixtures are Bol algebras over Q and GF(5)") {
  for (const char* name : kFixtures) {
    INFO(name);
    auto q = *named_algebra(Rationals(), name);
    auto p = *named_algebra(gf5(), name);
    CHECK(validate_bol(q).valid());
    CHECK(validate_bol(p).valid());
    CHECK(dense_is_bol(dense_of(q)));
    CHECK(dense_is_bol(dense_of(p)));
  }
  CHECK_FALSE(named_algebra(Rationals(), "X7").has_value());
  CHECK(named_algebra(Rationals(), "h3").has_value());
}

TEST_CASE("single-entry mutations of each fixture are rejected with the expected identity") {
  for (const char* name : kFixtures) {
    for (const auto& m : mutations_for(name)) {
      INFO(name << ": " << m.what);
      auto a = *named_algebra(Rationals(), name);
      m.apply(a);
      auto report = validate_bol(a);
      CHECK_FALSE(report.valid());
      CHECK_FALSE(dense_is_bol(dense_of(a)));
      auto tags = report.failed_tags();
      CHECK(std::find(tags.begin(), tags.end(), m.tag) != tags.end());
      CHECK(validate_bol(a, 1).violations().size() == 1);
    }
  }
}

TEST_CASE("validate_bol agrees with the dense identity oracle on random skew data") {
  Rng rng(21);
  int valid = 0;
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 2 + t % 2;
    auto a = random_skew_algebra(gf5(), n, rng, t % 3 == 0);
    // Sparsify so that valid algebras also occur.
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          for (std::size_t l = 0; l < n; ++l)
            if (rng() % 4) a.tri(i, j, k, l) = a.tri(j, i, k, l) = 0;
    const bool oracle = dense_is_bol(dense_of(a));
    CHECK(validate_bol(a).valid() == oracle);
    valid += oracle;
  }
  CHECK(valid > 0);
  CHECK(valid < 300);
}

TEST_CASE("with zero bracket the identities reduce to products of products vanishing") {
  Rng rng(22);
  for (int t = 0; t < 50; ++t) CHECK(validate_bol(random_skew_algebra(Rationals(), 2, rng, true)).valid());
  int valid = 0;
  for (int t = 0; t < 200; ++t) {
    auto a = random_skew_algebra(gf5(), 3, rng, true);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i + 1; j < 3; ++j)
        for (std::size_t k = 0; k < 3; ++k)
          if (rng() % 3) a.bil(i, j, k) = a.bil(j, i, k) = 0;
    bool square_zero = true;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t k = 0; k < 3; ++k)
          for (std::size_t l = 0; l < 3; ++l) {
            auto ij = Vector<PrimeField>(gf5(), 3), kl = Vector<PrimeField>(gf5(), 3);
            for (std::size_t c = 0; c < 3; ++c) {
              ij[c] = a.bil(i, j, c);
              kl[c] = a.bil(k, l, c);
            }
            square_zero = square_zero && a.product(ij, kl).is_zero();
          }
    CHECK(validate_bol(a).valid() == square_zero);
    valid += square_zero;
  }
  CHECK(valid > 0);
  CHECK(valid < 200);
}

TEST_CASE("automorphism counts match the group orders") {
  const PrimeField f = gf5();
  CHECK(enumerate_automorphisms(zero_algebra(f, 1)).size() == 4);
  CHECK(enumerate_automorphisms(zero_algebra(f, 2)).size() == 24 * 20);
  auto s2 = enumerate_automorphisms(fixture_s2(f));
  CHECK(s2.size() == 20);
  // e1 -> a e1, e2 -> c e1 + e2
  for (const auto& g : s2) {
    CHECK(g(1, 0) == 0);
    CHECK(g(1, 1) == 1);
    CHECK(g(0, 0) != 0);
  }
  CHECK(enumerate_automorphisms(fixture_h3(f)).size() == 12000);
  CHECK_THROWS_AS(enumerate_automorphisms(fixture_s2(Rationals())), UnsupportedEnumeration);
  SearchBounds tight;
  tight.max_candidates = 100;
  CHECK_THROWS_AS(enumerate_automorphisms(fixture_s2(f), tight), UnsupportedEnumeration);
}

TEST_CASE("the automorphisms of S2 and H3 form a group") {
  const PrimeField f = gf5();
  for (auto a : {fixture_s2(f), fixture_h3(f)}) {
    auto auts = enumerate_automorphisms(a);
    auto key = [](const Matrix<PrimeField>& m) { return m.to_string(); };
    std::set<std::string> all;
    for (const auto& g : auts) all.insert(key(g));
    CHECK(all.size() == auts.size());
    CHECK(all.count(key(Matrix<PrimeField>::identity(f, a.dim()))) == 1);
    Rng rng(23);
    for (int t = 0; t < 300; ++t) {
      const auto& g = auts[rng() % auts.size()];
      const auto& h = auts[rng() % auts.size()];
      CHECK(all.count(key(g * h)) == 1);
      CHECK(all.count(key(*inverse(g))) == 1);
    }
    CHECK(std::is_sorted(auts.begin(), auts.end(), [](const auto& x, const auto& y) {
      const auto fx = x.flatten(), fy = y.flatten();
      return std::lexicographical_compare(fx.begin(), fx.end(), fy.begin(), fy.end());
    }));
  }
}

TEST_CASE("enumerated algebras are valid, distinct and complete at dimension 2 over GF(5)") {
  const auto fd = FieldDescriptor::prime(5);
  auto zero_bracket = enumerate_bol_algebras(fd, 2, true);
  CHECK(zero_bracket.size() == 25);
  auto all = enumerate_bol_algebras(fd, 2, false);
  std::set<std::string> seen;
  for (const auto& a : all) {
    CHECK(dense_is_bol(dense_of(a)));
    seen.insert(algebra_to_json(a).dump());
  }
  CHECK(seen.size() == all.size());
  Rng rng(24);
  for (int t = 0; t < 2000; ++t) {
    auto a = random_skew_algebra(gf5(), 2, rng);
    if (rng() % 2)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l) {
          a.tri(0, 1, k, l) = (k == l) ? a.tri(0, 1, 0, 0) : 0;
          a.tri(1, 0, k, l) = gf5().neg(a.tri(0, 1, k, l));
        }
    CHECK(seen.count(algebra_to_json(a).dump()) == (dense_is_bol(dense_of(a)) ? 1u : 0u));
  }
  CHECK(enumerate_bol_algebras(fd, 1, false).size() == 1);
}

TEST_CASE("change_basis yields an isomorphic algebra") {
  Rng rng(25);
  for (auto a : {fixture_h3(Rationals()), fixture_s2(Rationals())}) {
    for (int t = 0; t < 10; ++t) {
      auto g = random_invertible(Rationals(), a.dim(), rng);
      auto b = change_basis(a, g);
      CHECK(validate_bol(b).valid());
      CHECK(is_morphism(g, b, a));
      CHECK(change_basis(b, *inverse(g)) == a);
    }
  }
  auto h3 = fixture_h3(Rationals());
  CHECK_FALSE(is_morphism(Matrix<Rationals>::from_ints(Rationals(), 3, 3, {2, 0, 0, 0, 1, 0, 0, 0, 1}), h3, h3));
}

TEST_CASE("products and brackets evaluate bilinearly") {
  auto h3 = fixture_h3(Rationals());
  Rationals q;
  Vector<Rationals> x(q, {q.parse("2"), q.parse("1/2"), q.parse("7")}), y(q, {q.parse("-1"), q.parse("3"), q.parse("0")});
  auto p = h3.product(x, y);
  CHECK(p == Vector<Rationals>(q, {q.zero(), q.zero(), q.parse("13/2")}));
  CHECK(h3.product(y, x) == -p);
  CHECK_THROWS_AS(h3.product(Vector<Rationals>(q, 2), y), UsageError);
}

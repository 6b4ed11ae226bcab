#include "bolext/extension.hpp"

#include <string>

namespace bolext {

namespace {

template <class F, class Sink>
bool visit_morphism(const Matrix<F>& f, const BolAlgebra<F>& a1, const BolAlgebra<F>& a2, std::string_view ptag,
                    std::string_view btag, Sink& sink) {
  const std::size_t n = a1.dim();
  std::vector<Vector<F>> fe;
  for (std::size_t i = 0; i < n; ++i) fe.push_back(f.column(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!sink(ptag, {i, j}, f * a1.basis_product(i, j) - a2.product(fe[i], fe[j]))) return false;
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        if (!sink(btag, {i, j, k}, f * a1.basis_bracket(i, j, k) - a2.bracket(fe[i], fe[j], fe[k]))) return false;
      }
  return true;
}

template <class F>
bool fields_agree(const Extension<F>& e) {
  const F& f = e.field();
  return e.fiber.field() == f && e.base.field() == f && e.inj.field() == f && e.proj.field() == f;
}

template <class F>
bool shapes_agree(const Extension<F>& e) {
  const std::size_t big = e.total.dim(), m = e.fiber.dim(), n = e.base.dim();
  return e.inj.rows() == big && e.inj.cols() == m && e.proj.rows() == n && e.proj.cols() == big;
}

template <class F>
void require_valid(const Extension<F>& e, const char* what) {
  auto report = validate_extension(e);
  if (!report.valid()) throw UsageError(std::string(what) + " is not a valid extension (" + report.first_tag() + ")");
}

/// Products and brackets with at least two arguments in i(V) vanish in E.
template <class F>
bool fiber_square_zero(const Extension<F>& e) {
  const std::size_t big = e.total.dim(), m = e.fiber.dim();
  std::vector<Vector<F>> iv, eb;
  for (std::size_t a = 0; a < m; ++a) iv.push_back(e.inj.column(a));
  for (std::size_t k = 0; k < big; ++k) eb.push_back(Vector<F>::unit(e.field(), big, k));
  for (const auto& a : iv)
    for (const auto& b : iv) {
      if (!e.total.product(a, b).is_zero()) return false;
      for (const auto& w : eb) {
        if (!e.total.bracket(a, b, w).is_zero() || !e.total.bracket(a, w, b).is_zero() ||
            !e.total.bracket(w, a, b).is_zero())
          return false;
      }
    }
  return true;
}

}  // namespace

template <class F>
ValidationReport<F> validate_extension(const Extension<F>& e) {
  const F& f = e.field();
  ValidationReport<F> report(f);
  if (!fields_agree(e) || !shapes_agree(e)) {
    report.add({"shape", {}, Vector<F>(f, 0)});
    return report;
  }
  ValidationReport<F> mi(f, 1), mp(f, 1);
  visit_morphism(e.inj, e.fiber, e.total, "morphism-i", "morphism-i", mi);
  visit_morphism(e.proj, e.total, e.base, "morphism-p", "morphism-p", mp);
  for (const auto& v : mi.violations()) report.add(v);
  for (const auto& v : mp.violations()) report.add(v);
  if (rank(e.inj) != e.fiber.dim()) report.add({"injective", {}, Vector<F>(f, 0)});
  if (rank(e.proj) != e.base.dim()) report.add({"surjective", {}, Vector<F>(f, 0)});
  if (!(image_basis(e.inj) == kernel_basis(e.proj))) report.add({"exact", {}, Vector<F>(f, 0)});
  return report;
}

template <class F>
void check_section(const Extension<F>& e, const Matrix<F>& s) {
  if (!shapes_agree(e)) throw UsageError("extension matrices have inconsistent shapes");
  if (s.rows() != e.total.dim() || s.cols() != e.base.dim())
    throw UsageError("section must be " + std::to_string(e.total.dim()) + "x" + std::to_string(e.base.dim()));
  if (!(e.proj * s).is_identity()) throw UsageError("not a section: p s is not the identity");
}

template <class F>
Matrix<F> canonical_section(const Extension<F>& e) {
  require_valid(e, "input");
  const F& f = e.field();
  const std::size_t big = e.total.dim(), n = e.base.dim();
  Subspace<F> ker = kernel_basis(e.proj);
  std::vector<bool> pivot(big, false);
  for (std::size_t p : ker.pivots()) pivot[p] = true;
  Matrix<F> eq(f, big, n);
  std::size_t col = 0;
  for (std::size_t k = 0; k < big; ++k)
    if (!pivot[k]) eq(k, col++) = f.one();
  auto inv = inverse(e.proj * eq);
  if (!inv) throw ConsistencyError("pivot complement does not map onto the base");
  return eq * *inv;
}

template <class F>
Matrix<F> adapted_coordinates(const Extension<F>& e, const Matrix<F>& s) {
  check_section(e, s);
  auto inv = inverse(hstack(s, e.inj));
  if (!inv) throw ConsistencyError("section and injection do not span the total algebra");
  return std::move(*inv);
}

template <class F>
Vector<F> fiber_coordinates(const Extension<F>& e, const Vector<F>& w) {
  auto a = solve_linear(e.inj, w);
  if (!a) throw ConsistencyError("element does not lie in the image of the injection");
  return std::move(*a);
}

template <class F>
NonAbelianCocycle<F> extract_cocycle(const Extension<F>& e, const Matrix<F>& s) {
  const Matrix<F> coords = adapted_coordinates(e, s);
  const std::size_t n = e.base.dim(), m = e.fiber.dim();
  const BolAlgebra<F>& t = e.total;
  std::vector<Vector<F>> sx, ia;
  for (std::size_t x = 0; x < n; ++x) sx.push_back(s.column(x));
  for (std::size_t a = 0; a < m; ++a) ia.push_back(e.inj.column(a));
  auto v_part = [&](const Vector<F>& w) { return (coords * w).slice(n, m); };
  auto in_fiber = [&](const Vector<F>& w, const char* what) {
    Vector<F> c = coords * w;
    if (!c.slice(0, n).is_zero())
      throw ConsistencyError(std::string(what) + " does not lie in the kernel of the projection");
    return c.slice(n, m);
  };

  NonAbelianCocycle<F> c = NonAbelianCocycle<F>::zero(e.base, e.fiber);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      c.nu.at(x, y) = v_part(t.product(sx[x], sx[y]));
      for (std::size_t z = 0; z < n; ++z) c.omega.at(x, y, z) = v_part(t.bracket(sx[x], sx[y], sx[z]));
    }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t a = 0; a < m; ++a) c.actions.mu(x).set_column(a, in_fiber(t.product(sx[x], ia[a]), "s(x)*a"));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t a = 0; a < m; ++a) {
        c.actions.theta(x, y).set_column(a, in_fiber(t.bracket(ia[a], sx[x], sx[y]), "[a,s x,s y]"));
        c.actions.dd(x, y).set_column(a, in_fiber(t.bracket(sx[x], sx[y], ia[a]), "[s x,s y,a]"));
      }
  return c;
}

template <class F>
Extension<F> as_extension(const NonAbelianCocycle<F>& c) {
  const F& f = c.field();
  const std::size_t n = c.base_dim(), m = c.fiber_dim();
  Matrix<F> inj(f, n + m, m), proj(f, n, n + m);
  for (std::size_t a = 0; a < m; ++a) inj(n + a, a) = f.one();
  for (std::size_t x = 0; x < n; ++x) proj(x, x) = f.one();
  return {c.fiber, build_extension_algebra(c), c.base, std::move(inj), std::move(proj)};
}

template <class F>
NonAbelianCocycle<F> theta_map(const Extension<F>& e) {
  return extract_cocycle(e, canonical_section(e));
}

template <class F>
ExtensionEquivalence<F> extensions_equivalent(const Extension<F>& e1, const Extension<F>& e2,
                                              const SearchBounds& bounds) {
  if (!(e1.base == e2.base)) throw UsageError("extensions have different base algebras");
  if (!(e1.fiber == e2.fiber)) throw UsageError("extensions have different fiber algebras");
  require_valid(e1, "first extension");
  require_valid(e2, "second extension");
  const F& f = e1.field();
  const std::size_t n = e1.base.dim(), m = e1.fiber.dim();
  const Matrix<F> s2 = canonical_section(e2);
  const Matrix<F> coords1 = adapted_coordinates(e1, canonical_section(e1));
  auto build = [&](const Matrix<F>& phi) { return hstack(s2 - e2.inj * phi, e2.inj) * coords1; };

  ExtensionEquivalence<F> out;
  out.search = search_linear_map(f, m, n, fiber_square_zero(e2), bounds, [&](const Matrix<F>& phi, auto& sink) {
    visit_morphism(build(phi), e1.total, e2.total, "morphism-product", "morphism-bracket", sink);
  });
  if (out.search.witness) {
    Matrix<F> map = build(*out.search.witness);
    if (!is_invertible(map) || !is_morphism(map, e1.total, e2.total) || !(map * e1.inj == e2.inj) ||
        !(e2.proj * map == e1.proj))
      throw ConsistencyError("equivalence map failed verification");
    out.f = std::move(map);
  }
  return out;
}

Classification<PrimeField> classify_corpus(const BolAlgebra<PrimeField>& base, const BolAlgebra<PrimeField>& fiber,
                                           const Actions<PrimeField>& actions, Variant variant,
                                           const SearchBounds& bounds) {
  const PrimeField& f = base.field();
  const std::size_t n = base.dim(), m = fiber.dim();
  NonAbelianCocycle<PrimeField> proto = NonAbelianCocycle<PrimeField>::zero(base, fiber);
  proto.actions = actions;
  check_cocycle_shape(proto);
  const CochainCoordinates<PrimeField> coords(f, n, m);
  auto total = checked_power(f.modulus(), coords.size(), bounds.max_candidates);
  if (!total)
    throw UnsupportedEnumeration("classification needs " + std::to_string(f.modulus()) + "^" +
                                 std::to_string(coords.size()) + " candidates, over the bound of " +
                                 std::to_string(bounds.max_candidates));
  const VectorEnumeration en(f, coords.size());
  auto valid = parallel_collect<NonAbelianCocycle<PrimeField>>(
      *total, [&](std::uint64_t first, std::uint64_t last, std::vector<NonAbelianCocycle<PrimeField>>& out) {
        Vector<PrimeField> v = en.at(first);
        for (std::uint64_t i = first; i < last; ++i) {
          if (i > first) en.next(v);
          NonAbelianCocycle<PrimeField> c = proto;
          CochainPair<PrimeField> pair = coords.from_coords(v);
          c.nu = std::move(pair.nu);
          c.omega = std::move(pair.omega);
          if (validate_nab_cocycle(c, variant, 1).valid()) out.push_back(std::move(c));
        }
      });

  Classification<PrimeField> out;
  out.summary.candidates = *total;
  out.summary.cocycles = valid.size();
  for (auto& c : valid) {
    bool placed = false;
    for (std::size_t r = 0; r < out.representatives.size() && !placed; ++r) {
      auto res = solve_equivalence(c, out.representatives[r], bounds);
      if (res.verdict == Verdict::kUndecided)
        throw UnsupportedEnumeration("equivalence of two cocycles could not be decided within the bound");
      if (res.verdict == Verdict::kFound) {
        ++out.summary.class_sizes[r];
        placed = true;
      }
    }
    if (!placed) {
      out.representatives.push_back(std::move(c));
      out.summary.class_sizes.push_back(1);
    }
  }
  out.summary.classes = out.representatives.size();
  return out;
}

#define BOLEXT_INSTANTIATE(F)                                                                          \
  template ValidationReport<F> validate_extension(const Extension<F>&);                                \
  template void check_section(const Extension<F>&, const Matrix<F>&);                                  \
  template Matrix<F> canonical_section(const Extension<F>&);                                           \
  template Matrix<F> adapted_coordinates(const Extension<F>&, const Matrix<F>&);                       \
  template Vector<F> fiber_coordinates(const Extension<F>&, const Vector<F>&);                         \
  template NonAbelianCocycle<F> extract_cocycle(const Extension<F>&, const Matrix<F>&);                \
  template Extension<F> as_extension(const NonAbelianCocycle<F>&);                                     \
  template NonAbelianCocycle<F> theta_map(const Extension<F>&);                                        \
  template ExtensionEquivalence<F> extensions_equivalent(const Extension<F>&, const Extension<F>&,     \
                                                         const SearchBounds&);

BOLEXT_INSTANTIATE(Rationals)
BOLEXT_INSTANTIATE(PrimeField)

}  // namespace bolext

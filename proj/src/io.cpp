#include "bolext/io.hpp"

#include <fstream>
#include <sstream>

namespace bolext {

namespace {

std::string at(const std::string& where, const std::string& key) { return where.empty() ? key : where + "." + key; }

std::string at(const std::string& where, std::size_t k) { return where + "[" + std::to_string(k) + "]"; }

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ParseError((where.empty() ? std::string() : where + ": ") + what);
}

const Json& member(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing field \"") + key + "\"");
  return *it;
}

const Json& array_of(const Json& j, std::size_t len, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of length " + std::to_string(len));
  if (j.size() != len) fail(where, "expected length " + std::to_string(len) + ", found " + std::to_string(j.size()));
  return j;
}

std::size_t dimension(const Json& j, const char* key, const std::string& where) {
  const Json& v = member(j, key, where);
  if (!v.is_number_integer() || v.get<long long>() < 0) fail(at(where, key), "expected a non-negative integer");
  const auto d = v.get<long long>();
  if (d > 64) fail(at(where, key), "dimension " + std::to_string(d) + " is too large");
  return static_cast<std::size_t>(d);
}

template <class F>
void check_field_matches(const F& f, const Json& j, const std::string& where) {
  auto it = j.find("field");
  if (it == j.end()) return;
  FieldDescriptor d = field_from_json(*it, at(where, "field"));
  if (!(d == f.descriptor()))
    fail(at(where, "field"), "document is over " + d.name() + " but " + f.descriptor().name() + " was expected");
}

template <class F>
std::vector<Matrix<F>> matrix_grid(const F& f, const Json& j, std::size_t n, std::size_t m, const std::string& where) {
  std::vector<Matrix<F>> out;
  array_of(j, n, where);
  for (std::size_t x = 0; x < n; ++x) {
    array_of(j[x], n, at(where, x));
    for (std::size_t y = 0; y < n; ++y) out.push_back(matrix_from_json(f, j[x][y], m, m, at(at(where, x), y)));
  }
  return out;
}

}  // namespace

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t k = 0; k + 1 < e.byte && k < text.size(); ++k) {
      if (text[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(path.string() + ":" + std::to_string(line) + ":" + std::to_string(col) + ": malformed JSON");
  }
}

namespace {

bool is_flat(const Json& j) {
  if (!j.is_array()) return !j.is_object();
  for (const auto& x : j)
    if (x.is_array() || x.is_object()) return false;
  return true;
}

/// Arrays of scalars, and arrays of such arrays whose rows are short, stay on one line.
bool is_inline(const Json& j) {
  if (is_flat(j)) return true;
  if (!j.is_array()) return false;
  std::size_t width = 0;
  for (const auto& x : j) {
    if (!x.is_array() || !is_flat(x)) return false;
    width += x.dump().size();
  }
  return width <= 60;
}

void write_json(std::string& out, const Json& j, int depth) {
  const std::string pad(2 * (depth + 1), ' '), close(2 * depth, ' ');
  if (is_inline(j)) {
    std::string s = j.dump();
    if (j.is_array()) {
      std::string t;
      for (std::size_t k = 0; k < s.size(); ++k) {
        t += s[k];
        if (s[k] == ',' && (k + 1 >= s.size() || s[k + 1] != ' ')) t += ' ';
      }
      s = std::move(t);
    }
    out += s;
    return;
  }
  if (j.is_array()) {
    out += "[\n";
    for (std::size_t k = 0; k < j.size(); ++k) {
      out += pad;
      write_json(out, j[k], depth + 1);
      out += k + 1 < j.size() ? ",\n" : "\n";
    }
    out += close + "]";
    return;
  }
  if (j.empty()) {
    out += "{}";
    return;
  }
  if (j.size() == 1 && is_flat(j.begin().value()) && !j.begin().value().is_array()) {
    out += "{" + Json(j.begin().key()).dump() + ": " + j.begin().value().dump() + "}";
    return;
  }
  out += "{\n";
  std::size_t k = 0;
  for (auto it = j.begin(); it != j.end(); ++it, ++k) {
    out += pad + Json(it.key()).dump() + ": ";
    write_json(out, it.value(), depth + 1);
    out += k + 1 < j.size() ? ",\n" : "\n";
  }
  out += close + "}";
}

}  // namespace

std::string dump_json(const Json& j) {
  std::string out;
  write_json(out, j, 0);
  return out + "\n";
}

FieldDescriptor field_from_json(const Json& j, const std::string& where) {
  std::int64_t p = 0;
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "Q") return FieldDescriptor::rationals();
    if (s.size() > 4 && s.rfind("GF(", 0) == 0 && s.back() == ')') {
      try {
        std::size_t used = 0;
        p = std::stoll(s.substr(3, s.size() - 4), &used);
        if (used != s.size() - 4) fail(where, "unrecognized field \"" + s + "\"");
      } catch (const std::logic_error&) {
        fail(where, "unrecognized field \"" + s + "\"");
      }
    } else {
      fail(where, "unrecognized field \"" + s + "\" (expected \"Q\" or {\"p\": prime})");
    }
  } else if (j.is_object()) {
    const Json& v = member(j, "p", where);
    if (!v.is_number_integer()) fail(at(where, "p"), "expected an integer");
    p = v.get<std::int64_t>();
  } else {
    fail(where, "expected \"Q\" or {\"p\": prime}");
  }
  try {
    return FieldDescriptor::prime(p);
  } catch (const UsageError& e) {
    fail(where, e.what());
  }
}

Json field_to_json(const FieldDescriptor& f) {
  if (!f.is_prime_field()) return "Q";
  return Json{{"p", f.modulus}};
}

DocumentContext DocumentContext::for_file(const std::filesystem::path& file) {
  auto dir = file.parent_path();
  return DocumentContext(dir.empty() ? std::filesystem::path(".") : dir);
}

Json DocumentContext::resolve(const Json& node, const std::string& where) const {
  if (node.is_object()) return node;
  if (node.is_string()) return read_json_file(dir_ / node.get<std::string>());
  fail(where, "expected an embedded document or a file name");
}

FieldDescriptor DocumentContext::document_field(const Json& doc, const std::string& where) const {
  if (!doc.is_object()) fail(where, "expected an object");
  if (auto it = doc.find("field"); it != doc.end()) return field_from_json(*it, at(where, "field"));
  for (const char* key : {"base", "total"}) {
    if (auto it = doc.find(key); it != doc.end()) return document_field(resolve(*it, at(where, key)), at(where, key));
  }
  fail(where, "missing field \"field\"");
}

template <class F>
typename F::Element scalar_from_json(const F& f, const Json& j, const std::string& where) {
  try {
    if constexpr (std::is_same_v<F, Rationals>) {
      if (j.is_number_integer()) return f.from_int(j.get<long>());
      if (j.is_string()) return f.parse(j.get<std::string>());
      fail(where, "expected a rational \"a/b\" or an integer");
    } else {
      if (!j.is_number_integer()) fail(where, "expected an integer residue");
      const auto v = j.get<long long>();
      if (v < 0 || v >= static_cast<long long>(f.modulus()))
        fail(where, "residue " + std::to_string(v) + " outside [0, " + std::to_string(f.modulus()) + ")");
      return static_cast<typename F::Element>(v);
    }
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    fail(where, e.what());
  }
}

template <class F>
Json scalar_to_json(const F& f, const typename F::Element& x) {
  if constexpr (std::is_same_v<F, Rationals>)
    return f.format(x);
  else
    return x;
}

template <class F>
Vector<F> vector_from_json(const F& f, const Json& j, std::size_t len, const std::string& where) {
  array_of(j, len, where);
  Vector<F> v(f, len);
  for (std::size_t k = 0; k < len; ++k) v[k] = scalar_from_json(f, j[k], at(where, k));
  return v;
}

template <class F>
Json vector_to_json(const Vector<F>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(scalar_to_json(v.field(), x));
  return out;
}

template <class F>
Matrix<F> matrix_from_json(const F& f, const Json& j, std::size_t rows, std::size_t cols, const std::string& where) {
  array_of(j, rows, where);
  Matrix<F> m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) m.set_row(r, vector_from_json(f, j[r], cols, at(where, r)));
  return m;
}

template <class F>
Matrix<F> matrix_from_json(const F& f, const Json& j, const std::string& where) {
  if (!j.is_array() || j.empty() || !j[0].is_array()) fail(where, "expected a non-empty array of rows");
  return matrix_from_json(f, j, j.size(), j[0].size(), where);
}

template <class F>
Json matrix_to_json(const Matrix<F>& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vector_to_json(m.row(r)));
  return out;
}

template <class F>
BolAlgebra<F> algebra_from_json(const F& f, const Json& j, const std::string& where) {
  check_field_matches(f, j, where);
  const std::size_t n = dimension(j, "dim", where);
  BolAlgebra<F> a(f, n);
  const std::string wb = at(where, "bilinear"), wt = at(where, "trilinear");
  const Json& b = array_of(member(j, "bilinear", where), n, wb);
  const Json& t = array_of(member(j, "trilinear", where), n, wt);
  for (std::size_t i = 0; i < n; ++i) {
    array_of(b[i], n, at(wb, i));
    array_of(t[i], n, at(wt, i));
    for (std::size_t k = 0; k < n; ++k) {
      Vector<F> v = vector_from_json(f, b[i][k], n, at(at(wb, i), k));
      for (std::size_t l = 0; l < n; ++l) a.bil(i, k, l) = v[l];
      array_of(t[i][k], n, at(at(wt, i), k));
      for (std::size_t l = 0; l < n; ++l) {
        Vector<F> w = vector_from_json(f, t[i][k][l], n, at(at(at(wt, i), k), l));
        for (std::size_t q = 0; q < n; ++q) a.tri(i, k, l, q) = w[q];
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t l = 0; l < n; ++l)
        if (!f.equal(a.bil(i, k, l), f.neg(a.bil(k, i, l))))
          fail(at(at(wb, i), k), "product is not skew: bilinear[" + std::to_string(i) + "][" + std::to_string(k) +
                                     "] != -bilinear[" + std::to_string(k) + "][" + std::to_string(i) + "]");
      for (std::size_t l = 0; l < n; ++l)
        for (std::size_t q = 0; q < n; ++q)
          if (!f.equal(a.tri(i, k, l, q), f.neg(a.tri(k, i, l, q))))
            fail(at(at(wt, i), k), "bracket is not skew in its first two arguments: trilinear[" + std::to_string(i) +
                                       "][" + std::to_string(k) + "] != -trilinear[" + std::to_string(k) + "][" +
                                       std::to_string(i) + "]");
    }
  return a;
}

template <class F>
Json algebra_to_json(const BolAlgebra<F>& a) {
  const std::size_t n = a.dim();
  Json b = Json::array(), t = Json::array();
  for (std::size_t i = 0; i < n; ++i) {
    Json bi = Json::array(), ti = Json::array();
    for (std::size_t k = 0; k < n; ++k) {
      bi.push_back(vector_to_json(a.basis_product(i, k)));
      Json tk = Json::array();
      for (std::size_t l = 0; l < n; ++l) tk.push_back(vector_to_json(a.basis_bracket(i, k, l)));
      ti.push_back(std::move(tk));
    }
    b.push_back(std::move(bi));
    t.push_back(std::move(ti));
  }
  Json out;
  out["field"] = field_to_json(a.field().descriptor());
  out["dim"] = n;
  out["bilinear"] = std::move(b);
  out["trilinear"] = std::move(t);
  return out;
}

template <class F>
Representation<F> representation_from_json(const F& f, const Json& j, const std::string& where) {
  check_field_matches(f, j, where);
  const std::size_t n = dimension(j, "algebra_dim", where), m = dimension(j, "module_dim", where);
  Representation<F> r(f, n, m);
  const std::string wm = at(where, "mu");
  const Json& mu = array_of(member(j, "mu", where), n, wm);
  for (std::size_t x = 0; x < n; ++x) r.mu(x) = matrix_from_json(f, mu[x], m, m, at(wm, x));
  auto theta = matrix_grid(f, member(j, "theta", where), n, m, at(where, "theta"));
  auto dd = matrix_grid(f, member(j, "D", where), n, m, at(where, "D"));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      r.theta(x, y) = theta[x * n + y];
      r.dd(x, y) = dd[x * n + y];
    }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (!(r.dd(x, y) == -r.dd(y, x)))
        fail(at(at(at(where, "D"), x), y), "D is not skew: D[" + std::to_string(x) + "][" + std::to_string(y) +
                                               "] != -D[" + std::to_string(y) + "][" + std::to_string(x) + "]");
  return r;
}

template <class F>
Json representation_to_json(const Representation<F>& r) {
  const std::size_t n = r.algebra_dim();
  Json mu = Json::array(), theta = Json::array(), dd = Json::array();
  for (std::size_t x = 0; x < n; ++x) {
    mu.push_back(matrix_to_json(r.mu(x)));
    Json tx = Json::array(), dx = Json::array();
    for (std::size_t y = 0; y < n; ++y) {
      tx.push_back(matrix_to_json(r.theta(x, y)));
      dx.push_back(matrix_to_json(r.dd(x, y)));
    }
    theta.push_back(std::move(tx));
    dd.push_back(std::move(dx));
  }
  Json out;
  out["field"] = field_to_json(r.field().descriptor());
  out["algebra_dim"] = n;
  out["module_dim"] = r.module_dim();
  out["mu"] = std::move(mu);
  out["theta"] = std::move(theta);
  out["D"] = std::move(dd);
  return out;
}

template <class F>
CochainPair<F> cochains_from_json(const F& f, const Json& j, std::size_t n, std::size_t m, const std::string& where) {
  check_field_matches(f, j, where);
  CochainPair<F> c{Cochain2<F>(f, n, m), Cochain3<F>(f, n, m)};
  const std::string wn = at(where, "nu"), wo = at(where, "omega");
  const Json& nu = array_of(member(j, "nu", where), n, wn);
  const Json& om = array_of(member(j, "omega", where), n, wo);
  for (std::size_t x = 0; x < n; ++x) {
    array_of(nu[x], n, at(wn, x));
    array_of(om[x], n, at(wo, x));
    for (std::size_t y = 0; y < n; ++y) {
      c.nu.at(x, y) = vector_from_json(f, nu[x][y], m, at(at(wn, x), y));
      array_of(om[x][y], n, at(at(wo, x), y));
      for (std::size_t z = 0; z < n; ++z) c.omega.at(x, y, z) = vector_from_json(f, om[x][y][z], m, at(at(at(wo, x), y), z));
    }
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (!(c.nu.at(x, y) == -c.nu.at(y, x)))
        fail(at(at(wn, x), y), "nu is not skew: nu[" + std::to_string(x) + "][" + std::to_string(y) + "] != -nu[" +
                                   std::to_string(y) + "][" + std::to_string(x) + "]");
      for (std::size_t z = 0; z < n; ++z)
        if (!(c.omega.at(x, y, z) == -c.omega.at(y, x, z)))
          fail(at(at(wo, x), y), "omega is not skew in its first two arguments: omega[" + std::to_string(x) + "][" +
                                     std::to_string(y) + "] != -omega[" + std::to_string(y) + "][" + std::to_string(x) +
                                     "]");
    }
  return c;
}

template <class F>
Json cochains_to_json(const CochainPair<F>& c) {
  const std::size_t n = c.nu.algebra_dim();
  Json nu = Json::array(), om = Json::array();
  for (std::size_t x = 0; x < n; ++x) {
    Json nx = Json::array(), ox = Json::array();
    for (std::size_t y = 0; y < n; ++y) {
      nx.push_back(vector_to_json(c.nu.at(x, y)));
      Json oy = Json::array();
      for (std::size_t z = 0; z < n; ++z) oy.push_back(vector_to_json(c.omega.at(x, y, z)));
      ox.push_back(std::move(oy));
    }
    nu.push_back(std::move(nx));
    om.push_back(std::move(ox));
  }
  Json out;
  out["field"] = field_to_json(c.nu.field().descriptor());
  out["nu"] = std::move(nu);
  out["omega"] = std::move(om);
  return out;
}

template <class F>
NonAbelianCocycle<F> nab_cocycle_from_json(const F& f, const Json& j, const DocumentContext& ctx,
                                           const std::string& where) {
  check_field_matches(f, j, where);
  BolAlgebra<F> base = algebra_from_json(f, ctx.resolve(member(j, "base", where), at(where, "base")), at(where, "base"));
  BolAlgebra<F> fiber =
      algebra_from_json(f, ctx.resolve(member(j, "fiber", where), at(where, "fiber")), at(where, "fiber"));
  const std::size_t n = base.dim(), m = fiber.dim();
  CochainPair<F> pair = cochains_from_json(f, j, n, m, where);
  Json actions = j;
  actions["algebra_dim"] = n;
  actions["module_dim"] = m;
  Representation<F> r = representation_from_json(f, actions, where);
  return {std::move(base), std::move(fiber), std::move(pair.nu), std::move(pair.omega), std::move(r)};
}

template <class F>
Json nab_cocycle_to_json(const NonAbelianCocycle<F>& c) {
  Json cochains = cochains_to_json(CochainPair<F>{c.nu, c.omega});
  Json actions = representation_to_json(c.actions);
  Json out;
  out["field"] = field_to_json(c.field().descriptor());
  out["base"] = algebra_to_json(c.base);
  out["fiber"] = algebra_to_json(c.fiber);
  out["nu"] = cochains["nu"];
  out["omega"] = cochains["omega"];
  out["mu"] = actions["mu"];
  out["theta"] = actions["theta"];
  out["D"] = actions["D"];
  return out;
}

template <class F>
ExtensionDocument<F> extension_from_json(const F& f, const Json& j, const DocumentContext& ctx,
                                         const std::string& where) {
  check_field_matches(f, j, where);
  auto part = [&](const char* key) {
    return algebra_from_json(f, ctx.resolve(member(j, key, where), at(where, key)), at(where, key));
  };
  BolAlgebra<F> fiber = part("fiber"), total = part("total"), base = part("base");
  const std::size_t big = total.dim(), m = fiber.dim(), n = base.dim();
  Matrix<F> inj = matrix_from_json(f, member(j, "i", where), big, m, at(where, "i"));
  Matrix<F> proj = matrix_from_json(f, member(j, "p", where), n, big, at(where, "p"));
  ExtensionDocument<F> out{{std::move(fiber), std::move(total), std::move(base), std::move(inj), std::move(proj)},
                           std::nullopt};
  if (auto it = j.find("section"); it != j.end())
    out.section = matrix_from_json(f, *it, big, n, at(where, "section"));
  return out;
}

template <class F>
Json extension_to_json(const Extension<F>& e, const std::optional<Matrix<F>>& section) {
  Json out;
  out["field"] = field_to_json(e.field().descriptor());
  out["fiber"] = algebra_to_json(e.fiber);
  out["total"] = algebra_to_json(e.total);
  out["base"] = algebra_to_json(e.base);
  out["i"] = matrix_to_json(e.inj);
  out["p"] = matrix_to_json(e.proj);
  if (section) out["section"] = matrix_to_json(*section);
  return out;
}

template <class F>
AutPair<F> autpair_from_json(const F& f, const Json& j, std::size_t n, std::size_t m, const std::string& where) {
  return {matrix_from_json(f, member(j, "alpha", where), n, n, at(where, "alpha")),
          matrix_from_json(f, member(j, "beta", where), m, m, at(where, "beta"))};
}

template <class F>
Json autpair_to_json(const AutPair<F>& p) {
  Json out;
  out["alpha"] = matrix_to_json(p.alpha);
  out["beta"] = matrix_to_json(p.beta);
  return out;
}

Json exactness_to_json(const ExactnessReport& r) {
  Json counts;
  counts["aut_base"] = r.aut_base;
  counts["aut_fiber"] = r.aut_fiber;
  counts["pairs"] = r.pairs;
  counts["aut_v_total"] = r.aut_v_total;
  counts["kernel_kappa"] = r.kernel_kappa;
  counts["z1"] = r.z1;
  counts["image_kappa"] = r.image_kappa;
  counts["kernel_wells"] = r.kernel_wells;
  counts["inducible"] = r.inducible;
  counts["undecided"] = r.undecided;
  Json checks;
  checks["kernel_kappa_is_image_i"] = r.kernel_kappa_is_image_i;
  checks["kernel_wells_is_image_kappa"] = r.kernel_wells_is_image_kappa;
  checks["s_bijective"] = r.s_bijective;
  checks["kappa_homomorphism"] = r.kappa_homomorphism;
  checks["s_homomorphism"] = r.s_homomorphism;
  checks["order_identity"] = r.order_identity;
  checks["inducible_matches_lifts"] = r.inducible_matches_lifts;
  checks["inducible_matches_wells"] = r.inducible_matches_wells;
  checks["z1_closed_under_addition"] = r.z1_closed;
  Json out;
  out["field"] = r.field;
  out["base_dim"] = r.base_dim;
  out["fiber_dim"] = r.fiber_dim;
  out["z1_method"] = r.z1_method;
  out["counts"] = std::move(counts);
  out["checks"] = std::move(checks);
  out["exact"] = r.exact();
  return out;
}

#define BOLEXT_INSTANTIATE(F)                                                                                    \
  template typename F::Element scalar_from_json(const F&, const Json&, const std::string&);                      \
  template Json scalar_to_json(const F&, const typename F::Element&);                                            \
  template Vector<F> vector_from_json(const F&, const Json&, std::size_t, const std::string&);                   \
  template Json vector_to_json(const Vector<F>&);                                                                \
  template Matrix<F> matrix_from_json(const F&, const Json&, std::size_t, std::size_t, const std::string&);      \
  template Matrix<F> matrix_from_json(const F&, const Json&, const std::string&);                                \
  template Json matrix_to_json(const Matrix<F>&);                                                                \
  template BolAlgebra<F> algebra_from_json(const F&, const Json&, const std::string&);                           \
  template Json algebra_to_json(const BolAlgebra<F>&);                                                           \
  template Representation<F> representation_from_json(const F&, const Json&, const std::string&);                \
  template Json representation_to_json(const Representation<F>&);                                               \
  template CochainPair<F> cochains_from_json(const F&, const Json&, std::size_t, std::size_t, const std::string&); \
  template Json cochains_to_json(const CochainPair<F>&);                                                         \
  template NonAbelianCocycle<F> nab_cocycle_from_json(const F&, const Json&, const DocumentContext&,             \
                                                      const std::string&);                                       \
  template Json nab_cocycle_to_json(const NonAbelianCocycle<F>&);                                                \
  template ExtensionDocument<F> extension_from_json(const F&, const Json&, const DocumentContext&,               \
                                                    const std::string&);                                         \
  template Json extension_to_json(const Extension<F>&, const std::optional<Matrix<F>>&);                         \
  template AutPair<F> autpair_from_json(const F&, const Json&, std::size_t, std::size_t, const std::string&);    \
  template Json autpair_to_json(const AutPair<F>&);

BOLEXT_INSTANTIATE(Rationals)
BOLEXT_INSTANTIATE(PrimeField)

}  // namespace bolext

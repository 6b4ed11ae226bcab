#include <CLI11.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "bolext/io.hpp"

namespace bolext {
namespace {

constexpr int kHolds = 0;
constexpr int kFails = 1;
constexpr int kUsage = 2;

struct Globals {
  std::string variant = "corrected";
  std::uint64_t bound = SearchBounds{}.max_candidates;
  bool json = false;

  Variant parsed_variant() const { return variant == "strict-paper" ? Variant::kLiteral : parse_variant(variant); }
  SearchBounds bounds() const {
    SearchBounds b;
    b.max_candidates = bound;
    return b;
  }
};

struct Document {
  std::string path;
  Json json;
  DocumentContext ctx;
  FieldDescriptor field;
};

Document load(const std::string& path) {
  Json j = read_json_file(path);
  DocumentContext ctx = DocumentContext::for_file(path);
  try {
    FieldDescriptor f = ctx.document_field(j, "");
    return {path, std::move(j), std::move(ctx), f};
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

FieldDescriptor common_field(const std::vector<const Document*>& docs) {
  for (const auto* d : docs)
    if (!(d->field == docs.front()->field))
      throw UsageError(d->path + " is over " + d->field.name() + " but " + docs.front()->path + " is over " +
                       docs.front()->field.name());
  return docs.front()->field;
}

/// Rethrows a ParseError with the document path in front.
template <class Fn>
auto parsed(const Document& d, Fn&& fn) {
  try {
    return fn();
  } catch (const ParseError& e) {
    throw ParseError(d.path + ": " + e.what());
  }
}

template <class F>
BolAlgebra<F> algebra_of(const F& f, const Document& d) {
  return parsed(d, [&] { return algebra_from_json(f, d.json, ""); });
}

template <class F>
Representation<F> representation_of(const F& f, const Document& d, const BolAlgebra<F>& a) {
  auto r = parsed(d, [&] { return representation_from_json(f, d.json, ""); });
  if (r.algebra_dim() != a.dim())
    throw UsageError(d.path + ": algebra_dim " + std::to_string(r.algebra_dim()) + " does not match algebra dimension " +
                     std::to_string(a.dim()));
  return r;
}

template <class F>
NonAbelianCocycle<F> cocycle_of(const F& f, const Document& d) {
  return parsed(d, [&] { return nab_cocycle_from_json(f, d.json, d.ctx, ""); });
}

template <class F>
ExtensionDocument<F> extension_of(const F& f, const Document& d) {
  return parsed(d, [&] { return extension_from_json(f, d.json, d.ctx, ""); });
}

/// "id", a scalar (that multiple of the identity), an inline JSON matrix, or a file holding one.
template <class F>
Matrix<F> matrix_arg(const F& f, const std::string& text, std::size_t rows, std::size_t cols, const std::string& name) {
  const std::string where = "--" + name;
  if (text == "id") {
    if (rows != cols) throw UsageError(where + ": id needs a square matrix");
    return Matrix<F>::identity(f, rows);
  }
  if (!text.empty() && text.front() == '[') {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const nlohmann::json::parse_error&) {
      throw ParseError(where + ": malformed JSON matrix");
    }
    return matrix_from_json(f, j, rows, cols, where);
  }
  if (std::filesystem::exists(text)) return matrix_from_json(f, read_json_file(text), rows, cols, text);
  typename F::Element c;
  try {
    c = f.parse(text);
  } catch (const Error&) {
    throw UsageError(where + ": expected id, a scalar, a JSON matrix or a file, got \"" + text + "\"");
  }
  if (rows != cols) throw UsageError(where + ": a scalar needs a square matrix");
  Matrix<F> m = Matrix<F>::identity(f, rows);
  for (std::size_t k = 0; k < rows; ++k) m(k, k) = c;
  return m;
}

std::string compact(const Json& j) { return j.dump(); }

template <class F>
Json violations_json(const ValidationReport<F>& r) {
  Json out = Json::array();
  for (const auto& v : r.violations()) {
    Json idx = Json::array();
    for (auto k : v.indices) idx.push_back(k + 1);
    out.push_back(Json{{"tag", v.tag}, {"indices", idx}, {"residual", vector_to_json(v.residual)}});
  }
  return out;
}

template <class F>
int print_report(const ValidationReport<F>& r, const Globals& g, Json extra = Json::object()) {
  if (g.json) {
    Json out;
    out["valid"] = r.valid();
    out["failed_tags"] = r.failed_tags();
    out["violations"] = violations_json(r);
    out["notes"] = r.notes;
    for (auto& [k, v] : extra.items()) out[k] = v;
    std::cout << dump_json(out);
  } else {
    if (r.valid()) {
      std::cout << "valid\n";
    } else {
      std::cout << "invalid:";
      for (const auto& t : r.failed_tags()) std::cout << " (" << t << ")";
      std::cout << "\n";
      constexpr std::size_t kShown = 20;
      const auto& vs = r.violations();
      for (std::size_t k = 0; k < vs.size() && k < kShown; ++k)
        std::cout << "  (" << vs[k].tag << ") at " << format_indices(vs[k].indices) << ": residual "
                  << vs[k].residual.to_string() << "\n";
      if (vs.size() > kShown) std::cout << "  ... " << vs.size() - kShown << " more\n";
    }
    for (const auto& n : r.notes) std::cout << "note: " << n << "\n";
  }
  return r.valid() ? kHolds : kFails;
}

void print_verdict_line(const std::string& yes, const std::string& no, Verdict v, const std::string& tag) {
  if (v == Verdict::kFound) {
    std::cout << yes << "\n";
  } else if (v == Verdict::kNone) {
    std::cout << no << (tag.empty() ? "" : ": (" + tag + ")") << "\n";
  } else {
    std::cout << "undecided\n";
  }
}

int verdict_code(Verdict v) { return v == Verdict::kFound ? kHolds : v == Verdict::kNone ? kFails : kUsage; }

template <class F>
Json search_json(const SearchResult<F>& s) {
  Json out;
  out["verdict"] = verdict_name(s.verdict);
  out["method"] = s.method;
  if (!s.failing_tag.empty()) out["failing_tag"] = s.failing_tag;
  if (s.witness) out["phi"] = matrix_to_json(*s.witness);
  return out;
}

template <class F>
Matrix<F> section_for(const F& f, const ExtensionDocument<F>& doc, const std::string& arg) {
  const auto& e = doc.extension;
  Matrix<F> s = !arg.empty()        ? matrix_arg(f, arg, e.total.dim(), e.base.dim(), "section")
                : doc.section ? *doc.section
                              : canonical_section(e);
  check_section(e, s);
  return s;
}

template <class F>
ExtensionDocument<F> valid_extension(const F& f, const Document& d) {
  auto doc = extension_of(f, d);
  auto report = validate_extension(doc.extension);
  if (!report.valid()) throw UsageError(d.path + ": not an extension (" + report.first_tag() + ")");
  return doc;
}

template <class F>
AutPair<F> pair_arg(const F& f, const Extension<F>& e, const std::string& alpha, const std::string& beta,
                    const std::string& pair_file) {
  const std::size_t n = e.base.dim(), m = e.fiber.dim();
  AutPair<F> p = !pair_file.empty()
                     ? autpair_from_json(f, read_json_file(pair_file), n, m, pair_file)
                     : AutPair<F>{matrix_arg(f, alpha, n, n, "alpha"), matrix_arg(f, beta, m, m, "beta")};
  check_aut_pair(p, e.base, e.fiber);
  return p;
}

PrimeField require_prime(const FieldDescriptor& d, const std::string& verb) {
  if (!d.is_prime_field()) throw UnsupportedEnumeration(verb + " enumerates and needs a prime field, got Q");
  return PrimeField(static_cast<std::uint32_t>(d.modulus));
}

struct Args {
  std::vector<std::string> files;
  std::string algebra, rep, extension, base, fiber, actions, section, alpha, beta, pair, phi, field;
  std::string kind;
  std::size_t dim = 0;
  bool tri_zero = false;
};

int cmd_validate(const Args& a, const Globals& g) {
  Document d = load(a.files.at(0));
  return with_field(d.field, [&](const auto& f) { return print_report(validate_bol(algebra_of(f, d)), g); });
}

int cmd_validate_rep(const Args& a, const Globals& g) {
  Document da = load(a.algebra), dr = load(a.rep);
  return with_field(common_field({&da, &dr}), [&](const auto& f) {
    auto alg = algebra_of(f, da);
    return print_report(validate_representation(alg, representation_of(f, dr, alg)), g);
  });
}

int cmd_semidirect(const Args& a, const Globals&) {
  Document da = load(a.algebra), dr = load(a.rep);
  return with_field(common_field({&da, &dr}), [&](const auto& f) {
    auto alg = algebra_of(f, da);
    std::cout << dump_json(algebra_to_json(semidirect_product(alg, representation_of(f, dr, alg))));
    return kHolds;
  });
}

int cmd_cohomology(const Args& a, const Globals& g) {
  Document da = load(a.algebra), dr = load(a.rep);
  return with_field(common_field({&da, &dr}), [&](const auto& f) {
    auto alg = algebra_of(f, da);
    auto rep = representation_of(f, dr, alg);
    auto rep_report = validate_representation(alg, rep, 1);
    if (!rep_report.valid()) throw UsageError(dr.path + ": not a module (" + rep_report.first_tag() + ")");
    auto res = cohomology23(alg, rep, g.parsed_variant());
    if (g.json) {
      Json reps = Json::array();
      for (const auto& c : res.representatives) reps.push_back(cochains_to_json(c));
      Json out;
      out["z"] = res.z_dim;
      out["b"] = res.b_dim;
      out["h"] = res.h_dim;
      out["variant"] = variant_name(g.parsed_variant());
      out["representatives"] = std::move(reps);
      std::cout << dump_json(out);
    } else {
      std::cout << "z=" << res.z_dim << " b=" << res.b_dim << " h=" << res.h_dim << "\n";
    }
    return kHolds;
  });
}

int cmd_nab_validate(const Args& a, const Globals& g) {
  Document d = load(a.files.at(0));
  return with_field(d.field, [&](const auto& f) {
    return print_report(validate_nab_cocycle(cocycle_of(f, d), g.parsed_variant()), g);
  });
}

int cmd_build_extension(const Args& a, const Globals&) {
  Document d = load(a.files.at(0));
  return with_field(d.field, [&](const auto& f) {
    std::cout << dump_json(extension_to_json(as_extension(cocycle_of(f, d))));
    return kHolds;
  });
}

int cmd_extract(const Args& a, const Globals&) {
  Document d = load(a.extension);
  return with_field(d.field, [&](const auto& f) {
    auto doc = valid_extension(f, d);
    std::cout << dump_json(nab_cocycle_to_json(extract_cocycle(doc.extension, section_for(f, doc, a.section))));
    return kHolds;
  });
}

int cmd_equiv_cocycles(const Args& a, const Globals& g) {
  Document d1 = load(a.files.at(0)), d2 = load(a.files.at(1));
  return with_field(common_field({&d1, &d2}), [&](const auto& f) {
    auto c1 = cocycle_of(f, d1);
    auto c2 = cocycle_of(f, d2);
    if (!a.phi.empty()) {
      auto phi = matrix_arg(f, a.phi, c1.fiber_dim(), c1.base_dim(), "phi");
      return print_report(cocycles_equivalent_via(c1, c2, phi), g);
    }
    auto s = solve_equivalence(c1, c2, g.bounds());
    if (g.json) {
      std::cout << dump_json(search_json(s));
    } else {
      print_verdict_line("equivalent", "not equivalent", s.verdict, s.failing_tag);
      if (s.witness) std::cout << "phi: " << compact(matrix_to_json(*s.witness)) << "\n";
    }
    return verdict_code(s.verdict);
  });
}

int cmd_equiv_extensions(const Args& a, const Globals& g) {
  Document d1 = load(a.files.at(0)), d2 = load(a.files.at(1));
  return with_field(common_field({&d1, &d2}), [&](const auto& f) {
    auto e1 = valid_extension(f, d1).extension;
    auto e2 = valid_extension(f, d2).extension;
    auto res = extensions_equivalent(e1, e2, g.bounds());
    if (g.json) {
      Json out = search_json(res.search);
      if (res.f) out["f"] = matrix_to_json(*res.f);
      std::cout << dump_json(out);
    } else {
      print_verdict_line("equivalent", "not equivalent", res.search.verdict, res.search.failing_tag);
      if (res.f) std::cout << "f: " << compact(matrix_to_json(*res.f)) << "\n";
    }
    return verdict_code(res.search.verdict);
  });
}

int cmd_classify(const Args& a, const Globals& g) {
  Document db = load(a.base), dv = load(a.fiber);
  std::optional<Document> dr;
  if (!a.actions.empty()) dr = load(a.actions);
  std::vector<const Document*> docs{&db, &dv};
  if (dr) docs.push_back(&*dr);
  const PrimeField f = require_prime(common_field(docs), "classify");
  auto base = algebra_of(f, db);
  auto fiber = algebra_of(f, dv);
  Actions<PrimeField> actions(f, base.dim(), fiber.dim());
  if (dr) {
    actions = parsed(*dr, [&] { return representation_from_json(f, dr->json, ""); });
    check_actions_shape(base, actions);
    if (actions.module_dim() != fiber.dim()) throw UsageError(dr->path + ": module_dim does not match the fiber");
  }
  auto res = classify_corpus(base, fiber, actions, g.parsed_variant(), g.bounds());
  if (g.json) {
    Json reps = Json::array();
    for (const auto& c : res.representatives) reps.push_back(cochains_to_json(CochainPair<PrimeField>{c.nu, c.omega}));
    Json out;
    out["field"] = f.descriptor().name();
    out["variant"] = variant_name(g.parsed_variant());
    out["candidates"] = res.summary.candidates;
    out["cocycles"] = res.summary.cocycles;
    out["classes"] = res.summary.classes;
    out["class_sizes"] = res.summary.class_sizes;
    out["representatives"] = std::move(reps);
    std::cout << dump_json(out);
  } else {
    std::cout << "candidates=" << res.summary.candidates << " cocycles=" << res.summary.cocycles
              << " classes=" << res.summary.classes << "\n";
  }
  return kHolds;
}

int cmd_inducible(const Args& a, const Globals& g) {
  Document d = load(a.extension);
  return with_field(d.field, [&](const auto& f) {
    auto e = valid_extension(f, d).extension;
    auto pair = pair_arg(f, e, a.alpha, a.beta, a.pair);
    auto s = solve_inducibility(e, pair, g.parsed_variant(), g.bounds());
    if (g.json) {
      std::cout << dump_json(search_json(s));
    } else {
      print_verdict_line("inducible", "not inducible", s.verdict, s.failing_tag);
      if (s.witness) std::cout << "phi: " << compact(matrix_to_json(*s.witness)) << "\n";
    }
    return verdict_code(s.verdict);
  });
}

int cmd_lift(const Args& a, const Globals& g) {
  Document d = load(a.extension);
  return with_field(d.field, [&](const auto& f) {
    auto doc = valid_extension(f, d);
    const auto& e = doc.extension;
    auto pair = pair_arg(f, e, a.alpha, a.beta, a.pair);
    using M = std::decay_t<decltype(pair.alpha)>;
    M s = canonical_section(e);
    std::optional<M> phi;
    if (!a.phi.empty()) {
      s = section_for(f, doc, a.section);
      phi = matrix_arg(f, a.phi, e.fiber.dim(), e.base.dim(), "phi");
      auto report = inducible_via(e, s, pair, *phi, g.parsed_variant());
      if (!report.valid()) return print_report(report, g);
    } else {
      if (!a.section.empty()) throw UsageError("--section needs --phi");
      auto res = solve_inducibility(e, pair, g.parsed_variant(), g.bounds());
      if (res.verdict != Verdict::kFound) {
        print_verdict_line("inducible", "not inducible", res.verdict, res.failing_tag);
        return verdict_code(res.verdict);
      }
      phi = res.witness;
    }
    auto gamma = lift_automorphism(e, s, pair, *phi, g.parsed_variant());
    if (g.json) {
      Json out;
      out["phi"] = matrix_to_json(*phi);
      out["gamma"] = matrix_to_json(gamma);
      std::cout << dump_json(out);
    } else {
      std::cout << "phi: " << compact(matrix_to_json(*phi)) << "\n";
      std::cout << "gamma: " << compact(matrix_to_json(gamma)) << "\n";
    }
    return kHolds;
  });
}

int cmd_wells(const Args& a, const Globals& g) {
  Document d = load(a.extension);
  return with_field(d.field, [&](const auto& f) {
    auto doc = valid_extension(f, d);
    const auto& e = doc.extension;
    auto pair = pair_arg(f, e, a.alpha, a.beta, a.pair);
    using M = std::decay_t<decltype(pair.alpha)>;
    std::optional<M> s;
    if (!a.section.empty() || doc.section) s = section_for(f, doc, a.section);
    auto w = wells_map(e, pair, g.bounds(), s);
    if (g.json) {
      Json out = search_json(w.equivalence);
      out["abelian_mode"] = w.abelian_mode;
      out["compatible"] = w.compatible;
      out["class_zero"] = verdict_name(w.class_zero());
      out["acted"] = nab_cocycle_to_json(w.acted);
      std::cout << dump_json(out);
    } else {
      print_verdict_line("class zero", "class nonzero", w.class_zero(), w.equivalence.failing_tag);
      if (w.equivalence.witness) std::cout << "phi: " << compact(matrix_to_json(*w.equivalence.witness)) << "\n";
    }
    return verdict_code(w.class_zero());
  });
}

int cmd_exactness(const Args& a, const Globals& g) {
  Document d = load(a.extension);
  const PrimeField f = require_prime(d.field, "exactness");
  auto e = valid_extension(f, d).extension;
  auto bounds = g.bounds();
  auto r = verify_wells_exactness(e, g.parsed_variant(), bounds);
  Json out = exactness_to_json(r);
  if (g.json) {
    std::cout << dump_json(out);
  } else {
    for (auto& [k, v] : out["counts"].items()) std::cout << k << "=" << v.dump() << "\n";
    for (auto& [k, v] : out["checks"].items()) std::cout << k << ": " << (v.get<bool>() ? "yes" : "no") << "\n";
    std::cout << (r.exact() ? "exact" : "not exact") << "\n";
  }
  return r.exact() ? kHolds : kFails;
}

template <class F>
int print_matrices(const std::vector<Matrix<F>>& ms, const Globals& g) {
  if (g.json) {
    Json list = Json::array();
    for (const auto& m : ms) list.push_back(matrix_to_json(m));
    std::cout << dump_json(Json{{"count", ms.size()}, {"items", list}});
  } else {
    std::cout << "count=" << ms.size() << "\n";
  }
  return kHolds;
}

int cmd_enumerate(const Args& a, const Globals& g) {
  auto bounds = g.bounds();
  if (a.kind == "automorphisms") {
    if (a.files.empty()) throw UsageError("enumerate automorphisms needs an algebra file");
    Document d = load(a.files.at(0));
    const PrimeField f = require_prime(d.field, "enumerate");
    return print_matrices(enumerate_automorphisms(algebra_of(f, d), bounds), g);
  }
  if (a.kind == "fiber-automorphisms") {
    Document d = load(a.extension);
    const PrimeField f = require_prime(d.field, "enumerate");
    return print_matrices(enumerate_fiber_automorphisms(valid_extension(f, d).extension, bounds), g);
  }
  if (a.kind == "compatible-pairs") {
    Document da = load(a.algebra), dr = load(a.rep);
    const PrimeField f = require_prime(common_field({&da, &dr}), "enumerate");
    auto alg = algebra_of(f, da);
    auto pairs = compatible_pairs(alg, representation_of(f, dr, alg), bounds);
    if (g.json) {
      Json list = Json::array();
      for (const auto& p : pairs) list.push_back(autpair_to_json(p));
      std::cout << dump_json(Json{{"count", pairs.size()}, {"items", list}});
    } else {
      std::cout << "count=" << pairs.size() << "\n";
    }
    return kHolds;
  }
  if (a.kind == "algebras") {
    if (a.field.empty()) throw UsageError("enumerate algebras needs --field");
    Json fj = a.field == "Q" || a.field.rfind("GF(", 0) == 0 ? Json(a.field) : Json{{"p", std::stoll(a.field)}};
    FieldDescriptor fd = field_from_json(fj, "--field");
    auto algs = enumerate_bol_algebras(fd, a.dim, a.tri_zero, bounds);
    if (g.json) {
      Json list = Json::array();
      for (const auto& x : algs) list.push_back(algebra_to_json(x));
      std::cout << dump_json(Json{{"count", algs.size()}, {"items", list}});
    } else {
      std::cout << "count=" << algs.size() << "\n";
    }
    return kHolds;
  }
  throw UsageError("unknown enumeration \"" + a.kind + "\"");
}

int run(int argc, char** argv) {
  CLI::App app{"Bol algebra extensions: validation, cohomology, classification and the Wells sequence"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  Args a;
  app.add_option("--variant", g.variant, "corrected | literal (alias strict-paper)")
      ->check(CLI::IsMember({"corrected", "literal", "strict-paper"}));
  app.add_option("--bound", g.bound, "maximum number of candidates in a brute-force search");
  app.add_flag("--json", g.json, "print a JSON report");

  using Handler = int (*)(const Args&, const Globals&);
  std::vector<std::pair<CLI::App*, Handler>> verbs;
  auto verb = [&](const char* name, const char* help, Handler h) {
    auto* sub = app.add_subcommand(name, help);
    verbs.emplace_back(sub, h);
    return sub;
  };
  auto files = [&](CLI::App* sub, int n, const char* help) { sub->add_option("files", a.files, help)->required()->expected(n); };
  auto alg_rep = [&](CLI::App* sub) {
    sub->add_option("--algebra", a.algebra, "algebra document")->required();
    sub->add_option("--rep", a.rep, "representation document")->required();
  };
  auto ext = [&](CLI::App* sub) { sub->add_option("--extension", a.extension, "extension document")->required(); };
  auto pair = [&](CLI::App* sub) {
    sub->add_option("--alpha", a.alpha, "automorphism of the base: id, scalar, JSON matrix or file")->default_str("id");
    sub->add_option("--beta", a.beta, "automorphism of the fiber: id, scalar, JSON matrix or file")->default_str("id");
    sub->add_option("--pair", a.pair, "AutPair document");
  };
  a.alpha = a.beta = "id";

  files(verb("validate", "check the Bol identities", cmd_validate), 1, "algebra document");
  alg_rep(verb("validate-rep", "check the module identities", cmd_validate_rep));
  alg_rep(verb("semidirect", "print the semidirect product", cmd_semidirect));
  alg_rep(verb("cohomology", "dimensions of cocycles, coboundaries and cohomology", cmd_cohomology));
  files(verb("nab-validate", "check the non-abelian cocycle identities", cmd_nab_validate), 1, "cocycle document");
  files(verb("build-extension", "extension algebra of a non-abelian cocycle", cmd_build_extension), 1,
        "cocycle document");
  {
    auto* sub = verb("extract-cocycle", "cocycle of an extension for a section", cmd_extract);
    ext(sub);
    sub->add_option("--section", a.section, "section matrix (default: the document's or the canonical one)");
  }
  {
    auto* sub = verb("equiv-cocycles", "decide equivalence of two non-abelian cocycles", cmd_equiv_cocycles);
    files(sub, 2, "two cocycle documents");
    sub->add_option("--phi", a.phi, "check this map instead of searching");
  }
  files(verb("equiv-extensions", "decide equivalence of two extensions", cmd_equiv_extensions), 2,
        "two extension documents");
  {
    auto* sub = verb("classify", "count equivalence classes of cocycles with fixed actions", cmd_classify);
    sub->add_option("--base", a.base, "base algebra")->required();
    sub->add_option("--fiber", a.fiber, "fiber algebra")->required();
    sub->add_option("--actions", a.actions, "representation document holding mu, theta, D (default zero)");
  }
  {
    auto* sub = verb("inducible", "decide whether a pair of automorphisms is inducible", cmd_inducible);
    ext(sub);
    pair(sub);
  }
  {
    auto* sub = verb("lift", "lift an inducible pair to an automorphism of the extension", cmd_lift);
    ext(sub);
    pair(sub);
    sub->add_option("--phi", a.phi, "use this map instead of searching");
    sub->add_option("--section", a.section, "section used with --phi");
  }
  {
    auto* sub = verb("wells", "class of the Wells map at a pair", cmd_wells);
    ext(sub);
    pair(sub);
    sub->add_option("--section", a.section, "section (default: the document's or the canonical one)");
  }
  ext(verb("exactness", "verify the Wells exact sequence by enumeration", cmd_exactness));
  {
    auto* sub = verb("enumerate", "brute-force enumerations over GF(p)", cmd_enumerate);
    sub->add_option("kind", a.kind, "automorphisms | fiber-automorphisms | compatible-pairs | algebras")
        ->required()
        ->check(CLI::IsMember({"automorphisms", "fiber-automorphisms", "compatible-pairs", "algebras"}));
    sub->add_option("files", a.files, "algebra document (automorphisms)");
    sub->add_option("--extension", a.extension, "extension document (fiber-automorphisms)");
    sub->add_option("--algebra", a.algebra, "algebra document (compatible-pairs)");
    sub->add_option("--rep", a.rep, "representation document (compatible-pairs)");
    sub->add_option("--field", a.field, "field for algebras: Q, GF(p) or p");
    sub->add_option("--dim", a.dim, "dimension for algebras");
    sub->add_flag("--tri-zero", a.tri_zero, "only algebras with zero bracket");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kHolds : kUsage;
  }
  for (const auto& [sub, handler] : verbs)
    if (sub->parsed()) return handler(a, g);
  return kUsage;
}

}  // namespace
}  // namespace bolext

int main(int argc, char** argv) {
  try {
    return bolext::run(argc, argv);
  } catch (const bolext::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
  } catch (const bolext::IoError& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
  } catch (const bolext::UnsupportedEnumeration& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
  } catch (const bolext::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
  } catch (const bolext::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return 2;
}

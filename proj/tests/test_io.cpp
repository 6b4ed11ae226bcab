#include <doctest.h>

#include <fstream>
#include <sstream>

#include "support.hpp"

using namespace bolext;
using namespace bolext::test;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Parses a corpus document by its extension and serializes it again.
std::string canonical_text(const fs::path& path) {
  const Json j = read_json_file(path);
  const auto ctx = DocumentContext::for_file(path);
  const std::string where = path.filename().string();
  const std::string ext = path.extension().string();
  FieldDescriptor fd = path.parent_path().filename() == "gf5" ? FieldDescriptor::prime(5) : FieldDescriptor::rationals();
  if (ext != ".aut") fd = ctx.document_field(j, where);
  return with_field(fd, [&](const auto& f) -> std::string {
    if (ext == ".bol") return dump_json(algebra_to_json(algebra_from_json(f, j, where)));
    if (ext == ".rep") return dump_json(representation_to_json(representation_from_json(f, j, where)));
    if (ext == ".nab") return dump_json(nab_cocycle_to_json(nab_cocycle_from_json(f, j, ctx, where)));
    if (ext == ".ext") {
      auto doc = extension_from_json(f, j, ctx, where);
      return dump_json(extension_to_json(doc.extension, doc.section));
    }
    if (ext == ".aut") return dump_json(autpair_to_json(autpair_from_json(f, j, 2, 1, where)));
    throw UsageError("unknown corpus file " + where);
  });
}

fs::path scratch(const std::string& name, const std::string& text) {
  const fs::path p = fs::temp_directory_path() / ("bolext_test_" + name);
  std::ofstream(p, std::ios::binary) << text;
  return p;
}

template <class Fn>
std::string error_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

Json parse(const std::string& s) { return Json::parse(s); }

}  // namespace

TEST_CASE("every corpus file is in canonical form") {
  std::size_t files = 0;
  for (const auto& entry : fs::recursive_directory_iterator(corpus_dir())) {
    const fs::path& p = entry.path();
    if (!entry.is_regular_file() || p.filename() == "manifest.json") continue;
    INFO(p.string());
    const std::string text = slurp(p);
    const std::string out = canonical_text(p);
    if (p.stem() == "e_h3_refs")
      CHECK(out == slurp(p.parent_path() / "e_h3.ext"));
    else
      CHECK(out == text);
    ++files;
  }
  CHECK(files == 30);
}

TEST_CASE("documents parse to the fixtures") {
  Rationals q;
  const auto dir = corpus_dir();
  CHECK(algebra_from_json(q, read_json_file(dir / "h3.bol"), "h3.bol") == fixture_h3(q));
  CHECK(algebra_from_json(gf5(), read_json_file(dir / "gf5/s2.bol"), "s2.bol") == fixture_s2(gf5()));
  CHECK(representation_from_json(q, read_json_file(dir / "r_s2.rep"), "r_s2.rep") == fixture_r_s2(q));
  auto j = read_json_file(dir / "e_h3.nab");
  CHECK(nab_cocycle_from_json(q, j, DocumentContext::for_file(dir / "e_h3.nab"), "e_h3.nab") ==
        theta_map(fixture_e_h3(q)));
}

TEST_CASE("fields of characteristic 2 or 3 and non-primes are refused") {
  for (const char* text : {R"j({"p": 3})j", R"j("GF(3)")j", R"j({"p": 4})j", R"j({"p": 2})j", R"j("Z")j", R"j(5)j"})
    CHECK_THROWS_AS(field_from_json(parse(text), "field"), Error);
  CHECK(field_from_json(parse(R"j("GF(7)")j"), "field") == FieldDescriptor::prime(7));
  CHECK(field_from_json(parse(R"j({"p": 5})j"), "field") == FieldDescriptor::prime(5));
  CHECK(dump_json(field_to_json(FieldDescriptor::prime(5))) == "{\"p\": 5}\n");
  CHECK(dump_json(field_to_json(FieldDescriptor::rationals())) == "\"Q\"\n");
}

TEST_CASE("parse errors name the location and the broken invariant") {
  Rationals q;
  auto skew = parse(R"j({"field": "Q", "dim": 2,
    "bilinear": [[["0","0"],["1","0"]], [["0","0"],["0","0"]]],
    "trilinear": [[[["0","0"],["0","0"]],[["0","0"],["0","0"]]], [[["0","0"],["0","0"]],[["0","0"],["0","0"]]]]})j");
  const std::string msg = error_of([&] { algebra_from_json(q, skew, "a.bol"); });
  CHECK(msg.find("product is not skew") != std::string::npos);
  CHECK(msg.find("a.bol") == 0);

  auto short_row = parse(R"j({"field": "Q", "dim": 2, "bilinear": [[["0","0"]]], "trilinear": []})j");
  CHECK(error_of([&] { algebra_from_json(q, short_row, "a.bol"); }).find("expected length 2") != std::string::npos);

  auto big = parse(R"j({"field": {"p": 5}, "dim": 1, "bilinear": [[[7]]], "trilinear": [[[[0]]]]})j");
  CHECK_THROWS_AS(algebra_from_json(gf5(), big, "a.bol"), ParseError);
  auto bad_q = parse(R"j({"field": "Q", "dim": 1, "bilinear": [[["1/0"]]], "trilinear": [[[["0"]]]]})j");
  CHECK_THROWS_AS(algebra_from_json(q, bad_q, "a.bol"), ParseError);
  auto missing = parse(R"j({"field": "Q", "dim": 1, "bilinear": [[["0"]]]})j");
  CHECK(error_of([&] { algebra_from_json(q, missing, "a.bol"); }).find("missing field") != std::string::npos);
  auto mismatch = parse(R"j({"field": {"p": 7}, "dim": 1, "bilinear": [[[0]]], "trilinear": [[[[0]]]]})j");
  CHECK_THROWS_AS(algebra_from_json(gf5(), mismatch, "a.bol"), ParseError);
  auto huge = parse(R"j({"field": "Q", "dim": 65, "bilinear": [], "trilinear": []})j");
  CHECK(error_of([&] { algebra_from_json(q, huge, "a.bol"); }).find("too large") != std::string::npos);
}

TEST_CASE("unreadable and malformed files") {
  CHECK_THROWS_AS(read_json_file(fs::temp_directory_path() / "bolext_test_missing.json"), IoError);
  const auto p = scratch("malformed.json", "{\n  \"dim\": 2,\n  oops\n}\n");
  const std::string msg = error_of([&] { read_json_file(p); });
  CHECK(msg.find(":3:") != std::string::npos);
  CHECK(msg.find("malformed JSON") != std::string::npos);
  fs::remove(p);
}

TEST_CASE("serialized cocycles parse back to the same value") {
  Rng rng(81);
  const PrimeField f = gf5();
  for (int t = 0; t < 20; ++t) {
    auto c = NonAbelianCocycle<PrimeField>::zero(fixture_s2(f), fixture_s2(f));
    auto cp = random_skew_cochains(f, 2, 2, rng);
    c.nu = cp.nu;
    c.omega = cp.omega;
    c.actions = random_actions(f, 2, 2, rng);
    for (std::size_t x = 0; x < 2; ++x)
      for (std::size_t y = x; y < 2; ++y) {
        if (x == y) c.actions.dd(x, y) = Matrix<PrimeField>(f, 2, 2);
        else c.actions.dd(y, x) = -c.actions.dd(x, y);
      }
    const std::string text = dump_json(nab_cocycle_to_json(c));
    auto back = nab_cocycle_from_json(f, Json::parse(text), DocumentContext(), "c.nab");
    CHECK(back == c);
    CHECK(dump_json(nab_cocycle_to_json(back)) == text);
  }
}

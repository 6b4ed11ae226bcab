#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "bolext/wells.hpp"

namespace bolext {

using Json = nlohmann::ordered_json;

/// Reads a JSON document; IoError if unreadable, ParseError with line and
/// column on malformed JSON.
Json read_json_file(const std::filesystem::path& path);

/// Serializes with two-space indentation, small numeric arrays on one line.
std::string dump_json(const Json& j);

/// "Q" or {"p": n} (also "GF(n)"); only primes p > 3 are accepted.
FieldDescriptor field_from_json(const Json& j, const std::string& where);
Json field_to_json(const FieldDescriptor& f);

/// Calls fn with a Rationals or PrimeField instance for the descriptor.
template <class Fn>
decltype(auto) with_field(const FieldDescriptor& d, Fn&& fn) {
  if (d.is_prime_field()) return fn(PrimeField(static_cast<std::uint32_t>(d.modulus)));
  return fn(Rationals());
}

/// Resolves nested documents: an object is used as is, a string is read as a
/// path relative to the directory of the referring file.
class DocumentContext {
 public:
  explicit DocumentContext(std::filesystem::path dir = ".") : dir_(std::move(dir)) {}
  static DocumentContext for_file(const std::filesystem::path& file);

  Json resolve(const Json& node, const std::string& where) const;
  /// Field of a document: its own "field" key, else that of its "base" or "total" part.
  FieldDescriptor document_field(const Json& doc, const std::string& where) const;

 private:
  std::filesystem::path dir_;
};

template <class F>
typename F::Element scalar_from_json(const F& f, const Json& j, const std::string& where);
template <class F>
Json scalar_to_json(const F& f, const typename F::Element& x);

template <class F>
Vector<F> vector_from_json(const F& f, const Json& j, std::size_t len, const std::string& where);
template <class F>
Json vector_to_json(const Vector<F>& v);

/// Nested row arrays.
template <class F>
Matrix<F> matrix_from_json(const F& f, const Json& j, std::size_t rows, std::size_t cols, const std::string& where);
/// Shape taken from the document.
template <class F>
Matrix<F> matrix_from_json(const F& f, const Json& j, const std::string& where);
template <class F>
Json matrix_to_json(const Matrix<F>& m);

/// {"field", "dim", "bilinear" n x n x n, "trilinear" n x n x n x n}; the
/// skewness invariants are checked at load.
template <class F>
BolAlgebra<F> algebra_from_json(const F& f, const Json& j, const std::string& where);
template <class F>
Json algebra_to_json(const BolAlgebra<F>& a);

/// {"field", "algebra_dim", "module_dim", "mu": [n matrices], "theta": n x n matrices, "D": n x n matrices}.
template <class F>
Representation<F> representation_from_json(const F& f, const Json& j, const std::string& where);
template <class F>
Json representation_to_json(const Representation<F>& r);

/// {"nu": n x n columns, "omega": n x n x n columns}.
template <class F>
CochainPair<F> cochains_from_json(const F& f, const Json& j, std::size_t n, std::size_t m, const std::string& where);
template <class F>
Json cochains_to_json(const CochainPair<F>& c);

/// {"field", "base", "fiber", "nu", "omega", "mu", "theta", "D"}.
template <class F>
NonAbelianCocycle<F> nab_cocycle_from_json(const F& f, const Json& j, const DocumentContext& ctx,
                                           const std::string& where);
template <class F>
Json nab_cocycle_to_json(const NonAbelianCocycle<F>& c);

template <class F>
struct ExtensionDocument {
  Extension<F> extension;
  std::optional<Matrix<F>> section;
};

/// {"field", "fiber", "total", "base", "i", "p", optional "section"}.
template <class F>
ExtensionDocument<F> extension_from_json(const F& f, const Json& j, const DocumentContext& ctx,
                                         const std::string& where);
template <class F>
Json extension_to_json(const Extension<F>& e, const std::optional<Matrix<F>>& section = std::nullopt);

/// {"alpha": matrix, "beta": matrix}.
template <class F>
AutPair<F> autpair_from_json(const F& f, const Json& j, std::size_t n, std::size_t m, const std::string& where);
template <class F>
Json autpair_to_json(const AutPair<F>& p);

Json exactness_to_json(const ExactnessReport& r);

}  // namespace bolext

#pragma once

#include <cstddef>
#include <initializer_list>
#include <limits>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bolext/linalg.hpp"

namespace bolext {

/// One failed identity instance: its tag, the basis indices (0-based) it was
/// evaluated on, and the nonzero residual left minus right.
template <class F>
struct Violation {
  std::string tag;
  std::vector<std::size_t> indices;
  Vector<F> residual;
};

/// Outcome of checking a family of identities on basis tuples. Also acts as a
/// residual sink: visitors call record() and stop once it returns false.
template <class F>
class ValidationReport {
 public:
  explicit ValidationReport(const F& field, std::size_t limit = std::numeric_limits<std::size_t>::max())
      : field_(field), limit_(limit) {}

  bool valid() const { return violations_.empty(); }
  bool full() const { return violations_.size() >= limit_; }
  const std::vector<Violation<F>>& violations() const { return violations_; }
  std::string first_tag() const { return violations_.empty() ? std::string() : violations_.front().tag; }
  const F& field() const { return field_; }

  bool record(std::string_view tag, std::initializer_list<std::size_t> idx, const Vector<F>& residual) {
    if (!residual.is_zero()) violations_.push_back({std::string(tag), std::vector<std::size_t>(idx), residual});
    return !full();
  }
  bool operator()(std::string_view tag, std::initializer_list<std::size_t> idx, const Vector<F>& residual) {
    return record(tag, idx, residual);
  }
  void add(Violation<F> v) { violations_.push_back(std::move(v)); }

  /// Distinct tags in order of first failure.
  std::vector<std::string> failed_tags() const {
    std::vector<std::string> tags;
    for (const auto& v : violations_) {
      bool seen = false;
      for (const auto& t : tags) seen = seen || t == v.tag;
      if (!seen) tags.push_back(v.tag);
    }
    return tags;
  }

  /// Notes printed with the report (for example the reading chosen for an identity).
  std::vector<std::string> notes;

 private:
  F field_;
  std::size_t limit_;
  std::vector<Violation<F>> violations_;
};

/// "(i1, i2, ...)" with 1-based indices.
std::string format_indices(const std::vector<std::size_t>& idx);

/// Residual sink that concatenates every residual, zero or not, so the result
/// has a fixed layout and can be used to assemble linear systems.
template <class F>
class ResidualCollector {
 public:
  explicit ResidualCollector(const F& field) : values_(field) {}

  bool operator()(std::string_view tag, std::initializer_list<std::size_t>, const Vector<F>& residual) {
    if (blocks_.empty() || blocks_.back().first != tag) blocks_.emplace_back(std::string(tag), 0);
    blocks_.back().second += residual.size();
    values_.append(residual);
    return true;
  }

  const Vector<F>& values() const { return values_; }
  /// Consecutive (tag, row count) runs.
  const std::vector<std::pair<std::string, std::size_t>>& blocks() const { return blocks_; }

 private:
  Vector<F> values_;
  std::vector<std::pair<std::string, std::size_t>> blocks_;
};

/// Residual sink that only remembers whether every residual vanished.
template <class F>
class ZeroCheck {
 public:
  bool operator()(std::string_view, std::initializer_list<std::size_t>, const Vector<F>& residual) {
    ok_ = ok_ && residual.is_zero();
    return ok_;
  }
  bool ok() const { return ok_; }

 private:
  bool ok_ = true;
};

/// An affine system a x = rhs obtained by probing a residual function that is
/// affine in x, with the tag layout of its rows.
template <class F>
struct AffineSystem {
  Matrix<F> a;
  Vector<F> rhs;
  std::vector<std::pair<std::string, std::size_t>> blocks;
};

/// Builds the affine system of `residual_fn(x, collector)` by evaluating it at
/// x = 0 and at the unit vectors.
template <class F, class Fn>
AffineSystem<F> probe_affine(const F& field, std::size_t unknowns, Fn&& residual_fn) {
  ResidualCollector<F> base(field);
  residual_fn(Vector<F>(field, unknowns), base);
  const Vector<F>& r0 = base.values();
  Matrix<F> a(field, r0.size(), unknowns);
  for (std::size_t c = 0; c < unknowns; ++c) {
    ResidualCollector<F> col(field);
    residual_fn(Vector<F>::unit(field, unknowns, c), col);
    if (col.values().size() != r0.size()) throw ConsistencyError("residual layout changed while probing");
    a.set_column(c, col.values() - r0);
  }
  return {std::move(a), -r0, base.blocks()};
}

template <class F>
struct AffineSolution {
  std::optional<Vector<F>> x;
  /// For an inconsistent system: the tag of the first block whose rows (with
  /// all earlier blocks) admit no solution.
  std::string failing_tag;
};

template <class F>
AffineSolution<F> solve_affine(const AffineSystem<F>& sys) {
  AffineSolution<F> out;
  out.x = canonical_solution(sys.a, sys.rhs);
  if (out.x) return out;
  std::size_t rows = 0;
  for (const auto& [tag, count] : sys.blocks) {
    rows += count;
    Matrix<F> a = sys.a.block(0, 0, rows, sys.a.cols());
    if (!solve_linear(a, sys.rhs.slice(0, rows))) {
      out.failing_tag = tag;
      break;
    }
  }
  return out;
}

}  // namespace bolext

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace posetmat {

/// A d-dimensional coordinate; component j is 1-based in [1, dims[j]].
using Coord = std::vector<int>;

/// Read-only view of a 0-1 grid used by the pattern matcher.
///
/// `ones` holds the 1-entries lexicographically sorted, flattened with stride
/// `dims.size()`. `dense`, when present, is a row-major occupancy array over
/// `dims` (last axis fastest).
struct GridView {
  std::span<const int> dims;
  std::span<const int> ones;
  const std::uint8_t* dense = nullptr;

  std::size_t dimension() const { return dims.size(); }
  std::size_t count() const { return dims.empty() ? 0 : ones.size() / dims.size(); }
  const int* one(std::size_t i) const { return ones.data() + i * dims.size(); }
  bool has(const int* coord) const;
  /// Index of `coord` in `ones`, or -1.
  long find(const int* coord) const;
  /// First index whose one is lexicographically >= `coord`.
  std::size_t lower_bound(const int* coord) const;
};

/// An immutable d-dimensional 0-1 hypermatrix given by its side lengths and
/// the set of its 1-entries. Ones are kept in strictly increasing
/// lexicographic order; duplicates and out-of-range coordinates are rejected.
class HyperMatrix {
 public:
  /// Occupancy arrays are materialized for grids up to this many cells.
  static constexpr std::size_t kDenseCellLimit = std::size_t{1} << 20;

  HyperMatrix(std::vector<int> dims, std::vector<Coord> ones);

  /// A d-matrix with every entry equal to 1.
  static HyperMatrix full(std::vector<int> dims);

  std::size_t dimension() const { return dims_.size(); }
  const std::vector<int>& dims() const { return dims_; }
  const std::vector<Coord>& ones() const { return ones_; }
  /// |M|, the number of 1-entries.
  std::size_t weight() const { return ones_.size(); }
  std::size_t cell_count() const;
  bool is_cubic() const;
  bool at(const Coord& c) const;

  GridView view() const;

  friend bool operator==(const HyperMatrix& a, const HyperMatrix& b) {
    return a.dims_ == b.dims_ && a.ones_ == b.ones_;
  }
  friend bool operator<(const HyperMatrix& a, const HyperMatrix& b) {
    if (a.dims_ != b.dims_) return a.dims_ < b.dims_;
    return a.ones_ < b.ones_;
  }

 private:
  std::vector<int> dims_;
  std::vector<Coord> ones_;
  std::vector<int> flat_;
  std::vector<std::uint8_t> dense_;
};

/// True iff `m` has a sub-grid (one strictly increasing index selection per
/// axis) on which every 1 of `a` lands on a 1 of `m`.
/// Throws std::invalid_argument on dimension mismatch or an empty pattern.
bool contains(const HyperMatrix& m, const HyperMatrix& a);

/// Exactly one 1 in every axis-parallel hyperplane of a k^d matrix.
/// Throws std::invalid_argument when the sides differ.
bool is_permutation_matrix(const HyperMatrix& a);

/// Orthogonal projection onto the hyperplane normal to `axis` (1-based).
HyperMatrix projection(const HyperMatrix& m, int axis);

/// |M|^{d-1} <= prod_i |Proj_i M|.
bool loomis_whitney_holds(const HyperMatrix& m);

/// The same matrix with `axis` (1-based) reversed.
HyperMatrix reverse_axis(const HyperMatrix& m, int axis);

/// Entries of `m` inside the box [lo_j, hi_j] (1-based, inclusive), re-indexed
/// to start at 1.
HyperMatrix sub_box(const HyperMatrix& m, std::span<const int> lo, std::span<const int> hi);

}  // namespace posetmat

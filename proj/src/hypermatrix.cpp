#include "posetmat/hypermatrix.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "posetmat/matcher.hpp"
#include "posetmat/numeric.hpp"

namespace posetmat {

namespace {

int lex_compare(const int* a, const int* b, std::size_t d) {
  for (std::size_t j = 0; j < d; ++j) {
    if (a[j] != b[j]) return a[j] < b[j] ? -1 : 1;
  }
  return 0;
}

std::size_t saturating_cells(const std::vector<int>& dims) {
  std::size_t cells = 1;
  for (int n : dims) {
    const auto side = static_cast<std::size_t>(n);
    if (cells > std::numeric_limits<std::size_t>::max() / side) {
      return std::numeric_limits<std::size_t>::max();
    }
    cells *= side;
  }
  return cells;
}

}  // namespace

bool GridView::has(const int* coord) const {
  const std::size_t d = dims.size();
  for (std::size_t j = 0; j < d; ++j) {
    if (coord[j] < 1 || coord[j] > dims[j]) return false;
  }
  if (dense != nullptr) {
    std::size_t idx = 0;
    for (std::size_t j = 0; j < d; ++j) idx = idx * dims[j] + (coord[j] - 1);
    return dense[idx] != 0;
  }
  return find(coord) >= 0;
}

std::size_t GridView::lower_bound(const int* coord) const {
  const std::size_t d = dims.size();
  std::size_t lo = 0;
  std::size_t hi = count();
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (lex_compare(one(mid), coord, d) < 0) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  return lo;
}

long GridView::find(const int* coord) const {
  const std::size_t i = lower_bound(coord);
  if (i < count() && lex_compare(one(i), coord, dims.size()) == 0) return static_cast<long>(i);
  return -1;
}

HyperMatrix::HyperMatrix(std::vector<int> dims, std::vector<Coord> ones)
    : dims_(std::move(dims)), ones_(std::move(ones)) {
  if (dims_.empty()) throw std::invalid_argument("hypermatrix: dimension must be at least 1");
  if (dims_.size() > 32) throw std::invalid_argument("hypermatrix: dimension above 32");
  for (int n : dims_) {
    if (n < 1) throw std::invalid_argument("hypermatrix: side lengths must be positive");
  }
  for (const Coord& c : ones_) {
    if (c.size() != dims_.size()) {
      throw std::invalid_argument("hypermatrix: coordinate arity " + std::to_string(c.size()) +
                                  " does not match dimension " + std::to_string(dims_.size()));
    }
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (c[j] < 1 || c[j] > dims_[j]) {
        throw std::invalid_argument("hypermatrix: coordinate out of range on axis " +
                                    std::to_string(j + 1));
      }
    }
  }
  std::sort(ones_.begin(), ones_.end());
  if (std::adjacent_find(ones_.begin(), ones_.end()) != ones_.end()) {
    throw std::invalid_argument("hypermatrix: duplicate coordinate");
  }
  flat_.reserve(ones_.size() * dims_.size());
  for (const Coord& c : ones_) flat_.insert(flat_.end(), c.begin(), c.end());
  const std::size_t cells = cell_count();
  if (cells <= kDenseCellLimit) {
    dense_.assign(cells, 0);
    for (const Coord& c : ones_) {
      std::size_t idx = 0;
      for (std::size_t j = 0; j < c.size(); ++j) idx = idx * dims_[j] + (c[j] - 1);
      dense_[idx] = 1;
    }
  }
}

HyperMatrix HyperMatrix::full(std::vector<int> dims) {
  std::vector<Coord> ones;
  Coord c(dims.size(), 1);
  if (saturating_cells(dims) > kDenseCellLimit) {
    throw std::invalid_argument("hypermatrix: full matrix too large");
  }
  while (true) {
    ones.push_back(c);
    std::size_t j = dims.size();
    while (j > 0) {
      --j;
      if (c[j] < dims[j]) {
        ++c[j];
        break;
      }
      c[j] = 1;
      if (j == 0) return HyperMatrix(std::move(dims), std::move(ones));
    }
  }
}

std::size_t HyperMatrix::cell_count() const { return saturating_cells(dims_); }

bool HyperMatrix::is_cubic() const {
  return std::all_of(dims_.begin(), dims_.end(), [&](int n) { return n == dims_.front(); });
}

bool HyperMatrix::at(const Coord& c) const {
  if (c.size() != dims_.size()) return false;
  return view().has(c.data());
}

GridView HyperMatrix::view() const {
  return GridView{dims_, flat_, dense_.empty() ? nullptr : dense_.data()};
}

bool contains(const HyperMatrix& m, const HyperMatrix& a) {
  if (m.dimension() != a.dimension()) {
    throw std::invalid_argument("contains: dimension mismatch (" + std::to_string(m.dimension()) +
                                " vs " + std::to_string(a.dimension()) + ")");
  }
  if (a.weight() == 0) throw std::invalid_argument("contains: pattern has no 1-entries");
  if (a.weight() > m.weight()) return false;
  return PatternMatcher(a).occurs_in(m.view());
}

bool is_permutation_matrix(const HyperMatrix& a) {
  if (!a.is_cubic()) throw std::invalid_argument("is_permutation_matrix: sides are not all equal");
  const auto k = static_cast<std::size_t>(a.dims().front());
  if (a.weight() != k) return false;
  for (std::size_t j = 0; j < a.dimension(); ++j) {
    std::vector<int> seen(k + 1, 0);
    for (const Coord& c : a.ones()) {
      if (seen[c[j]]++ != 0) return false;
    }
  }
  return true;
}

HyperMatrix projection(const HyperMatrix& m, int axis) {
  const int d = static_cast<int>(m.dimension());
  if (d < 2) throw std::invalid_argument("projection: needs dimension at least 2");
  if (axis < 1 || axis > d) throw std::invalid_argument("projection: axis out of range");
  std::vector<int> dims = m.dims();
  dims.erase(dims.begin() + (axis - 1));
  std::vector<Coord> ones;
  ones.reserve(m.weight());
  for (Coord c : m.ones()) {
    c.erase(c.begin() + (axis - 1));
    ones.push_back(std::move(c));
  }
  std::sort(ones.begin(), ones.end());
  ones.erase(std::unique(ones.begin(), ones.end()), ones.end());
  return HyperMatrix(std::move(dims), std::move(ones));
}

bool loomis_whitney_holds(const HyperMatrix& m) {
  const int d = static_cast<int>(m.dimension());
  if (d < 2) throw std::invalid_argument("loomis_whitney_holds: needs dimension at least 2");
  BigInt lhs = 1;
  for (int i = 1; i < d; ++i) lhs *= m.weight();
  BigInt rhs = 1;
  for (int axis = 1; axis <= d; ++axis) rhs *= projection(m, axis).weight();
  return lhs <= rhs;
}

HyperMatrix reverse_axis(const HyperMatrix& m, int axis) {
  const int d = static_cast<int>(m.dimension());
  if (axis < 1 || axis > d) throw std::invalid_argument("reverse_axis: axis out of range");
  const int n = m.dims()[axis - 1];
  std::vector<Coord> ones = m.ones();
  for (Coord& c : ones) c[axis - 1] = n + 1 - c[axis - 1];
  return HyperMatrix(m.dims(), std::move(ones));
}

HyperMatrix sub_box(const HyperMatrix& m, std::span<const int> lo, std::span<const int> hi) {
  const std::size_t d = m.dimension();
  if (lo.size() != d || hi.size() != d) throw std::invalid_argument("sub_box: arity mismatch");
  std::vector<int> dims(d);
  for (std::size_t j = 0; j < d; ++j) {
    if (lo[j] < 1 || hi[j] > m.dims()[j] || lo[j] > hi[j]) {
      throw std::invalid_argument("sub_box: box out of range");
    }
    dims[j] = hi[j] - lo[j] + 1;
  }
  std::vector<Coord> ones;
  for (const Coord& c : m.ones()) {
    bool inside = true;
    for (std::size_t j = 0; j < d && inside; ++j) inside = c[j] >= lo[j] && c[j] <= hi[j];
    if (!inside) continue;
    Coord local(d);
    for (std::size_t j = 0; j < d; ++j) local[j] = c[j] - lo[j] + 1;
    ones.push_back(std::move(local));
  }
  return HyperMatrix(std::move(dims), std::move(ones));
}

}  // namespace posetmat

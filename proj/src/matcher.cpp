#include "posetmat/matcher.hpp"

#include <algorithm>
#include <cstdint>

namespace posetmat {

struct PatternMatcher::State {
  const GridView* target;
  std::size_t end;
  // img[j][v]: target index assigned to pattern index v on axis j, 0 if free.
  std::vector<std::vector<int>> img;
  // Per-depth scratch boxes, d entries per depth.
  std::vector<int> lo;
  std::vector<int> hi;
};

PatternMatcher::PatternMatcher(const HyperMatrix& pattern) : pattern_(pattern) {
  for (const Coord& c : pattern_.ones()) flat_.insert(flat_.end(), c.begin(), c.end());
}

bool PatternMatcher::place(State& st, std::size_t t, long prev) const {
  if (t == st.end) return true;
  const GridView& tg = *st.target;
  const std::size_t d = tg.dimension();
  const std::vector<int>& pdims = pattern_.dims();
  const int* a = flat_.data() + t * d;
  int* lo = st.lo.data() + t * d;
  int* hi = st.hi.data() + t * d;

  std::uint64_t free_axes = 0;
  for (std::size_t j = 0; j < d; ++j) {
    const int v = a[j];
    const std::vector<int>& img = st.img[j];
    if (img[v] != 0) {
      lo[j] = hi[j] = img[v];
      continue;
    }
    free_axes |= std::uint64_t{1} << j;
    lo[j] = v;
    for (int u = v - 1; u >= 1; --u) {
      if (img[u] != 0) {
        lo[j] = img[u] + (v - u);
        break;
      }
    }
    hi[j] = tg.dims[j] - (pdims[j] - v);
    for (int u = v + 1; u <= pdims[j]; ++u) {
      if (img[u] != 0) {
        hi[j] = img[u] - (u - v);
        break;
      }
    }
    if (lo[j] > hi[j]) return false;
  }

  if (free_axes == 0) {
    const long idx = tg.find(lo);
    return idx >= 0 && place(st, t + 1, idx);
  }

  const std::size_t count = tg.count();
  std::size_t start = std::max(static_cast<std::size_t>(prev + 1), tg.lower_bound(lo));
  if (count - std::min(count, start) < st.end - t) return false;
  for (std::size_t i = start; i < count; ++i) {
    const int* c = tg.one(i);
    if (c[0] > hi[0]) break;
    bool inside = true;
    for (std::size_t j = 0; j < d && inside; ++j) inside = c[j] >= lo[j] && c[j] <= hi[j];
    if (!inside) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (free_axes >> j & 1) st.img[j][a[j]] = c[j];
    }
    if (place(st, t + 1, static_cast<long>(i))) return true;
    for (std::size_t j = 0; j < d; ++j) {
      if (free_axes >> j & 1) st.img[j][a[j]] = 0;
    }
  }
  return false;
}

bool PatternMatcher::occurs_in(const GridView& target) const {
  const std::size_t d = pattern_.dimension();
  if (target.dimension() != d) return false;
  for (std::size_t j = 0; j < d; ++j) {
    if (pattern_.dims()[j] > target.dims[j]) return false;
  }
  State st{&target, pattern_.weight(), {}, {}, {}};
  st.img.resize(d);
  for (std::size_t j = 0; j < d; ++j) st.img[j].assign(pattern_.dims()[j] + 1, 0);
  st.lo.resize((st.end + 1) * d);
  st.hi.resize((st.end + 1) * d);
  return place(st, 0, -1);
}

bool PatternMatcher::occurs_with_last_at(const GridView& target, const int* cell) const {
  const std::size_t d = pattern_.dimension();
  if (target.dimension() != d || pattern_.weight() == 0) return false;
  const std::size_t m = pattern_.weight();
  const int* last = flat_.data() + (m - 1) * d;
  State st{&target, m - 1, {}, {}, {}};
  st.img.resize(d);
  for (std::size_t j = 0; j < d; ++j) {
    const int pd = pattern_.dims()[j];
    if (pd > target.dims[j]) return false;
    if (cell[j] < last[j] || cell[j] > target.dims[j] - (pd - last[j])) return false;
    st.img[j].assign(pd + 1, 0);
    st.img[j][last[j]] = cell[j];
  }
  st.lo.resize(m * d);
  st.hi.resize(m * d);
  return place(st, 0, -1);
}

}  // namespace posetmat

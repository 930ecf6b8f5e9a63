#include "posetmat/poset.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "posetmat/error.hpp"

namespace posetmat {

Poset::Poset(std::vector<std::string> labels, Relation order)
    : labels_(std::move(labels)), order_(std::move(order)) {
  const std::size_t n = labels_.size();
  if (order_.size != n) throw std::invalid_argument("poset: relation size does not match labels");
  {
    std::vector<std::string> sorted = labels_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw std::invalid_argument("poset: duplicate element label");
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (order_.less(x, x)) throw std::invalid_argument("poset: not irreflexive at " + labels_[x]);
    for (std::size_t y = 0; y < n; ++y) {
      if (!order_.less(x, y)) continue;
      if (order_.less(y, x)) {
        throw std::invalid_argument("poset: not antisymmetric on " + labels_[x] + ", " + labels_[y]);
      }
      for (std::size_t z = 0; z < n; ++z) {
        if (order_.less(y, z) && !order_.less(x, z)) {
          throw std::invalid_argument("poset: not transitive on " + labels_[x] + " < " + labels_[y] +
                                      " < " + labels_[z]);
        }
      }
    }
  }
}

Poset Poset::from_covers(std::vector<std::string> labels,
                         const std::vector<std::pair<std::size_t, std::size_t>>& covers) {
  const std::size_t n = labels.size();
  Relation r(n);
  for (auto [a, b] : covers) {
    if (a >= n || b >= n) throw std::invalid_argument("poset: cover refers to unknown element");
    r.set_less(a, b);
  }
  // Warshall closure; a cycle shows up as x < x and is rejected by the constructor.
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!r.less(i, k)) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (r.less(k, j)) r.set_less(i, j);
      }
    }
  }
  return Poset(std::move(labels), std::move(r));
}

bool Poset::is_chain() const {
  for (std::size_t x = 0; x < size(); ++x) {
    for (std::size_t y = x + 1; y < size(); ++y) {
      if (!comparable(x, y)) return false;
    }
  }
  return true;
}

std::vector<std::pair<std::size_t, std::size_t>> Poset::covers() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < size(); ++a) {
    for (std::size_t b = 0; b < size(); ++b) {
      if (!less(a, b)) continue;
      bool between = false;
      for (std::size_t z = 0; z < size() && !between; ++z) between = less(a, z) && less(z, b);
      if (!between) out.emplace_back(a, b);
    }
  }
  return out;
}

Poset chain(int k) {
  if (k < 1) throw std::invalid_argument("chain: length must be at least 1");
  std::vector<std::string> labels;
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  for (int i = 0; i < k; ++i) {
    labels.push_back("c" + std::to_string(i + 1));
    if (i > 0) covers.emplace_back(i - 1, i);
  }
  return Poset::from_covers(std::move(labels), covers);
}

Poset antichain(int k) {
  if (k < 1) throw std::invalid_argument("antichain: size must be at least 1");
  std::vector<std::string> labels;
  for (int i = 0; i < k; ++i) labels.push_back("x" + std::to_string(i + 1));
  return Poset::from_covers(std::move(labels), {});
}

Poset diamond() {
  return Poset::from_covers({"a", "b", "c", "d"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
}

Poset vee(int r) {
  if (r < 1) throw std::invalid_argument("vee: needs at least one upper element");
  std::vector<std::string> labels{"m"};
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  for (int i = 0; i < r; ++i) {
    labels.push_back("v" + std::to_string(i + 1));
    covers.emplace_back(0, i + 1);
  }
  return Poset::from_covers(std::move(labels), covers);
}

Poset butterfly() {
  return Poset::from_covers({"a1", "a2", "b1", "b2"}, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
}

Poset boolean_lattice(int m) {
  if (m < 0 || m > 6) throw std::invalid_argument("boolean_lattice: m must be in [0, 6]");
  const std::size_t n = std::size_t{1} << m;
  std::vector<std::string> labels;
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  for (std::size_t s = 0; s < n; ++s) {
    std::string label = "{";
    for (int e = 0; e < m; ++e) {
      if (s >> e & 1) {
        if (label.size() > 1) label += ",";
        label += std::to_string(e + 1);
      }
    }
    labels.push_back(label + "}");
    for (int e = 0; e < m; ++e) {
      if (!(s >> e & 1)) covers.emplace_back(s, s | (std::size_t{1} << e));
    }
  }
  return Poset::from_covers(std::move(labels), covers);
}

int height(const Poset& p) {
  const std::size_t n = p.size();
  if (n == 0) throw std::invalid_argument("height: empty poset");
  // Longest path in the order DAG; process elements by number of predecessors.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  auto below = [&](std::size_t x) {
    int c = 0;
    for (std::size_t y = 0; y < n; ++y) c += p.less(y, x) ? 1 : 0;
    return c;
  };
  std::vector<int> depth_key(n);
  for (std::size_t x = 0; x < n; ++x) depth_key[x] = below(x);
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return depth_key[a] < depth_key[b]; });
  std::vector<int> longest(n, 1);
  int best = 1;
  for (std::size_t x : order) {
    for (std::size_t y = 0; y < n; ++y) {
      if (p.less(y, x)) longest[x] = std::max(longest[x], longest[y] + 1);
    }
    best = std::max(best, longest[x]);
  }
  return best;
}

std::vector<std::vector<std::size_t>> linear_extensions(const Poset& p) {
  const std::size_t n = p.size();
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> current;
  std::vector<int> pending(n, 0);  // unplaced predecessors
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) pending[x] += p.less(y, x) ? 1 : 0;
  }
  std::vector<char> placed(n, 0);
  std::function<void()> rec = [&]() {
    if (current.size() == n) {
      out.push_back(current);
      return;
    }
    for (std::size_t x = 0; x < n; ++x) {
      if (placed[x] || pending[x] != 0) continue;
      placed[x] = 1;
      current.push_back(x);
      for (std::size_t y = 0; y < n; ++y) {
        if (p.less(x, y)) --pending[y];
      }
      rec();
      for (std::size_t y = 0; y < n; ++y) {
        if (p.less(x, y)) ++pending[y];
      }
      current.pop_back();
      placed[x] = 0;
    }
  };
  rec();
  return out;
}

bool is_realizer(const Poset& p, const Realizer& r) {
  const std::size_t n = p.size();
  if (r.extensions.empty()) return false;
  std::vector<std::vector<std::size_t>> pos;
  for (const auto& ext : r.extensions) {
    if (ext.size() != n) return false;
    std::vector<std::size_t> rank(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      if (ext[i] >= n || rank[ext[i]] != n) return false;
      rank[ext[i]] = i;
    }
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (p.less(x, y) && rank[x] > rank[y]) return false;
      }
    }
    pos.push_back(std::move(rank));
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y) continue;
      bool before_everywhere = true;
      for (const auto& rank : pos) before_everywhere = before_everywhere && rank[x] < rank[y];
      if (before_everywhere != p.less(x, y)) return false;
    }
  }
  return true;
}

namespace {

using Words = std::vector<std::uint64_t>;

bool covers_all(const Words& have, const Words& need) {
  for (std::size_t w = 0; w < need.size(); ++w) {
    if ((have[w] & need[w]) != need[w]) return false;
  }
  return true;
}

// Searches strictly increasing index tuples of length `slots` over `masks`
// whose union together with `covered` contains `full`. Tuples are visited in
// lexicographic order, so the first hit is the least one.
class RealizerSearch {
 public:
  RealizerSearch(const std::vector<Words>& masks, Words full) : masks_(masks), full_(std::move(full)) {
    const std::size_t bits = full_.size() * 64;
    last_cover_.assign(bits, -1);
    for (std::size_t i = 0; i < masks_.size(); ++i) {
      for (std::size_t b = 0; b < bits; ++b) {
        if (masks_[i][b / 64] >> (b % 64) & 1) last_cover_[b] = static_cast<long>(i);
      }
    }
  }

  std::optional<std::vector<std::size_t>> find(int slots) {
    chosen_.clear();
    Words covered(full_.size(), 0);
    if (rec(slots, 0, covered)) return chosen_;
    return std::nullopt;
  }

 private:
  bool rec(int slots, std::size_t from, const Words& covered) {
    if (covers_all(covered, full_)) {
      // Pad with the smallest unused indices; only reachable when some
      // extensions are redundant, which cannot happen at the minimal size.
      for (std::size_t i = from; slots > 0 && i < masks_.size(); ++i, --slots) chosen_.push_back(i);
      return slots == 0;
    }
    if (slots == 0) return false;
    // Every missing bit needs a cover at an index >= from.
    Words need(full_.size());
    for (std::size_t w = 0; w < full_.size(); ++w) need[w] = full_[w] & ~covered[w];
    for (std::size_t w = 0; w < need.size(); ++w) {
      for (std::uint64_t bits = need[w]; bits != 0; bits &= bits - 1) {
        const std::size_t b = w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits));
        if (last_cover_[b] < static_cast<long>(from)) return false;
      }
    }
    if (slots == 1) {
      for (std::size_t i = from; i < masks_.size(); ++i) {
        if (covers_all(masks_[i], need)) {
          chosen_.push_back(i);
          return true;
        }
      }
      return false;
    }
    for (std::size_t i = from; i < masks_.size(); ++i) {
      Words next = covered;
      for (std::size_t w = 0; w < next.size(); ++w) next[w] |= masks_[i][w];
      if (next == covered) continue;
      chosen_.push_back(i);
      if (rec(slots - 1, i + 1, next)) return true;
      chosen_.pop_back();
    }
    return false;
  }

  const std::vector<Words>& masks_;
  Words full_;
  std::vector<long> last_cover_;
  std::vector<std::size_t> chosen_;
};

}  // namespace

DimensionResult dimension(const Poset& p, int t_cap, std::size_t size_cap) {
  const std::size_t n = p.size();
  if (n == 0) throw std::invalid_argument("dimension: empty poset");
  if (n > size_cap) {
    throw CapExceeded("dimension: poset has " + std::to_string(n) + " elements, cap is " +
                      std::to_string(size_cap));
  }
  const auto extensions = linear_extensions(p);

  // A family of linear extensions realizes P iff it reverses every critical
  // pair (x, y): x || y, everything below x is below y, everything above y is
  // above x.
  std::vector<std::pair<std::size_t, std::size_t>> critical;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y || p.comparable(x, y)) continue;
      bool ok = true;
      for (std::size_t z = 0; z < n && ok; ++z) {
        if (p.less(z, x) && !p.less(z, y)) ok = false;
        if (p.less(y, z) && !p.less(x, z)) ok = false;
      }
      if (ok) critical.emplace_back(x, y);
    }
  }
  const std::size_t words = std::max<std::size_t>(1, (critical.size() + 63) / 64);
  Words full(words, 0);
  for (std::size_t b = 0; b < critical.size(); ++b) full[b / 64] |= std::uint64_t{1} << (b % 64);

  std::vector<Words> masks;
  masks.reserve(extensions.size());
  for (const auto& ext : extensions) {
    std::vector<std::size_t> rank(n);
    for (std::size_t i = 0; i < n; ++i) rank[ext[i]] = i;
    Words m(words, 0);
    for (std::size_t b = 0; b < critical.size(); ++b) {
      const auto [x, y] = critical[b];
      if (rank[y] < rank[x]) m[b / 64] |= std::uint64_t{1} << (b % 64);
    }
    masks.push_back(std::move(m));
  }

  // Existence is decided on the distinct masks (far fewer than extensions);
  // the witness is then the least tuple over all extensions.
  std::vector<Words> distinct = masks;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  RealizerSearch exists(distinct, full);
  RealizerSearch witness(masks, full);

  for (int t = 1; t <= t_cap; ++t) {
    if (!exists.find(t)) continue;
    const auto tuple = witness.find(t);
    DimensionResult result;
    result.dimension = t;
    for (std::size_t i : *tuple) result.witness.extensions.push_back(extensions[i]);
    return result;
  }
  throw CapExceeded("dimension: no realizer with at most " + std::to_string(t_cap) + " extensions");
}

HyperMatrix realizer_to_matrix(const Poset& p, const Realizer& r) {
  if (!is_realizer(p, r)) throw std::invalid_argument("realizer_to_matrix: not a realizer of the poset");
  const std::size_t n = p.size();
  const std::size_t d = r.extensions.size();
  std::vector<Coord> ones(n, Coord(d));
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t i = 0; i < n; ++i) ones[r.extensions[j][i]][j] = static_cast<int>(i) + 1;
  }
  return HyperMatrix(std::vector<int>(d, static_cast<int>(n)), std::move(ones));
}

Poset pattern_order(const HyperMatrix& a) {
  const auto& ones = a.ones();
  const std::size_t n = ones.size();
  std::vector<std::string> labels;
  for (const Coord& c : ones) {
    std::string s = "(";
    for (std::size_t j = 0; j < c.size(); ++j) s += (j ? "," : "") + std::to_string(c[j]);
    labels.push_back(s + ")");
  }
  Relation r(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y) continue;
      bool below = true;
      for (std::size_t j = 0; j < a.dimension() && below; ++j) below = ones[x][j] <= ones[y][j];
      if (below) r.set_less(x, y);
    }
  }
  return Poset(std::move(labels), std::move(r));
}

namespace {

struct DegreeProfile {
  std::vector<std::pair<int, int>> degrees;  // sorted (below, above) counts
  int relations = 0;
};

DegreeProfile profile(const Poset& p) {
  DegreeProfile out;
  for (std::size_t x = 0; x < p.size(); ++x) {
    int below = 0;
    int above = 0;
    for (std::size_t y = 0; y < p.size(); ++y) {
      below += p.less(y, x) ? 1 : 0;
      above += p.less(x, y) ? 1 : 0;
    }
    out.degrees.emplace_back(below, above);
    out.relations += above;
  }
  std::sort(out.degrees.begin(), out.degrees.end());
  return out;
}

}  // namespace

bool isomorphic(const Poset& a, const Poset& b) {
  if (a.size() != b.size()) return false;
  const DegreeProfile pa = profile(a);
  const DegreeProfile pb = profile(b);
  if (pa.relations != pb.relations || pa.degrees != pb.degrees) return false;
  return find_embedding(a, b.order(), true).has_value();
}

std::vector<HyperMatrix> enumerate_patterns(const Poset& p, int d) {
  if (d != 2) throw std::invalid_argument("enumerate_patterns: only d = 2 is supported");
  const int k = static_cast<int>(p.size());
  if (k < 1 || k > 6) throw std::invalid_argument("enumerate_patterns: poset must have 1..6 elements");
  const DegreeProfile target = profile(p);

  std::vector<HyperMatrix> out;
  for (int rows = 1; rows <= k; ++rows) {
    for (int cols = 1; cols <= k; ++cols) {
      const unsigned full_cols = (1u << cols) - 1;
      std::vector<unsigned> row_masks(rows, 0);
      // Each row takes a nonempty column set; totals must reach k ones and
      // the union must cover every column.
      std::function<void(int, int, unsigned)> rec = [&](int r, int used, unsigned cover) {
        const int rows_left = rows - r;
        if (rows_left == 0) {
          if (used != k || cover != full_cols) return;
          std::vector<Coord> ones;
          for (int i = 0; i < rows; ++i) {
            for (int c = 0; c < cols; ++c) {
              if (row_masks[i] >> c & 1) ones.push_back({i + 1, c + 1});
            }
          }
          HyperMatrix m({rows, cols}, std::move(ones));
          const Poset q = pattern_order(m);
          const DegreeProfile pq = profile(q);
          if (pq.relations != target.relations || pq.degrees != target.degrees) return;
          if (isomorphic(p, q)) out.push_back(std::move(m));
          return;
        }
        for (unsigned mask = 1; mask <= full_cols; ++mask) {
          const int bits = __builtin_popcount(mask);
          if (used + bits + (rows_left - 1) > k) continue;
          row_masks[r] = mask;
          rec(r + 1, used + bits, cover | mask);
        }
      };
      rec(0, 0, 0);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::vector<std::size_t>> find_embedding(
    const Poset& pattern, const Relation& target, bool induced,
    std::optional<std::pair<std::size_t, std::size_t>> anchor) {
  const std::size_t k = pattern.size();
  const std::size_t n = target.size;
  if (k > n) return std::nullopt;
  if (k == 0) return std::vector<std::size_t>{};

  std::vector<int> t_below(n, 0), t_above(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (target.less(x, y)) {
        ++t_above[x];
        ++t_below[y];
      }
    }
  }
  std::vector<int> p_below(k, 0), p_above(k, 0);
  for (std::size_t x = 0; x < k; ++x) {
    for (std::size_t y = 0; y < k; ++y) {
      if (pattern.less(x, y)) {
        ++p_above[x];
        ++p_below[y];
      }
    }
  }

  // Pattern elements ordered bottom-up so that each new element is usually
  // related to something already placed; the anchor, if any, goes first.
  std::vector<std::size_t> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return p_below[a] < p_below[b]; });
  if (anchor) {
    if (anchor->first >= k || anchor->second >= n) return std::nullopt;
    order.erase(std::find(order.begin(), order.end(), anchor->first));
    order.insert(order.begin(), anchor->first);
  }

  std::vector<std::size_t> image(k, n);
  std::vector<char> used(n, 0);
  auto consistent = [&](std::size_t p, std::size_t q) {
    if (used[q]) return false;
    if (t_below[q] < p_below[p] || t_above[q] < p_above[p]) return false;
    for (std::size_t x = 0; x < k; ++x) {
      const std::size_t qx = image[x];
      if (qx == n) continue;
      const bool p_lt = pattern.less(x, p);
      const bool p_gt = pattern.less(p, x);
      const bool q_lt = target.less(qx, q);
      const bool q_gt = target.less(q, qx);
      if (p_lt && !q_lt) return false;
      if (p_gt && !q_gt) return false;
      if (induced && ((q_lt && !p_lt) || (q_gt && !p_gt))) return false;
    }
    return true;
  };
  std::function<bool(std::size_t)> rec = [&](std::size_t depth) {
    if (depth == k) return true;
    const std::size_t p = order[depth];
    const std::size_t first = (depth == 0 && anchor) ? anchor->second : 0;
    const std::size_t last = (depth == 0 && anchor) ? anchor->second + 1 : n;
    for (std::size_t q = first; q < last; ++q) {
      if (!consistent(p, q)) continue;
      image[p] = q;
      used[q] = 1;
      if (rec(depth + 1)) return true;
      used[q] = 0;
      image[p] = n;
    }
    return false;
  };
  if (rec(0)) return image;
  return std::nullopt;
}

bool subposet_embeds(const Poset& p, const Poset& q, bool induced) {
  return find_embedding(p, q.order(), induced).has_value();
}

}  // namespace posetmat

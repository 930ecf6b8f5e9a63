#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "posetmat/hypermatrix.hpp"

namespace posetmat {

/// A strict order on the indices 0..size-1 as a dense table.
struct Relation {
  std::size_t size = 0;
  std::vector<std::uint8_t> lt;

  explicit Relation(std::size_t n = 0) : size(n), lt(n * n, 0) {}
  bool less(std::size_t a, std::size_t b) const { return lt[a * size + b] != 0; }
  void set_less(std::size_t a, std::size_t b) { lt[a * size + b] = 1; }
  bool comparable(std::size_t a, std::size_t b) const { return less(a, b) || less(b, a); }
};

/// A finite strict partial order over labelled elements.
class Poset {
 public:
  /// Validates irreflexivity, antisymmetry and transitivity of `order`.
  Poset(std::vector<std::string> labels, Relation order);

  /// Builds the transitive closure of the cover pairs (indices into labels).
  static Poset from_covers(std::vector<std::string> labels,
                           const std::vector<std::pair<std::size_t, std::size_t>>& covers);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const Relation& order() const { return order_; }
  bool less(std::size_t a, std::size_t b) const { return order_.less(a, b); }
  bool comparable(std::size_t a, std::size_t b) const { return order_.comparable(a, b); }
  bool is_chain() const;

  /// Cover pairs (a, b): a < b with nothing strictly between.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const;

 private:
  std::vector<std::string> labels_;
  Relation order_;
};

Poset chain(int k);
Poset antichain(int k);
/// a < b, c < d with b and c incomparable.
Poset diamond();
/// One minimum below r pairwise incomparable elements.
Poset vee(int r);
/// Two minimal elements each below both of two maximal elements.
Poset butterfly();
/// The subsets of [m] under inclusion.
Poset boolean_lattice(int m);

/// Longest chain; throws std::invalid_argument on the empty poset.
int height(const Poset& p);

/// Each extension lists element indices from bottom to top.
struct Realizer {
  std::vector<std::vector<std::size_t>> extensions;
};

struct DimensionResult {
  int dimension = 0;
  Realizer witness;
};

/// All linear extensions, in lexicographic order of their index sequences.
std::vector<std::vector<std::size_t>> linear_extensions(const Poset& p);

/// Every extension is linear and x < y exactly when x precedes y in all of them.
bool is_realizer(const Poset& p, const Realizer& r);

/// Least t <= t_cap admitting a realizer, with the lexicographically least
/// realizer (as a tuple of extensions ordered by enumeration index).
/// Throws CapExceeded when |P| > size_cap or no realizer of size <= t_cap exists.
DimensionResult dimension(const Poset& p, int t_cap = 4, std::size_t size_cap = 8);

/// Permutation d-matrix with element p at (rank_1(p), ..., rank_d(p)).
HyperMatrix realizer_to_matrix(const Poset& p, const Realizer& r);

/// Order on the 1-entries of `a`: e < e' iff e != e' and e <= e' in every
/// coordinate. On permutation matrices this is strict dominance.
Poset pattern_order(const HyperMatrix& a);

/// All 2-dimensional P-patterns: matrices with |P| ones and no empty row or
/// column whose pattern order is isomorphic to P. Sorted by dims then ones.
std::vector<HyperMatrix> enumerate_patterns(const Poset& p, int d = 2);

bool isomorphic(const Poset& a, const Poset& b);

/// Injective map of `pattern` into `target` preserving the order (weak) or
/// the order and incomparability (induced). With an anchor, element
/// anchor.first of the pattern must map to target index anchor.second.
std::optional<std::vector<std::size_t>> find_embedding(
    const Poset& pattern, const Relation& target, bool induced,
    std::optional<std::pair<std::size_t, std::size_t>> anchor = std::nullopt);

bool subposet_embeds(const Poset& p, const Poset& q, bool induced);

}  // namespace posetmat

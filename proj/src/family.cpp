#include "posetmat/family.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace posetmat {

SetFamily::SetFamily(int n, std::vector<SetMask> sets) : n_(n), sets_(std::move(sets)) {
  if (n < 0 || n > kMaxGround) {
    throw std::invalid_argument("family: ground size must be in [0, " + std::to_string(kMaxGround) + "]");
  }
  const SetMask universe = (SetMask{1} << n) - 1;
  for (SetMask s : sets_) {
    if ((s & ~universe) != 0) throw std::invalid_argument("family: member is not a subset of [n]");
  }
  std::sort(sets_.begin(), sets_.end(), ground_less);
  if (std::adjacent_find(sets_.begin(), sets_.end()) != sets_.end()) {
    throw std::invalid_argument("family: duplicate member");
  }
}

SetFamily SetFamily::power_set(int n) {
  if (n < 0 || n > 20) throw std::invalid_argument("family: power set ground size must be in [0, 20]");
  std::vector<SetMask> sets;
  for (SetMask s = 0; s < (SetMask{1} << n); ++s) sets.push_back(s);
  return SetFamily(n, std::move(sets));
}

SetFamily SetFamily::level(int n, int k) {
  if (n < 0 || n > 20) throw std::invalid_argument("family: level ground size must be in [0, 20]");
  std::vector<SetMask> sets;
  for (SetMask s = 0; s < (SetMask{1} << n); ++s) {
    if (set_size(s) == k) sets.push_back(s);
  }
  return SetFamily(n, std::move(sets));
}

bool SetFamily::has(SetMask s) const {
  return std::binary_search(sets_.begin(), sets_.end(), s, ground_less);
}

Relation SetFamily::inclusion() const {
  Relation r(sets_.size());
  for (std::size_t i = 0; i < sets_.size(); ++i) {
    for (std::size_t j = 0; j < sets_.size(); ++j) {
      if (i != j && (sets_[i] & sets_[j]) == sets_[i]) r.set_less(i, j);
    }
  }
  return r;
}

std::optional<std::vector<SetMask>> find_copy(const SetFamily& family, const Poset& p, bool induced) {
  const auto image = find_embedding(p, family.inclusion(), induced);
  if (!image) return std::nullopt;
  std::vector<SetMask> out;
  for (std::size_t q : *image) out.push_back(family.sets()[q]);
  return out;
}

bool family_contains(const SetFamily& family, const Poset& p, bool induced) {
  return find_embedding(p, family.inclusion(), induced).has_value();
}

Rational lubell(const SetFamily& family) { return shifted_lubell(family, 1); }

Rational shifted_lubell(const SetFamily& family, int d) {
  if (d < 1) throw std::invalid_argument("shifted_lubell: d must be at least 1");
  const int n = family.ground();
  Rational total = 0;
  for (SetMask s : family.sets()) {
    total += Rational(1, binomial(n + 2 * d - 2, set_size(s) + d - 1));
  }
  return total;
}

}  // namespace posetmat

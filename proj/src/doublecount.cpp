#include "posetmat/doublecount.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "posetmat/error.hpp"

namespace posetmat {

PermutationPartition::PermutationPartition(std::vector<std::vector<int>> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("partition: needs at least one part");
  std::vector<int> all;
  for (const auto& part : parts_) all.insert(all.end(), part.begin(), part.end());
  n_ = static_cast<int>(all.size());
  if (n_ > SetFamily::kMaxGround) throw std::invalid_argument("partition: ground set too large");
  std::sort(all.begin(), all.end());
  for (int i = 0; i < n_; ++i) {
    if (all[i] != i + 1) throw std::invalid_argument("partition: parts are not a permutation of [n]");
  }
}

PermutationPartition PermutationPartition::parse(std::string_view text) {
  std::vector<std::vector<int>> parts(1);
  const bool commas = text.find(',') != std::string_view::npos;
  std::string number;
  auto flush = [&] {
    if (!number.empty()) {
      parts.back().push_back(std::stoi(number));
      number.clear();
    }
  };
  for (char ch : text) {
    if (ch == '|') {
      flush();
      parts.emplace_back();
    } else if (ch == ',') {
      flush();
    } else if (ch >= '0' && ch <= '9') {
      if (commas) {
        number += ch;
      } else {
        parts.back().push_back(ch - '0');
      }
    } else {
      throw std::invalid_argument("partition: unexpected character '" + std::string(1, ch) + "'");
    }
  }
  flush();
  return PermutationPartition(std::move(parts));
}

std::string PermutationPartition::to_string() const {
  const bool commas = n_ > 9;
  std::string out;
  for (std::size_t j = 0; j < parts_.size(); ++j) {
    if (j) out += '|';
    for (std::size_t i = 0; i < parts_[j].size(); ++i) {
      if (commas && i) out += ',';
      out += std::to_string(parts_[j][i]);
    }
  }
  return out;
}

SetMask prefix_union(const PermutationPartition& q, std::span<const int> idx) {
  if (idx.size() != q.part_count()) throw std::invalid_argument("prefix_union: index arity mismatch");
  SetMask out = 0;
  for (std::size_t j = 0; j < idx.size(); ++j) {
    const auto& part = q.parts()[j];
    if (idx[j] < 1 || idx[j] > static_cast<int>(part.size()) + 1) {
      throw std::invalid_argument("prefix_union: index out of range on part " + std::to_string(j + 1));
    }
    for (int i = 0; i < idx[j] - 1; ++i) out |= SetMask{1} << (part[i] - 1);
  }
  return out;
}

bool is_prefix_union(const PermutationPartition& q, SetMask s) {
  for (const auto& part : q.parts()) {
    bool inside = true;
    for (int x : part) {
      const bool member = (s >> (x - 1) & 1) != 0;
      if (member && !inside) return false;
      inside = inside && member;
    }
  }
  return true;
}

BigInt partition_count(int n, int d) {
  if (n < 0 || d < 1) throw std::invalid_argument("partition_count: needs n >= 0, d >= 1");
  return factorial(n + d - 1) / factorial(d - 1);
}

void for_each_partition(int n, int d, const std::function<void(const PermutationPartition&)>& visit,
                        std::uint64_t cap) {
  if (partition_count(n, d) > cap) {
    throw CapExceeded("enumerate_partitions: more than " + std::to_string(cap) + " partitions");
  }
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<int> sizes(d, 0);
  // Part sizes with the earliest parts largest first.
  std::function<void(int, int, const std::vector<int>&)> sizes_rec = [&](int j, int left,
                                                                          const std::vector<int>& p) {
    if (j == d - 1) {
      sizes[j] = left;
      std::vector<std::vector<int>> parts(d);
      int at = 0;
      for (int k = 0; k < d; ++k) {
        parts[k].assign(p.begin() + at, p.begin() + at + sizes[k]);
        at += sizes[k];
      }
      visit(PermutationPartition(std::move(parts)));
      return;
    }
    for (int s = left; s >= 0; --s) {
      sizes[j] = s;
      sizes_rec(j + 1, left - s, p);
    }
  };
  do {
    sizes_rec(0, n, perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

std::vector<PermutationPartition> enumerate_partitions(int n, int d, std::uint64_t cap) {
  std::vector<PermutationPartition> out;
  for_each_partition(n, d, [&](const PermutationPartition& q) { out.push_back(q); }, cap);
  return out;
}

PermutationPartition random_partition(int n, int d, Rng& rng) {
  if (n < 0 || d < 1) throw std::invalid_argument("random_partition: needs n >= 0, d >= 1");
  // Shuffle the n elements together with d - 1 separators (encoded as 0).
  std::vector<int> word(n);
  std::iota(word.begin(), word.end(), 1);
  word.insert(word.end(), d - 1, 0);
  std::shuffle(word.begin(), word.end(), rng);
  std::vector<std::vector<int>> parts(1);
  for (int x : word) {
    if (x == 0) {
      parts.emplace_back();
    } else {
      parts.back().push_back(x);
    }
  }
  return PermutationPartition(std::move(parts));
}

BigInt count_partitions_with_prefix(int n, int d, int f) {
  if (d < 1) throw std::invalid_argument("count_partitions_with_prefix: d must be at least 1");
  if (f < 0 || f > n) throw std::invalid_argument("count_partitions_with_prefix: f must be in [0, n]");
  return factorial(f + d - 1) / factorial(d - 1) * (factorial(n - f + d - 1) / factorial(d - 1));
}

HyperMatrix build_mq(const PermutationPartition& q, const SetFamily& family) {
  if (q.ground() != family.ground()) throw std::invalid_argument("build_mq: ground sets differ");
  const std::size_t d = q.part_count();
  std::vector<int> dims(d);
  for (std::size_t j = 0; j < d; ++j) dims[j] = static_cast<int>(q.parts()[j].size()) + 1;
  std::vector<Coord> ones;
  Coord idx(d, 1);
  while (true) {
    if (family.has(prefix_union(q, idx))) ones.push_back(idx);
    std::size_t j = d;
    bool done = true;
    while (j-- > 0) {
      if (idx[j] < dims[j]) {
        ++idx[j];
        done = false;
        break;
      }
      idx[j] = 1;
    }
    if (done) break;
  }
  return HyperMatrix(std::move(dims), std::move(ones));
}

SetFamily random_induced_free_family(int n, const Poset& p, Rng& rng) {
  if (n < 0 || n > 16) throw std::invalid_argument("random_induced_free_family: n must be in [0, 16]");
  std::vector<SetMask> sets;
  std::bernoulli_distribution keep(0.5);
  for (SetMask s = 0; s < (SetMask{1} << n); ++s) {
    if (keep(rng)) sets.push_back(s);
  }
  SetFamily family(n, sets);
  while (auto copy = find_copy(family, p, true)) {
    const SetMask victim = (*copy)[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(copy->size()) - 1))];
    sets = family.sets();
    sets.erase(std::find(sets.begin(), sets.end(), victim));
    family = SetFamily(n, sets);
  }
  return family;
}

MqFreenessReport verify_mq_freeness(const Poset& p, const Realizer& r, int n, int trials, std::uint64_t seed) {
  const int d = static_cast<int>(r.extensions.size());
  if (d < 2) throw std::invalid_argument("verify_mq_freeness: needs a realizer with at least two extensions");
  const HyperMatrix mp = realizer_to_matrix(p, r);
  MqFreenessReport report;
  for (int t = 0; t < trials; ++t) {
    Rng rng(split_seed(seed, static_cast<std::uint64_t>(t)));
    const SetFamily family = random_induced_free_family(n, p, rng);
    const PermutationPartition q = random_partition(n, d, rng);
    ++report.trials;
    if (contains(build_mq(q, family), mp)) {
      ++report.violations;
      if (!report.counterexample) report.counterexample = MqCounterexample{family, q};
    }
  }
  return report;
}

DoubleCountResult double_count_identity(const SetFamily& family, int d, std::uint64_t cap) {
  if (d < 1) throw std::invalid_argument("double_count_identity: d must be at least 1");
  const int n = family.ground();
  DoubleCountResult out;
  for (SetMask s : family.sets()) out.lhs += count_partitions_with_prefix(n, d, set_size(s));
  std::uint64_t pairs = 0;
  for_each_partition(
      n, d,
      [&](const PermutationPartition& q) {
        for (SetMask s : family.sets()) pairs += is_prefix_union(q, s) ? 1 : 0;
      },
      cap);
  out.rhs = pairs;
  out.equal = out.lhs == out.rhs;
  return out;
}

}  // namespace posetmat

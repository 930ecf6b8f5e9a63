#include "posetmat/verify.hpp"

#include <algorithm>
#include <stdexcept>

#include "posetmat/blocks.hpp"
#include "posetmat/bounds.hpp"
#include "posetmat/doublecount.hpp"

namespace posetmat {

namespace {

HyperMatrix identity2() { return HyperMatrix({2, 2}, {{1, 1}, {2, 2}}); }

Json check_countp(const VerifyOptions& o) {
  Rng rng(split_seed(o.seed, 1));
  int cases = 0;
  for (int n = 0; n <= 4; ++n) {
    for (int d = 1; d <= 3; ++d) {
      const auto partitions = enumerate_partitions(n, d);
      for (int f = 0; f <= n; ++f) {
        // The prefix set {1..f} and a random f-subset.
        std::vector<int> elems(n);
        for (int i = 0; i < n; ++i) elems[i] = i + 1;
        std::shuffle(elems.begin(), elems.end(), rng);
        for (SetMask s : {(SetMask{1} << f) - 1, [&] {
                            SetMask r = 0;
                            for (int i = 0; i < f; ++i) r |= SetMask{1} << (elems[i] - 1);
                            return r;
                          }()}) {
          long counted = 0;
          for (const auto& q : partitions) counted += is_prefix_union(q, s) ? 1 : 0;
          const BigInt formula = count_partitions_with_prefix(n, d, f);
          ++cases;
          if (formula != counted) {
            return Json{{"name", "countp"},
                        {"passed", false},
                        {"details", {{"cases", cases}}},
                        {"counterexample",
                         {{"n", n}, {"d", d}, {"set", set_to_json(s)}, {"formula", to_string(formula)},
                          {"enumerated", counted}}}};
          }
        }
      }
    }
  }
  return Json{{"name", "countp"}, {"passed", true}, {"details", {{"cases", cases}}}};
}

Json check_counta(const VerifyOptions& o) {
  Json per_poset = Json::array();
  bool passed = true;
  Json counterexample;
  std::uint64_t stream = 100;
  for (const std::string spec : {"diamond", "vee:2", "butterfly"}) {
    const Poset p = parse_poset(spec);
    const DimensionResult dim = dimension(p);
    const auto report = verify_mq_freeness(p, dim.witness, 5, o.trials, split_seed(o.seed, stream++));
    per_poset.push_back({{"poset", spec}, {"d", dim.dimension}, {"trials", report.trials},
                         {"violations", report.violations}});
    if (report.violations != 0 && passed) {
      passed = false;
      counterexample = {{"poset", spec},
                        {"family", family_to_json(report.counterexample->family)},
                        {"partition", report.counterexample->partition.to_string()}};
    }
  }
  Json out{{"name", "counta"}, {"passed", passed}, {"details", per_poset}};
  if (!passed) out["counterexample"] = counterexample;
  return out;
}

Json check_doublecount(const VerifyOptions& o) {
  Rng rng(split_seed(o.seed, 2));
  int cases = 0;
  for (int d : {2, 3}) {
    for (int t = 0; t < o.trials; ++t) {
      std::vector<SetMask> sets;
      for (SetMask s = 0; s < 16; ++s) {
        if (uniform_int(rng, 0, 1)) sets.push_back(s);
      }
      const SetFamily family(4, sets);
      const auto r = double_count_identity(family, d);
      ++cases;
      if (!r.equal) {
        return Json{{"name", "doublecount"},
                    {"passed", false},
                    {"details", {{"cases", cases}}},
                    {"counterexample",
                     {{"family", family_to_json(family)}, {"d", d}, {"formula", to_string(r.lhs)},
                      {"enumerated", to_string(r.rhs)}}}};
      }
    }
  }
  return Json{{"name", "doublecount"}, {"passed", true}, {"details", {{"cases", cases}}}};
}

Json check_lw(const VerifyOptions& o) {
  Rng rng(split_seed(o.seed, 3));
  for (int t = 0; t < o.trials; ++t) {
    const int density = uniform_int(rng, 1, 30);
    std::vector<Coord> ones;
    for (int x = 1; x <= 6; ++x) {
      for (int y = 1; y <= 6; ++y) {
        for (int z = 1; z <= 6; ++z) {
          if (uniform_int(rng, 1, 100) <= density) ones.push_back({x, y, z});
        }
      }
    }
    const HyperMatrix m({6, 6, 6}, ones);
    if (!loomis_whitney_holds(m)) {
      return Json{{"name", "lw"}, {"passed", false}, {"details", {{"trials", t + 1}}},
                  {"counterexample", matrix_to_json(m)}};
    }
  }
  return Json{{"name", "lw"}, {"passed", true}, {"details", {{"trials", o.trials}}}};
}

Json check_blocks(const VerifyOptions& o) {
  Rng rng(split_seed(o.seed, 4));
  const HyperMatrix a = identity2();
  int checked = 0;
  for (int t = 0; t < o.trials; ++t) {
    const int n = uniform_int(rng, 2, 8);
    const HyperMatrix m = random_free_matrix({n, n}, {a}, rng);
    for (int s : {1, 2}) {
      const BlockReport report = block_analyze(m, a, s);
      const BigInt limit = wide_block_limit(2, s, 2);
      bool ok = !contains(report.coarse, a);
      for (int axis = 1; axis <= 2 && ok; ++axis) ok = report.max_wide_per_blockcolumn(axis) <= limit;
      ++checked;
      if (!ok) {
        return Json{{"name", "blocks"}, {"passed", false}, {"details", {{"checked", checked}}},
                    {"counterexample", {{"matrix", matrix_to_json(m)}, {"s", s}}}};
      }
    }
  }
  return Json{{"name", "blocks"}, {"passed", true}, {"details", {{"checked", checked}}}};
}

Json check_mt(const VerifyOptions& o) {
  const BigInt c = marcus_tardos_constant(2);
  Json values = Json::array();
  bool passed = true;
  for (int n = 1; n <= 5; ++n) {
    const long v = ex_exact({n, n}, identity2(), o.ex).value;
    const bool ok = BigInt(v) <= c * n;
    passed = passed && ok;
    values.push_back({{"n", n}, {"ex", v}, {"bound", to_string(BigInt(c * n))}});
  }
  return Json{{"name", "mt"}, {"passed", passed}, {"details", values}};
}

Json check_tardos(const VerifyOptions& o) {
  Json values = Json::array();
  bool passed = true;
  const int n_max = o.ex.cap_override ? 4 : 3;
  for (int n = 1; n <= n_max; ++n) {
    const TardosReport r = tardos_diamond_check(n, o.ex);
    passed = passed && r.holds;
    values.push_back({{"n", n}, {"value", r.value}, {"bound", r.bound}});
  }
  return Json{{"name", "tardos-diamond"}, {"passed", passed}, {"details", values}};
}

}  // namespace

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names{"countp", "counta", "doublecount", "lw",
                                              "blocks", "mt",     "tardos-diamond"};
  return names;
}

Json run_check(const std::string& name, const VerifyOptions& options) {
  if (name == "countp") return check_countp(options);
  if (name == "counta") return check_counta(options);
  if (name == "doublecount") return check_doublecount(options);
  if (name == "lw") return check_lw(options);
  if (name == "blocks") return check_blocks(options);
  if (name == "mt") return check_mt(options);
  if (name == "tardos-diamond") return check_tardos(options);
  throw std::invalid_argument("verify: unknown check \"" + name + "\"");
}

}  // namespace posetmat

#include "posetmat/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "posetmat/cache.hpp"
#include "posetmat/doublecount.hpp"
#include "posetmat/error.hpp"
#include "posetmat/extremal.hpp"
#include "posetmat/verify.hpp"

namespace posetmat {

namespace {

constexpr int kSchema = 1;

Json realizer_to_json(const Poset& p, const Realizer& r) {
  Json out = Json::array();
  for (const auto& ext : r.extensions) {
    Json order = Json::array();
    for (std::size_t x : ext) order.push_back(p.label(x));
    out.push_back(order);
  }
  return out;
}

void flatten(const Json& node, const std::string& path, std::ostringstream& out) {
  if (node.is_object()) {
    for (const auto& [key, value] : node.items()) flatten(value, path.empty() ? key : path + "." + key, out);
  } else if (node.is_array() && !node.empty() && (node.front().is_object() || node.front().is_array())) {
    for (std::size_t i = 0; i < node.size(); ++i) flatten(node[i], path + "." + std::to_string(i), out);
  } else {
    out << path << '\t' << (node.is_string() ? node.get<std::string>() : node.dump()) << '\n';
  }
}

std::filesystem::path default_cache_dir() {
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return std::filesystem::path(xdg) / "posetmat";
  if (const char* home = std::getenv("HOME"); home && *home) {
    return std::filesystem::path(home) / ".cache" / "posetmat";
  }
  return ".posetmat-cache";
}

std::vector<int> parse_dims(const std::string& text) {
  std::vector<int> dims;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      dims.push_back(v);
    } catch (const std::exception&) {
      throw std::invalid_argument("--dims: \"" + text + "\" is not a comma-separated list of integers");
    }
  }
  if (dims.empty()) throw std::invalid_argument("--dims: empty");
  return dims;
}

}  // namespace

std::string to_tsv(const Json& doc) {
  std::ostringstream out;
  flatten(doc, "", out);
  return out.str();
}

Json bounds_table(const Poset& p, const std::string& name, const PipelineOptions& pipeline) {
  Json t;
  t["schema"] = kSchema;
  t["command"] = "bounds";
  t["poset"] = name;
  t["size"] = p.size();
  const int h = height(p);
  t["height"] = h;

  t["weak_chain"] = {{"coefficient", to_string(general_weak_bound(p))},
                     {"note", "every poset is a weak subposet of the chain of length |P|"}};
  const int m = best_m(p);
  t["chen_li"] = {{"m1", to_string(chen_li_bound(p, 1))},
                  {"best_m", m},
                  {"best", to_string(chen_li_bound(p, m))},
                  {"note", "weak containment, n large"}};
  const int k = best_k(p);
  t["gmt"] = {{"k2", to_string(gmt_bound(p, 2))},
              {"best_k", k},
              {"best", to_string(gmt_bound(p, k))},
              {"note", "weak containment, n large"}};
  t["tree_leading_term"] = {{"coefficient", std::to_string(h - 1)},
                            {"hasse_is_tree", hasse_is_tree(p)},
                            {"note", "tree posets only, leading term"}};
  t["marcus_tardos_k2"] = to_string(marcus_tardos_constant(2));

  const DimensionResult dim = dimension(p, pipeline.dimension_cap);
  t["dimension"] = dim.dimension;
  t["realizer"] = realizer_to_json(p, dim.witness);
  if (dim.dimension == 1) {
    t["permutation_matrix_route"] = nullptr;
    t["chain"] = {{"coefficient", std::to_string(p.size() - 1)}, {"note", "weak and induced containment coincide for chains"}};
  } else if (pipeline.source == KSource::MarcusTardos && dim.dimension != 2) {
    t["permutation_matrix_route"] = nullptr;
  } else {
    const PipelineReport r = induced_bound_pipeline(p, pipeline);
    t["permutation_matrix_route"] = {{"source", to_string(r.source)},
                                     {"K", to_string(r.k)},
                                     {"provenance", r.provenance},
                                     {"M_P", matrix_to_json(r.mp)},
                                     {"coefficient", to_string(r.coefficient)},
                                     {"refined_coefficient", to_string(r.refined_coefficient)}};
  }
  if (isomorphic(p, diamond())) {
    // 4n ones at most for n x n matrices avoiding all diamond patterns, times 2^2.
    t["pattern_route"] = {{"K", "4"},
                          {"coefficient", "16"},
                          {"note", "avoids all 16 two-dimensional diamond patterns at once"}};
  }
  return t;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Forbidden subposets and forbidden hypermatrices: exact small-case computations"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "json";
  std::string cache_dir;
  bool no_cache = false;
  bool cap_override = false;
  std::uint64_t seed = 1;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "tsv"}));
  app.add_option("--cache-dir", cache_dir, "Directory of cached exact results");
  app.add_flag("--no-cache", no_cache, "Neither read nor write the result cache");
  app.add_flag("--cap-override", cap_override, "Allow instances above the default caps");
  app.add_option("--seed", seed, "Seed for randomized verification");

  std::string poset_action;
  std::string poset_spec;
  auto* poset_cmd = app.add_subcommand("poset", "Poset information, realizer and permutation matrix M_P");
  poset_cmd->add_option("action", poset_action)->required()->check(CLI::IsMember({"info", "matrix", "dimension"}));
  poset_cmd->add_option("poset", poset_spec, "Built-in name or poset file")->required();

  auto* patterns_cmd = app.add_subcommand("patterns", "All 2-dimensional P-patterns");
  patterns_cmd->add_option("--poset", poset_spec)->required();

  std::string dims_text;
  std::string pattern_file;
  std::string pattern_dir;
  std::string patterns_of;
  auto* ex_cmd = app.add_subcommand("ex", "Exact extremal number ex_d(dims, A)");
  ex_cmd->add_option("--dims", dims_text, "Comma-separated side lengths")->required();
  auto* pattern_opt = ex_cmd->add_option("--pattern", pattern_file, "Forbidden matrix file");
  auto* set_opt = ex_cmd->add_option("--pattern-set", pattern_dir, "Directory of matrix files forbidden together");
  auto* of_opt = ex_cmd->add_option("--patterns-of", patterns_of, "Forbid every 2-dimensional pattern of a poset");
  pattern_opt->excludes(set_opt)->excludes(of_opt);
  set_opt->excludes(of_opt);

  int la_n = 0;
  std::string mode = "induced";
  auto* la_cmd = app.add_subcommand("la", "Exact La(n, P) or La#(n, P)");
  la_cmd->add_option("--n", la_n)->required();
  la_cmd->add_option("--poset", poset_spec)->required();
  la_cmd->add_option("--mode", mode)->check(CLI::IsMember({"weak", "induced"}));

  std::string family_file;
  int shifted = 0;
  auto* lubell_cmd = app.add_subcommand("lubell", "Lubell function of a family");
  lubell_cmd->add_option("--family", family_file)->required();
  lubell_cmd->add_option("--shifted", shifted, "Also evaluate the shifted variant for this d");

  std::string k_source = "marcus-tardos";
  std::string k_value;
  auto* bounds_cmd = app.add_subcommand("bounds", "Table of upper-bound coefficients for a poset");
  bounds_cmd->add_option("--poset", poset_spec)->required();
  bounds_cmd->add_option("--k-source", k_source)->check(CLI::IsMember({"marcus-tardos", "exact", "supplied"}));
  bounds_cmd->add_option("--k", k_value, "K for --k-source supplied, e.g. 12 or 7/2");

  std::string check = "all";
  int trials = 100;
  auto* verify_cmd = app.add_subcommand("verify", "Randomized and exhaustive property checks");
  std::vector<std::string> choices = check_names();
  choices.insert(choices.begin(), "all");
  verify_cmd->add_option("check", check)->check(CLI::IsMember(choices));
  verify_cmd->add_option("--trials", trials)->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  std::optional<ResultCache> cache;
  if (!no_cache) cache.emplace(cache_dir.empty() ? default_cache_dir() : std::filesystem::path(cache_dir));
  ExOptions ex_options;
  ex_options.cap_override = cap_override;
  ex_options.cache = cache ? &*cache : nullptr;
  LaOptions la_options;
  la_options.cap_override = cap_override;
  la_options.cache = ex_options.cache;
  if (cap_override) err << "warning: caps overridden; exhaustive searches may run for a long time\n";

  Json doc;
  doc["schema"] = kSchema;
  int code = kExitOk;
  try {
    if (*poset_cmd) {
      const Poset p = parse_poset(poset_spec);
      doc["command"] = "poset " + poset_action;
      doc["poset"] = poset_spec;
      if (poset_action == "info") {
        doc["definition"] = poset_to_json(p);
        doc["size"] = p.size();
        doc["height"] = height(p);
        doc["is_chain"] = p.is_chain();
        doc["hasse_is_tree"] = hasse_is_tree(p);
      } else {
        const DimensionResult dim = dimension(p);
        doc["dimension"] = dim.dimension;
        doc["realizer"] = realizer_to_json(p, dim.witness);
        if (poset_action == "matrix") doc["matrix"] = matrix_to_json(realizer_to_matrix(p, dim.witness));
      }
    } else if (*patterns_cmd) {
      const Poset p = parse_poset(poset_spec);
      const auto patterns = enumerate_patterns(p, 2);
      doc["command"] = "patterns";
      doc["poset"] = poset_spec;
      doc["count"] = patterns.size();
      Json list = Json::array();
      for (const auto& m : patterns) list.push_back(matrix_to_json(m));
      doc["patterns"] = list;
    } else if (*ex_cmd) {
      const std::vector<int> dims = parse_dims(dims_text);
      std::vector<HyperMatrix> patterns;
      if (!pattern_file.empty()) {
        patterns.push_back(matrix_from_json(read_json_file(pattern_file)));
      } else if (!pattern_dir.empty()) {
        std::vector<std::filesystem::path> files;
        for (const auto& entry : std::filesystem::directory_iterator(pattern_dir)) {
          if (entry.path().extension() == ".json") files.push_back(entry.path());
        }
        std::sort(files.begin(), files.end());
        for (const auto& f : files) patterns.push_back(matrix_from_json(read_json_file(f)));
        if (patterns.empty()) throw std::invalid_argument("--pattern-set: no .json files in " + pattern_dir);
      } else if (!patterns_of.empty()) {
        patterns = enumerate_patterns(parse_poset(patterns_of), 2);
      } else {
        throw std::invalid_argument("ex: one of --pattern, --pattern-set, --patterns-of is required");
      }
      const ExResult r = ex_exact(dims, patterns, ex_options);
      doc["command"] = "ex";
      doc["dims"] = dims;
      doc["mode"] = patterns.size() == 1 ? "single-pattern" : "pattern-set";
      doc["patterns"] = patterns.size();
      doc["value"] = r.value;
      doc["witness"] = matrix_to_json(r.witness);
    } else if (*la_cmd) {
      const Poset p = parse_poset(poset_spec);
      const LaResult r = la_exact(la_n, p, mode == "induced", la_options);
      doc["command"] = "la";
      doc["n"] = la_n;
      doc["poset"] = poset_spec;
      doc["mode"] = mode;
      doc["value"] = r.value;
      doc["witness"] = family_to_json(r.witness);
    } else if (*lubell_cmd) {
      const SetFamily f = family_from_json(read_json_file(family_file));
      doc["command"] = "lubell";
      doc["n"] = f.ground();
      doc["members"] = f.size();
      doc["lubell"] = to_string(lubell(f));
      if (shifted != 0) doc["shifted"] = {{"d", shifted}, {"value", to_string(shifted_lubell(f, shifted))}};
    } else if (*bounds_cmd) {
      const Poset p = parse_poset(poset_spec);
      PipelineOptions pipeline;
      pipeline.ex = ex_options;
      if (k_source == "exact") {
        pipeline.source = KSource::Exact;
      } else if (k_source == "supplied") {
        pipeline.source = KSource::Supplied;
        if (k_value.empty()) throw std::invalid_argument("bounds: --k-source supplied needs --k");
        try {
          pipeline.supplied_k = Rational(k_value);
        } catch (const std::exception&) {
          throw std::invalid_argument("bounds: --k \"" + k_value + "\" is not a rational number");
        }
      }
      doc = bounds_table(p, poset_spec, pipeline);
    } else if (*verify_cmd) {
      VerifyOptions options;
      options.seed = seed;
      options.trials = trials;
      options.ex = ex_options;
      doc["command"] = "verify " + check;
      doc["seed"] = seed;
      doc["trials"] = trials;
      Json results = Json::array();
      bool passed = true;
      const std::vector<std::string> names = check == "all" ? check_names() : std::vector<std::string>{check};
      for (const auto& name : names) {
        Json r = run_check(name, options);
        passed = passed && r.at("passed").get<bool>();
        results.push_back(std::move(r));
      }
      doc["checks"] = results;
      doc["passed"] = passed;
      if (!passed) code = kExitVerifyFailed;
    }
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << " (use --cap-override to raise the cap)\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  if (format == "tsv") {
    out << to_tsv(doc);
  } else {
    out << doc.dump(2) << '\n';
  }
  return code;
}

}  // namespace posetmat

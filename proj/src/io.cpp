#include "posetmat/io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <stdexcept>

namespace posetmat {

Json matrix_to_json(const HyperMatrix& m) {
  Json ones = Json::array();
  for (const Coord& c : m.ones()) ones.push_back(c);
  return Json{{"dims", m.dims()}, {"ones", ones}};
}

HyperMatrix matrix_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("dims") || !j.contains("ones")) {
    throw std::invalid_argument("matrix file: expected an object with \"dims\" and \"ones\"");
  }
  try {
    return HyperMatrix(j.at("dims").get<std::vector<int>>(), j.at("ones").get<std::vector<Coord>>());
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("matrix file: ") + e.what());
  }
}

Json poset_to_json(const Poset& p) {
  Json covers = Json::array();
  for (auto [a, b] : p.covers()) covers.push_back({p.label(a), p.label(b)});
  return Json{{"elements", p.labels()}, {"covers", covers}};
}

Poset poset_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("elements")) {
    throw std::invalid_argument("poset file: expected an object with \"elements\"");
  }
  try {
    auto labels = j.at("elements").get<std::vector<std::string>>();
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (!index.emplace(labels[i], i).second) {
        throw std::invalid_argument("poset file: duplicate element \"" + labels[i] + "\"");
      }
    }
    std::vector<std::pair<std::size_t, std::size_t>> covers;
    if (j.contains("covers")) {
      for (const auto& pair : j.at("covers")) {
        const auto names = pair.get<std::vector<std::string>>();
        if (names.size() != 2) throw std::invalid_argument("poset file: a cover must name two elements");
        for (const auto& name : names) {
          if (!index.count(name)) throw std::invalid_argument("poset file: unknown element \"" + name + "\"");
        }
        covers.emplace_back(index[names[0]], index[names[1]]);
      }
    }
    return Poset::from_covers(std::move(labels), covers);
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("poset file: ") + e.what());
  }
}

Json set_to_json(SetMask s) {
  Json out = Json::array();
  for (int e = 0; e < 64; ++e) {
    if (s >> e & 1) out.push_back(e + 1);
  }
  return out;
}

Json family_to_json(const SetFamily& f) {
  Json sets = Json::array();
  for (SetMask s : f.sets()) sets.push_back(set_to_json(s));
  return Json{{"n", f.ground()}, {"sets", sets}};
}

SetFamily family_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("sets")) {
    throw std::invalid_argument("family file: expected an object with \"n\" and \"sets\"");
  }
  try {
    const int n = j.at("n").get<int>();
    if (n < 0 || n > SetFamily::kMaxGround) throw std::invalid_argument("family file: n out of range");
    std::vector<SetMask> sets;
    for (const auto& members : j.at("sets")) {
      SetMask s = 0;
      for (int e : members.get<std::vector<int>>()) {
        if (e < 1 || e > n) throw std::invalid_argument("family file: element " + std::to_string(e) + " not in [1, n]");
        const SetMask bit = SetMask{1} << (e - 1);
        if (s & bit) throw std::invalid_argument("family file: repeated element in a set");
        s |= bit;
      }
      sets.push_back(s);
    }
    return SetFamily(n, std::move(sets));
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("family file: ") + e.what());
  }
}

namespace {

std::optional<int> parse_int(std::string_view s) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

std::optional<Poset> builtin(std::string_view spec) {
  if (spec == "diamond") return diamond();
  if (spec == "butterfly") return butterfly();
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) return std::nullopt;
  const std::string_view name = spec.substr(0, colon);
  const auto arg = parse_int(spec.substr(colon + 1));
  if (name != "chain" && name != "antichain" && name != "vee" && name != "boolean") return std::nullopt;
  if (!arg) throw std::invalid_argument("poset: bad parameter in \"" + std::string(spec) + "\"");
  if (name == "chain") return chain(*arg);
  if (name == "antichain") return antichain(*arg);
  if (name == "vee") return vee(*arg);
  return boolean_lattice(*arg);
}

}  // namespace

bool is_builtin_poset(std::string_view spec) {
  try {
    return builtin(spec).has_value();
  } catch (const std::invalid_argument&) {
    return true;
  }
}

Poset parse_poset(std::string_view spec) {
  if (auto p = builtin(spec)) return *p;
  return poset_from_json(read_json_file(std::filesystem::path(std::string(spec))));
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(path.string() + ": " + e.what());
  }
}

}  // namespace posetmat

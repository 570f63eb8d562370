#include "gpk/config.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include "gpk/default_config.hpp"
#include "json.hpp"

namespace gpk {

using json = nlohmann::json;

namespace {

std::string join_problems(const std::vector<std::string>& problems) {
  std::string out = "config has " + std::to_string(problems.size()) + " problem(s):";
  for (const auto& p : problems) out += "\n  " + p;
  return out;
}

class Loader {
 public:
  explicit Loader(const json& doc) : doc_(doc) {}

  Config run() {
    if (!doc_.is_object()) {
      problem("$", "top level must be an object");
      throw ConfigError(problems_);
    }
    for (const auto& [key, _] : doc_.items()) {
      if (key != "groups" && key != "graphs" && key != "contexts" && key != "families" && key != "extensions") {
        problem("$." + key, "unknown top-level key");
      }
    }
    each("groups", [&](const std::string& at, const std::string& name, const json& v) { group(at, name, v); });
    each("graphs", [&](const std::string& at, const std::string& name, const json& v) { graph(at, name, v); });
    each("contexts", [&](const std::string& at, const std::string& name, const json& v) { context(at, name, v); });
    each("extensions", [&](const std::string& at, const std::string& name, const json& v) { extension(at, name, v); });
    each("families", [&](const std::string& at, const std::string& name, const json& v) { family(at, name, v); });
    if (!problems_.empty()) throw ConfigError(problems_);
    return std::move(cfg_);
  }

 private:
  void problem(const std::string& at, const std::string& what) { problems_.push_back(at + ": " + what); }

  template <typename F>
  void each(const char* section, F&& f) {
    if (!doc_.contains(section)) return;
    const json& s = doc_.at(section);
    const std::string at = std::string("$.") + section;
    if (!s.is_object()) {
      problem(at, "must be an object keyed by name");
      return;
    }
    for (const auto& [name, value] : s.items()) {
      try {
        f(at + "." + name, name, value);
      } catch (const Error& e) {
        problem(at + "." + name, e.what());
      } catch (const json::exception& e) {
        problem(at + "." + name, e.what());
      }
    }
  }

  std::optional<Group> lookup_group(const std::string& at, const json& ref) {
    if (!ref.is_string()) {
      problem(at, "group reference must be a name");
      return std::nullopt;
    }
    auto it = cfg_.groups.find(ref.get<std::string>());
    if (it == cfg_.groups.end()) {
      problem(at, "undefined group '" + ref.get<std::string>() + "'");
      return std::nullopt;
    }
    return it->second;
  }

  void group(const std::string& at, const std::string& name, const json& v) {
    if (!v.is_object() || v.size() != 1) {
      problem(at, "expected exactly one of {\"cyclic\": n}, {\"infinite_cyclic\": true}, {\"table\": [[...]]}");
      return;
    }
    if (v.contains("cyclic")) {
      const auto n = v.at("cyclic").get<long long>();
      if (n < 1) return problem(at, "cyclic order must be positive");
      cfg_.groups.emplace(name, Group::cyclic(static_cast<std::size_t>(n)));
    } else if (v.contains("infinite_cyclic")) {
      cfg_.groups.emplace(name, Group::infinite_cyclic());
    } else if (v.contains("table")) {
      std::vector<std::vector<std::size_t>> table;
      for (const auto& row : v.at("table")) {
        std::vector<std::size_t> r;
        for (const auto& x : row) {
          const auto e = x.get<long long>();
          if (e < 0) return problem(at, "table entries must be non-negative element indices");
          r.push_back(static_cast<std::size_t>(e));
        }
        table.push_back(std::move(r));
      }
      cfg_.groups.emplace(name, Group::from_table(table));
    } else {
      problem(at, "unknown group kind '" + v.begin().key() + "'");
    }
  }

  std::vector<Edge> edges(const json& v) {
    std::vector<Edge> out;
    for (const auto& e : v) {
      if (!e.is_array() || e.size() != 2) fail(ErrorCode::validation, "edges are [i, j] pairs");
      const auto i = e.at(0).get<long long>();
      const auto j = e.at(1).get<long long>();
      if (i < 0 || j < 0) fail(ErrorCode::validation, "negative vertex in edge");
      out.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
    return out;
  }

  void graph(const std::string& at, const std::string& name, const json& v) {
    const auto m = v.at("vertices").get<long long>();
    if (m < 0) return problem(at, "vertex count must be non-negative");
    const auto e = v.contains("edges") ? edges(v.at("edges")) : std::vector<Edge>{};
    cfg_.graphs.emplace(name, SimplicialGraph(static_cast<std::size_t>(m), e));
  }

  void context(const std::string& at, const std::string& name, const json& v) {
    const auto gname = v.at("graph").get<std::string>();
    auto git = cfg_.graphs.find(gname);
    if (git == cfg_.graphs.end()) return problem(at + ".graph", "undefined graph '" + gname + "'");
    std::vector<Group> groups;
    bool ok = true;
    const json& refs = v.at("groups");
    if (refs.is_string()) {
      // one group for every vertex
      auto g = lookup_group(at + ".groups", refs);
      if (!g) return;
      groups.assign(git->second.vertex_count(), *g);
    } else {
      for (std::size_t k = 0; k < refs.size(); ++k) {
        auto g = lookup_group(at + ".groups[" + std::to_string(k) + "]", refs[k]);
        if (g) groups.push_back(*g);
        else ok = false;
      }
    }
    if (!ok) return;
    cfg_.contexts.emplace(name, make_context(git->second, std::move(groups)));
  }

  void extension(const std::string& at, const std::string& name, const json& v) {
    const auto base = v.at("base").get<std::string>();
    auto git = cfg_.graphs.find(base);
    if (git == cfg_.graphs.end()) return problem(at + ".base", "undefined graph '" + base + "'");
    const auto added = edges(v.at("add"));
    cfg_.extensions.emplace(name, NamedExtension{base, extend_by(git->second, added)});
  }

  std::optional<SetMap> set_map(const std::string& at, const json& spec, const Group& domain, const Group& codomain) {
    if (spec.is_string() && spec.get<std::string>() == "identity") return checked(at, SetMap::identity(domain), codomain);
    if (!spec.is_object() || spec.empty()) {
      problem(at, "map spec must be \"identity\" or an object");
      return std::nullopt;
    }
    if (spec.contains("identity")) return checked(at, SetMap::identity(domain), codomain);
    if (spec.contains("table")) {
      return SetMap::table(domain, codomain, spec.at("table").get<std::vector<Elem>>());
    }
    if (spec.contains("mod")) {
      const auto n = spec.at("mod").get<long long>();
      if (n < 1) {
        problem(at, "mod must be positive");
        return std::nullopt;
      }
      if (domain.is_finite()) {
        problem(at, "mod reduction needs domain Z");
        return std::nullopt;
      }
      return checked(at, SetMap::mod_reduction(static_cast<std::size_t>(n)), codomain);
    }
    if (spec.contains("compose")) {
      const json& parts = spec.at("compose");
      std::vector<std::string> via;
      if (spec.contains("via")) {
        if (spec.at("via").is_string()) via.push_back(spec.at("via").get<std::string>());
        else via = spec.at("via").get<std::vector<std::string>>();
      }
      if (!parts.is_array() || parts.size() < 2 || via.size() + 1 != parts.size()) {
        problem(at, "compose needs n >= 2 maps and n-1 intermediate groups in \"via\"");
        return std::nullopt;
      }
      std::vector<Group> chain{domain};
      for (std::size_t k = 0; k < via.size(); ++k) {
        auto g = lookup_group(at + ".via[" + std::to_string(k) + "]", json(via[k]));
        if (!g) return std::nullopt;
        chain.push_back(*g);
      }
      chain.push_back(codomain);
      std::optional<SetMap> acc;
      for (std::size_t k = 0; k < parts.size(); ++k) {
        auto part = set_map(at + ".compose[" + std::to_string(k) + "]", parts[k], chain[k], chain[k + 1]);
        if (!part) return std::nullopt;
        acc = acc ? SetMap::compose(*acc, *part) : *part;
      }
      return acc;
    }
    problem(at, "unknown map kind '" + spec.begin().key() + "'");
    return std::nullopt;
  }

  std::optional<SetMap> checked(const std::string& at, SetMap m, const Group& codomain) {
    if (!(m.codomain() == codomain)) {
      problem(at, "map lands in " + m.codomain().describe() + " but the target vertex group is " + codomain.describe());
      return std::nullopt;
    }
    return m;
  }

  void family(const std::string& at, const std::string& name, const json& v) {
    const auto sname = v.at("source").get<std::string>();
    const auto tname = v.at("target").get<std::string>();
    auto sit = cfg_.contexts.find(sname);
    auto tit = cfg_.contexts.find(tname);
    if (sit == cfg_.contexts.end()) return problem(at + ".source", "undefined context '" + sname + "'");
    if (tit == cfg_.contexts.end()) return problem(at + ".target", "undefined context '" + tname + "'");
    const Context& src = *sit->second;
    const Context& tgt = *tit->second;
    std::vector<Vertex> psi(src.vertex_count());
    for (Vertex k = 0; k < psi.size(); ++k) psi[k] = k;
    if (v.contains("psi")) psi = v.at("psi").get<std::vector<Vertex>>();
    auto vertex_map = validate_simplicial_map(psi, src.graph(), tgt.graph());

    const bool uniform = v.contains("map");
    if (uniform == v.contains("maps")) return problem(at, "give exactly one of \"map\" (every vertex) or \"maps\"");
    if (!uniform && v.at("maps").size() != src.vertex_count()) {
      return problem(at + ".maps", "expected " + std::to_string(src.vertex_count()) + " map specs");
    }
    std::vector<SetMap> maps;
    bool ok = true;
    for (Vertex k = 0; k < src.vertex_count(); ++k) {
      const std::string where = uniform ? at + ".map" : at + ".maps[" + std::to_string(k) + "]";
      const json& spec = uniform ? v.at("map") : v.at("maps")[k];
      try {
        auto m = set_map(where, spec, src.group(k), tgt.group(vertex_map(k)));
        if (m) maps.push_back(*m);
        else ok = false;
      } catch (const Error& e) {
        problem(where, e.what());
        ok = false;
      }
      if (!ok && uniform) break;  // one report for a shared spec
    }
    if (!ok) return;
    cfg_.families.emplace(name, SetMapFamily(sit->second, tit->second, std::move(vertex_map), std::move(maps)));
  }

  const json& doc_;
  Config cfg_;
  std::vector<std::string> problems_;
};

template <typename Map>
const typename Map::mapped_type& find_named(const Map& m, const std::string& name, const char* what) {
  auto it = m.find(name);
  if (it == m.end()) {
    std::string known;
    for (const auto& [k, _] : m) known += (known.empty() ? "" : ", ") + k;
    fail(ErrorCode::config, std::string("unknown ") + what + " '" + name + "' (known: " + known + ")");
  }
  return it->second;
}

}  // namespace

ConfigError::ConfigError(std::vector<std::string> problems)
    : Error(ErrorCode::config, join_problems(problems)), problems_(std::move(problems)) {}

const ContextPtr& Config::context(const std::string& name) const { return find_named(contexts, name, "context"); }
const SetMapFamily& Config::family(const std::string& name) const { return find_named(families, name, "family"); }
const NamedExtension& Config::extension(const std::string& name) const {
  return find_named(extensions, name, "extension");
}

Config parse_config(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError({std::string("parse error: ") + e.what()});
  }
  return Loader(doc).run();
}

Config load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError({path.string() + ": cannot open"});
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_config(buf.str());
  } catch (const ConfigError& e) {
    std::vector<std::string> located;
    for (const auto& p : e.problems()) located.push_back(path.string() + ": " + p);
    throw ConfigError(std::move(located));
  }
}

std::string_view default_config_text() { return detail::default_config_json; }

const Config& default_config() {
  static const Config cfg = parse_config(default_config_text());
  return cfg;
}

}  // namespace gpk

#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "gpk/errors.hpp"
#include "gpk/graph.hpp"
#include "gpk/group.hpp"
#include "gpk/induce.hpp"
#include "gpk/word.hpp"

namespace gpk {

struct NamedExtension {
  std::string base_graph;
  GraphExtension extension;
};

/// Named fixtures loaded from a JSON document with top-level keys
/// `groups`, `graphs`, `contexts`, `families`, `extensions`.
struct Config {
  std::map<std::string, Group> groups;
  std::map<std::string, SimplicialGraph> graphs;
  std::map<std::string, ContextPtr> contexts;
  std::map<std::string, SetMapFamily> families;
  std::map<std::string, NamedExtension> extensions;

  const ContextPtr& context(const std::string& name) const;
  const SetMapFamily& family(const std::string& name) const;
  const NamedExtension& extension(const std::string& name) const;
};

/// All problems found while loading, each prefixed with its JSON location.
class ConfigError : public Error {
 public:
  explicit ConfigError(std::vector<std::string> problems);
  const std::vector<std::string>& problems() const noexcept { return problems_; }

 private:
  std::vector<std::string> problems_;
};

Config parse_config(std::string_view json_text);
Config load_config(const std::filesystem::path& path);
/// The fixtures in configs/default.json, compiled into the library.
const Config& default_config();
std::string_view default_config_text();

}  // namespace gpk

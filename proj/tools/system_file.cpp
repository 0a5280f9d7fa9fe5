#include "system_file.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "logdecomp/error.hpp"

namespace logdecomp::cli {

namespace {

using Json = nlohmann::ordered_json;

LogBase parse_base(const Json& value) {
  if (value.is_number_integer()) {
    if (value.get<long long>() == 2) return LogBase::two;
    if (value.get<long long>() == 10) return LogBase::ten;
  } else if (value.is_number_float()) {
    if (value.get<double>() == 2.0) return LogBase::two;
    if (value.get<double>() == 10.0) return LogBase::ten;
  } else if (value.is_string() && value.get<std::string>() == "e") {
    return LogBase::e;
  }
  throw ValidationError("settings.base must be 2, \"e\" or 10");
}

}  // namespace

const RandomVariable& SystemFile::variable(std::string_view name) const {
  for (const RandomVariable& v : variables) {
    if (v.name() == name) return v;
  }
  throw ValidationError("no variable named '" + std::string(name) + "'");
}

std::vector<std::string> SystemFile::names() const {
  std::vector<std::string> out;
  for (const RandomVariable& v : variables) out.push_back(v.name());
  return out;
}

Bindings SystemFile::bindings() const {
  Bindings out;
  for (const RandomVariable& v : variables) out.emplace(v.name(), v);
  return out;
}

SystemFile parse_system(std::string_view json_text, const LoadOverrides& overrides) {
  Json doc;
  try {
    doc = Json::parse(json_text);
  } catch (const Json::parse_error& e) {
    throw ValidationError(std::string("system file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ValidationError("system file must be a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "outcomes" && key != "variables" && key != "settings") {
      throw ValidationError("unknown top-level key '" + key + "'");
    }
  }

  SpaceOptions options;
  options.max_outcomes = overrides.max_outcomes;
  if (doc.contains("settings")) {
    const Json& settings = doc["settings"];
    if (!settings.is_object()) throw ValidationError("settings must be an object");
    for (const auto& [key, value] : settings.items()) {
      if (key == "base") {
        options.base = parse_base(value);
      } else if (key == "tolerance") {
        if (!value.is_number()) throw ValidationError("settings.tolerance must be a number");
        options.tolerance = value.get<double>();
      } else if (key == "allow_zero") {
        if (!value.is_boolean()) throw ValidationError("settings.allow_zero must be a boolean");
        options.allow_zero = value.get<bool>();
      } else {
        throw ValidationError("unknown settings key '" + key + "'");
      }
    }
  }
  if (overrides.base) options.base = *overrides.base;
  if (overrides.allow_zero) options.allow_zero = true;

  if (!doc.contains("outcomes") || !doc["outcomes"].is_array()) {
    throw ValidationError("'outcomes' must be an array");
  }
  std::vector<Outcome> outcomes;
  for (const Json& entry : doc["outcomes"]) {
    if (!entry.is_object() || !entry.contains("id") || !entry.contains("p") ||
        entry.size() != 2) {
      throw ValidationError("each outcome must be an object {\"id\": string, \"p\": number}");
    }
    if (!entry["id"].is_string()) throw ValidationError("outcome id must be a string");
    if (!entry["p"].is_number()) throw ValidationError("outcome p must be a number");
    outcomes.push_back({entry["id"].get<std::string>(), entry["p"].get<double>()});
  }
  OutcomeSpace space = OutcomeSpace::create(std::move(outcomes), options);

  if (!doc.contains("variables") || !doc["variables"].is_object()) {
    throw ValidationError("'variables' must be an object mapping names to partitions");
  }
  std::vector<RandomVariable> variables;
  for (const auto& [name, parts_json] : doc["variables"].items()) {
    if (name.empty()) throw ValidationError("variable names must be nonempty");
    if (!parts_json.is_array()) {
      throw ValidationError("variable '" + name + "' must be an array of arrays of ids");
    }
    std::vector<std::vector<std::size_t>> parts;
    for (const Json& part_json : parts_json) {
      if (!part_json.is_array()) {
        throw ValidationError("variable '" + name + "' must be an array of arrays of ids");
      }
      auto& part = parts.emplace_back();
      for (const Json& id : part_json) {
        if (!id.is_string()) throw ValidationError("variable '" + name + "' lists a non-string id");
        const auto index = space.index_of(id.get<std::string>());
        if (!index) {
          throw ValidationError("variable '" + name + "' references unknown outcome '" +
                                id.get<std::string>() + "'");
        }
        part.push_back(*index);
      }
    }
    variables.push_back(RandomVariable::from_parts(name, std::move(parts), space.size()));
  }
  return SystemFile{std::move(space), std::move(variables)};
}

SystemFile load_system(const std::filesystem::path& path, const LoadOverrides& overrides) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read system file '" + path.string() + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_system(text.str(), overrides);
}

}  // namespace logdecomp::cli

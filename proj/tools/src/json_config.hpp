#pragma once

#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

namespace sispread::cli {

/// CLI11 config reader/writer for JSON objects keyed by long option names.
/// Top-level keys apply to `section` (the subcommand being run); a nested
/// object named after the section is read the same way and other nested
/// objects are ignored. Values may be strings, numbers, booleans or arrays.
class JsonConfig : public CLI::Config {
 public:
  std::string section;

  std::string to_config(const CLI::App* app, bool default_also, bool, std::string) const override {
    return to_json(app, default_also).dump(2) + "\n";
  }

  std::vector<CLI::ConfigItem> from_config(std::istream& input) const override {
    nlohmann::json j;
    try {
      input >> j;
    } catch (const nlohmann::json::exception& e) {
      throw CLI::ConversionError(std::string("invalid JSON config: ") + e.what());
    }
    if (!j.is_object()) throw CLI::ConversionError("JSON config must be an object");
    std::vector<CLI::ConfigItem> items;
    read_object(j, items);
    return items;
  }

  static nlohmann::json to_json(const CLI::App* app, bool default_also) {
    nlohmann::json j = nlohmann::json::object();
    for (const CLI::Option* opt : app->get_options()) {
      if (opt->get_lnames().empty() || !opt->get_configurable()) continue;
      const std::string& name = opt->get_lnames().front();
      if (opt->get_expected_max() == 0) {
        // Flag.
        if (opt->count() > 0) {
          j[name] = opt->as<bool>();
        } else if (default_also) {
          j[name] = false;
        }
      } else if (opt->count() > 0) {
        const auto& results = opt->results();
        if (opt->get_expected_max() > 1) {
          j[name] = results;
        } else {
          j[name] = results.back();
        }
      } else if (default_also && !opt->get_default_str().empty()) {
        j[name] = default_value(opt);
      }
    }
    return j;
  }

 private:
  void read_object(const nlohmann::json& j, std::vector<CLI::ConfigItem>& items) const {
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (it->is_object()) {
        if (it.key() == section) read_object(*it, items);
        continue;
      }
      CLI::ConfigItem item;
      if (!section.empty()) item.parents = {section};
      item.name = it.key();
      if (it->is_array()) {
        for (const auto& v : *it) item.inputs.push_back(scalar(item.name, v));
      } else {
        item.inputs.push_back(scalar(item.name, *it));
      }
      items.push_back(std::move(item));
    }
  }

  // Vector defaults are rendered by CLI11 as "[a,b]".
  static nlohmann::json default_value(const CLI::Option* opt) {
    std::string text = opt->get_default_str();
    if (opt->get_expected_max() <= 1 || text.size() < 2 || text.front() != '[' || text.back() != ']') return text;
    nlohmann::json list = nlohmann::json::array();
    std::stringstream items(text.substr(1, text.size() - 2));
    for (std::string item; std::getline(items, item, ',');) list.push_back(item);
    return list;
  }

  static std::string scalar(const std::string& key, const nlohmann::json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_number()) return v.dump();
    throw CLI::ConversionError("unsupported value for '" + key + "'");
  }
};

}  // namespace sispread::cli

#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>

#include "json.hpp"

#include "vrpstw/gen.hpp"
#include "vrpstw/model.hpp"
#include "vrpstw/router.hpp"

namespace vrpstw::io {

/// Malformed input. `offset` is the byte position for syntax errors.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::optional<std::size_t> offset = std::nullopt)
      : std::runtime_error(what), offset_(offset) {}
  std::optional<std::size_t> offset() const { return offset_; }

 private:
  std::optional<std::size_t> offset_;
};

/// Instance plus the generator settings it came from, when known.
struct InstanceFile {
  Instance instance;
  std::optional<GenConfig> generator;
};

nlohmann::json to_json(const GenConfig& config);
GenConfig gen_config_from_json(const nlohmann::json& j);

nlohmann::json to_json(const InstanceFile& file);
InstanceFile instance_from_json(const nlohmann::json& j);

/// Schedules reference customers by id.
nlohmann::json to_json(const Schedule& schedule, const Instance& instance);
Schedule schedule_from_json(const nlohmann::json& j, const Instance& instance);

nlohmann::json to_json(const Tour& tour, const Instance& instance);
Tour tour_from_json(const nlohmann::json& j, const Instance& instance);

nlohmann::json to_json(const RoutingResult& result, const Instance& instance);

/// {"customers": [ids...]} -> customer indices.
std::vector<CustomerIndex> cluster_from_json(const nlohmann::json& j, const Instance& instance);

/// Sorted keys, two-space indent, trailing newline.
std::string canonical(const nlohmann::json& j);

/// Parses text; syntax errors become ParseError with the byte offset.
nlohmann::json parse(const std::string& text);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& text);

InstanceFile load_instance(const std::filesystem::path& path);
void save_instance(const std::filesystem::path& path, const InstanceFile& file);

}  // namespace vrpstw::io

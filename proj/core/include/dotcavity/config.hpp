#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "dotcavity/units.hpp"

namespace dotcavity {

/// Plain `key = value` configuration with `#` comments. Unknown keys are
/// rejected against the caller's allowed set; dimensional values must carry
/// a unit suffix (enforced when read through quantity accessors).
class RunConfig {
 public:
  RunConfig() = default;

  static RunConfig parse(std::string_view text, std::span<const std::string_view> allowed_keys);
  static RunConfig load_file(const std::filesystem::path& path,
                             std::span<const std::string_view> allowed_keys);

  bool has(std::string_view key) const;
  std::string raw(std::string_view key) const;

  Quantity quantity(std::string_view key) const;
  double scalar_value(std::string_view key) const;
  long integer(std::string_view key) const;

  const std::map<std::string, std::string>& entries() const { return entries_; }

 private:
  std::map<std::string, std::string> entries_;
};

}  // namespace dotcavity

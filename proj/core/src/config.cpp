#include "dotcavity/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace dotcavity {

namespace {

std::string_view trim(std::string_view s) {
  size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

}  // namespace

RunConfig RunConfig::parse(std::string_view text, std::span<const std::string_view> allowed_keys) {
  RunConfig config;
  size_t line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    const size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    if (const size_t hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const size_t eq = line.find('=');
    if (eq == std::string_view::npos)
      throw std::invalid_argument("config line " + std::to_string(line_no) +
                                  ": expected `key = value`");
    const std::string key(trim(line.substr(0, eq)));
    const std::string value(trim(line.substr(eq + 1)));
    if (key.empty() || value.empty())
      throw std::invalid_argument("config line " + std::to_string(line_no) +
                                  ": empty key or value");
    if (std::find(allowed_keys.begin(), allowed_keys.end(), key) == allowed_keys.end())
      throw std::invalid_argument("config line " + std::to_string(line_no) +
                                  ": unknown key '" + key + "'");
    config.entries_[key] = value;
  }
  return config;
}

RunConfig RunConfig::load_file(const std::filesystem::path& path,
                               std::span<const std::string_view> allowed_keys) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), allowed_keys);
}

bool RunConfig::has(std::string_view key) const {
  return entries_.find(std::string(key)) != entries_.end();
}

std::string RunConfig::raw(std::string_view key) const {
  const auto it = entries_.find(std::string(key));
  if (it == entries_.end())
    throw std::invalid_argument("config key '" + std::string(key) + "' not set");
  return it->second;
}

Quantity RunConfig::quantity(std::string_view key) const { return parse_quantity(raw(key)); }

double RunConfig::scalar_value(std::string_view key) const {
  return require_scalar(parse_quantity(raw(key)), key);
}

long RunConfig::integer(std::string_view key) const {
  const std::string text = raw(key);
  long value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw std::invalid_argument("config key '" + std::string(key) + "': expected an integer");
  return value;
}

}  // namespace dotcavity

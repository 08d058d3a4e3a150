#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace rpv {

// One "[kind id]" record of key = value lines.
struct Block {
  std::string kind;
  std::string id;
  int line = 0;
  std::vector<std::pair<std::string, std::string>> fields;

  bool has(std::string_view key) const;
  // Throws ParseError naming the block when the key is missing.
  const std::string& get(std::string_view key) const;
  std::string get_or(std::string_view key, std::string fallback) const;
};

// '#' starts a comment line. Values run to end of line, trimmed.
std::vector<Block> parse_blocks(std::string_view text);
std::vector<Block> read_blocks(const std::string& path);
std::string write_blocks(const std::vector<Block>& blocks);

std::string read_file(const std::string& path);
std::string trim(std::string_view s);
std::vector<std::string> split(std::string_view s, char sep);

// Env override, then the source tree data directory, then the install prefix.
std::string data_path(const std::string& file, const char* env_var);

}  // namespace rpv

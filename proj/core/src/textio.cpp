#include "rpv/textio.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "rpv/errors.hpp"

namespace rpv {

bool Block::has(std::string_view key) const {
  for (const auto& [k, v] : fields)
    if (k == key) return true;
  return false;
}

const std::string& Block::get(std::string_view key) const {
  for (const auto& [k, v] : fields)
    if (k == key) return v;
  throw ParseError("[" + kind + " " + id + "] (line " + std::to_string(line) + "): missing key '" +
                   std::string(key) + "'");
}

std::string Block::get_or(std::string_view key, std::string fallback) const {
  for (const auto& [k, v] : fields)
    if (k == key) return v;
  return fallback;
}

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::vector<Block> parse_blocks(std::string_view text) {
  std::vector<Block> out;
  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw ParseError("line " + std::to_string(lineno) + ": unterminated header");
      std::string head = trim(std::string_view(line).substr(1, line.size() - 2));
      auto sp = head.find(' ');
      if (sp == std::string::npos) throw ParseError("line " + std::to_string(lineno) + ": header needs kind and id");
      out.push_back(Block{head.substr(0, sp), trim(std::string_view(head).substr(sp + 1)), lineno, {}});
      continue;
    }
    auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError("line " + std::to_string(lineno) + ": expected key = value");
    if (out.empty()) throw ParseError("line " + std::to_string(lineno) + ": field outside a record");
    out.back().fields.emplace_back(trim(std::string_view(line).substr(0, eq)),
                                   trim(std::string_view(line).substr(eq + 1)));
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::vector<Block> read_blocks(const std::string& path) { return parse_blocks(read_file(path)); }

std::string write_blocks(const std::vector<Block>& blocks) {
  std::string out;
  for (const auto& b : blocks) {
    out += "[" + b.kind + " " + b.id + "]\n";
    for (const auto& [k, v] : b.fields) out += k + " = " + v + "\n";
    out += "\n";
  }
  return out;
}

std::string data_path(const std::string& file, const char* env_var) {
  if (env_var) {
    if (const char* e = std::getenv(env_var); e && *e) return e;
  }
  namespace fs = std::filesystem;
  fs::path src = fs::path(RPV_DATA_DIR) / file;
  if (fs::exists(src)) return src.string();
  return (fs::path(RPV_INSTALL_DATA_DIR) / file).string();
}

}  // namespace rpv

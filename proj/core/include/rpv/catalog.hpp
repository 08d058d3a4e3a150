#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rpv/transforms.hpp"
#include "rpv/translate.hpp"

namespace rpv {

// "source:rule@x0", the rule may carry the ":inv" suffix.
struct CertRef {
  std::string source;
  std::string rule;
  Rational x0;

  static CertRef parse(std::string_view text);
  std::string str() const;
};

struct CatalogEntry {
  SeriesSpec spec;
  std::vector<std::string> tags;  // R, WZ, modular, new, uncertified, ...
  std::string printed;            // the formula as listed, ASCII
  std::string note;               // discrepancy note, empty if none
  std::optional<CertRef> cert;

  bool has_tag(std::string_view t) const;
};

std::vector<CatalogEntry> parse_catalog(std::string_view text);
// Throws ParseError or InvariantViolation naming the entry.
std::vector<CatalogEntry> load_catalog(const std::string& path);
// RPV_CATALOG, else the shipped file.
std::string default_catalog_path();
const CatalogEntry& find_entry(const std::vector<CatalogEntry>& entries, std::string_view id);

// Rebuilds the entry's certificate from its source entry.
Certificate certify(const CatalogEntry& e, const std::vector<CatalogEntry>& all, const std::vector<TransformRule>& rules);

enum class Verdict { Pass, Fail, Uncertified };
std::string to_string(Verdict v);

struct EntryReport {
  std::string id;
  Status status = Status::NumericOnly;
  Verdict verdict = Verdict::Fail;
  bool summed = false;
  std::string computed;  // sum, truncated decimal
  std::string target;    // c/pi, truncated decimal
  long digits_matched = 0;
  bool has_cert = false;
  bool cert_ok = false;
  std::string detail;
};

EntryReport verify_entry(const CatalogEntry& e, const std::vector<CatalogEntry>& all,
                         const std::vector<TransformRule>& rules, long digits);

struct Summary {
  std::vector<EntryReport> reports;  // catalog order
  int passed = 0;
  int failed = 0;
  int uncertified = 0;
  bool ok() const { return failed == 0; }
};

Summary verify_all(const std::vector<CatalogEntry>& entries, const std::vector<TransformRule>& rules, long digits,
                   int jobs = 1);

}  // namespace rpv

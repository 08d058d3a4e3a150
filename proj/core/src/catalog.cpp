#include "rpv/catalog.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <set>
#include <thread>

#include "rpv/errors.hpp"
#include "rpv/pi.hpp"
#include "rpv/textio.hpp"

namespace rpv {

CertRef CertRef::parse(std::string_view text) {
  std::string t = trim(text);
  auto at = t.rfind('@');
  auto colon = t.find(':');
  if (at == std::string::npos || colon == std::string::npos || colon > at)
    throw ParseError("certificate reference must look like source:rule@x0, got '" + t + "'");
  return CertRef{t.substr(0, colon), t.substr(colon + 1, at - colon - 1), Rational::parse(t.substr(at + 1))};
}

std::string CertRef::str() const { return source + ":" + rule + "@" + x0.str(); }

bool CatalogEntry::has_tag(std::string_view t) const {
  return std::find(tags.begin(), tags.end(), t) != tags.end();
}

namespace {

CatalogEntry entry_from_block(const Block& b) {
  CatalogEntry e;
  SeriesSpec& s = e.spec;
  s.id = b.id;
  s.family = CoeffFamily::parse(b.get("family"));
  s.z = Rational::parse(b.get("z"));
  s.a = Rational::parse(b.get("a"));
  s.b = Rational::parse(b.get("b"));
  BigInt m{b.get("c_m")};
  int t = std::stoi(b.get("c_t"));
  if (t != 0 && t != 1) throw InvariantViolation("c_t must be 0 or 1");
  s.c = RadConst(Rational::parse(b.get("c_r")), m, t);
  if (s.c.m() != m && !s.c.is_zero()) throw InvariantViolation("c_m is not squarefree");
  s.status = parse_status(b.get("status"));
  s.note = b.get_or("note", "");
  e.note = s.note;
  e.printed = b.get_or("printed", "");
  for (const auto& tag : split(b.get_or("tags", ""), ','))
    if (!tag.empty()) e.tags.push_back(tag);
  std::string cert = b.get_or("cert", "none");
  if (cert != "none") e.cert = CertRef::parse(cert);

  std::string sv = b.get_or("s", "-");
  auto fs = s.family.s();
  if (sv != "-" && (!fs || Rational::parse(sv) != *fs)) throw InvariantViolation("s does not match the family");
  if (s.c.is_zero()) throw InvariantViolation("c must be nonzero");
  bool outside = classify(s.family, s.z) == Convergence::Outside;
  if (s.status == Status::DivergentCertificate) {
    if (!outside) throw InvariantViolation("divergent-certificate entry lies inside the convergence region");
    if (!e.cert && !e.has_tag("uncertified"))
      throw InvariantViolation("divergent entry needs a certificate or the 'uncertified' tag");
  } else {
    if (outside) throw InvariantViolation("|z| rho >= 1 but status is " + to_string(s.status));
    if (s.c.t() != 0) throw InvariantViolation("convergent entry with imaginary constant");
  }
  return e;
}

}  // namespace

std::vector<CatalogEntry> parse_catalog(std::string_view text) {
  std::vector<CatalogEntry> out;
  std::set<std::string> ids;
  for (const auto& b : parse_blocks(text)) {
    if (b.kind != "entry") throw ParseError("line " + std::to_string(b.line) + ": expected [entry <id>]");
    try {
      if (!ids.insert(b.id).second) throw InvariantViolation("duplicate id");
      out.push_back(entry_from_block(b));
    } catch (const InvariantViolation& e) {
      throw InvariantViolation("entry " + b.id + ": " + e.what());
    } catch (const Error& e) {
      throw ParseError("entry " + b.id + ": " + e.what());
    } catch (const std::invalid_argument& e) {
      throw ParseError("entry " + b.id + ": malformed number");
    }
  }
  for (const auto& e : out)
    if (e.cert && !ids.count(e.cert->source))
      throw InvariantViolation("entry " + e.spec.id + ": certificate source '" + e.cert->source + "' not in catalog");
  return out;
}

std::vector<CatalogEntry> load_catalog(const std::string& path) { return parse_catalog(read_file(path)); }

std::string default_catalog_path() { return data_path("catalog.txt", "RPV_CATALOG"); }

const CatalogEntry& find_entry(const std::vector<CatalogEntry>& entries, std::string_view id) {
  for (const auto& e : entries)
    if (e.spec.id == id) return e;
  throw UnknownId("no catalog entry '" + std::string(id) + "'");
}

Certificate certify(const CatalogEntry& e, const std::vector<CatalogEntry>& all, const std::vector<TransformRule>& rules) {
  if (!e.cert) throw UnknownId("entry " + e.spec.id + " has no certificate");
  const CatalogEntry& src = find_entry(all, e.cert->source);
  Certificate c = translate(src.spec, find_rule(rules, e.cert->rule), e.cert->x0);
  c.derived.id = e.spec.id;
  return c;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Uncertified: return "uncertified";
  }
  return "?";
}

namespace {

long matched_digits(const BigApprox& v, const BigApprox& t, long cap) {
  BigApprox d = v - t;
  BigInt bound = ::abs(d.mant()) + d.err();
  if (bound == 0) return cap;
  double log2_bound = static_cast<double>(mpz_sizeinbase(bound.get_mpz_t(), 2));
  long digits = static_cast<long>(std::floor((static_cast<double>(d.bits()) - log2_bound) * std::log10(2.0)));
  return std::clamp(digits, 0L, cap);
}

}  // namespace

EntryReport verify_entry(const CatalogEntry& e, const std::vector<CatalogEntry>& all,
                         const std::vector<TransformRule>& rules, long digits) {
  EntryReport r;
  r.id = e.spec.id;
  r.status = e.spec.status;
  std::vector<std::string> problems;
  if (e.cert) {
    r.has_cert = true;
    try {
      Certificate c = certify(e, all, rules);
      const SeriesSpec& d = c.derived;
      r.cert_ok = d.family == e.spec.family && d.z == e.spec.z &&
                  projectively_equal(e.spec.a, e.spec.b, e.spec.c, d.a, d.b, d.c);
      if (!r.cert_ok)
        problems.push_back("certificate gives (" + d.a.str() + ", " + d.b.str() + ", " + d.z.str() + ", " + d.c.str() +
                           ")");
    } catch (const Error& ex) {
      problems.push_back(std::string("certificate: ") + ex.what());
    }
  }
  bool numeric_ok = true;
  if (e.spec.status != Status::DivergentCertificate) {
    try {
      long bits = working_bits(digits);
      BigApprox v = eval_numeric(e.spec.family, e.spec.a, e.spec.b, e.spec.z, digits);
      BigApprox t = embed(e.spec.c, bits) * inv_pi_bits(bits);
      r.summed = true;
      long shown = std::min(digits, 60L);
      r.computed = v.to_decimal(shown);
      r.target = t.to_decimal(shown);
      r.digits_matched = matched_digits(v, t, digits + kGuardDigits);
      numeric_ok = agree(v, t, digits);
      if (!numeric_ok) problems.push_back("sum differs from c/pi after " + std::to_string(r.digits_matched) + " digits");
    } catch (const Error& ex) {
      numeric_ok = false;
      problems.push_back(ex.what());
    }
    r.verdict = numeric_ok && (!r.has_cert || r.cert_ok) ? Verdict::Pass : Verdict::Fail;
  } else if (r.has_cert) {
    r.verdict = r.cert_ok ? Verdict::Pass : Verdict::Fail;
  } else {
    r.verdict = Verdict::Uncertified;
    problems.push_back("no certificate chain");
  }
  for (const auto& p : problems) r.detail += (r.detail.empty() ? "" : "; ") + p;
  return r;
}

Summary verify_all(const std::vector<CatalogEntry>& entries, const std::vector<TransformRule>& rules, long digits,
                   int jobs) {
  Summary s;
  s.reports.resize(entries.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < entries.size(); i = next++) s.reports[i] = verify_entry(entries[i], entries, rules, digits);
  };
  int n = std::max(1, std::min<int>(jobs, static_cast<int>(entries.size())));
  std::vector<std::thread> pool;
  for (int i = 1; i < n; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& r : s.reports) {
    if (r.verdict == Verdict::Pass) ++s.passed;
    else if (r.verdict == Verdict::Fail) ++s.failed;
    else ++s.uncertified;
  }
  return s;
}

}  // namespace rpv

#include "cli.hpp"

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "rpv/binsplit.hpp"
#include "rpv/catalog.hpp"
#include "rpv/errors.hpp"
#include "rpv/pi.hpp"
#include "rpv/special.hpp"
#include "rpv/textio.hpp"
#include "rpv/transforms.hpp"
#include "rpv/translate.hpp"

namespace rpv::cli {
namespace {

using nlohmann::json;

struct RunConfig {
  long digits = 50;
  int order = 64;
  std::string catalog;
  bool json_output = false;
  int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
};

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<CatalogEntry> catalog_of(const RunConfig& cfg) {
  return load_catalog(cfg.catalog.empty() ? default_catalog_path() : cfg.catalog);
}

void common_flags(CLI::App* sub, RunConfig& cfg) {
  sub->add_flag("--json", cfg.json_output, "Machine-readable report");
  sub->add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);
  sub->add_option("--catalog", cfg.catalog, "Catalog file (default: RPV_CATALOG or the shipped file)");
}

int emit(std::ostream& out, const RunConfig& cfg, const json& j, const std::string& text, bool ok) {
  if (cfg.json_output)
    out << j.dump(2) << "\n";
  else
    out << text;
  return ok ? kPass : kCheckFailed;
}

std::string sci(long double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15Le", v);
  return buf;
}

json spec_json(const SeriesSpec& s) {
  return json{{"id", s.id},         {"family", s.family.str()}, {"z", s.z.str()},
              {"a", s.a.str()},     {"b", s.b.str()},           {"c", s.c.str()},
              {"status", to_string(s.status)}};
}

// verify [--id ID] --digits D
int cmd_verify(const RunConfig& cfg, const std::vector<std::string>& ids, std::ostream& out) {
  auto entries = catalog_of(cfg);
  const auto& rules = rule_catalog();
  Summary sum;
  if (ids.empty()) {
    sum = verify_all(entries, rules, cfg.digits, cfg.jobs);
  } else {
    for (const auto& id : ids) {
      auto r = verify_entry(find_entry(entries, id), entries, rules, cfg.digits);
      sum.reports.push_back(r);
      (r.verdict == Verdict::Pass ? sum.passed : r.verdict == Verdict::Fail ? sum.failed : sum.uncertified)++;
    }
  }
  json arr = json::array();
  std::ostringstream text;
  for (const auto& r : sum.reports) {
    arr.push_back(json{{"id", r.id},
                       {"status", to_string(r.status)},
                       {"verdict", to_string(r.verdict)},
                       {"summed", r.summed},
                       {"computed", r.computed},
                       {"target", r.target},
                       {"digits_matched", r.digits_matched},
                       {"certificate", r.has_cert ? (r.cert_ok ? "ok" : "mismatch") : "none"},
                       {"detail", r.detail}});
    text << r.id << "  " << to_string(r.verdict) << "  " << to_string(r.status);
    if (r.summed) text << "  digits=" << r.digits_matched;
    if (r.has_cert) text << "  cert=" << (r.cert_ok ? "ok" : "mismatch");
    if (!r.detail.empty()) text << "  " << r.detail;
    text << "\n";
  }
  text << "passed " << sum.passed << ", failed " << sum.failed << ", uncertified " << sum.uncertified << " at "
       << cfg.digits << " digits\n";
  json j{{"command", "verify"},    {"digits", cfg.digits},        {"entries", arr},
         {"passed", sum.passed},   {"failed", sum.failed},        {"uncertified", sum.uncertified},
         {"ok", sum.ok()}};
  return emit(out, cfg, j, text.str(), sum.ok());
}

// rules verify --order N [--rule ID]
int cmd_rules_verify(const RunConfig& cfg, const std::string& rule_id, std::ostream& out) {
  std::vector<TransformRule> rules;
  if (rule_id.empty())
    rules = rule_catalog();
  else
    rules.push_back(find_rule(rule_catalog(), rule_id));
  bool ok = true;
  json arr = json::array();
  std::ostringstream text;
  for (const auto& r : rules) {
    CheckResult c = verify_rule_formal(r, cfg.order);
    ok = ok && c.pass;
    bool caveat = r.validity_note.find("branch") != std::string::npos;
    arr.push_back(json{{"id", r.id},
                       {"pass", c.pass},
                       {"first_mismatch", c.first_mismatch},
                       {"note", r.validity_note},
                       {"branch_caveat", caveat}});
    text << r.id << "  " << (c.pass ? "pass" : "FAIL at index " + std::to_string(c.first_mismatch));
    if (caveat) text << "  caveat: " << r.validity_note;
    text << "\n";
  }
  text << rules.size() << " rules at order " << cfg.order << (ok ? ", all pass\n" : ", failures present\n");
  json j{{"command", "rules verify"}, {"order", cfg.order}, {"rules", arr}, {"ok", ok}};
  return emit(out, cfg, j, text.str(), ok);
}

json cert_json(const Certificate& c) {
  return json{{"source", spec_json(c.source)},
              {"rule", c.rule_id},
              {"x0", c.x0.str()},
              {"lambda", c.theta.lambda.str()},
              {"mu", c.theta.mu.str()},
              {"nu", c.theta.nu.str()},
              {"B", c.theta.B.str()},
              {"derived", spec_json(c.derived)},
              {"branch", c.branch_note},
              {"text", certificate_text(c)}};
}

struct TranslateArgs {
  std::string source, rule, x0, target_z, replay;
};

int cmd_translate(const RunConfig& cfg, const TranslateArgs& a, std::ostream& out) {
  const auto& rules = rule_catalog();
  if (!a.replay.empty()) {
    auto certs = parse_certificates(read_file(a.replay));
    bool ok = !certs.empty();
    json arr = json::array();
    std::ostringstream text;
    for (const auto& c : certs) {
      bool r = replay(c, rules);
      ok = ok && r;
      arr.push_back(json{{"derived", c.derived.id}, {"replay", r}});
      text << c.derived.id << "  replay " << (r ? "pass" : "FAIL") << "\n";
    }
    json j{{"command", "translate"}, {"replayed", arr}, {"ok", ok}};
    return emit(out, cfg, j, text.str(), ok);
  }
  if (a.source.empty() || a.rule.empty()) throw Usage("translate needs --source and --rule (or --replay)");
  if (a.x0.empty() == a.target_z.empty()) throw Usage("translate needs exactly one of --x0 and --target-z");
  auto entries = catalog_of(cfg);
  const SeriesSpec& src = find_entry(entries, a.source).spec;
  TransformRule rule = find_rule(rules, a.rule);
  std::vector<Rational> points;
  json roots_note;
  if (!a.x0.empty()) {
    points.push_back(Rational::parse(a.x0));
  } else {
    RootReport rr = solve_for_x(rule.C, Rational::parse(a.target_z));
    points = rr.roots;
    roots_note = json{{"roots", json::array()}, {"non_rational_degree", rr.non_rational}};
    for (const auto& r : rr.roots) roots_note["roots"].push_back(r.str());
  }
  json arr = json::array();
  std::ostringstream text;
  bool ok = !points.empty();
  if (points.empty()) text << "no rational x0 with C(x0) = " << a.target_z << "\n";
  for (const auto& x0 : points) {
    try {
      Certificate c = translate(src, rule, x0);
      arr.push_back(cert_json(c));
      text << certificate_text(c) << "\n";
    } catch (const Error& e) {
      ok = false;
      arr.push_back(json{{"x0", x0.str()}, {"error", e.what()}});
      text << "x0 = " << x0.str() << ": refused: " << e.what() << "\n";
    }
  }
  json j{{"command", "translate"}, {"certificates", arr}, {"ok", ok}};
  if (!roots_note.is_null()) j["solve"] = roots_note;
  return emit(out, cfg, j, text.str(), ok);
}

// digits --id ID --digits D [--out FILE] [--check]
int cmd_digits(const RunConfig& cfg, const std::string& id, const std::string& out_file, bool check,
               std::ostream& out) {
  auto entries = catalog_of(cfg);
  const SeriesSpec& s = find_entry(entries, id).spec;
  std::string d = pi_digits(s, cfg.digits, cfg.jobs);
  bool ok = true;
  json j{{"command", "digits"}, {"id", id}, {"digits", cfg.digits}, {"terms", terms_for_digits(s, cfg.digits)}};
  if (check) {
    ok = d == pi_oracle(cfg.digits).to_decimal(cfg.digits - 1);
    j["check"] = ok;
  }
  std::ostringstream text;
  if (!out_file.empty()) {
    std::ofstream f(out_file);
    if (!f) throw Usage("cannot write " + out_file);
    f << d << "\n";
    j["out"] = out_file;
    text << "wrote " << cfg.digits << " digits from " << id << " to " << out_file << "\n";
  } else {
    j["value"] = d;
    text << d << "\n";
  }
  if (check) text << "oracle check " << (ok ? "pass" : "FAIL") << "\n";
  j["ok"] = ok;
  return emit(out, cfg, j, text.str(), ok);
}

// limit --id ID --tolerance E
int cmd_limit(const RunConfig& cfg, const std::string& id, const std::string& tol_text, std::ostream& out) {
  long double tol = 0;
  try {
    tol = std::stold(tol_text);
  } catch (const std::exception&) {
    throw Usage("bad tolerance '" + tol_text + "'");
  }
  if (!(tol > 0)) throw Usage("tolerance must be positive");
  LimitOptions opts;
  opts.jobs = cfg.jobs;
  LimitReport r = limit_eval(find_limit(id), tol, opts);
  json ladder = json::array();
  for (long double v : r.ladder) ladder.push_back(sci(v));
  json j{{"command", "limit"}, {"id", id},         {"value", sci(r.value)}, {"target", sci(r.target)},
         {"error", sci(r.error)}, {"levels", r.levels}, {"ladder", ladder},   {"ok", r.pass}};
  std::ostringstream text;
  text << id << "  value " << sci(r.value) << "  target " << sci(r.target) << "  error " << sci(r.error) << "  levels "
       << r.levels << "  " << (r.pass ? "pass" : "FAIL") << "\n";
  return emit(out, cfg, j, text.str(), r.pass);
}

// sun --check {2.11|4.14|s2-identity|rogers} --digits D
int cmd_sun(const RunConfig& cfg, const std::string& name, int n_max, std::ostream& out) {
  std::ostringstream text;
  json j{{"command", "sun"}, {"check", name}};
  bool ok = false;
  if (name == "s2-identity") {
    S2Report r = sun_S2_identity(n_max);
    ok = r.pass;
    j["n_max"] = n_max;
    j["first_fail"] = r.first_fail;
    j["printed_definition_first_mismatch"] = r.printed_first_mismatch;
    text << "S2 convolution = 3F2 form = 4F3 form for n <= " << n_max << ": "
         << (ok ? "pass" : "FAIL at n = " + std::to_string(r.first_fail)) << "\n";
    if (r.printed_first_mismatch >= 0)
      text << "printed single-sum definition first differs at n = " << r.printed_first_mismatch << "\n";
  } else {
    SunReport r;
    if (name == "2.11")
      r = sun_2_11(cfg.digits);
    else if (name == "4.14")
      r = sun_4_14(cfg.digits);
    else if (name == "rogers")
      r = rogers_domb_check(cfg.digits);
    else
      throw Usage("unknown sun check '" + name + "'");
    ok = r.pass();
    j["digits"] = cfg.digits;
    j["numeric"] = r.numeric;
    j["transport"] = r.transport;
    j["value"] = r.value.to_decimal(cfg.digits);
    j["target"] = r.target.to_decimal(cfg.digits);
    j["detail"] = r.detail;
    text << name << "  numeric " << (r.numeric ? "pass" : "FAIL") << "  transport " << (r.transport ? "pass" : "FAIL")
         << "\n  value  " << r.value.to_decimal(cfg.digits) << "\n  target " << r.target.to_decimal(cfg.digits)
         << "\n  " << r.detail << "\n";
  }
  j["ok"] = ok;
  return emit(out, cfg, j, text.str(), ok);
}

// start --s p/q --digits D
int cmd_start(const RunConfig& cfg, const std::string& s_text, std::ostream& out) {
  Rational s = Rational::parse(s_text);
  if (!(s > Rational(0) && s < Rational(1))) throw Usage("--s must lie strictly between 0 and 1");
  StartReport r = starting_formula(s, cfg.digits);
  json j{{"command", "start"},
         {"s", s.str()},
         {"digits", cfg.digits},
         {"lhs", r.lhs.to_decimal(cfg.digits)},
         {"rhs", r.rhs.to_decimal(cfg.digits)},
         {"exact", r.exact},
         {"ok", r.pass}};
  if (r.c) j["c"] = r.c->str();
  std::ostringstream text;
  text << "s = " << s.str() << "  " << (r.pass ? "pass" : "FAIL") << "\n  sum    " << r.lhs.to_decimal(cfg.digits)
       << "\n  2sin/pi " << r.rhs.to_decimal(cfg.digits) << "\n";
  if (r.c) text << "  c = " << r.c->str() << "\n";
  return emit(out, cfg, j, text.str(), r.pass);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ramanujan-type 1/pi series: verification, translation and digits"};
  app.name("rpv");
  app.require_subcommand(1);
  RunConfig cfg;

  auto* verify = app.add_subcommand("verify", "Sum and certify catalog entries");
  std::vector<std::string> ids;
  verify->add_option("--id", ids, "Entry id (repeatable)");
  verify->add_option("--digits", cfg.digits, "Digits of agreement")->check(CLI::PositiveNumber);
  common_flags(verify, cfg);

  auto* rules = app.add_subcommand("rules", "Transformation rules");
  rules->require_subcommand(1);
  auto* rules_verify = rules->add_subcommand("verify", "Exact coefficient check of rules");
  std::string rule_id;
  rules_verify->add_option("--order", cfg.order, "Series order")->check(CLI::Range(8, 1 << 20));
  rules_verify->add_option("--rule", rule_id, "Single rule id");
  common_flags(rules_verify, cfg);

  auto* tr = app.add_subcommand("translate", "Transport a formula through a rule");
  TranslateArgs targs;
  tr->add_option("--source", targs.source, "Source entry id");
  tr->add_option("--rule", targs.rule, "Rule id, ':inv' for the reverse direction");
  auto* x0_opt = tr->add_option("--x0", targs.x0, "Evaluation point p/q");
  auto* z_opt = tr->add_option("--target-z", targs.target_z, "Solve C(x0) = z for rational x0");
  x0_opt->excludes(z_opt);
  tr->add_option("--replay", targs.replay, "Replay certificates from a file");
  common_flags(tr, cfg);

  auto* dg = app.add_subcommand("digits", "Digits of pi by binary splitting");
  std::string dg_id, dg_out;
  bool dg_check = false;
  dg->add_option("--id", dg_id, "Entry id")->required();
  dg->add_option("--digits", cfg.digits, "Significant digits")->required()->check(CLI::PositiveNumber);
  dg->add_option("--out", dg_out, "Write digits to a file");
  dg->add_flag("--check", dg_check, "Compare with the AGM oracle");
  common_flags(dg, cfg);

  auto* lim = app.add_subcommand("limit", "Extrapolated boundary limits");
  std::string lim_id, lim_tol = "1e-8";
  lim->add_option("--id", lim_id, "Limit id")->required();
  lim->add_option("--tolerance", lim_tol, "Absolute tolerance");
  common_flags(lim, cfg);

  auto* sun = app.add_subcommand("sun", "Sun-type identities");
  std::string sun_name;
  int n_max = 300;
  sun->add_option("--check", sun_name, "2.11, 4.14, s2-identity or rogers")->required();
  sun->add_option("--digits", cfg.digits, "Digits of agreement")->check(CLI::PositiveNumber);
  sun->add_option("--n-max", n_max, "Range for s2-identity")->check(CLI::NonNegativeNumber);
  common_flags(sun, cfg);

  auto* st = app.add_subcommand("start", "Starting formula for s");
  std::string s_text;
  st->add_option("--s", s_text, "s as p/q")->required();
  st->add_option("--digits", cfg.digits, "Digits of agreement")->check(CLI::PositiveNumber);
  common_flags(st, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*verify) return cmd_verify(cfg, ids, out);
    if (*rules_verify) return cmd_rules_verify(cfg, rule_id, out);
    if (*tr) return cmd_translate(cfg, targs, out);
    if (*dg) return cmd_digits(cfg, dg_id, dg_out, dg_check, out);
    if (*lim) return cmd_limit(cfg, lim_id, lim_tol, out);
    if (*sun) return cmd_sun(cfg, sun_name, n_max, out);
    if (*st) return cmd_start(cfg, s_text, out);
  } catch (const Usage& e) {
    err << "rpv: " << e.what() << "\n";
    return kUsage;
  } catch (const UnknownId& e) {
    err << "rpv: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << "rpv: " << e.what() << "\n";
    return kUsage;
  } catch (const InvariantViolation& e) {
    err << "rpv: internal: " << e.what() << "\n";
    return kInternal;
  } catch (const Error& e) {
    err << "rpv: " << e.what() << "\n";
    return kCheckFailed;
  } catch (const std::exception& e) {
    err << "rpv: internal: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}

}  // namespace rpv::cli

// Command line front end: per-n analysis, generator enumeration and
// verification of the embedded fixture tables.
//
// Exit codes: 0 success, 2 wild ramification, 3 factoring budget exhausted,
// 4 verification failure.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lehmer5/errors.hpp"
#include "lehmer5/report.hpp"
#include "lehmer5/verify.hpp"

using namespace lehmer5;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitWild = 2;
constexpr int kExitFactoring = 3;
constexpr int kExitVerification = 4;

std::vector<Int> parse_hints(const std::string& csv) {
  std::vector<Int> hints;
  std::string cur;
  for (char ch : csv + ",") {
    if (ch == ',') {
      if (!cur.empty()) hints.push_back(parse_int(cur));
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      cur += ch;
    }
  }
  return hints;
}

bool parse_range(const std::string& text, long& lo, long& hi) {
  auto pos = text.find("..");
  if (pos == std::string::npos) return false;
  try {
    lo = std::stol(text.substr(0, pos));
    hi = std::stol(text.substr(pos + 2));
  } catch (...) {
    return false;
  }
  return true;
}

int run_analyze(const std::string& n_str, const std::string& hints_csv, long orbit_bound,
                bool as_json, const FactorOptions& fopt) {
  try {
    ReportRecord rec = analyze(parse_int(n_str), parse_hints(hints_csv), orbit_bound, fopt);
    if (as_json)
      std::cout << report_to_json(rec).dump() << "\n";
    else
      std::cout << report_human(rec);
    if (rec.wild) return kExitWild;
    return rec.certified ? kExitOk : kExitVerification;
  } catch (const FactorizationIncomplete& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFactoring;
  }
}

int run_enumerate(const std::string& n_str, const std::string& range,
                  const std::string& hints_csv, bool as_json, const FactorOptions& fopt) {
  long klo = 0, khi = 0;
  if (!range.empty() && !parse_range(range, klo, khi)) {
    std::cerr << "error: --k expects a range like -5..5\n";
    return 1;
  }
  try {
    Int n = parse_int(n_str);
    FieldInvariants inv = compute_invariants(n, parse_hints(hints_csv), fopt);
    if (!inv.tame) {
      ReportRecord rec;
      rec.inv = inv;
      rec.wild = true;
      if (as_json)
        std::cout << report_to_json(rec).dump() << "\n";
      else
        std::cout << report_human(rec);
      return kExitWild;
    }
    FieldContext ctx{n};
    NibGenerator gen = build_nib_generator(ctx, inv);
    bool all_ok = gen.certified;
    enumerate(ctx, inv, gen, klo, khi,
              [&](const GroupRingUnit& u, const FieldElement& x, bool ok) {
                all_ok = all_ok && ok;
                if (as_json) {
                  nlohmann::json j;
                  j["n"] = to_string(n);
                  j["sign"] = u.sign;
                  j["ell"] = u.ell;
                  j["k"] = u.k;
                  nlohmann::json coords = nlohmann::json::array();
                  for (const Rat& c : x.c) coords.push_back(to_string(c));
                  j["coords"] = coords;
                  j["certified"] = ok;
                  std::cout << j.dump() << "\n";
                } else {
                  std::printf("(%c, %d, %+ld)  %s  %s\n", u.sign > 0 ? '+' : '-', u.ell, u.k,
                              ok ? "certified" : "NOT-CERTIFIED", x.str().c_str());
                }
              });
    return all_ok ? kExitOk : kExitVerification;
  } catch (const FactorizationIncomplete& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFactoring;
  }
}

int run_verify_table(const std::string& only, long orbit_bound, const std::string& fixtures_path,
                     bool as_json) {
  Fixtures loaded;
  const Fixtures* fx = &fixtures();
  if (!fixtures_path.empty()) {
    loaded = load_fixtures_file(fixtures_path);
    fx = &loaded;
  }
  auto results = run_verification(*fx, only, orbit_bound);
  int passed = 0;
  for (const RowResult& r : results) {
    if (as_json) {
      nlohmann::json j;
      j["label"] = r.label;
      j["pass"] = r.pass;
      j["detail"] = r.detail;
      if (r.witness)
        j["witness"] = {{"sign", r.witness->sign}, {"ell", r.witness->ell}, {"k", r.witness->k}};
      std::cout << j.dump() << "\n";
    } else {
      std::printf("%s  %-28s %s\n", r.pass ? "PASS" : "FAIL", r.label.c_str(),
                  r.detail.c_str());
    }
    if (r.pass) ++passed;
  }
  if (!as_json)
    std::printf("%d/%zu fixture rows verified\n", passed, results.size());
  if (results.empty()) {
    std::cerr << "error: no fixture row matches --only " << only << "\n";
    return kExitVerification;
  }
  return passed == static_cast<int>(results.size()) ? kExitOk : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact invariants, integral bases and normal integral bases for "
               "the cyclic quintic fields K_n of Emma Lehmer's parametric polynomial"};
  app.require_subcommand(1);

  std::string n_str, hints_csv, range, only, fixtures_path;
  long orbit_bound = 10;
  bool as_json = false;
  FactorOptions fopt;

  CLI::App* analyze_cmd =
      app.add_subcommand("analyze", "invariants, integral basis and NIB generator for one n");
  analyze_cmd->add_option("n", n_str, "parameter n of f_n")->required();
  analyze_cmd->add_option("--factor-hint", hints_csv, "comma separated primes dividing Delta_n");
  analyze_cmd->add_option("--orbit-bound", orbit_bound, "max |k| for fixture orbit matching");
  analyze_cmd->add_flag("--json", as_json, "line-delimited JSON output");
  analyze_cmd->add_option("--trial-bound", fopt.trial_bound, "trial division bound");
  analyze_cmd->add_option("--rho-budget", fopt.rho_budget, "iteration budget for rho factoring");

  CLI::App* enum_cmd = app.add_subcommand("enumerate", "all NIB generators over a k-range");
  enum_cmd->add_option("n", n_str, "parameter n of f_n")->required();
  enum_cmd->add_option("--k", range, "k range, e.g. -5..5")->required();
  enum_cmd->add_option("--factor-hint", hints_csv, "comma separated primes dividing Delta_n");
  enum_cmd->add_flag("--json", as_json, "line-delimited JSON output");
  enum_cmd->add_option("--trial-bound", fopt.trial_bound, "trial division bound");
  enum_cmd->add_option("--rho-budget", fopt.rho_budget, "iteration budget for rho factoring");

  CLI::App* verify_cmd =
      app.add_subcommand("verify-table", "re-verify the embedded published tables");
  verify_cmd->add_option("--only", only, "restrict to rows matching a token, e.g. n=44");
  verify_cmd->add_option("--orbit-bound", orbit_bound, "max |k| for orbit matching");
  verify_cmd->add_option("--fixtures", fixtures_path, "fixtures JSON file (default: embedded)");
  verify_cmd->add_flag("--json", as_json, "line-delimited JSON output");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(analyze_cmd))
      return run_analyze(n_str, hints_csv, orbit_bound, as_json, fopt);
    if (app.got_subcommand(enum_cmd))
      return run_enumerate(n_str, range, hints_csv, as_json, fopt);
    return run_verify_table(only, orbit_bound, fixtures_path, as_json);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

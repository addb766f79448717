// scrollcalc: exact degree/genus calculator for incidence scrolls.
//
// Subcommands: invariants, fundamental, catalog, families, crosscheck.
// Exit codes: 0 ok, 1 cross-check disagreement, 2 usage/parse error,
// 3 invalid base, 4 internal consistency fault.

#include <chrono>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "scrolls/classify.hpp"
#include "scrolls/crosscheck.hpp"
#include "scrolls/families.hpp"
#include "scrolls/invariants.hpp"
#include "scrolls/schubert.hpp"
#include "scrolls/tableau.hpp"

namespace {

using json = nlohmann::json;
using namespace scrolls;

constexpr int kExitOk = 0;
constexpr int kExitDisagreement = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInvalidBase = 3;
constexpr int kExitConsistency = 4;

struct GlobalFlags {
  bool json = false;
  bool timing = false;
  std::string oracle = "pieri";
};

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

// Base grammar: comma-separated dimensions with "k*d" multiplicity sugar,
// e.g. "3*2,1" = three P^2 and one P^1.
std::vector<int> parse_base_spec(const std::string& spec) {
  std::vector<int> dims;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw DomainError("empty item in base spec");
    std::size_t star = item.find('*');
    try {
      if (star == std::string::npos) {
        dims.push_back(std::stoi(item));
      } else {
        int count = std::stoi(item.substr(0, star));
        int dim = std::stoi(item.substr(star + 1));
        if (count < 1) throw DomainError("multiplicity must be at least 1");
        for (int c = 0; c < count; ++c) dims.push_back(dim);
      }
    } catch (const std::invalid_argument&) {
      throw DomainError("cannot parse base item '" + item + "'");
    } catch (const std::out_of_range&) {
      throw DomainError("base item '" + item + "' out of range");
    }
  }
  if (dims.empty()) throw DomainError("base spec is empty");
  return dims;
}

json check_json(const Check& check) {
  return json{{"name", check.name}, {"lhs", check.lhs}, {"rhs", check.rhs}, {"pass", check.pass}};
}

void emit(const json& payload) { std::cout << payload.dump(2) << "\n"; }

int cmd_invariants(const GlobalFlags& flags, int n, const std::string& base_spec) {
  Stopwatch watch;
  IncidenceBase base(n, parse_base_spec(base_spec));
  auto report = validate_base(base);

  json out;
  out["input"] = json{{"command", "invariants"}, {"n", n}, {"base", base.dims()}};
  out["valid"] = report.valid;
  json checks = json::array();
  checks.push_back(json{{"name", "incidence count"},
                        {"lhs", std::to_string(report.lhs)},
                        {"rhs", std::to_string(report.target)},
                        {"pass", report.valid}});

  if (!report.valid) {
    out["degree"] = nullptr;
    out["genus"] = nullptr;
    out["genus_status"] = "unavailable";
    out["checks"] = checks;
    if (flags.json) {
      emit(out);
    } else {
      std::cout << "base " << base.to_string() << " is not an incidence base: "
                << report.lhs << " != " << report.target << "\n";
    }
    return kExitInvalidBase;
  }

  std::optional<Int> pieri;
  std::optional<Int> tableau;
  if (flags.oracle == "pieri" || flags.oracle == "both") pieri = curve_class_degree(base);
  if (flags.oracle == "tableau" || flags.oracle == "both") tableau = count_fillings(base);
  Int degree = pieri ? *pieri : *tableau;
  if (pieri && tableau)
    checks.push_back(json{{"name", "oracle agreement"},
                          {"lhs", to_decimal(*pieri)},
                          {"rhs", to_decimal(*tableau)},
                          {"pass", *pieri == *tableau}});

  auto genus = genus_for_base(base);
  out["degree"] = to_decimal(degree);
  out["genus"] = genus ? json(to_decimal(*genus)) : json(nullptr);
  out["genus_status"] = genus ? "ok" : "unavailable";
  if (!genus)
    out["genus_reason"] =
        "the genus recursion covers bases whose spaces all have dimension between 1 and n-2";
  out["checks"] = checks;
  if (flags.timing) out["timing_ms"] = watch.ms();

  bool all_pass = true;
  for (const auto& c : checks) all_pass = all_pass && c.at("pass").get<bool>();

  if (flags.json) {
    emit(out);
  } else {
    std::cout << "base    " << base.to_string() << "\n";
    std::cout << "valid   yes (" << report.lhs << " = " << report.target << ")\n";
    if (report.hyperplanes)
      std::cout << "note    " << report.hyperplanes << " vacuous hyperplane condition(s)\n";
    std::cout << "degree  " << to_decimal(degree);
    if (pieri && tableau)
      std::cout << "  (pieri " << to_decimal(*pieri) << ", tableau " << to_decimal(*tableau)
                << (*pieri == *tableau ? ", agree" : ", MISMATCH") << ")";
    std::cout << "\n";
    if (genus)
      std::cout << "genus   " << to_decimal(*genus) << "\n";
    else
      std::cout << "genus   unavailable (base has a point or hyperplane-only support)\n";
    if (flags.timing) std::cout << "time    " << watch.ms() << " ms\n";
  }
  if (!all_pass) throw ConsistencyFault("oracle disagreement on " + base.to_string());
  return kExitOk;
}

int cmd_fundamental(const GlobalFlags& flags, int n_min, int n_max) {
  Stopwatch watch;
  json rows = json::array();
  if (!flags.json)
    std::cout << "  n  degree      genus       directrix  pieri-check\n";
  for (int n = n_min; n <= n_max; ++n) {
    auto inv = fundamental_invariants(n);
    IncidenceBase base(n, std::vector<int>(2 * n - 3, n - 2));
    Int pieri = curve_class_degree(base);
    bool pass = pieri == inv.degree;
    if (flags.json) {
      rows.push_back(json{{"n", n},
                          {"degree", to_decimal(inv.degree)},
                          {"genus", to_decimal(inv.genus)},
                          {"directrix", to_decimal(*inv.min_directrix_degree)},
                          {"checks", json::array({json{{"name", "pieri degree"},
                                                       {"lhs", to_decimal(inv.degree)},
                                                       {"rhs", to_decimal(pieri)},
                                                       {"pass", pass}}})}});
    } else {
      std::cout << "  " << n << "  " << to_decimal(inv.degree) << "  " << to_decimal(inv.genus)
                << "  " << to_decimal(*inv.min_directrix_degree) << "  "
                << (pass ? "ok" : "MISMATCH") << "\n";
    }
    if (!pass)
      throw ConsistencyFault("fundamental degree closed form disagrees with Pieri at n=" +
                             std::to_string(n));
  }
  if (flags.json) {
    json out;
    out["input"] = json{{"command", "fundamental"}, {"n_min", n_min}, {"n_max", n_max}};
    out["rows"] = rows;
    if (flags.timing) out["timing_ms"] = watch.ms();
    emit(out);
  } else if (flags.timing) {
    std::cout << "time " << watch.ms() << " ms\n";
  }
  return kExitOk;
}

int cmd_catalog(const GlobalFlags& flags, int n, bool with_invariants) {
  Stopwatch watch;
  auto bases = catalog(n);
  json rows = json::array();
  for (const auto& base : bases) {
    json row;
    row["base"] = base.dims();
    row["label"] = base.to_string();
    if (with_invariants) {
      Int pieri = curve_class_degree(base);
      row["degree"] = to_decimal(pieri);
      if (flags.oracle == "both" || flags.oracle == "tableau") {
        Int tab = count_fillings(base);
        row["tableau_degree"] = to_decimal(tab);
        row["oracles_agree"] = tab == pieri;
      }
      auto genus = genus_for_base(base);
      row["genus"] = genus ? json(to_decimal(*genus)) : json(nullptr);
    }
    rows.push_back(std::move(row));
  }
  if (flags.json) {
    json out;
    out["input"] = json{{"command", "catalog"}, {"n", n}};
    out["count"] = bases.size();
    out["rows"] = rows;
    if (flags.timing) out["timing_ms"] = watch.ms();
    emit(out);
  } else {
    std::cout << bases.size() << " incidence bases in P^" << n << "\n";
    for (const auto& row : rows) {
      std::cout << "  " << row.at("label").get<std::string>();
      if (with_invariants) {
        std::cout << "  d=" << row.at("degree").get<std::string>();
        if (row.contains("oracles_agree"))
          std::cout << (row.at("oracles_agree").get<bool>() ? " (oracles agree)"
                                                            : " (ORACLE MISMATCH)");
        if (!row.at("genus").is_null())
          std::cout << " g=" << row.at("genus").get<std::string>();
      }
      std::cout << "\n";
    }
    if (flags.timing) std::cout << "time " << watch.ms() << " ms\n";
  }
  return kExitOk;
}

json family_row(const FamilyResult& res, const std::string& params) {
  json row;
  row["params"] = params;
  row["base"] = res.base.dims();
  row["label"] = res.base.to_string();
  row["degree"] = to_decimal(res.invariants.degree);
  row["genus"] = to_decimal(res.invariants.genus);
  row["partition_shape"] = res.partition_shape;
  row["consistent"] = res.consistent();
  json checks = json::array();
  for (const auto& check : res.checks) checks.push_back(check_json(check));
  row["checks"] = checks;
  return row;
}

std::string params_label(std::span<const int> h) {
  std::string out = "(";
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(h[i]);
  }
  return out + ")";
}

int cmd_families(const GlobalFlags& flags, const std::string& family, int r, int e, int j,
                 const std::vector<int>& h, bool all_partitions) {
  Stopwatch watch;
  std::vector<std::pair<std::string, FamilyResult>> results;

  auto run_one = [&](std::span<const int> params) {
    if (family == "e0") {
      results.emplace_back(params_label(params), invariants_e0(r, params));
    } else if (family == "enot0") {
      results.emplace_back(params_label(params), invariants_enot0(r, params));
    } else {
      results.emplace_back(params_label(params), invariants_ege1(r, e, j, params));
    }
  };

  if (all_partitions) {
    if (family == "e0") {
      for (const auto& lambda : partitions_of(r - 1)) run_one(e0_params_from_partition(r, lambda));
    } else if (family == "enot0") {
      for (const auto& lambda : partitions_of(2 * r - 1)) {
        if (lambda.parts()[0] > r - 1) continue;
        run_one(enot0_params_from_partition(r, lambda));
      }
    } else {
      for (const auto& lambda : partitions_of(2L * r - e + j - 1)) {
        if (lambda.parts()[0] > r - e) continue;
        run_one(ege1_params_from_partition(r, e, j, lambda));
      }
    }
  } else {
    run_one(h);
  }

  bool all_consistent = true;
  json rows = json::array();
  for (const auto& [params, res] : results) {
    rows.push_back(family_row(res, params));
    all_consistent = all_consistent && res.consistent();
  }

  if (flags.json) {
    json out;
    out["input"] = json{{"command", "families"}, {"family", family}, {"r", r}};
    if (family == "ege1") {
      out["input"]["e"] = e;
      out["input"]["j"] = j;
    }
    out["rows"] = rows;
    if (flags.timing) out["timing_ms"] = watch.ms();
    emit(out);
  } else {
    for (const auto& row : rows) {
      std::cout << row.at("params").get<std::string>() << "  "
                << row.at("label").get<std::string>() << "  d="
                << row.at("degree").get<std::string>() << " g="
                << row.at("genus").get<std::string>()
                << (row.at("partition_shape").get<bool>() ? "" : "  [non-partition]")
                << (row.at("consistent").get<bool>() ? "  checks ok" : "  CHECKS FAIL") << "\n";
    }
    if (flags.timing) std::cout << "time " << watch.ms() << " ms\n";
  }
  if (!all_consistent)
    throw ConsistencyFault("family formula check failed; see the row output");
  return kExitOk;
}

int cmd_crosscheck(const GlobalFlags& flags, const std::string& scope, bool inject_fault) {
  Stopwatch watch;
  auto report = run_crosscheck(scope == "full" ? CrosscheckScope::Full : CrosscheckScope::Quick,
                               inject_fault);
  if (flags.json) {
    json out;
    out["input"] = json{{"command", "crosscheck"}, {"scope", scope}};
    out["checks_run"] = report.total();
    json suites;
    for (const auto& [suite, count] : report.suite_counts) suites[suite] = count;
    out["suites"] = suites;
    json failures = json::array();
    for (const auto& f : report.failures)
      failures.push_back(json{{"suite", f.suite}, {"tuple", f.tuple}, {"lhs", f.lhs},
                              {"rhs", f.rhs}});
    out["failures"] = failures;
    out["pass"] = report.ok();
    if (flags.timing) out["timing_ms"] = watch.ms();
    emit(out);
  } else {
    std::cout << "suite        checks  status\n";
    for (const auto& [suite, count] : report.suite_counts) {
      long bad = 0;
      for (const auto& f : report.failures)
        if (f.suite == suite) ++bad;
      std::cout << "  " << suite << std::string(suite.size() < 11 ? 11 - suite.size() : 1, ' ')
                << count << "  " << (bad == 0 ? "pass" : "FAIL (" + std::to_string(bad) + ")")
                << "\n";
    }
    std::cout << report.total() << " checks";
    if (flags.timing) std::cout << " in " << watch.ms() << " ms";
    std::cout << "\n";
    for (const auto& f : report.failures)
      std::cout << "MISMATCH [" << f.suite << "] " << f.tuple << ": " << f.lhs
                << " != " << f.rhs << "\n";
  }
  return report.ok() ? kExitOk : kExitDisagreement;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"scrollcalc: exact degree and genus of incidence scrolls"};
  app.require_subcommand(1);
  // Long-form help only: the families subcommand uses --h for its parameters.
  app.set_help_flag("--help", "print help");

  GlobalFlags flags;
  app.add_flag("--json", flags.json, "machine-readable output");
  app.add_flag("--timing", flags.timing, "report wall time");
  app.add_option("--oracle", flags.oracle, "degree oracle: pieri, tableau or both")
      ->check(CLI::IsMember({"pieri", "tableau", "both"}))
      ->capture_default_str();

  auto* inv = app.add_subcommand("invariants", "degree/genus of one base configuration");
  inv->fallthrough();
  int inv_n = 0;
  std::string inv_base;
  inv->add_option("--n", inv_n, "ambient projective dimension")->required();
  inv->add_option("--base", inv_base, "base spec, e.g. 3*2,1 for {3 P^2, P^1}")->required();

  auto* fund = app.add_subcommand("fundamental", "fundamental scroll table");
  fund->fallthrough();
  int fund_n = 0, fund_min = 0, fund_max = 0;
  auto* fund_n_opt = fund->add_option("--n", fund_n, "single row");
  fund->add_option("--n-min", fund_min, "first row")->excludes(fund_n_opt);
  fund->add_option("--n-max", fund_max, "last row");

  auto* cat = app.add_subcommand("catalog", "all incidence bases of P^n");
  cat->fallthrough();
  int cat_n = 0;
  bool cat_inv = false;
  cat->add_option("--n", cat_n, "ambient projective dimension (3..8)")->required();
  cat->add_flag("--invariants", cat_inv, "emit degree, oracle agreement and genus per base");

  auto* fam = app.add_subcommand("families", "decomposable-scroll families");
  fam->fallthrough();
  std::string fam_name;
  int fam_r = 0, fam_e = 0, fam_j = 0;
  std::vector<int> fam_h;
  bool fam_all = false;
  fam->add_option("family", fam_name, "e0, enot0 or ege1")
      ->required()
      ->check(CLI::IsMember({"e0", "enot0", "ege1"}));
  fam->add_option("--r", fam_r, "family parameter r")->required();
  fam->add_option("--e", fam_e, "invariant e (ege1 only)");
  fam->add_option("--j", fam_j, "offset j = i2 - i1 (ege1 only)");
  auto* fam_h_opt = fam->add_option("--h", fam_h, "parameter sequence h_1,h_2,...")
                        ->delimiter(',');
  fam->add_flag("--all-partitions", fam_all, "sweep every partition of the family")
      ->excludes(fam_h_opt);

  auto* cross = app.add_subcommand("crosscheck", "run every agreement suite");
  cross->fallthrough();
  std::string cross_scope = "quick";
  bool cross_fault = false;
  cross->add_option("--scope", cross_scope, "quick or full")
      ->check(CLI::IsMember({"quick", "full"}))
      ->capture_default_str();
  cross->add_flag("--inject-fault", cross_fault,
                  "test fixture: flip one coefficient to prove faults are caught");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (inv->parsed()) return cmd_invariants(flags, inv_n, inv_base);
    if (fund->parsed()) {
      int lo = fund_n_opt->count() ? fund_n : (fund_min ? fund_min : 3);
      int hi = fund_n_opt->count() ? fund_n : (fund_max ? fund_max : std::max(lo, 10));
      if (lo < 3 || hi < lo) throw DomainError("fundamental table needs 3 <= n-min <= n-max");
      return cmd_fundamental(flags, lo, hi);
    }
    if (cat->parsed()) {
      if (cat_n < 3 || cat_n > 8)
        throw DomainError("catalog is exhaustive for 3 <= n <= 8");
      return cmd_catalog(flags, cat_n, cat_inv);
    }
    if (fam->parsed()) {
      if (!fam_all && fam_h.empty())
        throw DomainError("families needs --h or --all-partitions");
      return cmd_families(flags, fam_name, fam_r, fam_e, fam_j, fam_h, fam_all);
    }
    if (cross->parsed()) return cmd_crosscheck(flags, cross_scope, cross_fault);
  } catch (const InvalidBaseError& e) {
    std::cerr << "invalid base: " << e.what() << "\n";
    return kExitInvalidBase;
  } catch (const ConsistencyFault& e) {
    std::cerr << "internal consistency fault: " << e.what() << "\n";
    return kExitConsistency;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

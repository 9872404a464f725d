// Command-line front end: corank computations, classification ledger
// queries, and the verification suite, in text or JSON.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "wahl/errors.hpp"
#include "wahl/ledger/ledger.hpp"
#include "wahl/verify/verify.hpp"

using json = nlohmann::ordered_json;

namespace {

constexpr int kSchemaVersion = 1;

// Exit codes: 0 ok, 1 verification mismatch, 2 invalid input/config,
// 3 rank instability across primes, 4 closed form inapplicable,
// 5 matrix size limit.
enum ExitCode {
  kOk = 0,
  kMismatch = 1,
  kInvalid = 2,
  kInstability = 3,
  kFormulaInapplicable = 4,
  kSizing = 5,
};

struct CommonOpts {
  std::uint64_t seed = wahl::gaussmap::kDefaultSeed;
  std::vector<std::uint64_t> primes;
  int retries = 3;
  std::string format = "text";
  std::size_t max_cells = 16'000'000;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--seed", o.seed, "seed for primes and generator draws");
  cmd->add_option("--prime", o.primes, "explicit prime (repeatable, max 2)");
  cmd->add_option("--retries", o.retries, "extra primes on rank disagreement")
      ->check(CLI::Range(0, 16));
  cmd->add_option("--format", o.format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--max-cells", o.max_cells, "dense matrix cell limit");
}

void apply_common(const CommonOpts& o) {
  wahl::exactlin::set_max_cells(o.max_cells);
  if (o.primes.size() > 2)
    throw wahl::InvalidInputError("at most two --prime values");
  for (std::uint64_t p : o.primes) wahl::exactlin::checked_prime(p);
  if (o.primes.size() == 2 && o.primes[0] == o.primes[1])
    throw wahl::InvalidInputError("--prime values must be distinct");
}

// "k", "2k" or a plain integer, resolved against the canonical twist.
int resolve_twist(const std::string& tok, int k) {
  if (!tok.empty() && tok.back() == 'k') {
    const std::string head = tok.substr(0, tok.size() - 1);
    const int mult = head.empty() ? 1 : std::stoi(head);
    if (mult < 1) throw wahl::InvalidInputError("twist multiple must be >= 1");
    return mult * k;
  }
  const int v = std::stoi(tok);
  if (v < 1) throw wahl::InvalidInputError("twist degree must be >= 1");
  return v;
}

json report_to_json(const wahl::gaussmap::CorankReport& rep) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = "corank";
  j["type"] = rep.type.degrees;
  j["ambient"] = rep.type.ambient;
  j["k"] = rep.type.k;
  j["a"] = rep.a;
  j["b"] = rep.b;
  j["mode"] = rep.mode;
  j["rank"] = rep.rank;
  j["corank"] = rep.corank;
  j["target_dim"] = rep.target_dim;
  j["primes"] = rep.primes;
  j["seed"] = rep.seed;
  j["retries"] = rep.retries;
  j["path"] = rep.path;
  return j;
}

int cmd_corank(const CommonOpts& common, const std::string& type_str,
               const std::string& pair_str, const std::string& path) {
  apply_common(common);
  const wahl::curves::CIType type = wahl::curves::parse_type(type_str);

  int a = type.k, b = type.k;
  if (!pair_str.empty()) {
    const auto comma = pair_str.find(',');
    if (comma == std::string::npos)
      throw wahl::InvalidInputError("--pair wants a,b");
    a = resolve_twist(pair_str.substr(0, comma), type.k);
    b = resolve_twist(pair_str.substr(comma + 1), type.k);
    if (a > b) std::swap(a, b);
  }

  wahl::gaussmap::CorankReport rep;
  if (path == "formula") {
    if (a != type.k || b != type.k)
      throw wahl::InvalidInputError("the closed form covers only the wedge map");
    rep.type = type;
    rep.a = a;
    rep.b = b;
    rep.mode = "wedge";
    rep.corank = wahl::gaussmap::corank_formula(type);
    rep.target_dim = wahl::gradedring::hilbert_ci(type.ambient, type.degrees, 3 * type.k);
    rep.rank = static_cast<std::size_t>(rep.target_dim - rep.corank);
    rep.seed = common.seed;
    rep.path = "formula";
  } else {
    wahl::gaussmap::TwoPrimeConfig cfg;
    cfg.seed = common.seed;
    cfg.primes = common.primes;
    cfg.retries = common.retries;
    rep = a == b ? wahl::gaussmap::corank_wedge(type, cfg)
                 : wahl::gaussmap::corank_pair(type, a, b, cfg);
  }

  if (common.format == "json") {
    std::cout << report_to_json(rep).dump(2) << "\n";
    return kOk;
  }
  std::printf("type (%s)  P^%d  k=%d  degree %lld  genus %lld\n",
              type.label().c_str(), type.ambient, type.k,
              static_cast<long long>(type.product_of_degrees()),
              static_cast<long long>(type.genus()));
  std::printf("mode %s  a=%d  b=%d  path %s\n", rep.mode.c_str(), rep.a, rep.b,
              rep.path.c_str());
  std::printf("target h0 = %lld  rank = %zu  corank = %lld\n",
              static_cast<long long>(rep.target_dim), rep.rank,
              static_cast<long long>(rep.corank));
  if (rep.path == "matrix") {
    std::printf("primes =");
    for (std::uint64_t p : rep.primes) std::printf(" %llu", static_cast<unsigned long long>(p));
    std::printf("  seed = %llu  retries = %d\n",
                static_cast<unsigned long long>(rep.seed), rep.retries);
  }
  return kOk;
}

json bounded_json(const std::optional<wahl::ledger::BoundedValue>& v) {
  if (!v) return nullptr;
  return v->value;
}

void dump_tables_text() {
  auto range = [](int lo, const std::optional<int>& hi) {
    if (hi && *hi == lo) return std::to_string(lo);
    if (!hi) return ">=" + std::to_string(lo);
    return std::to_string(lo) + ".." + std::to_string(*hi);
  };
  std::printf("corank table\n");
  std::printf("%-6s %-7s %-7s %-10s %-11s %-20s %s\n", "r", "g", "corank",
              "h0(N(-2))", "cone bound", "surface hyp.", "curve hyp.");
  for (const auto& row : wahl::ledger::corank_table()) {
    std::string h = "-";
    if (row.h0n2)
      h = (row.h0n2->is_bound ? "<=" : "") + std::to_string(row.h0n2->value);
    std::printf("%-6s %-7s %-7lld %-10s %-11s %-20s %s\n",
                range(row.r_min, row.r_max).c_str(),
                range(row.g_min, row.g_max).c_str(),
                static_cast<long long>(row.corank), h.c_str(),
                row.cone_bound ? std::to_string(*row.cone_bound).c_str() : "-",
                row.surface_hypothesis.c_str(), row.curve_hypothesis.c_str());
  }
  std::printf("\nthreefold families\n");
  std::printf("%-3s %-3s %-3s %-4s %-11s %s\n", "r", "g", "d", "N",
              "parameters", "family");
  for (const auto& e : wahl::ledger::fano_examples())
    std::printf("%-3d %-3d %-3lld %-4lld %-11lld %s\n", e.r, e.g,
                static_cast<long long>(e.degree),
                static_cast<long long>(e.big_n),
                static_cast<long long>(e.parameters), e.description.c_str());
  std::printf("\nn-fold families\n");
  std::printf("%-3s %-3s %-5s %-11s %s\n", "r", "g", "n(g)", "parameters",
              "family");
  for (const auto& e : wahl::ledger::mukai_examples())
    std::printf("%-3d %-3d %-5d %-11lld %s\n", e.r, e.g, e.n_max,
                static_cast<long long>(e.parameters), e.description.c_str());
  std::printf("\nCI section types\n");
  std::printf("%-10s %-3s %-3s %s\n", "degrees", "g", "r", "k");
  for (const auto& t : wahl::curves::standard_ci_types())
    std::printf("(%s)%*s %-3d %-3d %d\n", t.type.label().c_str(),
                static_cast<int>(8 - t.type.label().size()), "", t.g, t.r,
                t.type.k);
}

int cmd_ledger(const CommonOpts& common, int r, int g, std::optional<int> n,
               bool compute, bool dump) {
  apply_common(common);

  if (dump && common.format == "text") {
    dump_tables_text();
    return kOk;
  }
  if (dump) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["dataset_version"] = wahl::ledger::kDatasetVersion;
    j["corank_table"] = json::array();
    for (const auto& row : wahl::ledger::corank_table()) {
      json jr;
      jr["r_min"] = row.r_min;
      jr["r_max"] = row.r_max ? json(*row.r_max) : json(nullptr);
      jr["g_min"] = row.g_min;
      jr["g_max"] = row.g_max ? json(*row.g_max) : json(nullptr);
      jr["corank"] = row.corank;
      if (row.h0n2) {
        jr["h0n2"] = row.h0n2->value;
        jr["h0n2_is_bound"] = row.h0n2->is_bound;
        jr["h0n2_provenance"] = provenance_name(row.h0n2->provenance);
      } else {
        jr["h0n2"] = nullptr;
      }
      jr["cone_bound"] = row.cone_bound ? json(*row.cone_bound) : json(nullptr);
      jr["surface_hypothesis"] = row.surface_hypothesis;
      jr["curve_hypothesis"] = row.curve_hypothesis;
      j["corank_table"].push_back(jr);
    }
    j["fano_examples"] = json::array();
    for (const auto& e : wahl::ledger::fano_examples())
      j["fano_examples"].push_back({{"r", e.r},
                                    {"g", e.g},
                                    {"degree", e.degree},
                                    {"N", e.big_n},
                                    {"parameters", e.parameters},
                                    {"description", e.description}});
    j["mukai_examples"] = json::array();
    for (const auto& e : wahl::ledger::mukai_examples())
      j["mukai_examples"].push_back({{"r", e.r},
                                     {"g", e.g},
                                     {"n_max", e.n_max},
                                     {"parameters", e.parameters},
                                     {"description", e.description}});
    j["ci_types"] = json::array();
    for (const auto& t : wahl::curves::standard_ci_types())
      j["ci_types"].push_back({{"degrees", t.type.degrees},
                               {"ambient", t.type.ambient},
                               {"k", t.type.k},
                               {"r", t.r},
                               {"g", t.g}});
    std::cout << j.dump(2) << "\n";
    return kOk;
  }

  wahl::ledger::LedgerEntry e = wahl::ledger::classification_report(r, g, n);

  json corank_slot;
  corank_slot["expected"] = bounded_json(e.corank);
  corank_slot["computed"] = nullptr;
  corank_slot["primes"] = json::array();
  corank_slot["seed"] = nullptr;

  bool mismatch = false;
  if (compute) {
    const wahl::curves::StandardType* match = nullptr;
    for (const auto& t : wahl::curves::standard_ci_types())
      if (t.r == r && t.g == g) match = &t;
    if (!match)
      throw wahl::InvalidInputError(
          "no complete-intersection model for this (r, g); only table "
          "constants are available");
    wahl::gaussmap::TwoPrimeConfig cfg;
    cfg.seed = common.seed;
    cfg.primes = common.primes;
    cfg.retries = common.retries;
    const auto rep = wahl::gaussmap::corank_wedge(match->type, cfg);
    corank_slot["computed"] = rep.corank;
    corank_slot["primes"] = rep.primes;
    corank_slot["seed"] = rep.seed;
    if (e.corank && rep.corank != e.corank->value) mismatch = true;
    e.annotations.push_back("corank recomputed on the matrix path; " +
                            std::string(mismatch ? "DISAGREES with" : "matches") +
                            " the stored constant");
  }

  std::string provenance = "literature";
  if ((e.corank && e.corank->provenance == wahl::ledger::Provenance::kDerived) ||
      (e.h0n2 && e.h0n2->provenance == wahl::ledger::Provenance::kDerived))
    provenance = "derived";

  if (common.format == "json") {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["r"] = e.r;
    j["g"] = e.g;
    j["n"] = e.n ? json(*e.n) : json(nullptr);
    j["N"] = e.big_n;
    j["corank"] = corank_slot;
    j["h0n2"] = bounded_json(e.h0n2);
    j["f"] = e.f_value ? json(*e.f_value) : json(nullptr);
    j["bound"] = e.bound_value ? json(*e.bound_value) : json(nullptr);
    j["verdict"] = e.verdict;
    j["provenance"] = provenance;
    j["hilbert_k3_dim"] = e.hilbert_k3_dim;
    j["zak"] = e.zak ? json(e.zak->text) : json(nullptr);
    j["annotations"] = e.annotations;
    std::cout << j.dump(2) << "\n";
    return mismatch ? kMismatch : kOk;
  }

  std::printf("r=%d  g=%d  n=%d\n", e.r, e.g, e.n ? *e.n : 3);
  std::printf("N = %lld   K3 family dim = %lld\n",
              static_cast<long long>(e.big_n),
              static_cast<long long>(e.hilbert_k3_dim));
  if (e.corank)
    std::printf("corank = %lld%s [%s]\n", static_cast<long long>(e.corank->value),
                e.corank->is_bound ? " (bound)" : "",
                provenance_name(e.corank->provenance).c_str());
  if (e.h0n2)
    std::printf("h0(N(-2)) = %lld%s [%s]\n",
                static_cast<long long>(e.h0n2->value),
                e.h0n2->is_bound ? " (bound)" : "",
                provenance_name(e.h0n2->provenance).c_str());
  if (e.f_value) std::printf("f = %lld\n", static_cast<long long>(*e.f_value));
  if (e.bound_value && e.n && *e.n > 3)
    std::printf("bound(n=%d) = %lld\n", *e.n,
                static_cast<long long>(*e.bound_value));
  if (e.zak) std::printf("zak: %s\n", e.zak->text.c_str());
  std::printf("verdict: %s\n", e.verdict.c_str());
  for (const auto& a : e.annotations) std::printf("note: %s\n", a.c_str());
  return mismatch ? kMismatch : kOk;
}

int cmd_verify(const CommonOpts& common, const std::string& only,
               const std::string& inject, bool timings) {
  apply_common(common);
  if (!common.primes.empty())
    throw wahl::InvalidInputError("verify-all draws its own primes from --seed");

  wahl::verify::Options opts;
  opts.seed = common.seed;
  opts.retries = common.retries;
  opts.only_prefix = only;
  opts.inject_failure_id = inject;
  const wahl::verify::Report report = wahl::verify::run(opts);

  if (common.format == "json") {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = "verify-all";
    j["seed"] = common.seed;
    j["checks"] = json::array();
    for (const auto& c : report.checks) {
      json jc;
      jc["id"] = c.id;
      jc["criterion"] = c.criterion;
      jc["reference"] = c.reference;
      jc["provenance"] = c.provenance;
      jc["expected"] = c.expected;
      jc["computed"] = c.computed;
      jc["pass"] = c.pass;
      if (timings) jc["runtime_ms"] = c.runtime_ms;
      j["checks"].push_back(jc);
    }
    j["summary"] = {{"total", report.checks.size()},
                    {"passed", report.passed},
                    {"failed", report.failed}};
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& c : report.checks) {
      std::printf("[%s] %-28s expected: %s  computed: %s", c.pass ? "PASS" : "FAIL",
                  c.id.c_str(), c.expected.c_str(), c.computed.c_str());
      if (timings) std::printf("  (%.1f ms)", c.runtime_ms);
      std::printf("\n");
    }
    std::printf("summary: %zu/%zu passed, %zu failed\n", report.passed,
                report.checks.size(), report.failed);
  }
  return report.all_passed() ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact coranks of Gaussian maps on complete-intersection "
               "canonical curves, with the classification arithmetic for "
               "varieties having such curve sections"};
  app.require_subcommand(1);

  CommonOpts corank_opts, ledger_opts, verify_opts;

  auto* corank = app.add_subcommand("corank", "corank of a Gaussian map");
  std::string type_str, pair_str, path = "matrix";
  corank->add_option("--type", type_str, "degree tuple, e.g. 2,4")->required();
  corank->add_option("--pair", pair_str,
                     "twists a,b (accepts k multiples like k,2k); default k,k");
  corank->add_option("--path", path, "matrix | formula")
      ->check(CLI::IsMember({"matrix", "formula"}));
  add_common(corank, corank_opts);

  auto* ledger = app.add_subcommand("ledger", "classification arithmetic");
  int r = 0, g = 0, n_raw = -1;
  bool compute = false, dump = false;
  ledger->add_option("--r", r, "index of the polarisation");
  ledger->add_option("--g", g, "genus of the primitive K3");
  ledger->add_option("--n", n_raw, "variety dimension (default 3)");
  ledger->add_flag("--compute", compute,
                   "recompute the corank on the matrix path when a CI model exists");
  ledger->add_flag("--dump-tables", dump, "emit the embedded datasets as JSON");
  add_common(ledger, ledger_opts);

  auto* verify = app.add_subcommand("verify-all", "run the verification suite");
  std::string only, inject;
  bool timings = false;
  verify->add_option("--only", only, "run only checks with this id prefix");
  verify->add_option("--inject-failure", inject,
                     "test hook: corrupt one expected value")
      ->group("");
  verify->add_flag("--timings", timings, "include per-check runtimes");
  add_common(verify, verify_opts);

  try {
    app.parse(argc, argv);
    if (corank->parsed()) return cmd_corank(corank_opts, type_str, pair_str, path);
    if (ledger->parsed()) {
      if (!dump && (r < 1 || g < 2))
        throw wahl::InvalidInputError("ledger needs --r >= 1 and --g >= 2");
      std::optional<int> n;
      if (n_raw >= 0) n = n_raw;
      return cmd_ledger(ledger_opts, r, g, n, compute, dump);
    }
    if (verify->parsed()) return cmd_verify(verify_opts, only, inject, timings);
    return kInvalid;
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kInvalid;
  } catch (const wahl::InstabilityError& e) {
    std::cerr << "instability: " << e.what() << "\n";
    return kInstability;
  } catch (const wahl::FormulaInapplicableError& e) {
    std::cerr << "formula inapplicable: " << e.what() << "\n";
    return kFormulaInapplicable;
  } catch (const wahl::SizingError& e) {
    std::cerr << "sizing: " << e.what() << "\n";
    return kSizing;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  }
}

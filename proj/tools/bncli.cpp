// bncli: batch harness for witness sweeps, invariant suites and reports.
#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bn/extremal.hpp"
#include "bn/hardy.hpp"
#include "bn/verify.hpp"
#include "bn/witnesses.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

constexpr const char* kSweepHeader =
    "witness,n,s,p,q,numerator,denominator,ratio,normalized,grid_M,seed";

// Shortest decimal form that round-trips to the same double.
std::string fmt_num(double v) {
  char buf[40];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string fmt_pq(double v) { return bn::is_inf(v) ? "inf" : fmt_num(v); }

double parse_pq(const std::string& s) {
  if (s == "inf") return bn::kInf;
  double v = 0.0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
    throw std::runtime_error("not a number: '" + s + "'");
  }
  return v;
}

// ------------------------------------------------------------------- sweep

struct SweepConfig {
  std::vector<bn::WitnessId> witnesses;
  std::vector<int> n_list;
  std::vector<int> s_list;
  std::vector<std::pair<double, double>> pq_pairs;
  unsigned long long seed = 0;
  std::map<std::string, int> grid_overrides;
  std::string output_dir;
};

bn::WitnessId witness_from_name(const std::string& name) {
  for (bn::WitnessId id :
       {bn::WitnessId::exponential, bn::WitnessId::modulated_jackson, bn::WitnessId::concave_tnl,
        bn::WitnessId::entire_bump}) {
    if (name == bn::witness_name(id)) return id;
  }
  throw std::runtime_error("unknown witness '" + name + "'");
}

double json_pq(const nlohmann::json& j) {
  if (j.is_string()) return parse_pq(j.get<std::string>());
  if (j.is_number()) return j.get<double>();
  throw std::runtime_error("p/q entries must be numbers or the string \"inf\"");
}

SweepConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("config parse: ") + e.what());
  }
  static const std::vector<std::string> allowed = {
      "command", "witnesses", "n_list", "s_list", "pq_pairs", "seed", "grid_overrides",
      "output_dir"};
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw std::runtime_error("unknown config field '" + key + "'");
    }
  }
  for (const char* req : {"command", "witnesses", "n_list", "s_list", "pq_pairs", "output_dir"}) {
    if (!j.contains(req)) throw std::runtime_error(std::string("missing config field '") + req + "'");
  }
  if (j.at("command").get<std::string>() != "sweep") {
    throw std::runtime_error("config field 'command' must be \"sweep\"");
  }
  SweepConfig cfg;
  for (const auto& w : j.at("witnesses")) cfg.witnesses.push_back(witness_from_name(w.get<std::string>()));
  cfg.n_list = j.at("n_list").get<std::vector<int>>();
  cfg.s_list = j.at("s_list").get<std::vector<int>>();
  for (const auto& pair : j.at("pq_pairs")) {
    if (!pair.is_array() || pair.size() != 2) {
      throw std::runtime_error("pq_pairs entries must be [p, q] pairs");
    }
    cfg.pq_pairs.emplace_back(json_pq(pair[0]), json_pq(pair[1]));
  }
  if (j.contains("seed")) cfg.seed = j.at("seed").get<unsigned long long>();
  if (j.contains("grid_overrides")) {
    for (const auto& [key, value] : j.at("grid_overrides").items()) {
      witness_from_name(key);  // reject unknown witness keys
      cfg.grid_overrides[key] = value.get<int>();
    }
  }
  cfg.output_dir = j.at("output_dir").get<std::string>();
  if (cfg.witnesses.empty() || cfg.n_list.empty() || cfg.s_list.empty() || cfg.pq_pairs.empty()) {
    throw std::runtime_error("witnesses, n_list, s_list and pq_pairs must be nonempty");
  }
  for (int n : cfg.n_list) {
    if (n < 1) throw std::runtime_error("n_list entries must be >= 1");
  }
  for (int s : cfg.s_list) {
    if (s < 0) throw std::runtime_error("s_list entries must be >= 0");
  }
  return cfg;
}

struct SweepJob {
  bn::WitnessId id;
  int n = 0;
  int s = 0;
  double p = 0.0, q = 0.0;
  int grid_override = 0;
};

bool admissible(const SweepJob& job) {
  switch (job.id) {
    case bn::WitnessId::exponential:
      return job.s >= 1;
    case bn::WitnessId::modulated_jackson:
      return job.s >= 2 && !bn::is_inf(job.p) &&
             job.n > 4 * bn::jackson_r_for(job.p) * job.s;
    case bn::WitnessId::concave_tnl:
      return job.s >= 1 && job.p == 1.0 && bn::is_inf(job.q);
    case bn::WitnessId::entire_bump:
      return job.s >= 2 && job.p < job.q;
  }
  return false;
}

bn::RatioReport run_job(const SweepJob& job) {
  switch (job.id) {
    case bn::WitnessId::exponential:
      return bn::exponential_witness(job.n, job.s, job.p, job.q);
    case bn::WitnessId::modulated_jackson:
      return bn::modulated_jackson_witness(job.n, job.s, job.p, job.q, job.grid_override);
    case bn::WitnessId::concave_tnl:
      return bn::concave_witness(job.n, job.s, job.grid_override);
    case bn::WitnessId::entire_bump: {
      bn::BumpQuadOptions quad;
      if (job.grid_override > 0) quad.support_points = job.grid_override;
      return bn::entire_bump_witness(job.s, job.p, job.q, quad);
    }
  }
  throw std::runtime_error("unreachable witness id");
}

int cmd_sweep(const std::string& config_path, int workers) {
  SweepConfig cfg;
  try {
    cfg = load_config(config_path);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "sweep: %s\n", e.what());
    return kExitUsage;
  }

  std::vector<SweepJob> jobs;
  for (bn::WitnessId id : cfg.witnesses) {
    const auto it = cfg.grid_overrides.find(bn::witness_name(id));
    const int grid = (it == cfg.grid_overrides.end()) ? 0 : it->second;
    const bool entire = (id == bn::WitnessId::entire_bump);
    for (int s : cfg.s_list) {
      for (const auto& [p, q] : cfg.pq_pairs) {
        for (int n : cfg.n_list) {
          SweepJob job{id, n, s, p, q, grid};
          if (admissible(job)) jobs.push_back(job);
          if (entire) break;  // n-independent: one row per (s, p, q)
        }
      }
    }
  }
  std::sort(jobs.begin(), jobs.end(), [](const SweepJob& a, const SweepJob& b) {
    const std::string an = bn::witness_name(a.id), bname = bn::witness_name(b.id);
    if (an != bname) return an < bname;
    if (a.n != b.n) return a.n < b.n;
    if (a.s != b.s) return a.s < b.s;
    if (a.p != b.p) return a.p < b.p;
    return a.q < b.q;
  });

  std::vector<bn::RatioReport> results(jobs.size());
  std::vector<std::string> errors(jobs.size());
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    for (size_t i = next.fetch_add(1); i < jobs.size(); i = next.fetch_add(1)) {
      try {
        results[i] = run_job(jobs[i]);
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  };
  workers = std::max(1, workers);
  std::vector<std::thread> pool;
  for (int t = 1; t < workers; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  for (size_t i = 0; i < jobs.size(); ++i) {
    if (!errors[i].empty()) {
      std::fprintf(stderr, "sweep: %s(n=%d, s=%d): %s\n", bn::witness_name(jobs[i].id), jobs[i].n,
                   jobs[i].s, errors[i].c_str());
      return kExitNumerical;
    }
    const bn::RatioReport& r = results[i];
    if (!std::isfinite(r.ratio) || !std::isfinite(r.normalized) || r.denominator <= 0.0) {
      std::fprintf(stderr, "sweep: %s(n=%d, s=%d): non-finite result\n",
                   bn::witness_name(jobs[i].id), jobs[i].n, jobs[i].s);
      return kExitNumerical;
    }
  }

  std::error_code ec;
  std::filesystem::create_directories(cfg.output_dir, ec);
  const std::filesystem::path out_path = std::filesystem::path(cfg.output_dir) / "sweep.csv";
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::fprintf(stderr, "sweep: cannot write %s\n", out_path.c_str());
    return kExitUsage;
  }
  out << kSweepHeader << "\n";
  for (size_t i = 0; i < jobs.size(); ++i) {
    const bn::RatioReport& r = results[i];
    const int grid = std::max(r.grid_num, r.grid_den);
    out << bn::witness_name(r.id) << ',' << r.n << ',' << fmt_num(r.s) << ',' << fmt_pq(r.p) << ','
        << fmt_pq(r.q) << ',' << fmt_num(r.numerator) << ',' << fmt_num(r.denominator) << ','
        << fmt_num(r.ratio) << ',' << fmt_num(r.normalized) << ',' << grid << ',' << cfg.seed
        << "\n";
  }
  out.close();
  std::printf("wrote %s (%zu rows)\n", out_path.c_str(), jobs.size());
  return kExitOk;
}

// ------------------------------------------------------------------ verify

int cmd_verify(const std::string& suite) {
  std::vector<bn::CheckResult> checks;
  try {
    checks = bn::verify_suite(suite);
  } catch (const std::domain_error& e) {
    std::fprintf(stderr, "verify: %s\n", e.what());
    return kExitUsage;
  }
  bool all_pass = true;
  for (const auto& c : checks) {
    all_pass = all_pass && c.pass;
    std::printf("[%s] %-32s %s\n", c.pass ? "PASS" : "FAIL", c.name.c_str(), c.observed.c_str());
  }
  std::printf("%zu checks, %s\n", checks.size(), all_pass ? "all passed" : "FAILURES present");
  return all_pass ? kExitOk : kExitVerification;
}

// ---------------------------------------------------------------- extremal

int cmd_extremal(int n, int s, int grid) {
  bn::ExtremalSolution sol;
  try {
    sol = bn::solve_extremal(n, s, grid);
  } catch (const std::domain_error& e) {
    std::fprintf(stderr, "extremal: %s\n", e.what());
    return kExitUsage;
  }
  std::printf("n                %d\n", sol.n);
  std::printf("s                %d\n", sol.s);
  std::printf("basis            %s\n", sol.sine_basis ? "sine" : "cosine");
  std::printf("grid_M           %d\n", sol.grid_M);
  std::printf("status           %s\n", sol.solver_status.c_str());
  std::printf("lp_iterations    %d\n", sol.lp_iterations);
  std::printf("lp_objective     %s\n", fmt_num(sol.lp_objective).c_str());
  std::printf("l1_norm          %s\n", fmt_num(sol.l1_norm).c_str());
  std::printf("quad_l1          %s\n", fmt_num(sol.quad_l1).c_str());
  std::printf("constant         %s\n", fmt_num(sol.constant).c_str());
  std::printf("polish_residual  %s\n", fmt_num(sol.polish_residual).c_str());
  std::ostringstream zs;
  for (size_t i = 0; i < sol.zeros.size(); ++i) zs << (i ? " " : "") << fmt_num(sol.zeros[i]);
  std::printf("zeros            [%s]\n", zs.str().c_str());
  std::ostringstream cs;
  for (int i = 0; i < sol.coeffs.size(); ++i) cs << (i ? " " : "") << fmt_num(sol.coeffs[i]);
  std::printf("coeffs           [%s]\n", cs.str().c_str());
  const bool solved = sol.solver_status == "optimal" || sol.solver_status == "direct" ||
                      sol.solver_status == "closed-form";
  if (!solved || !std::isfinite(sol.l1_norm) ||
      sol.polish_residual > 1e-6 * sol.l1_norm) {
    std::fprintf(stderr, "extremal: solver did not converge to tolerance\n");
    return kExitNumerical;
  }
  return kExitOk;
}

// ------------------------------------------------------------- hardy atoms

int cmd_hardy_atoms(double p, int count, unsigned long long seed) {
  if (!(p > 0.0) || p > 1.0 || count < 1) {
    std::fprintf(stderr, "hardy atoms: require 0 < p <= 1 and count >= 1\n");
    return kExitUsage;
  }
  std::mt19937_64 rng(seed);
  std::printf("index,lo,hi,support,j0,sup_norm,sup_bound,ell_p,h_int,h_half,valid\n");
  bool all_valid = true;
  for (int i = 0; i < count; ++i) {
    double lo = 0.0, hi = 0.0;
    const bn::DiscreteSeq a = bn::random_atom(p, 24, rng, &lo, &hi);
    const bn::AtomCertificate cert = bn::validate_atom(a, lo, hi, p);
    const bn::HpNorm hint = bn::hp_quasinorm(a, p, bn::OffsetKind::Integer);
    const bn::HpNorm hhalf = bn::hp_quasinorm(a, p, bn::OffsetKind::Half);
    all_valid = all_valid && cert.valid && hint.finite && hhalf.finite;
    std::printf("%d,%s,%s,%d,%d,%s,%s,%s,%s,%s,%s\n", i, fmt_num(lo).c_str(), fmt_num(hi).c_str(),
                a.hi() - a.lo() + 1, cert.j0, fmt_num(cert.sup_norm).c_str(),
                fmt_num(cert.sup_bound).c_str(), fmt_num(hint.ell_p).c_str(),
                hint.finite ? fmt_num(hint.value).c_str() : "inf",
                hhalf.finite ? fmt_num(hhalf.value).c_str() : "inf", cert.valid ? "yes" : "no");
  }
  if (!all_valid) {
    std::fprintf(stderr, "hardy atoms: some atoms failed validation\n");
    return kExitVerification;
  }
  return kExitOk;
}

// ------------------------------------------------------------------ report

struct CsvRow {
  std::string witness;
  int n = 0;
  double s = 0.0, p = 0.0, q = 0.0;
  double numerator = 0.0, denominator = 0.0, ratio = 0.0, normalized = 0.0;
};

std::vector<CsvRow> read_sweep_csvs(const std::vector<std::string>& paths) {
  static const std::vector<std::string> cols = {"witness", "n",     "s",          "p",
                                               "q",       "numerator", "denominator", "ratio",
                                               "normalized", "grid_M", "seed"};
  std::vector<CsvRow> rows;
  for (const auto& path : paths) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("'" + path + "' is empty");
    {
      std::stringstream hs(line);
      std::string col;
      size_t i = 0;
      while (std::getline(hs, col, ',')) {
        if (i >= cols.size() || col != cols[i]) {
          throw std::runtime_error("'" + path + "': unexpected column '" + col + "'");
        }
        ++i;
      }
      if (i != cols.size()) {
        throw std::runtime_error("'" + path + "': missing column '" + cols[i] + "'");
      }
    }
    int lineno = 1;
    while (std::getline(in, line)) {
      ++lineno;
      if (line.empty()) continue;
      std::stringstream ls(line);
      std::vector<std::string> f;
      std::string field;
      while (std::getline(ls, field, ',')) f.push_back(field);
      if (f.size() != cols.size()) {
        throw std::runtime_error("'" + path + "' line " + std::to_string(lineno) +
                                 ": wrong field count");
      }
      try {
        CsvRow r;
        r.witness = f[0];
        r.n = std::stoi(f[1]);
        r.s = parse_pq(f[2]);
        r.p = parse_pq(f[3]);
        r.q = parse_pq(f[4]);
        r.numerator = parse_pq(f[5]);
        r.denominator = parse_pq(f[6]);
        r.ratio = parse_pq(f[7]);
        r.normalized = parse_pq(f[8]);
        rows.push_back(r);
      } catch (const std::exception& e) {
        throw std::runtime_error("'" + path + "' line " + std::to_string(lineno) + ": " + e.what());
      }
    }
  }
  return rows;
}

int cmd_report(const std::string& kind, const std::vector<std::string>& paths) {
  std::vector<CsvRow> rows;
  try {
    rows = read_sweep_csvs(paths);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "report: %s\n", e.what());
    return kExitUsage;
  }
  if (kind == "band-summary") {
    std::map<std::tuple<std::string, double, double>, std::tuple<int, double, double>> bands;
    for (const auto& r : rows) {
      auto& [count, lo, hi] = bands[{r.witness, r.p, r.q}];
      if (count == 0) {
        lo = hi = r.normalized;
      } else {
        lo = std::min(lo, r.normalized);
        hi = std::max(hi, r.normalized);
      }
      ++count;
    }
    std::printf("witness,p,q,count,min_norm_ratio,max_norm_ratio,spread\n");
    for (const auto& [key, band] : bands) {
      const auto& [witness, p, q] = key;
      const auto& [count, lo, hi] = band;
      std::printf("%s,%s,%s,%d,%s,%s,%s\n", witness.c_str(), fmt_pq(p).c_str(), fmt_pq(q).c_str(),
                  count, fmt_num(lo).c_str(), fmt_num(hi).c_str(), fmt_num(hi / lo).c_str());
    }
    return kExitOk;
  }
  if (kind == "scan-table") {
    std::sort(rows.begin(), rows.end(), [](const CsvRow& a, const CsvRow& b) {
      return std::tie(a.witness, a.n, a.s, a.p, a.q) < std::tie(b.witness, b.n, b.s, b.p, b.q);
    });
    std::printf("witness,n,s,p,q,ratio,normalized\n");
    for (const auto& r : rows) {
      std::printf("%s,%d,%s,%s,%s,%s,%s\n", r.witness.c_str(), r.n, fmt_num(r.s).c_str(),
                  fmt_pq(r.p).c_str(), fmt_pq(r.q).c_str(), fmt_num(r.ratio).c_str(),
                  fmt_num(r.normalized).c_str());
    }
    return kExitOk;
  }
  std::fprintf(stderr, "report: unknown kind '%s' (expected band-summary or scan-table)\n",
               kind.c_str());
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bernstein-Nikolskii witness sweeps, invariant suites and reports"};
  app.require_subcommand(1);

  std::string config_path;
  int workers = static_cast<int>(std::min(8u, std::max(1u, std::thread::hardware_concurrency())));
  auto* sweep = app.add_subcommand("sweep", "run a witness sweep from a JSON config");
  sweep->add_option("config", config_path, "JSON config file")->required();
  sweep->add_option("--workers", workers, "worker thread count");

  std::string suite;
  auto* verify = app.add_subcommand("verify", "run an invariant suite");
  verify->add_option("suite", suite, "trig|entire|concave|extremal|hardy|all")->required();

  int ext_n = 0, ext_s = 0, ext_grid = 0;
  auto* extremal = app.add_subcommand("extremal", "solve the p=1, q=inf extremal problem");
  extremal->add_option("--n", ext_n, "polynomial degree")->required();
  extremal->add_option("--s", ext_s, "derivative order")->required();
  extremal->add_option("--grid", ext_grid, "LP grid size (default 64(n+1))");

  double atom_p = 0.0;
  int atom_count = 0;
  unsigned long long atom_seed = 20240901ULL;
  auto* hardy = app.add_subcommand("hardy", "discrete Hardy space tools");
  hardy->require_subcommand(1);
  auto* atoms = hardy->add_subcommand("atoms", "generate and certify random atoms");
  atoms->add_option("--p", atom_p, "quasinorm exponent in (0, 1]")->required();
  atoms->add_option("--count", atom_count, "number of atoms")->required();
  atoms->add_option("--seed", atom_seed, "RNG seed");

  std::string report_kind;
  std::vector<std::string> report_csvs;
  auto* report = app.add_subcommand("report", "summarize sweep CSVs");
  report->add_option("kind", report_kind, "band-summary|scan-table")->required();
  report->add_option("csvs", report_csvs, "sweep CSV files")->required()->expected(-1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (sweep->parsed()) return cmd_sweep(config_path, workers);
    if (verify->parsed()) return cmd_verify(suite);
    if (extremal->parsed()) return cmd_extremal(ext_n, ext_s, ext_grid);
    if (hardy->parsed()) return cmd_hardy_atoms(atom_p, atom_count, atom_seed);
    if (report->parsed()) return cmd_report(report_kind, report_csvs);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "bncli: %s\n", e.what());
    return kExitNumerical;
  }
  return kExitUsage;
}

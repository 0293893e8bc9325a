// boxtrio: spectra of three harmonically coupled particles in a 1D box,
// block-diagonalized by symmetry. Subcommands cover curve sweeps, first-order
// perturbation checks, basis/block dumps, oracle verification, and the
// strong-coupling asymptote report.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "boxtrio/output.hpp"
#include "boxtrio/version.hpp"
#include "json.hpp"

namespace {

using boxtrio::IrrepLabel;
using nlohmann::ordered_json;

constexpr int kExitUsage = 1;
constexpr int kExitNumerical = 2;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Optional JSON config layering: any key matching a long option name supplies
// a value for options the command line left untouched. Flags always win.
void apply_config_file(CLI::App* cmd, const std::string& path) {
  if (path.empty()) return;
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file: " + path);
  ordered_json cfg;
  try {
    in >> cfg;
  } catch (const std::exception& e) {
    throw UsageError("config file is not valid JSON: " + std::string(e.what()));
  }
  if (!cfg.is_object()) throw UsageError("config file must hold a JSON object");
  for (const auto& [key, value] : cfg.items()) {
    CLI::Option* opt = cmd->get_option_no_throw("--" + key);
    if (opt == nullptr) throw UsageError("config key not recognized: " + key);
    if (opt->count() > 0) continue;  // command line wins
    std::vector<std::string> words;
    if (value.is_array()) {
      for (const auto& item : value)
        words.push_back(item.is_string() ? item.get<std::string>()
                                         : item.dump());
    } else if (value.is_string()) {
      words.push_back(value.get<std::string>());
    } else {
      words.push_back(value.dump());
    }
    for (const std::string& w : words) opt->add_result(w);
    opt->run_callback();
  }
}

std::vector<IrrepLabel> parse_irreps(const std::vector<std::string>& names) {
  if (names.empty())
    return {boxtrio::irrep_order().begin(), boxtrio::irrep_order().end()};
  std::vector<IrrepLabel> out;
  for (const std::string& n : names) {
    try {
      out.push_back(boxtrio::irrep_from_string(n));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  return out;
}

std::vector<double> make_grid(double lmin, double lmax, int points,
                              const std::string& spacing) {
  try {
    if (points == 1) return boxtrio::linear_grid(lmin, lmax, 1);
    if (spacing == "linear") return boxtrio::linear_grid(lmin, lmax, points);
    if (spacing == "geometric")
      return boxtrio::geometric_grid(lmin, lmax, points);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  throw UsageError("spacing must be linear or geometric");
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path.string());
  out << content;
  if (!out) throw UsageError("write failed for " + path.string());
}

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty())
    std::cout << content;
  else
    write_file(out_path, content);
}

struct SpectrumArgs {
  std::int64_t cutoff = 27;
  double lmin = 1e-3;
  double lmax = 1e3;
  int points = 60;
  std::string spacing = "geometric";
  std::vector<std::string> irreps;
  int levels = 8;
  std::string out_dir = ".";
  std::string config;
};

int run_spectrum(const SpectrumArgs& a) {
  const std::vector<IrrepLabel> selected = parse_irreps(a.irreps);
  const std::vector<double> grid = make_grid(a.lmin, a.lmax, a.points, a.spacing);
  if (a.levels < 1) throw UsageError("--levels must be at least 1");

  const boxtrio::BlockSet set = boxtrio::build_block_set(a.cutoff);
  boxtrio::SweepOptions opts;
  opts.lambdas = grid;
  opts.keep_vectors = false;
  const boxtrio::SpectrumCurve curve = boxtrio::sweep_spectrum(set, opts);

  const std::filesystem::path dir(a.out_dir);
  std::filesystem::create_directories(dir);

  ordered_json summary;
  summary["command"] = "spectrum";
  summary["version"] = boxtrio::kVersion;
  summary["cutoff"] = a.cutoff;
  summary["grid"] = {{"min", boxtrio::format_double(a.lmin)},
                     {"max", boxtrio::format_double(a.lmax)},
                     {"points", a.points},
                     {"spacing", a.points == 1 ? "single" : a.spacing}};
  summary["levels"] = a.levels;
  summary["irreps"] = ordered_json::array();
  summary["files"] = ordered_json::array();
  for (IrrepLabel s : selected) summary["irreps"].push_back(to_string(s));

  for (IrrepLabel s : selected) {
    const std::string name = "spectrum_" + to_string(s) + ".csv";
    write_file(dir / name, boxtrio::spectrum_csv(curve, s, a.levels));
    summary["files"].push_back(name);
  }

  summary["avoided_crossings"] = ordered_json::array();
  if (curve.points() >= 3) {
    for (IrrepLabel s : selected)
      for (const boxtrio::AvoidedCrossing& c : boxtrio::detect_avoided_crossings(
               set, curve, s, 1e-4, a.levels))
        summary["avoided_crossings"].push_back(to_json(c));
  }

  summary["low_confidence_steps"] = ordered_json::object();
  for (int oi = 0; oi < 6; ++oi) {
    const IrrepLabel s = boxtrio::irrep_order()[oi];
    if (curve.low_confidence_steps[oi].empty()) continue;
    ordered_json lambdas = ordered_json::array();
    for (int step : curve.low_confidence_steps[oi])
      lambdas.push_back(boxtrio::format_double(curve.lambdas[step]));
    summary["low_confidence_steps"][to_string(s)] = std::move(lambdas);
  }

  write_file(dir / "summary.json", summary.dump(2) + "\n");
  return 0;
}

struct PtArgs {
  std::int64_t cutoff = 14;
  std::string format = "csv";
  double perturb = 0.0;
  std::string out;
  std::string config;
};

int run_pt(const PtArgs& a) {
  if (a.format != "csv" && a.format != "json")
    throw UsageError("--format must be csv or json");
  boxtrio::IntegralTable table(boxtrio::required_max_mode(a.cutoff));
  if (a.perturb != 0.0) table = table.with_p2_offset(a.perturb);
  const boxtrio::BlockSet set = boxtrio::build_block_set(a.cutoff, table);
  const boxtrio::SlopeReport report = boxtrio::check_first_order_slopes(set);
  if (a.format == "csv")
    emit(a.out, to_csv(report));
  else
    emit(a.out, to_json(report).dump(2) + "\n");
  return report.all_ok ? 0 : kExitNumerical;
}

struct BasisArgs {
  std::int64_t cutoff = 14;
  std::vector<std::string> irreps;
  std::string out;
  std::string config;
};

int run_basis(const BasisArgs& a) {
  const std::vector<IrrepLabel> selected = parse_irreps(a.irreps);
  ordered_json j;
  j["command"] = "basis";
  j["version"] = boxtrio::kVersion;
  j["cutoff"] = a.cutoff;
  j["salcs"] = ordered_json::array();
  for (const boxtrio::Multiplet& m : boxtrio::enumerate_multiplets(a.cutoff)) {
    for (const boxtrio::Salc& s : boxtrio::build_salcs(m)) {
      if (std::find(selected.begin(), selected.end(), s.irrep) == selected.end())
        continue;
      j["salcs"].push_back(to_json(s));
    }
  }
  emit(a.out, j.dump(2) + "\n");
  return 0;
}

struct DumpBlockArgs {
  std::int64_t cutoff = 14;
  std::string irrep = "A1g";
  int row = 0;
  std::string out;
  std::string config;
};

int run_dump_block(const DumpBlockArgs& a) {
  IrrepLabel s;
  try {
    s = boxtrio::irrep_from_string(a.irrep);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (a.row < 0 || a.row >= boxtrio::irrep_dimension(s))
    throw UsageError("row outside irrep dimension");
  const boxtrio::BlockSet set = boxtrio::build_block_set(a.cutoff);
  emit(a.out, to_json(set.block(s, a.row)).dump(2) + "\n");
  return 0;
}

struct VerifyArgs {
  std::vector<std::int64_t> cutoffs;
  std::vector<double> lambdas;
  int qmax = 50;
  bool quadrature_only = false;
  double perturb = 0.0;
  std::string out;
  std::string config;
};

int run_verify(const VerifyArgs& a) {
  boxtrio::oracle::OracleOptions opts;
  if (!a.cutoffs.empty()) opts.cutoffs = a.cutoffs;
  if (!a.lambdas.empty()) opts.lambdas = a.lambdas;
  if (a.qmax < 1) throw UsageError("--qmax must be at least 1");
  opts.quadrature_max_mode = a.qmax;
  opts.quadrature_only = a.quadrature_only;
  opts.perturb_p2 = a.perturb;
  for (std::int64_t c : opts.cutoffs)
    if (c < 3) throw UsageError("verification cutoffs must be at least 3");
  for (double l : opts.lambdas)
    if (!(l >= 0)) throw UsageError("verification couplings must be nonnegative");
  const boxtrio::oracle::OracleReport report = boxtrio::oracle::run_oracle_suite(opts);
  ordered_json j = boxtrio::to_json(report);
  j["version"] = boxtrio::kVersion;
  emit(a.out, j.dump(2) + "\n");
  return report.all_passed ? 0 : kExitNumerical;
}

struct AsymptoteArgs {
  std::int64_t cutoff = 330;
  double lmin = 1e-3;
  double lmax = 1e3;
  int points = 60;
  int levels = 4;
  std::string out;
  std::string config;
};

int run_asymptote(const AsymptoteArgs& a) {
  if (a.levels < 1) throw UsageError("--levels must be at least 1");
  const std::vector<double> grid =
      make_grid(a.lmin, a.lmax, a.points, "geometric");
  const boxtrio::BlockSet set = boxtrio::build_block_set(a.cutoff);
  boxtrio::SweepOptions opts;
  opts.lambdas = grid;
  opts.keep_vectors = false;
  const boxtrio::SpectrumCurve curve = boxtrio::sweep_spectrum(set, opts);
  const boxtrio::AsymptoteReport report =
      boxtrio::analyze_asymptotics(curve, a.levels);
  ordered_json j = to_json(report);
  j["version"] = boxtrio::kVersion;
  emit(a.out, j.dump(2) + "\n");
  return report.all_ok ? 0 : kExitNumerical;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral curves for three coupled particles in a 1D box"};
  app.require_subcommand(1);
  app.set_version_flag("--version", boxtrio::kVersion);

  SpectrumArgs sp;
  CLI::App* spectrum = app.add_subcommand(
      "spectrum", "Sweep the coupling grid and write per-irrep CSV curves");
  spectrum->add_option("--cutoff", sp.cutoff, "Energy-sum basis cutoff");
  spectrum->add_option("--lmin", sp.lmin, "Smallest coupling");
  spectrum->add_option("--lmax", sp.lmax, "Largest coupling");
  spectrum->add_option("--points", sp.points, "Grid size");
  spectrum->add_option("--spacing", sp.spacing, "linear or geometric");
  spectrum->add_option("--irreps", sp.irreps, "Comma-separated irrep filter")
      ->delimiter(',');
  spectrum->add_option("--levels", sp.levels, "Levels per irrep in the CSVs");
  spectrum->add_option("--out-dir", sp.out_dir, "Output directory");
  spectrum->add_option("--config", sp.config, "JSON config file");

  PtArgs pt;
  CLI::App* ptc = app.add_subcommand(
      "pt", "Compare first-order slopes against the closed forms");
  ptc->add_option("--cutoff", pt.cutoff, "Energy-sum basis cutoff");
  ptc->add_option("--format", pt.format, "csv or json");
  ptc->add_option("--out", pt.out, "Output file (default stdout)");
  ptc->add_option("--config", pt.config, "JSON config file");
  ptc->add_option("--test-perturb-integrals", pt.perturb,
                  "Offset added to the q^2 table (negative control)")
      ->group("");  // hidden

  BasisArgs ba;
  CLI::App* basis = app.add_subcommand(
      "basis", "Print the symmetry-adapted basis functions as JSON");
  basis->add_option("--cutoff", ba.cutoff, "Energy-sum basis cutoff");
  basis->add_option("--irreps", ba.irreps, "Comma-separated irrep filter")
      ->delimiter(',');
  basis->add_option("--out", ba.out, "Output file (default stdout)");
  basis->add_option("--config", ba.config, "JSON config file");

  DumpBlockArgs db;
  CLI::App* dump = app.add_subcommand(
      "dump-block", "Dump one Hamiltonian block (basis, H0, coupling) as JSON");
  dump->add_option("--cutoff", db.cutoff, "Energy-sum basis cutoff");
  dump->add_option("--irrep", db.irrep, "Irrep label")->required();
  dump->add_option("--row", db.row, "Partner row (E types only)");
  dump->add_option("--out", db.out, "Output file (default stdout)");
  dump->add_option("--config", db.config, "JSON config file");

  VerifyArgs ve;
  CLI::App* verify = app.add_subcommand(
      "verify", "Run the independent quadrature and full-basis checks");
  verify->add_option("--cutoff", ve.cutoffs, "Cutoffs to cross-check")
      ->delimiter(',');
  verify->add_option("--lambda", ve.lambdas, "Couplings to cross-check")
      ->delimiter(',');
  verify->add_option("--qmax", ve.qmax, "Largest mode for integral checks");
  verify->add_flag("--quadrature-only", ve.quadrature_only,
                   "Skip the spectrum comparison");
  verify->add_option("--out", ve.out, "Output file (default stdout)");
  verify->add_option("--config", ve.config, "JSON config file");
  verify->add_option("--test-perturb-integrals", ve.perturb,
                     "Offset added to the q^2 table (negative control)")
      ->group("");  // hidden

  AsymptoteArgs as;
  CLI::App* asym = app.add_subcommand(
      "asymptote", "Check scaled curves against the strong-coupling limits");
  asym->add_option("--cutoff", as.cutoff, "Energy-sum basis cutoff");
  asym->add_option("--lmin", as.lmin, "Smallest coupling (must be > 0)");
  asym->add_option("--lmax", as.lmax, "Largest coupling");
  asym->add_option("--points", as.points, "Grid size");
  asym->add_option("--levels", as.levels, "Levels per irrep to check");
  asym->add_option("--out", as.out, "Output file (default stdout)");
  asym->add_option("--config", as.config, "JSON config file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitUsage;
  }

  try {
    if (*spectrum) {
      apply_config_file(spectrum, sp.config);
      return run_spectrum(sp);
    }
    if (*ptc) {
      apply_config_file(ptc, pt.config);
      return run_pt(pt);
    }
    if (*basis) {
      apply_config_file(basis, ba.config);
      return run_basis(ba);
    }
    if (*dump) {
      apply_config_file(dump, db.config);
      return run_dump_block(db);
    }
    if (*verify) {
      apply_config_file(verify, ve.config);
      return run_verify(ve);
    }
    if (*asym) {
      apply_config_file(asym, as.config);
      return run_asymptote(as);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  }
  return kExitUsage;
}

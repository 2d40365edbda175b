// mp2: conductors, newform-dimension tables and verification suites for
// genuine representations of the metaplectic double cover of SL2(Q_p).

#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "mp2/gauss.hpp"
#include "mp2/intmath.hpp"
#include "mp2/json_io.hpp"
#include "mp2/newforms.hpp"
#include "mp2/suites.hpp"
#include "mp2/theta.hpp"
#include "mp2/weil_oracle.hpp"

namespace {

using namespace mp2;
using nlohmann::ordered_json;

constexpr int kExitInvalid = 2;
constexpr int kExitResource = 3;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw DomainError("cannot open output file '" + out_path + "'");
  f << text;
}

struct TableRow {
  ordered_json json;
  std::vector<std::string> cells;
};

std::string render_table(const std::vector<std::string>& header,
                         const std::vector<TableRow>& rows, const std::string& format,
                         const ordered_json& meta) {
  if (format == "json") {
    ordered_json j;
    j["schema"] = "mp2.table.v1";
    for (auto it = meta.begin(); it != meta.end(); ++it) j[it.key()] = it.value();
    ordered_json arr = ordered_json::array();
    for (const auto& r : rows) arr.push_back(r.json);
    j["rows"] = arr;
    return j.dump(2) + "\n";
  }
  if (format == "csv") {
    std::string s;
    for (size_t i = 0; i < header.size(); ++i)
      s += header[i] + (i + 1 < header.size() ? "," : "\n");
    for (const auto& r : rows)
      for (size_t i = 0; i < r.cells.size(); ++i)
        s += r.cells[i] + (i + 1 < r.cells.size() ? "," : "\n");
    return s;
  }
  // markdown
  std::string s = "|";
  for (const auto& h : header) s += " " + h + " |";
  s += "\n|";
  for (size_t i = 0; i < header.size(); ++i) s += "---|";
  s += "\n";
  for (const auto& r : rows) {
    s += "|";
    for (const auto& c : r.cells) s += " " + c + " |";
    s += "\n";
  }
  return s;
}

Report run_named_suite(const std::string& name, const SuiteGrid& grid) {
  if (name == "hilbert") return run_suite_hilbert(grid);
  if (name == "weil-index") return run_suite_weil_index(grid);
  if (name == "gauss") {
    Report g = run_suite_gauss_g(grid);
    Report h = run_suite_gauss_h(grid);
    for (auto& c : h.cases) g.add(std::move(c));
    g.suite = "gauss";
    g.elapsed_ms += h.elapsed_ms;
    g.sort_cases();
    return g;
  }
  if (name == "cocycle") return run_suite_cocycle(grid);
  if (name == "splitting") return run_suite_splitting(grid);
  if (name == "cosets") return run_suite_cosets(grid);
  if (name == "ps-dims") return run_suite_ps_dims(grid);
  if (name == "hom-condition") return run_suite_hom_condition(grid);
  if (name == "weil") return run_suite_even_weil(grid);
  if (name == "steinberg") return run_suite_steinberg_identity(grid);
  if (name == "rs-sum") return run_suite_rs_sum(grid);
  if (name == "theta") return run_suite_theta(grid);
  throw DomainError("unknown suite '" + name + "'");
}

std::string conductor_cell(const ConductorValue& c) {
  switch (c.kind) {
    case CondKind::Finite: return std::to_string(c.value);
    case CondKind::Infinite: return "inf";
    default: return "unknown";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact conductor and newform tables for the metaplectic cover of SL2(Q_p)"};
  app.require_subcommand(1);

  // ---- check ----------------------------------------------------------
  auto* check = app.add_subcommand("check", "run a verification suite");
  std::string check_suite;
  check->add_option("suite", check_suite,
                    "gauss|cosets|weil|rs-sum|theta|cocycle|splitting|weil-index|"
                    "hilbert|ps-dims|hom-condition|steinberg")
      ->required();
  std::vector<i64> check_primes;
  check->add_option("--p", check_primes, "primes (default 3 5)");
  int check_samples = 500;
  check->add_option("--samples", check_samples, "random sample count");
  std::uint64_t check_seed = 0x6d703273756974ULL;
  check->add_option("--seed", check_seed, "PRNG seed");
  int check_m = 6;
  check->add_option("--m", check_m, "maximal level m");
  std::string check_grid = "default";
  check->add_option("--grid", check_grid, "named parameter grid (default)");
  std::string check_format = "json";
  check->add_option("--format", check_format, "json|csv|md");
  std::string check_out;
  check->add_option("--out", check_out, "output path (default stdout)");

  // ---- gauss eval ------------------------------------------------------
  auto* gauss = app.add_subcommand("gauss", "Gauss sum evaluation");
  auto* gauss_eval = gauss->add_subcommand("eval", "evaluate g or h");
  std::string gauss_variant = "g";
  gauss_eval->add_option("--variant", gauss_variant, "g|h")->required();
  i64 gauss_p = 3;
  gauss_eval->add_option("--p", gauss_p, "odd prime")->required();
  int gauss_chi_level = 0;
  i64 gauss_chi_exp = 0;
  gauss_eval->add_option("--chi-level", gauss_chi_level, "conductor of chi");
  gauss_eval->add_option("--chi-exp", gauss_chi_exp, "exponent of chi");
  int gauss_psi_cond = 0;
  i64 gauss_psi_unit = 1;
  gauss_eval->add_option("--psi-conductor", gauss_psi_cond, "conductor of psi");
  gauss_eval->add_option("--psi-unit", gauss_psi_unit, "unit twist of psi");

  // ---- oracle ----------------------------------------------------------
  auto* oracle = app.add_subcommand("oracle", "brute-force oracles");
  auto* oracle_cosets = oracle->add_subcommand("cosets", "double coset enumeration");
  i64 oc_p = 3;
  int oc_m = 2;
  oracle_cosets->add_option("--p", oc_p)->required();
  oracle_cosets->add_option("--m", oc_m)->required();

  auto* oracle_weil = oracle->add_subcommand("weil", "even Weil fixed-space dimension");
  i64 ow_p = 3;
  int ow_eps = 0, ow_m = 0, ow_eta_level = 0;
  i64 ow_eta_exp = 0;
  std::string ow_chi = "1";
  oracle_weil->add_option("--p", ow_p)->required();
  oracle_weil->add_option("--eps", ow_eps);
  oracle_weil->add_option("--chi", ow_chi, "square class: 1|xi|pi|xipi");
  oracle_weil->add_option("--eta-conductor", ow_eta_level);
  oracle_weil->add_option("--eta-exp", ow_eta_exp);
  oracle_weil->add_option("--m", ow_m)->required();

  // ---- table -----------------------------------------------------------
  auto* table = app.add_subcommand("table", "emit dimension/newform/conductor tables");
  std::string table_kind;
  table->add_option("kind", table_kind, "dims|newforms|conductors")->required();
  i64 table_p = 3;
  table->add_option("--p", table_p, "odd prime")->required();
  std::string table_repr;
  table->add_option("--repr", table_repr, "representation descriptor (JSON)")
      ->required();
  int table_eps = 0;
  table->add_option("--eps", table_eps, "0|1");
  int table_eta_level = 0;
  i64 table_eta_exp = 0;
  table->add_option("--eta-level", table_eta_level);
  table->add_option("--eta-exp", table_eta_exp);
  int table_mmax = 6;
  table->add_option("--m-max", table_mmax);
  int table_eta_max = 2;
  table->add_option("--eta-max", table_eta_max, "eta conductor bound (conductors)");
  std::string table_format = "json";
  table->add_option("--format", table_format, "json|csv|md");
  std::string table_out;
  table->add_option("--out", table_out, "output path (default stdout)");

  // ---- conductor -------------------------------------------------------
  auto* cond = app.add_subcommand("conductor", "c^eps_eta and c^eps_min");
  i64 cond_p = 3;
  cond->add_option("--p", cond_p)->required();
  std::string cond_repr;
  cond->add_option("--repr", cond_repr)->required();
  int cond_eps = 0, cond_eta_level = 0;
  i64 cond_eta_exp = 0;
  cond->add_option("--eps", cond_eps);
  cond->add_option("--eta-level", cond_eta_level);
  cond->add_option("--eta-exp", cond_eta_exp);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*check) {
      SuiteGrid grid;
      if (!check_primes.empty()) grid.primes = check_primes;
      grid.samples = check_samples;
      grid.seed = check_seed;
      grid.max_m = check_m;
      if (check_grid != "default")
        throw DomainError("unknown grid '" + check_grid + "'");
      Report report = run_named_suite(check_suite, grid);
      std::string text = check_format == "csv"  ? report.to_csv()
                         : check_format == "md" ? report.to_markdown()
                                                : report.to_json();
      emit(text, check_out);
      return report.all_pass() ? 0 : 1;
    }

    if (*gauss_eval) {
      FieldConfig cfg = FieldConfig::make(gauss_p);
      auto ctx = std::make_shared<CycContext>(cfg.cyclotomic_order());
      UnitCharacter chi(cfg, gauss_chi_level, gauss_chi_exp);
      AdditiveCharacter psi = AdditiveCharacter::base(cfg).twist(
          ScaledPAdic::make(cfg.p(), -gauss_psi_cond, Rational(gauss_psi_unit)));
      CycNumber value = gauss_variant == "h" ? gauss_h_oracle(cfg, ctx, chi, psi)
                                             : gauss_g_oracle(cfg, ctx, chi, psi);
      ordered_json j;
      j["variant"] = gauss_variant;
      j["chi"] = ordered_json::parse(unit_character_to_json(chi));
      j["psi_conductor"] = psi.conductor();
      j["zero"] = value.is_zero();
      if (!value.is_zero()) {
        j["value"] = value.to_string();
        // |h|^2 for a lone twist can be irrational; report it exactly when
        // it is rational and mark it otherwise (the xi-pair sum always is).
        CycNumber mag = value * value.conj();
        if (auto r = mag.try_rational())
          j["mag_sq"] = r->to_string();
        else
          j["mag_sq"] = "non-rational: " + mag.to_string();
      } else {
        j["mag_sq"] = "0";
      }
      std::cout << j.dump(2) << "\n";
      return 0;
    }

    if (*oracle_cosets) {
      FieldConfig cfg = FieldConfig::make(oc_p);
      CosetOracleReport rep = coset_oracle(cfg, oc_m);
      ordered_json j;
      j["p"] = oc_p;
      j["m"] = oc_m;
      j["count"] = rep.coset_count;
      j["expected"] = rep.expected_count;
      ordered_json reps = ordered_json::array();
      for (const auto& g : coset_reps(cfg, 0, oc_m)) reps.push_back(g.to_string());
      j["reps"] = reps;
      j["verified"] = rep.pass();
      std::cout << j.dump(2) << "\n";
      return rep.pass() ? 0 : 1;
    }

    if (*oracle_weil) {
      FieldConfig cfg = FieldConfig::make(ow_p);
      auto ctx = std::make_shared<CycContext>(cfg.cyclotomic_order());
      WeilRepConfig rep{ow_eps, square_class_from_string(ow_chi),
                        UnitCharacter(cfg, ow_eta_level, ow_eta_exp)};
      int dim_oracle = even_weil_fixed_dim_oracle(cfg, ctx, rep, ow_m);
      DimValue formula = dim_fixed(cfg, EvenWeilRep{rep.chi},
                                   LevelQuery{ow_eps, rep.eta, ow_m});
      ordered_json j;
      j["p"] = ow_p;
      j["eps"] = ow_eps;
      j["chi"] = ow_chi;
      j["m"] = ow_m;
      j["dim_oracle"] = dim_oracle;
      j["dim_formula"] = formula.value;
      j["match"] = formula.known && dim_oracle == formula.value;
      std::cout << j.dump(2) << "\n";
      return j["match"] ? 0 : 1;
    }

    if (*table) {
      FieldConfig cfg = FieldConfig::make(table_p);
      ReprDescriptor repr = descriptor_from_json(cfg, table_repr);
      UnitCharacter eta(cfg, table_eta_level, table_eta_exp);
      std::vector<TableRow> rows;
      std::vector<std::string> header;
      ordered_json meta;
      meta["p"] = table_p;
      meta["repr"] = ordered_json::parse(descriptor_to_json(repr));
      meta["eps"] = table_eps;

      if (table_kind == "dims") {
        header = {"m", "dim"};
        meta["eta"] = ordered_json::parse(unit_character_to_json(eta));
        for (int m = 0; m <= table_mmax; ++m) {
          DimValue d = dim_fixed(cfg, repr, LevelQuery{table_eps, eta, m});
          TableRow r;
          r.json["m"] = m;
          if (d.known)
            r.json["dim"] = d.value;
          else
            r.json["dim"] = "unknown";
          r.cells = {std::to_string(m),
                     d.known ? std::to_string(d.value) : "unknown"};
          rows.push_back(r);
        }
      } else if (table_kind == "newforms") {
        header = {"m", "dim_new"};
        meta["eta"] = ordered_json::parse(unit_character_to_json(eta));
        NewformProfile prof = newform_profile(cfg, repr, table_eps, eta);
        meta["first_level"] = prof.defined ? ordered_json(prof.first_level)
                                           : ordered_json("inf");
        meta["window"] = prof.window;
        for (const auto& [m, d] : prof.dims_new) {
          TableRow r;
          r.json["m"] = m;
          r.json["dim_new"] = d;
          r.cells = {std::to_string(m), std::to_string(d)};
          rows.push_back(r);
        }
      } else if (table_kind == "conductors") {
        header = {"eta_level", "eta_exp", "c_eps_eta"};
        for (int n = 0; n <= table_eta_max; ++n) {
          i64 phi = n == 0 ? 1 : phi_prime_power(cfg.p(), n);
          for (i64 e = 0; e < phi; ++e) {
            UnitCharacter cand(cfg, n, e);
            if (cand.conductor() != n) continue;
            ConductorValue c = conductor(cfg, repr, table_eps, cand);
            TableRow r;
            r.json["eta_level"] = n;
            r.json["eta_exp"] = e;
            r.json["c_eps_eta"] = conductor_cell(c);
            r.cells = {std::to_string(n), std::to_string(e), conductor_cell(c)};
            rows.push_back(r);
          }
        }
      } else {
        throw DomainError("unknown table kind '" + table_kind + "'");
      }
      emit(render_table(header, rows, table_format, meta), table_out);
      return 0;
    }

    if (*cond) {
      FieldConfig cfg = FieldConfig::make(cond_p);
      ReprDescriptor repr = descriptor_from_json(cfg, cond_repr);
      UnitCharacter eta(cfg, cond_eta_level, cond_eta_exp);
      ConductorValue c = conductor(cfg, repr, cond_eps, eta);
      ordered_json j;
      j["repr"] = ordered_json::parse(descriptor_to_json(repr));
      j["eps"] = cond_eps;
      j["eta"] = ordered_json::parse(unit_character_to_json(eta));
      j["c_eps_eta"] = conductor_cell(c);
      j["c_eps_min"] = conductor_min(cfg, repr, cond_eps);
      std::cout << j.dump(2) << "\n";
      return 0;
    }
  } catch (const ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return 0;
}

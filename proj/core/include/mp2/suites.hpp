#pragma once

#include <cstdint>
#include <vector>

#include "mp2/report.hpp"
#include "mp2/common.hpp"

namespace mp2 {

/// Grid bounds for the verification suites. The defaults are the "default
/// grid": p in {3,5}, both eps, character conductors <= 2, c(sigma) <= 3,
/// m <= 6. The acceptance suite widens individual bounds per criterion.
struct SuiteGrid {
  std::vector<i64> primes{3, 5};
  int max_chi_conductor = 2;   // unit characters chi in Gauss sums
  int min_psi_conductor = -1;
  int max_psi_conductor = 2;
  int max_eta_conductor = 2;
  int max_mu_conductor = 2;
  int max_c_sigma = 3;
  int max_m = 6;
  int max_m_identity = 6;      // Steinberg exact-sequence identity levels
  int samples = 500;           // randomized checks
  std::uint64_t seed = 0x6d703273756974ULL;
  int threads = 0;             // 0 = respect MP2_THREADS, else hardware
};

int resolve_threads(int requested);

Report run_suite_hilbert(const SuiteGrid& grid);
Report run_suite_weil_index(const SuiteGrid& grid);
Report run_suite_gauss_g(const SuiteGrid& grid);
Report run_suite_gauss_h(const SuiteGrid& grid);
Report run_suite_cocycle(const SuiteGrid& grid);
Report run_suite_splitting(const SuiteGrid& grid);
Report run_suite_cosets(const SuiteGrid& grid);
Report run_suite_ps_dims(const SuiteGrid& grid);
Report run_suite_hom_condition(const SuiteGrid& grid);
Report run_suite_even_weil(const SuiteGrid& grid);
Report run_suite_steinberg_identity(const SuiteGrid& grid);
Report run_suite_rs_sum(const SuiteGrid& grid);
Report run_suite_theta(const SuiteGrid& grid);

}  // namespace mp2

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace mp2 {

/// One verified case inside a suite run. Pass means expected == actual,
/// byte for byte; expected-fail cases carry a note and count as pass when
/// they fail exactly as documented.
struct CaseResult {
  std::string key;       // canonical, sorted on before emission
  std::string expected;
  std::string actual;
  bool pass = false;
  std::string note;
};

struct Report {
  std::string suite;
  std::string params;
  std::uint64_t seed = 0;
  std::vector<CaseResult> cases;
  double elapsed_ms = 0.0;

  int passed() const;
  int failed() const;
  bool all_pass() const { return failed() == 0; }
  void add(CaseResult c) { cases.push_back(std::move(c)); }
  void sort_cases();

  std::string to_json() const;  // schema mp2.report.v1
  std::string to_csv() const;
  std::string to_markdown() const;
};

}  // namespace mp2

#include "mp2/report.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

namespace mp2 {

int Report::passed() const {
  int n = 0;
  for (const auto& c : cases) n += c.pass ? 1 : 0;
  return n;
}

int Report::failed() const { return (int)cases.size() - passed(); }

void Report::sort_cases() {
  std::stable_sort(cases.begin(), cases.end(),
                   [](const CaseResult& a, const CaseResult& b) { return a.key < b.key; });
}

std::string Report::to_json() const {
  nlohmann::ordered_json j;
  j["schema"] = "mp2.report.v1";
  j["suite"] = suite;
  j["params"] = params;
  j["seed"] = seed;
  j["summary"] = {{"total", cases.size()},
                  {"passed", passed()},
                  {"failed", failed()}};
  j["elapsed_ms"] = elapsed_ms;
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& c : cases) {
    nlohmann::ordered_json cj;
    cj["key"] = c.key;
    cj["expected"] = c.expected;
    cj["actual"] = c.actual;
    cj["pass"] = c.pass;
    if (!c.note.empty()) cj["note"] = c.note;
    arr.push_back(cj);
  }
  j["cases"] = arr;
  return j.dump(2) + "\n";
}

namespace {
std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += "\"\"";
    else out += ch;
  }
  out += "\"";
  return out;
}
}  // namespace

std::string Report::to_csv() const {
  std::string out = "key,expected,actual,pass,note\n";
  for (const auto& c : cases) {
    out += csv_escape(c.key) + "," + csv_escape(c.expected) + "," +
           csv_escape(c.actual) + "," + (c.pass ? "true" : "false") + "," +
           csv_escape(c.note) + "\n";
  }
  return out;
}

std::string Report::to_markdown() const {
  std::string out = "# " + suite + "\n\n";
  if (!params.empty()) out += "params: `" + params + "`\n\n";
  out += "| key | expected | actual | pass |\n|---|---|---|---|\n";
  for (const auto& c : cases) {
    out += "| " + c.key + " | " + c.expected + " | " + c.actual + " | " +
           (c.pass ? "yes" : "no") + " |\n";
  }
  out += "\n" + std::to_string(passed()) + "/" + std::to_string(cases.size()) +
         " passed\n";
  return out;
}

}  // namespace mp2

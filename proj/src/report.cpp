#include "mvmlab/report.hpp"

namespace mvmlab {

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::Inconclusive: return "INCONCLUSIVE";
    case Verdict::NotApplicable: return "N/A";
  }
  return "?";
}

void Report::add(std::string name, bool ok, std::string detail) {
  checks_.push_back(
      {std::move(name), ok ? Verdict::Pass : Verdict::Fail, std::move(detail)});
}

void Report::merge(const Report& other, std::string_view prefix) {
  for (Check c : other.checks_) {
    c.name = std::string(prefix) + c.name;
    checks_.push_back(std::move(c));
  }
}

bool Report::passed() const { return failures() == 0; }

std::size_t Report::failures() const {
  std::size_t n = 0;
  for (const Check& c : checks_) n += c.verdict == Verdict::Fail;
  return n;
}

const Check* Report::find(std::string_view name) const {
  for (const Check& c : checks_) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

std::string Report::render() const {
  std::string out;
  for (const Check& c : checks_) {
    out += verdict_name(c.verdict);
    out += ' ';
    out += c.name;
    if (!c.detail.empty()) {
      out += ": ";
      out += c.detail;
    }
    out += '\n';
  }
  return out;
}

}  // namespace mvmlab

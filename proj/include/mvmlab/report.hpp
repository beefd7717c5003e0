#ifndef MVMLAB_REPORT_HPP
#define MVMLAB_REPORT_HPP

#include <string>
#include <string_view>
#include <vector>

namespace mvmlab {

enum class Verdict { Pass, Fail, Inconclusive, NotApplicable };

std::string_view verdict_name(Verdict v);

struct Check {
  std::string name;
  Verdict verdict = Verdict::Pass;
  std::string detail;
};

/// Named checks rendered one per line as `PASS name: detail`.
class Report {
 public:
  void add(std::string name, bool ok, std::string detail = {});
  void add(Check check) { checks_.push_back(std::move(check)); }
  void merge(const Report& other, std::string_view prefix = {});

  const std::vector<Check>& checks() const { return checks_; }
  bool passed() const;
  std::size_t failures() const;
  const Check* find(std::string_view name) const;

  std::string render() const;

 private:
  std::vector<Check> checks_;
};

}  // namespace mvmlab

#endif  // MVMLAB_REPORT_HPP

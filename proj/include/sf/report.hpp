#pragma once

#include <string>
#include <vector>

namespace sf {

enum class Verdict { pass, fail, undetermined };

inline const char* verdict_str(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    default:
      return "undetermined";
  }
}

struct Check {
  std::string id;
  std::string anchor;  // what statement the check exercises
  Verdict verdict = Verdict::pass;
  std::string details;
};

struct VerificationReport {
  std::string suite;
  std::vector<Check> checks;

  void add(std::string id, std::string anchor, bool ok, std::string details = {}) {
    checks.push_back({std::move(id), std::move(anchor), ok ? Verdict::pass : Verdict::fail, std::move(details)});
  }
  void add(std::string id, std::string anchor, Verdict v, std::string details = {}) {
    checks.push_back({std::move(id), std::move(anchor), v, std::move(details)});
  }
  void merge(const VerificationReport& o) {
    for (auto& c : o.checks) checks.push_back(c);
  }
  Verdict overall() const {
    Verdict v = Verdict::pass;
    for (auto& c : checks) {
      if (c.verdict == Verdict::fail) return Verdict::fail;
      if (c.verdict == Verdict::undetermined) v = Verdict::undetermined;
    }
    return v;
  }
  bool passed() const { return overall() == Verdict::pass; }
};

}  // namespace sf

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace commakit {

// Raised for input that cannot be checked at all (bad references, budget).
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BudgetExceeded : InputError {
  explicit BudgetExceeded(const std::string& what)
      : InputError("size budget exceeded: " + what) {}
};

struct Check {
  std::string label;
  bool pass = true;
  bool structural = false;
  std::size_t failures = 0;
  std::size_t sites = 0;
  std::vector<std::string> witnesses;
};

class CheckReport {
 public:
  static constexpr std::size_t kMaxWitnesses = 8;

  std::string subject;
  std::vector<Check> checks;
  std::string verdict;  // optional summary word, e.g. "split" or "Frobenius"

  CheckReport() = default;
  explicit CheckReport(std::string s) : subject(std::move(s)) {}

  bool ok() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }

  Check& entry(const std::string& label, bool structural = false) {
    for (auto& c : checks)
      if (c.label == label) return c;
    checks.push_back(Check{label, true, structural, 0, 0, {}});
    return checks.back();
  }

  // Records one evaluated site of `label`.
  void site(const std::string& label, bool holds, const std::string& witness = {},
            bool structural = false) {
    Check& c = entry(label, structural);
    ++c.sites;
    if (!holds) fail_into(c, witness);
  }

  void fail(const std::string& label, const std::string& witness, bool structural = false) {
    Check& c = entry(label, structural);
    ++c.sites;
    fail_into(c, witness);
  }

  void touch(const std::string& label, bool structural = false) { entry(label, structural); }

  const Check* find(const std::string& label) const {
    for (const auto& c : checks)
      if (c.label == label) return &c;
    return nullptr;
  }

  bool passed(const std::string& label) const {
    const Check* c = find(label);
    return c && c->pass;
  }

  std::size_t failure_count() const {
    std::size_t n = 0;
    for (const auto& c : checks) n += c.failures;
    return n;
  }

  std::vector<std::string> failed_labels() const {
    std::vector<std::string> out;
    for (const auto& c : checks)
      if (!c.pass) out.push_back(c.label);
    return out;
  }

  // Appends other's checks, prefixing labels when a prefix is given.
  void merge(const CheckReport& other, const std::string& prefix = {}) {
    for (const auto& c : other.checks) {
      Check copy = c;
      if (!prefix.empty()) copy.label = prefix + copy.label;
      Check& into = entry(copy.label, copy.structural);
      into.sites += copy.sites;
      into.failures += copy.failures;
      into.pass = into.pass && copy.pass;
      for (auto& w : copy.witnesses)
        if (into.witnesses.size() < kMaxWitnesses) into.witnesses.push_back(std::move(w));
    }
  }

 private:
  static void fail_into(Check& c, const std::string& witness) {
    c.pass = false;
    ++c.failures;
    if (c.witnesses.size() < kMaxWitnesses) c.witnesses.push_back(witness);
  }
};

}  // namespace commakit

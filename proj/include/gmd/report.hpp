#ifndef GMD_REPORT_HPP
#define GMD_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gmd/catalog.hpp"
#include "gmd/lie_core.hpp"

namespace gmd {

/// One executed check. passed is max_residual <= tolerance.
struct CheckResult {
  std::string name;
  bool passed = true;
  double max_residual = 0.0;
  double tolerance = 0.0;
  std::size_t n_evaluated = 0;
  std::size_t n_skipped = 0;
  std::optional<Vec7> worst_sample;
  std::string note;
};

/// Accumulates residuals; non-finite residuals count as failures.
class CheckBuilder {
public:
  CheckBuilder(std::string name, double tolerance);

  void add(double residual, const std::optional<Vec7> &sample = std::nullopt);
  void skip() { ++skipped_; }
  void fail(const std::optional<Vec7> &sample, const std::string &why);
  CheckBuilder &note(const std::string &text);

  CheckResult finish() const;

private:
  CheckResult r_;
  std::size_t skipped_ = 0;
  bool nonfinite_ = false;
  bool have_worst_ = false;
};

struct VerificationReport {
  std::string family;
  FamilyParams params;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  std::vector<CheckResult> checks;
  std::vector<std::string> unsupported;
  double wall_time_ms = 0.0;

  bool passed() const;
};

} // namespace gmd

#endif

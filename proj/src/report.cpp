#include "gmd/report.hpp"

#include <cmath>
#include <limits>

namespace gmd {

CheckBuilder::CheckBuilder(std::string name, double tolerance) {
  r_.name = std::move(name);
  r_.tolerance = tolerance;
}

void CheckBuilder::add(double residual, const std::optional<Vec7> &sample) {
  ++r_.n_evaluated;
  if (!std::isfinite(residual)) {
    if (!nonfinite_)
      r_.worst_sample = sample;
    nonfinite_ = true;
    r_.max_residual = std::numeric_limits<double>::infinity();
    return;
  }
  if (!nonfinite_ && (!have_worst_ || residual > r_.max_residual)) {
    r_.max_residual = residual;
    r_.worst_sample = sample;
    have_worst_ = true;
  }
}

void CheckBuilder::fail(const std::optional<Vec7> &sample, const std::string &why) {
  add(std::numeric_limits<double>::infinity(), sample);
  if (r_.note.empty())
    r_.note = why;
}

CheckBuilder &CheckBuilder::note(const std::string &text) {
  if (!r_.note.empty())
    r_.note += "; ";
  r_.note += text;
  return *this;
}

CheckResult CheckBuilder::finish() const {
  CheckResult out = r_;
  out.n_skipped = skipped_;
  out.passed = !nonfinite_ && out.max_residual <= out.tolerance;
  if (out.n_evaluated == 0) {
    out.passed = false;
    out.note += out.note.empty() ? "no sample evaluated" : "; no sample evaluated";
  }
  return out;
}

bool VerificationReport::passed() const {
  for (const auto &c : checks)
    if (!c.passed)
      return false;
  return true;
}

} // namespace gmd

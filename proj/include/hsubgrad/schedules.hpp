#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace hsubgrad {

// Analytic class of a step-size sequence.
struct StepClass {
  bool diminishing = false;
  bool nonsummable = false;
  bool square_summable = false;

  friend bool operator==(const StepClass&, const StepClass&) = default;
};

enum class ScheduleFamily { Harmonic, PowerLaw, SqrtHarmonic, ConstantOverLog, Table };

// Predetermined positive step sizes lambda_k, k >= 0. Built-in families carry
// a declared class that is derived from the closed form, never user-supplied.
class StepSchedule {
 public:
  // c / (k + 1)
  static StepSchedule harmonic(double c);
  // c / (k + 1)^alpha, alpha in (1/2, 1]
  static StepSchedule power_law(double c, double alpha);
  // c / sqrt(k + 1)
  static StepSchedule sqrt_harmonic(double c);
  // c / ln(k + e)
  static StepSchedule constant_over_log(double c);
  // Explicit values; the last entry repeats once the table is exhausted.
  static StepSchedule table(std::vector<double> values);

  // Parses "harmonic:c=1.0", "powerlaw:c=1.0,alpha=0.75", "sqrt:c=0.5",
  // "log:c=1.0" or "table:0.5,0.4,0.3". Throws ConfigError.
  static StepSchedule parse(std::string_view text);

  double step(std::size_t k) const;
  ScheduleFamily family() const { return family_; }
  const StepClass& declared_class() const { return declared_; }
  // Canonical text form; parse(spec()) reproduces the schedule exactly.
  std::string spec() const;

 private:
  StepSchedule(ScheduleFamily family, double c, double alpha,
               std::vector<double> table);

  ScheduleFamily family_;
  double c_;
  double alpha_;
  std::vector<double> table_;
  StepClass declared_;
};

struct PartialSums {
  double sum = 0.0;
  double sum_sq = 0.0;
};

// Kahan-compensated sum of lambda_k and lambda_k^2 over k = 0..n inclusive.
PartialSums partial_sums(const StepSchedule& s, std::size_t n);

// Finite-horizon evidence for the analytic class. The local decay exponent
// p = log(lambda_{n/10} / lambda_n) / log(10) separates the classes:
// diminishing iff p > 0, nonsummable iff p <= 1, square-summable iff p > 1/2.
// Advisory only: no finite prefix can prove divergence.
struct ClassEvidence {
  double decay_exponent = 0.0;
  double sum = 0.0;
  double sum_sq = 0.0;
  StepClass inferred;
};

ClassEvidence infer_class(const StepSchedule& s, std::size_t n = 1'000'000);

class KahanSum {
 public:
  void add(double v) {
    const double y = v - carry_;
    const double t = total_ + y;
    carry_ = (t - total_) - y;
    total_ = t;
  }
  double value() const { return total_; }

 private:
  double total_ = 0.0;
  double carry_ = 0.0;
};

}  // namespace hsubgrad

#include "hsubgrad/schedules.hpp"

#include <cmath>
#include <numbers>
#include <optional>
#include <utility>

#include "hsubgrad/error.hpp"
#include "hsubgrad/numfmt.hpp"

namespace hsubgrad {

namespace {

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw Error(ErrorCode::ConfigError, std::string(what) + " must be a positive finite number");
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

double number(std::string_view text, std::string_view schedule) {
  double v = 0.0;
  if (!parse_double(text, v)) {
    throw Error(ErrorCode::ConfigError,
                "bad number '" + std::string(text) + "' in schedule '" + std::string(schedule) + "'");
  }
  return v;
}

}  // namespace

StepSchedule::StepSchedule(ScheduleFamily family, double c, double alpha,
                           std::vector<double> table)
    : family_(family), c_(c), alpha_(alpha), table_(std::move(table)) {
  switch (family_) {
    case ScheduleFamily::Harmonic: declared_ = {true, true, true}; break;
    case ScheduleFamily::PowerLaw: declared_ = {true, true, alpha_ > 0.5}; break;
    case ScheduleFamily::SqrtHarmonic: declared_ = {true, true, false}; break;
    case ScheduleFamily::ConstantOverLog: declared_ = {true, true, false}; break;
    // Constant tail: neither diminishing nor square-summable.
    case ScheduleFamily::Table: declared_ = {false, true, false}; break;
  }
}

StepSchedule StepSchedule::harmonic(double c) {
  require_positive(c, "harmonic c");
  return {ScheduleFamily::Harmonic, c, 1.0, {}};
}

StepSchedule StepSchedule::power_law(double c, double alpha) {
  require_positive(c, "powerlaw c");
  if (!(alpha > 0.5 && alpha <= 1.0)) {
    throw Error(ErrorCode::ConfigError, "powerlaw alpha must lie in (0.5, 1]");
  }
  return {ScheduleFamily::PowerLaw, c, alpha, {}};
}

StepSchedule StepSchedule::sqrt_harmonic(double c) {
  require_positive(c, "sqrt c");
  return {ScheduleFamily::SqrtHarmonic, c, 0.5, {}};
}

StepSchedule StepSchedule::constant_over_log(double c) {
  require_positive(c, "log c");
  return {ScheduleFamily::ConstantOverLog, c, 0.0, {}};
}

StepSchedule StepSchedule::table(std::vector<double> values) {
  if (values.empty()) throw Error(ErrorCode::ConfigError, "step table is empty");
  for (double v : values) require_positive(v, "table entry");
  return {ScheduleFamily::Table, 0.0, 0.0, std::move(values)};
}

StepSchedule StepSchedule::parse(std::string_view text) {
  text = trim(text);
  const auto colon = text.find(':');
  const std::string_view kind = trim(text.substr(0, colon));
  const std::string_view rest =
      colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);

  if (kind == "table") {
    std::vector<double> values;
    for (auto item : split(rest, ',')) {
      if (item.empty() || item == "...") continue;
      values.push_back(number(item, text));
    }
    return table(std::move(values));
  }

  std::optional<double> c;
  std::optional<double> alpha;
  for (auto item : split(rest, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorCode::ConfigError, "expected key=value in schedule '" + std::string(text) + "'");
    }
    const auto key = trim(item.substr(0, eq));
    std::optional<double>* slot = key == "c"                              ? &c
                                  : key == "alpha" && kind == "powerlaw" ? &alpha
                                                                          : nullptr;
    if (slot == nullptr) {
      throw Error(ErrorCode::ConfigError, "unknown schedule parameter '" + std::string(key) + "'");
    }
    if (slot->has_value()) {
      throw Error(ErrorCode::ConfigError, "duplicate schedule parameter '" + std::string(key) + "'");
    }
    *slot = number(trim(item.substr(eq + 1)), text);
  }
  const bool known = kind == "harmonic" || kind == "powerlaw" || kind == "sqrt" || kind == "log";
  if (known && !c) {
    throw Error(ErrorCode::ConfigError, "schedule '" + std::string(text) + "' needs c=");
  }
  if (kind == "powerlaw" && !alpha) {
    throw Error(ErrorCode::ConfigError, "schedule '" + std::string(text) + "' needs alpha=");
  }
  if (kind == "harmonic") return harmonic(*c);
  if (kind == "powerlaw") return power_law(*c, *alpha);
  if (kind == "sqrt") return sqrt_harmonic(*c);
  if (kind == "log") return constant_over_log(*c);
  throw Error(ErrorCode::ConfigError, "unknown schedule family '" + std::string(kind) + "'");
}

double StepSchedule::step(std::size_t k) const {
  const double n = static_cast<double>(k) + 1.0;
  switch (family_) {
    case ScheduleFamily::Harmonic: return c_ / n;
    case ScheduleFamily::PowerLaw: return c_ / std::pow(n, alpha_);
    case ScheduleFamily::SqrtHarmonic: return c_ / std::sqrt(n);
    case ScheduleFamily::ConstantOverLog:
      return c_ / std::log(static_cast<double>(k) + std::numbers::e);
    case ScheduleFamily::Table: return k < table_.size() ? table_[k] : table_.back();
  }
  return 0.0;
}

std::string StepSchedule::spec() const {
  switch (family_) {
    case ScheduleFamily::Harmonic: return "harmonic:c=" + format_double(c_);
    case ScheduleFamily::PowerLaw:
      return "powerlaw:c=" + format_double(c_) + ",alpha=" + format_double(alpha_);
    case ScheduleFamily::SqrtHarmonic: return "sqrt:c=" + format_double(c_);
    case ScheduleFamily::ConstantOverLog: return "log:c=" + format_double(c_);
    case ScheduleFamily::Table: {
      std::string out = "table:";
      for (std::size_t i = 0; i < table_.size(); ++i) {
        if (i) out += ',';
        out += format_double(table_[i]);
      }
      return out;
    }
  }
  return {};
}

PartialSums partial_sums(const StepSchedule& s, std::size_t n) {
  KahanSum sum;
  KahanSum sum_sq;
  for (std::size_t k = 0; k <= n; ++k) {
    const double l = s.step(k);
    sum.add(l);
    sum_sq.add(l * l);
  }
  return {sum.value(), sum_sq.value()};
}

ClassEvidence infer_class(const StepSchedule& s, std::size_t n) {
  if (n < 10) throw Error(ErrorCode::InvalidArgument, "infer_class needs n >= 10");
  ClassEvidence ev;
  const auto sums = partial_sums(s, n);
  ev.sum = sums.sum;
  ev.sum_sq = sums.sum_sq;
  ev.decay_exponent = std::log(s.step(n / 10) / s.step(n)) / std::log(10.0);
  constexpr double slack = 1e-6;
  ev.inferred.diminishing = ev.decay_exponent > 1e-2 && s.step(n) < s.step(0);
  ev.inferred.nonsummable = ev.decay_exponent <= 1.0 + slack;
  ev.inferred.square_summable = ev.decay_exponent > 0.5 + slack;
  return ev;
}

}  // namespace hsubgrad

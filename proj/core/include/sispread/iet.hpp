#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "sispread/rng.hpp"

namespace sispread {

/// Density alpha * t_min^alpha / t^(alpha+1) on [t_min, inf).
struct PowerLaw {
  double t_min;
  double alpha;
  friend bool operator==(const PowerLaw&, const PowerLaw&) = default;
};

/// Exponential with mean lambda shifted to start at t_min.
struct ShiftedExp {
  double t_min;
  double lambda;
  friend bool operator==(const ShiftedExp&, const ShiftedExp&) = default;
};

/// Inter-event-time law. Both variants are supported on [t_min, inf).
class IetDistribution {
 public:
  /// Throws std::invalid_argument unless t_min > 0 and alpha > 0.
  static IetDistribution power_law(double t_min, double alpha);
  /// Throws std::invalid_argument unless t_min > 0 and lambda > t_min.
  static IetDistribution shifted_exp(double t_min, double lambda);

  /// Config grammar: "pow:t_min:alpha", "exp:t_min:lambda" or
  /// "exp:match:pow:t_min:alpha". Throws std::invalid_argument.
  static IetDistribution parse(std::string_view text);

  const std::variant<PowerLaw, ShiftedExp>& law() const { return law_; }
  bool is_power_law() const { return std::holds_alternative<PowerLaw>(law_); }
  double t_min() const;

  /// Inverse-CDF transform of u in (0, 1].
  double sample_at(double u) const;
  double sample(Rng& rng) const { return sample_at(uniform_open_closed(rng)); }

  /// Empty when the mean diverges (power law with alpha <= 1).
  std::optional<double> analytic_mean() const;

  /// Grammar form with parameters at 9 significant digits.
  std::string to_string() const;

  friend bool operator==(const IetDistribution&, const IetDistribution&) = default;

 private:
  explicit IetDistribution(std::variant<PowerLaw, ShiftedExp> law) : law_(law) {}
  std::variant<PowerLaw, ShiftedExp> law_;
};

/// Shifted exponential with the same t_min and the same mean as `p`.
/// Throws std::invalid_argument when the power law has no finite mean.
IetDistribution match_mean(const PowerLaw& p);

}  // namespace sispread

#include "sispread/iet.hpp"

#include "sispread/format.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace sispread {

IetDistribution IetDistribution::power_law(double t_min, double alpha) {
  if (!(t_min > 0.0) || !(alpha > 0.0)) {
    throw std::invalid_argument("power law needs t_min > 0 and alpha > 0");
  }
  return IetDistribution(PowerLaw{t_min, alpha});
}

IetDistribution IetDistribution::shifted_exp(double t_min, double lambda) {
  if (!(t_min > 0.0) || !(lambda > t_min)) {
    throw std::invalid_argument("shifted exponential needs t_min > 0 and lambda > t_min");
  }
  return IetDistribution(ShiftedExp{t_min, lambda});
}

double IetDistribution::t_min() const {
  return std::visit([](const auto& d) { return d.t_min; }, law_);
}

double IetDistribution::sample_at(double u) const {
  if (const auto* p = std::get_if<PowerLaw>(&law_)) return p->t_min * std::pow(u, -1.0 / p->alpha);
  const auto& e = std::get<ShiftedExp>(law_);
  return e.t_min + (e.lambda - e.t_min) * -std::log(u);
}

std::optional<double> IetDistribution::analytic_mean() const {
  if (const auto* p = std::get_if<PowerLaw>(&law_)) {
    if (p->alpha <= 1.0) return std::nullopt;
    return p->t_min * p->alpha / (p->alpha - 1.0);
  }
  return std::get<ShiftedExp>(law_).lambda;
}

IetDistribution match_mean(const PowerLaw& p) {
  auto mean = IetDistribution::power_law(p.t_min, p.alpha).analytic_mean();
  if (!mean) throw std::invalid_argument("power law with alpha <= 1 has no finite mean to match");
  return IetDistribution::shifted_exp(p.t_min, *mean);
}

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t pos = 0;
  while (true) {
    auto next = text.find(sep, pos);
    parts.push_back(text.substr(pos, next - pos));
    if (next == std::string_view::npos) return parts;
    pos = next + 1;
  }
}

double number(std::string_view token, std::string_view whole) {
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
    throw std::invalid_argument("bad number in distribution '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

IetDistribution IetDistribution::parse(std::string_view text) {
  auto parts = split(text, ':');
  if (parts.size() == 3 && parts[0] == "pow") {
    return power_law(number(parts[1], text), number(parts[2], text));
  }
  if (parts.size() == 3 && parts[0] == "exp") {
    return shifted_exp(number(parts[1], text), number(parts[2], text));
  }
  if (parts.size() == 5 && parts[0] == "exp" && parts[1] == "match" && parts[2] == "pow") {
    return match_mean(PowerLaw{number(parts[3], text), number(parts[4], text)});
  }
  throw std::invalid_argument("unrecognised distribution '" + std::string(text) +
                              "' (expected pow:t_min:alpha, exp:t_min:lambda or exp:match:pow:t_min:alpha)");
}

std::string IetDistribution::to_string() const {
  if (const auto* p = std::get_if<PowerLaw>(&law_)) {
    return "pow:" + format_sig(p->t_min) + ":" + format_sig(p->alpha);
  }
  const auto& e = std::get<ShiftedExp>(law_);
  return "exp:" + format_sig(e.t_min) + ":" + format_sig(e.lambda);
}

}  // namespace sispread

#pragma once

// Registry of named identity checks, runner, and the static coverage table
// from covered identities to check names.

#include "factorial_transforms/verify/check_support.hpp"
#include "factorial_transforms/verify/checks_exact.hpp"
#include "factorial_transforms/verify/checks_numeric.hpp"

#include <chrono>
#include <future>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ft::verify {

class UnknownCheck : public std::invalid_argument {
 public:
  explicit UnknownCheck(const std::string& name) : std::invalid_argument("unknown check '" + name + "'") {}
};

namespace tolerance {
inline constexpr double quadrature = 1e-7;
inline constexpr double series = 1e-8;
inline constexpr double orthogonality = 1e-8;
inline constexpr double informational = std::numeric_limits<double>::infinity();
}  // namespace tolerance

namespace detail {

inline CheckSpec exact(std::string name, std::string description, Outcome (*body)(Rng&)) {
  return CheckSpec{std::move(name), Layer::exact, std::move(description), 0.0, false, body};
}

inline CheckSpec numeric(std::string name, std::string description, double tol, Outcome (*body)(Rng&)) {
  return CheckSpec{std::move(name), Layer::numeric, std::move(description), tol, false, body};
}

inline CheckSpec informational(std::string name, Layer layer, std::string description, Outcome (*body)(Rng&)) {
  return CheckSpec{std::move(name), layer, std::move(description), tolerance::informational, true, body};
}

inline std::vector<CheckSpec> build_registry() {
  namespace ec = exact_checks;
  namespace nc = numeric_checks;
  using tolerance::orthogonality;
  using tolerance::quadrature;
  using tolerance::series;
  std::vector<CheckSpec> r;

  // Definitions
  r.push_back(exact("eq01_fft_definition_roundtrip", "Eqs. (1)-(2): ifft(fft(p)) = p, 300 polynomials, degree <= 20", ec::fft_roundtrip));
  r.push_back(exact("eq03_rft_definition_roundtrip", "Eqs. (3)-(4): irft(rft(p)) = p, 300 polynomials, degree <= 20", ec::rft_roundtrip));
  r.push_back(numeric("eq05_newton_taylor_duality", "Eq. (5): Newton sum of Taylor coefficients equals the exact FFT", 1e-12, nc::newton_taylor_duality));
  r.push_back(numeric("eq06_ifft_series", "Eq. (6): e^-x sum f(n) x^n / n! equals the exact inverse FFT", series, nc::ifft_series_check));
  r.push_back(numeric("eq07_rft_quadrature", "Eq. (7): Gauss-Laguerre RFT of polynomials and monomials t^n vs rising factorials", quadrature, nc::rft_quadrature));
  r.push_back(numeric("eq08_mellin_consistency", "Eq. (8): Gamma(s) RFT(f)(s) equals the Mellin transform of f e^-t", series, nc::mellin_consistency));
  r.push_back(numeric("eq09_irft_series", "Eq. (9): e^x sum f(-n) (-x)^n / n! equals the exact inverse RFT", series, nc::irft_series_check));

  // Symmetry, linearity, derivatives
  r.push_back(exact("eq10_reflection", "Eqs. (10)-(11): RFT(f(t))(x) = FFT(f(-t))(-x) at 10 rational points", ec::reflection));
  r.push_back(exact("eq12_linearity", "Eqs. (12)-(13): FFT and FFT^-1 are linear", ec::linearity));
  r.push_back(exact("eq14_falling_power_rules", "Eqs. (14)-(15): D^k x^n and Delta^k (x)_n correspond", ec::falling_power_rules));
  r.push_back(exact("eq16_fft_derivative_commutation", "Eq. (16): FFT(D^k f) = Delta^k FFT(f)", ec::fft_derivative_commutation));
  r.push_back(exact("eq17_ifft_difference_commutation", "Eq. (17): FFT^-1(Delta^k f) = D^k FFT^-1(f)", ec::ifft_difference_commutation));
  r.push_back(exact("eq18_ifft_log1p_derivative", "Eq. (18): FFT^-1(D^k f) = log(1+D)^k FFT^-1(f)", ec::ifft_log1p_derivative));
  r.push_back(exact("eq19_fft_expdiff", "Eq. (19): FFT(Delta^k f) = (e^Delta - 1)^k FFT(f)", ec::fft_expdiff));
  r.push_back(exact("eq20_antiderivative_kernel_relative", "Eqs. (20)-(23): negative orders, equal up to the operator kernel", ec::antiderivative_kernel_relative));
  r.push_back(numeric("eq24_ifft_integral_sum", "Eq. (24): integral of FFT^-1(r^n) over (0, inf) = sum r^n, r in {1/2, 1/3}", series, nc::ifft_integral_sum));

  // Operator expansions
  r.push_back(exact("eq25_fft_operator_expansion", "Eqs. (25)-(26): FFT and FFT^-1 as operator series", ec::fft_operator_expansion));
  r.push_back(exact("eq27_touchard_ladder", "Eq. (27): log(1+D)^k T_n = (n)_k T_(n-k)", ec::touchard_ladder));
  r.push_back(exact("eq28_z_ladder", "Eq. (28): (e^Delta - 1)^k Z_n = (n)_k Z_(n-k)", ec::z_ladder));
  r.push_back(exact("eq29_touchard_series_expansion", "Eqs. (29), (31): Touchard expansion about x0 in {0, 1, -2, 1/2}", ec::touchard_series_expansion));
  r.push_back(exact("eq30_z_series_expansion", "Eqs. (30), (32): Z_n expansion about x0 in {0, 1, -2, 1/2}", ec::z_series_expansion));

  // Shifting, orthogonality, basis shifts
  r.push_back(exact("eq33_fft_shift_exp_difference", "Eq. (33): FFT(f(x+a)) = e^(a Delta) FFT(f)", ec::fft_shift_exp_difference));
  r.push_back(exact("eq34_ifft_shift_binomial_derivative", "Eq. (34): FFT^-1(f(x+a)) = (1+D)^a FFT^-1(f)", ec::ifft_shift_binomial_derivative));
  r.push_back(exact("eq35_fft_outer_shift", "Eq. (35): FFT in the shift parameter of FFT(f(x+a))", ec::fft_outer_shift));
  r.push_back(exact("eq36_ifft_inner_shift", "Eq. (36): FFT^-1 in the shift parameter of FFT^-1(f(x+a))", ec::ifft_inner_shift));
  r.push_back(exact("eq37_fft_shifted_power", "Eq. (37): FFT((x+a)^n) = n! L_n^(x-n)(-a) = a^n c_n(x,-a)", ec::fft_shifted_power));
  r.push_back(exact("eq38_ifft_shifted_falling", "Eq. (38): FFT^-1((x+a)_n) = n! L_n^(a-n)(-x) = x^n c_n(a,-x)", ec::ifft_shifted_falling));
  r.push_back(informational("eq37_38_printed_charlier_informational", Layer::exact,
                            "Eqs. (37)-(38) with the printed factor (-a)^n", ec::charlier_printed_sign));
  r.push_back(numeric("eq39_charlier_orthogonality", "Eq. (39): Charlier orthogonality, a = 1, n, m <= 5, K = 60", orthogonality, nc::charlier_orthogonality));
  r.push_back(exact("eq40_ifft_basis_shift", "Eq. (40): FFT^-1((x)_n f(x)) = x^n FFT^-1(f(x+n))", ec::ifft_basis_shift));
  r.push_back(exact("eq41_fft_basis_shift", "Eq. (41): FFT(t^n g(t))(x) = (x)_n FFT(g)(x-n)", ec::fft_basis_shift));

  // Binomial transform, convolution, scaling
  r.push_back(exact("eq44_binomial_transform_chain", "Eqs. (43)-(45): BT(f) = FFT(e^x FFT^-1(f)) and its inverse chain", ec::binomial_transform_chain));
  r.push_back(exact("eq46_inverse_binomial_transform", "Eq. (46): BT^-1(f) = FFT(e^-x FFT^-1(f))", ec::inverse_binomial_transform_chain));
  r.push_back(exact("eq47_binomial_convolution_egf", "Eqs. (47)-(49): conv(f,g)(k) = k! [x^k] EGF(f) EGF(g), k <= 30", ec::binomial_convolution_egf));
  r.push_back(exact("eq50_conv_one_is_bt", "Eq. (50): conv(1, g) = BT(g)", ec::conv_one_is_bt));
  r.push_back(exact("eq51_iterated_convolution", "Eqs. (51)-(53): iterated convolution and EGF powers", ec::iterated_convolution_check));
  r.push_back(exact("eq55_scaling_operator", "Eqs. (54)-(55): FFT(f(ax)) = a^(x nabla) FFT(f)", ec::scaling_operator));

  // Products and extraction
  r.push_back(exact("eq57_falling_linearization", "Eqs. (56)-(57): (x)_n (x)_m linearization via Laguerre", ec::falling_linearization));
  r.push_back(exact("eq58_hadamard_ifft", "Eq. (58): Hadamard product route equals multiply-then-ifft", ec::hadamard_ifft_check));
  r.push_back(exact("eq59_fft_product", "Eq. (59): FFT(F) FFT(G) = FFT(sum D^k F D^k G x^k / k!)", ec::fft_product));
  r.push_back(exact("eq61_product_chain", "Eqs. (60)-(61): FFT(FG) = BT^-1(conv(FFT F, FFT G)) at k <= 12", ec::product_chain));
  r.push_back(exact("eq62_coefficient_extraction", "Eqs. (62)-(63): Taylor coefficients from FFT(e^-x f)", ec::coefficient_extraction));

  // Laplace link and fractional calculus
  r.push_back(numeric("eq67_rft_laplace_first_equality", "Eq. (67): RFT(e^t/(1+t))(s) = Gamma(1-s), s in {1/4, 1/2, 3/4}", 1e-6, nc::rft_laplace_first_equality));
  r.push_back(informational("eq67_last_argument_informational", Layer::numeric,
                            "Eq. (67) printed last argument: Gamma(-s-1) vs Gamma(1-s)", nc::rft_laplace_last_argument));
  r.push_back(numeric("eq69_fractional_derivative", "Eq. (69): D^s e^(au) = a^s e^(at), including D^(1/2) e^(2u) = sqrt 2", series, nc::fractional_derivative_check));
  r.push_back(numeric("eq69_fractional_ladder", "Eq. (69): D^(1/2) D^(1/2) e^(2u) = D e^(2u) at u = 0", 1e-6, nc::fractional_ladder));
  r.push_back(numeric("eq70_fractional_difference", "Eq. (70): Delta^s a^u = (a-1)^s a^t, including Delta^(1/2) 2^u = 1", series, nc::fractional_difference_check));

  // Theta operator and incomplete gamma
  r.push_back(exact("eq78_theta_representation", "Eqs. (78)-(79): FFT^-1(f) = e^-x f(theta){e^x}", ec::theta_representation));
  r.push_back(numeric("eq80_ifft_negative_falling", "Eq. (80): FFT^-1((x)_-n) = x^-n (1 - Gamma(n,x)/(n-1)!)", 1e-9, nc::ifft_negative_falling));
  r.push_back(numeric("eq84_irft_negative_rising", "Eq. (84): RFT^-1 of negative rising powers via Gamma(n,-x)", 1e-9, nc::irft_negative_rising));
  r.push_back(informational("eq89_product_identity_informational", Layer::numeric,
                            "Eq. (89): product identity, measured discrepancy", nc::eq89_discrepancy));
  r.push_back(exact("eq91_bernoulli_structure", "Eqs. (90)-(91): x e^x/(e^x - 1) coefficients are B_(n+1)(-1)^(n+1)/(n+1)!, n <= 12", ec::bernoulli_structure));
  r.push_back(informational("eq91_zeta_partial_sums_informational", Layer::numeric,
                            "Eq. (91): partial sums at s = 2 against zeta(2)", nc::zeta_partial_sums));

  // Table 2
  r.push_back(numeric("table2_row1_power_weight", "Table 2 row 1: RFT(t^a f) = Gamma(s+a)/Gamma(s) RFT(f)(s+a)", quadrature, nc::table2_power_weight));
  r.push_back(numeric("table2_row2_scaling", "Table 2 row 2: RFT(f(at)) = a^-s RFT(e^((1-1/a)t) f)", quadrature, nc::table2_scaling));

  // Table 3
  r.push_back(numeric("table3_gamma_row", "Table 3: FFT(e^-x/(1-x)) = Gamma(x+1), x in {0.1, ..., 0.9}", 1e-9, nc::gamma_row));
  r.push_back(numeric("table3_gamma_shift_row", "Table 3: FFT(Gamma(y+1) e^-x/(1-x)^(y+1)) = Gamma(x+y+1)", 1e-9, nc::gamma_shift_row));
  r.push_back(informational("table3_gamma_shift_row_as_printed", Layer::numeric,
                            "Table 3 printed image Gamma(x+y)", nc::gamma_shift_row_as_printed));
  r.push_back(exact("table3_power_exp_delta_row", "Table 3: FFT(x^s e^-x)(k) = Gamma(s+1) delta[k-s] at integers", ec::power_exp_delta_row));
  r.push_back(exact("table3_power_row", "Table 3: FFT(x^n) = (x)_n", ec::power_row));
  r.push_back(exact("table3_falling_row", "Table 3: FFT((x)_n) = Z_n", ec::falling_row));
  r.push_back(exact("table3_z_row", "Table 3: FFT(Z_n) = sum [n k] (-1)^(n-k) Z_k", ec::z_row));
  r.push_back(exact("table3_touchard_row", "Table 3: FFT(T_n) = x^n", ec::touchard_row));
  r.push_back(exact("table3_stirling_touchard_row", "Table 3: FFT(sum {n k} T_k) = T_n", ec::stirling_touchard_row));
  r.push_back(numeric("table3_exp_row", "Table 3: FFT(e^((a-1)x)) = a^x", 1e-9, nc::exp_row));
  r.push_back(numeric("table3_exp_i_omega_row", "Table 3: FFT(e^(iwx)) = (w^2+1)^(x/2) e^(ix atan w)", 1e-6, nc::exp_i_omega_row));
  r.push_back(numeric("table3_sin_row", "Table 3: FFT(sin wx) = (w^2+1)^(x/2) sin(x atan w)", 1e-6, nc::sin_row));
  r.push_back(numeric("table3_sin_tan_row", "Table 3: FFT(sin(x tan w)) = sin(wx)/cos^x(w)", 1e-6, nc::sin_tan_row));
  r.push_back(numeric("table3_cos_row", "Table 3: FFT(cos wx) = (w^2+1)^(x/2) cos(x atan w)", 1e-6, nc::cos_row));
  r.push_back(numeric("table3_cos_tan_row", "Table 3: FFT(cos(x tan w)) = cos(wx)/cos^x(w)", 1e-6, nc::cos_tan_row));
  r.push_back(exact("table3_laguerre_row", "Table 3: FFT(x^(n+m) L_n^(m)(-x)) = (x)_(n+m) (x)_n / n!, n, m <= 8", ec::laguerre_row));
  r.push_back(informational("table3_laguerre_row_as_printed", Layer::exact,
                            "Table 3 printed image (x)_(n+m) (x)_m / m!", ec::laguerre_row_as_printed));
  return r;
}

}  // namespace detail

/// All registered checks in a fixed order.
inline const std::vector<CheckSpec>& list_checks() {
  static const std::vector<CheckSpec> registry = detail::build_registry();
  return registry;
}

inline const CheckSpec* find_check(std::string_view name) {
  for (const auto& c : list_checks()) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

/// Glob match supporting '*' and '?'.
inline bool glob_match(std::string_view pattern, std::string_view text) {
  std::size_t p = 0, t = 0, star = std::string_view::npos, mark = 0;
  while (t < text.size()) {
    if (p < pattern.size() && (pattern[p] == '?' || pattern[p] == text[t])) {
      ++p;
      ++t;
    } else if (p < pattern.size() && pattern[p] == '*') {
      star = p++;
      mark = t;
    } else if (star != std::string_view::npos) {
      p = star + 1;
      t = ++mark;
    } else {
      return false;
    }
  }
  while (p < pattern.size() && pattern[p] == '*') ++p;
  return p == pattern.size();
}

/// Status from an outcome under the check's layer and tolerance.
inline Status judge(const CheckSpec& spec, const Outcome& out) {
  if (spec.informational) return Status::pass;
  if (spec.layer == Layer::exact) return out.mismatches == 0 ? Status::pass : Status::fail;
  return out.max_abs_error <= spec.tolerance ? Status::pass : Status::fail;
}

inline CheckReport run_check(const CheckSpec& spec, std::uint64_t seed) {
  CheckReport report;
  report.name = spec.name;
  report.layer = spec.layer;
  report.tolerance = spec.tolerance;
  report.seed = seed;
  report.informational = spec.informational;
  report.description = spec.description;
  const auto start = std::chrono::steady_clock::now();
  try {
    Rng rng(seed);
    Outcome out = spec.body(rng);
    report.trials = out.trials;
    report.max_abs_error = out.max_abs_error;
    report.note = out.note;
    report.status = judge(spec, out);
  } catch (const std::exception& e) {
    report.status = spec.informational ? Status::pass : Status::error;
    report.note = e.what();
    if (spec.informational) report.max_abs_error = std::numeric_limits<double>::infinity();
  }
  report.elapsed_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return report;
}

/// Throws UnknownCheck for unregistered names.
inline CheckReport run_check(const std::string& name, std::uint64_t seed) {
  const CheckSpec* spec = find_check(name);
  if (!spec) throw UnknownCheck(name);
  return run_check(*spec, seed);
}

inline std::vector<CheckReport> run_all(const std::optional<std::string>& filter, std::uint64_t seed,
                                        bool parallel = false) {
  std::vector<const CheckSpec*> selected;
  for (const auto& c : list_checks()) {
    if (!filter || glob_match(*filter, c.name)) selected.push_back(&c);
  }
  std::vector<CheckReport> reports;
  reports.reserve(selected.size());
  if (!parallel) {
    for (const auto* c : selected) reports.push_back(run_check(*c, seed));
    return reports;
  }
  std::vector<std::future<CheckReport>> pending;
  pending.reserve(selected.size());
  for (const auto* c : selected) {
    pending.push_back(std::async(std::launch::async, [c, seed] { return run_check(*c, seed); }));
  }
  for (auto& f : pending) reports.push_back(f.get());
  return reports;
}

struct Summary {
  std::size_t passed = 0, failed = 0, errors = 0, informational = 0;
  bool all_pass() const { return failed == 0 && errors == 0; }
};

inline Summary summarize(const std::vector<CheckReport>& reports) {
  Summary s;
  for (const auto& r : reports) {
    if (r.informational) ++s.informational;
    switch (r.status) {
      case Status::pass: ++s.passed; break;
      case Status::fail: ++s.failed; break;
      case Status::error: ++s.errors; break;
    }
  }
  return s;
}

/// Covered identities and the checks that cover them.
struct CoverageItem {
  const char* item;
  std::vector<const char*> checks;
};

inline const std::vector<CoverageItem>& coverage_table() {
  static const std::vector<CoverageItem> table = {
      {"Eq. (1)", {"eq01_fft_definition_roundtrip"}},
      {"Eq. (2)", {"eq01_fft_definition_roundtrip"}},
      {"Eq. (3)", {"eq03_rft_definition_roundtrip"}},
      {"Eq. (4)", {"eq03_rft_definition_roundtrip"}},
      {"Eq. (5)", {"eq05_newton_taylor_duality"}},
      {"Eq. (6)", {"eq06_ifft_series", "table3_gamma_row"}},
      {"Eq. (7)", {"eq07_rft_quadrature"}},
      {"Eq. (8)", {"eq08_mellin_consistency"}},
      {"Eq. (9)", {"eq09_irft_series"}},
      {"Eq. (10)", {"eq10_reflection"}},
      {"Eq. (11)", {"eq10_reflection"}},
      {"Eq. (12)", {"eq12_linearity"}},
      {"Eq. (13)", {"eq12_linearity"}},
      {"Eq. (14)", {"eq14_falling_power_rules"}},
      {"Eq. (15)", {"eq14_falling_power_rules"}},
      {"Eq. (16)", {"eq16_fft_derivative_commutation"}},
      {"Eq. (17)", {"eq17_ifft_difference_commutation"}},
      {"Eq. (18)", {"eq18_ifft_log1p_derivative"}},
      {"Eq. (19)", {"eq19_fft_expdiff"}},
      {"Eq. (20)", {"eq20_antiderivative_kernel_relative"}},
      {"Eq. (21)", {"eq20_antiderivative_kernel_relative"}},
      {"Eq. (22)", {"eq20_antiderivative_kernel_relative"}},
      {"Eq. (23)", {"eq20_antiderivative_kernel_relative"}},
      {"Eq. (24)", {"eq24_ifft_integral_sum"}},
      {"Eq. (25)", {"eq25_fft_operator_expansion"}},
      {"Eq. (26)", {"eq25_fft_operator_expansion"}},
      {"Eq. (27)", {"eq27_touchard_ladder"}},
      {"Eq. (28)", {"eq28_z_ladder"}},
      {"Eq. (29)", {"eq29_touchard_series_expansion"}},
      {"Eq. (30)", {"eq30_z_series_expansion"}},
      {"Eq. (31)", {"eq29_touchard_series_expansion"}},
      {"Eq. (32)", {"eq30_z_series_expansion"}},
      {"Eq. (33)", {"eq33_fft_shift_exp_difference"}},
      {"Eq. (34)", {"eq34_ifft_shift_binomial_derivative"}},
      {"Eq. (35)", {"eq35_fft_outer_shift"}},
      {"Eq. (36)", {"eq36_ifft_inner_shift"}},
      {"Eq. (37)", {"eq37_fft_shifted_power", "eq37_38_printed_charlier_informational"}},
      {"Eq. (38)", {"eq38_ifft_shifted_falling", "eq37_38_printed_charlier_informational"}},
      {"Eq. (39)", {"eq39_charlier_orthogonality"}},
      {"Eq. (40)", {"eq40_ifft_basis_shift"}},
      {"Eq. (41)", {"eq41_fft_basis_shift"}},
      {"Eq. (43)", {"eq44_binomial_transform_chain"}},
      {"Eq. (44)", {"eq44_binomial_transform_chain"}},
      {"Eq. (45)", {"eq44_binomial_transform_chain"}},
      {"Eq. (46)", {"eq46_inverse_binomial_transform"}},
      {"Eq. (47)", {"eq47_binomial_convolution_egf"}},
      {"Eq. (48)", {"eq47_binomial_convolution_egf"}},
      {"Eq. (49)", {"eq47_binomial_convolution_egf"}},
      {"Eq. (50)", {"eq50_conv_one_is_bt"}},
      {"Eq. (51)", {"eq51_iterated_convolution"}},
      {"Eq. (52)", {"eq51_iterated_convolution"}},
      {"Eq. (53)", {"eq51_iterated_convolution"}},
      {"Eq. (54)", {"eq55_scaling_operator"}},
      {"Eq. (55)", {"eq55_scaling_operator"}},
      {"Eq. (56)", {"eq57_falling_linearization"}},
      {"Eq. (57)", {"eq57_falling_linearization"}},
      {"Eq. (58)", {"eq58_hadamard_ifft"}},
      {"Eq. (59)", {"eq59_fft_product"}},
      {"Eq. (60)", {"eq61_product_chain"}},
      {"Eq. (61)", {"eq61_product_chain"}},
      {"Eq. (62)", {"eq62_coefficient_extraction"}},
      {"Eq. (63)", {"eq62_coefficient_extraction"}},
      {"Eq. (67) first equality", {"eq67_rft_laplace_first_equality"}},
      {"Eq. (69)", {"eq69_fractional_derivative", "eq69_fractional_ladder"}},
      {"Eq. (70)", {"eq70_fractional_difference"}},
      {"Eq. (78)", {"eq78_theta_representation"}},
      {"Eq. (79)", {"eq78_theta_representation"}},
      {"Eq. (80)", {"eq80_ifft_negative_falling"}},
      {"Eq. (84)", {"eq84_irft_negative_rising"}},
      {"Eq. (90)", {"eq91_bernoulli_structure"}},
      {"Eq. (91)", {"eq91_bernoulli_structure", "eq91_zeta_partial_sums_informational"}},
      {"Table 2 row 1", {"table2_row1_power_weight"}},
      {"Table 2 row 2", {"table2_row2_scaling"}},
      {"Table 3 row 1 (Gamma)", {"table3_gamma_row"}},
      {"Table 3 row 2 (shifted Gamma)", {"table3_gamma_shift_row"}},
      {"Table 3 row 3 (x^s e^-x)", {"table3_power_exp_delta_row"}},
      {"Table 3 row 4 (x^n)", {"table3_power_row"}},
      {"Table 3 row 5 ((x)_n)", {"table3_falling_row"}},
      {"Table 3 row 6 (Z_n)", {"table3_z_row"}},
      {"Table 3 row 7 (T_n)", {"table3_touchard_row"}},
      {"Table 3 row 8 (Stirling-Touchard)", {"table3_stirling_touchard_row"}},
      {"Table 3 row 9 (e^((a-1)x))", {"table3_exp_row"}},
      {"Table 3 row 10 (e^(iwx))", {"table3_exp_i_omega_row"}},
      {"Table 3 row 11 (sin wx)", {"table3_sin_row"}},
      {"Table 3 row 12 (sin(x tan w))", {"table3_sin_tan_row"}},
      {"Table 3 row 13 (cos wx)", {"table3_cos_row"}},
      {"Table 3 row 14 (cos(x tan w))", {"table3_cos_tan_row"}},
      {"Table 3 row 15 (Laguerre)", {"table3_laguerre_row", "table3_laguerre_row_as_printed"}},
  };
  return table;
}

}  // namespace ft::verify

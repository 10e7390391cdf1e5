// ftcalc: command-line frontend for the factorial transform library.
//
// Exit codes: 0 success, 1 math error or verification failure, 2 usage or
// parse error. Diagnostics go to stderr.

#include "factorial_transforms.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

namespace {

using nlohmann::json;

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Inline JSON, a file path, or stdin when empty or "-".
std::string read_input(const std::string& input) {
  if (input.empty() || input == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  auto first = input.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && input[first] == '{') return input;
  std::ifstream in(input);
  if (!in) throw UsageError("cannot open input file '" + input + "'");
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

// Decimal (including exponent notation) or p/q.
double parse_point(const std::string& text) {
  if (text.find('/') != std::string::npos) return ft::to_double(ft::parse_rational(text));
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) throw UsageError("--at: cannot parse '" + text + "'");
  return v;
}

json numeric_json(double value, double error) {
  json j{{"value", value}, {"error_estimate", error}};
  return j;
}

const ft::SeriesSource& require_view(const std::optional<ft::SeriesSource>& view, const std::string& source,
                                     const char* view_name, const std::string& op) {
  if (!view) throw UsageError("source '" + source + "' has no " + view_name + " view required by " + op);
  return *view;
}

struct ConvertArgs {
  std::string to;
  std::string input;
};

struct TransformArgs {
  std::string op;
  std::string input;
  bool numeric = false;
  std::optional<std::string> at;
  std::string source;
  std::size_t truncation = 64;
  std::size_t nodes = 80;
  double tolerance = 1e-10;
};

struct SpecialArgs {
  std::string family;
  long n = -1;
  std::optional<long> k;
  std::string alpha = "0";
  std::optional<std::string> a;
  std::optional<std::string> x;
};

struct FractionalArgs {
  std::string kind;
  double order = 0.5;
  double at = 0.0;
  std::string source;
  std::size_t truncation = 64;
  double tolerance = 1e-10;
};

struct ZetaArgs {
  double s = 2.0;
  std::size_t terms = 20;
};

struct VerifyArgs {
  std::optional<std::string> filter;
  std::uint64_t seed = 20240531;
  std::string json_path;
  bool parallel = false;
};

int run_convert(const ConvertArgs& a) {
  ft::BasisPolynomial p = ft::parse_polynomial(read_input(a.input));
  std::cout << ft::dump_polynomial(ft::convert_basis(p, ft::parse_basis(a.to))) << "\n";
  return kOk;
}

int run_transform(const TransformArgs& a) {
  if (!a.numeric) {
    ft::BasisPolynomial p = ft::parse_polynomial(read_input(a.input));
    ft::BasisPolynomial out = a.op == "fft"    ? ft::fft_poly(p)
                              : a.op == "ifft" ? ft::ifft_poly(p)
                              : a.op == "rft"  ? ft::rft_poly(p)
                                               : ft::irft_poly(p);
    if (a.at) {
      ft::Rational x = ft::parse_rational(*a.at);
      json j{{"at", ft::to_string(x)}, {"value", ft::to_string(ft::eval(out, x))}, {"polynomial", ft::to_json(out)}};
      std::cout << j.dump() << "\n";
    } else {
      std::cout << ft::dump_polynomial(out) << "\n";
    }
    return kOk;
  }

  if (a.source.empty()) throw UsageError("--numeric requires --source");
  if (!a.at) throw UsageError("--numeric requires --at");
  ft::SourceBundle bundle = ft::named_source(a.source);
  ft::NumericConfig cfg;
  cfg.truncation = a.truncation;
  cfg.tolerance = a.tolerance;
  cfg.validate();
  const double at = parse_point(*a.at);
  json j{{"op", a.op}, {"source", a.source}, {"at", at}};
  if (a.op == "fft") {
    auto r = ft::fft_fn(require_view(bundle.taylor, a.source, "Taylor", a.op), at, cfg);
    j.update(numeric_json(r.value, r.error_estimate));
    j["terms_used"] = r.terms_used;
  } else if (a.op == "ifft") {
    auto r = ft::ifft_fn(require_view(bundle.samples, a.source, "sample", a.op), at, cfg);
    j.update(numeric_json(r.value, r.error_estimate));
    j["terms_used"] = r.terms_used;
  } else if (a.op == "irft") {
    auto r = ft::irft_fn(require_view(bundle.callable, a.source, "callable", a.op), at, cfg);
    j.update(numeric_json(r.value, r.error_estimate));
    j["terms_used"] = r.terms_used;
  } else {
    const ft::SeriesSource& f = require_view(bundle.callable, a.source, "callable", a.op);
    ft::QuadratureSpec spec;
    spec.nodes = a.nodes;
    auto r = ft::rft_fn([&f](const ft::WideReal& t) { return f(t); }, at, spec);
    j.update(numeric_json(r.value, r.error_estimate));
    j["nodes_used"] = r.nodes_used;
    j["fallback"] = r.fallback;
  }
  std::cout << j.dump() << "\n";
  return kOk;
}

json bigint_row(const std::vector<ft::BigInt>& row) {
  json arr = json::array();
  for (const auto& v : row) arr.push_back(v.str());
  return arr;
}

int run_special(const SpecialArgs& a) {
  if (a.n < 0) throw UsageError("--n must be a nonnegative integer");
  const auto n = static_cast<std::size_t>(a.n);
  const std::string& f = a.family;
  if (f == "touchard") {
    std::cout << ft::dump_polynomial(ft::touchard(n)) << "\n";
  } else if (f == "z") {
    std::cout << ft::dump_polynomial(ft::z_poly(n)) << "\n";
  } else if (f == "laguerre") {
    std::cout << ft::dump_polynomial(ft::laguerre(n, ft::parse_rational(a.alpha))) << "\n";
  } else if (f == "charlier") {
    if (!a.x || !a.a) throw UsageError("charlier requires --x and --a");
    ft::Rational av = ft::parse_rational(*a.a);
    if (av == 0) throw ft::DomainError("charlier: a must be nonzero");
    std::cout << json(ft::to_string(ft::charlier(n, ft::parse_rational(*a.x), av))).dump() << "\n";
  } else if (f == "stirling1" || f == "stirling2") {
    bool first = f == "stirling1";
    if (a.k) {
      if (*a.k < 0) throw UsageError("--k must be nonnegative");
      auto k = static_cast<std::size_t>(*a.k);
      ft::BigInt v = first ? ft::stirling_first_unsigned(n, k) : ft::stirling_second(n, k);
      std::cout << json(v.str()).dump() << "\n";
    } else {
      std::cout << bigint_row(first ? ft::stirling_first_row(n) : ft::stirling_second_row(n)).dump() << "\n";
    }
  } else {
    std::cout << json(ft::to_string(ft::bernoulli(n))).dump() << "\n";
  }
  return kOk;
}

int run_fractional(const FractionalArgs& a) {
  ft::SourceBundle bundle = ft::named_source(a.source);
  ft::NumericConfig cfg;
  cfg.truncation = a.truncation;
  cfg.tolerance = a.tolerance;
  cfg.validate();
  ft::SeriesResult r;
  if (a.kind == "derivative") {
    r = ft::fractional_derivative(require_view(bundle.taylor, a.source, "Taylor", "fractional derivative"), a.order,
                                  a.at, cfg);
  } else {
    r = ft::fractional_difference(require_view(bundle.callable, a.source, "callable", "fractional difference"),
                                  a.order, a.at, cfg);
  }
  json j{{"kind", a.kind}, {"order", a.order}, {"at", a.at}, {"source", a.source}};
  j.update(numeric_json(r.value, r.error_estimate));
  j["terms_used"] = r.terms_used;
  j["accelerated"] = r.accelerated;
  std::cout << j.dump() << "\n";
  return kOk;
}

int run_zeta(const ZetaArgs& a) {
  auto z = ft::zeta_formal_series(a.s, a.terms);
  json j{{"s", a.s},
         {"leading", z.leading},
         {"terms", z.terms},
         {"partial_sums", z.partial_sums},
         {"note", "formal series; partial sums are informational and need not converge"}};
  std::cout << j.dump() << "\n";
  return kOk;
}

int run_verify(const VerifyArgs& a) {
  auto reports = ft::verify::run_all(a.filter, a.seed, a.parallel);
  if (reports.empty()) throw UsageError("no checks match filter '" + a.filter.value_or("") + "'");
  std::cout << ft::verify::text_table(reports);
  if (!a.json_path.empty()) {
    std::ofstream out(a.json_path);
    if (!out) throw UsageError("cannot write '" + a.json_path + "'");
    out << ft::verify::to_json(reports).dump(2) << "\n";
  }
  return ft::verify::summarize(reports).all_pass() ? kOk : kFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Falling and rising factorial transforms: exact, numeric, and verification"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for all subcommands");

  ConvertArgs convert_args;
  auto* convert = app.add_subcommand("convert", "Convert a polynomial to another basis");
  convert->add_option("--to", convert_args.to, "Target basis")
      ->required()
      ->check(CLI::IsMember({"monomial", "falling", "rising"}));
  convert->add_option("input", convert_args.input, "Polynomial JSON, file path, or - for stdin");

  TransformArgs transform_args;
  auto* transform = app.add_subcommand("transform", "Apply FFT, IFFT, RFT or IRFT");
  transform->add_option("--op", transform_args.op, "Transform")
      ->required()
      ->check(CLI::IsMember({"fft", "ifft", "rft", "irft"}));
  transform->add_flag("--numeric", transform_args.numeric, "Evaluate numerically on a named source");
  transform->add_option("--at", transform_args.at, "Evaluation point");
  transform->add_option("--source", transform_args.source,
                        "Named source: exp(a), sin(w), cos(w), geometric(r), gamma-samples");
  transform->add_option("--truncation", transform_args.truncation, "Series truncation")->check(CLI::PositiveNumber);
  transform->add_option("--nodes", transform_args.nodes, "Gauss-Laguerre nodes")->check(CLI::Range(2, 400));
  transform->add_option("--tolerance", transform_args.tolerance, "Series tolerance")->check(CLI::PositiveNumber);
  transform->add_option("input", transform_args.input, "Polynomial JSON, file path, or - for stdin");

  SpecialArgs special_args;
  auto* special = app.add_subcommand("special", "Special polynomials and numbers");
  special->add_option("--family", special_args.family, "Family")
      ->required()
      ->check(CLI::IsMember({"touchard", "z", "laguerre", "charlier", "stirling1", "stirling2", "bernoulli"}));
  special->add_option("--n", special_args.n, "Index")->required();
  special->add_option("--k", special_args.k, "Column for stirling1/stirling2 (whole row if absent)");
  special->add_option("--alpha", special_args.alpha, "Laguerre parameter (rational)");
  special->add_option("--a", special_args.a, "Charlier parameter (rational)");
  special->add_option("--x", special_args.x, "Charlier argument (rational)");

  FractionalArgs fractional_args;
  auto* fractional = app.add_subcommand("fractional", "Fractional derivative or difference of a named source");
  fractional->add_option("--kind", fractional_args.kind, "Operator")
      ->required()
      ->check(CLI::IsMember({"derivative", "difference"}));
  fractional->add_option("--order", fractional_args.order, "Order s")->required();
  fractional->add_option("--at", fractional_args.at, "Point t")->required();
  fractional->add_option("--source", fractional_args.source, "Named source")->required();
  fractional->add_option("--truncation", fractional_args.truncation, "Series truncation")->check(CLI::PositiveNumber);
  fractional->add_option("--tolerance", fractional_args.tolerance, "Series tolerance")->check(CLI::PositiveNumber);

  ZetaArgs zeta_args;
  auto* zeta = app.add_subcommand("zeta", "Partial sums of the Bernoulli zeta series (informational)");
  zeta->add_option("--s", zeta_args.s, "Argument")->required();
  zeta->add_option("--terms", zeta_args.terms, "Number of terms")->required()->check(CLI::Range(1, 200));

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Run the identity verification suite");
  verify->add_option("--filter", verify_args.filter, "Glob over check names");
  verify->add_option("--seed", verify_args.seed, "PRNG seed");
  verify->add_option("--json", verify_args.json_path, "Write the JSON report to this path");
  verify->add_flag("--parallel", verify_args.parallel, "Run checks concurrently");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*convert) return run_convert(convert_args);
    if (*transform) return run_transform(transform_args);
    if (*special) return run_special(special_args);
    if (*fractional) return run_fractional(fractional_args);
    if (*zeta) return run_zeta(zeta_args);
    return run_verify(verify_args);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
}

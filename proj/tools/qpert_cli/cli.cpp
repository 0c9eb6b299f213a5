#include "qpert_cli/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <system_error>
#include <unistd.h>

#include "CLI11.hpp"
#include "qpert/perturbation_series.hpp"
#include "qpert/relativistic.hpp"
#include "qpert/spectral_oracle.hpp"

namespace qpert::cli {

namespace {

std::string describe(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

std::optional<double> parse_plain(std::string_view text) {
  double v = 0.0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  if (!text.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || !std::isfinite(v)) {
    return std::nullopt;
  }
  return v;
}

/// Options shared by every subcommand.
void add_output_options(CLI::App& sub, OutputSpec& spec, std::string& format) {
  sub.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  sub.add_option("--out", spec.path, "Output file (default: standard output)");
  sub.add_option("--precision", spec.precision, "Decimal places")->check(CLI::Range(1, 15))->capture_default_str();
}

std::vector<double> parse_number_list(const std::vector<std::string>& raw, const std::string& flag) {
  std::vector<double> out;
  for (const auto& item : raw) {
    const auto v = parse_number(item);
    if (!v) {
      throw std::invalid_argument(flag + ": cannot parse '" + item + "' as a number");
    }
    out.push_back(*v);
  }
  return out;
}

ModelKind require_model(const std::string& name) {
  const auto m = parse_model(name);
  if (!m) {
    throw std::invalid_argument("--model: unknown model '" + name + "' (expected hydrogen, well or oscillator)");
  }
  return *m;
}

double require_number(const std::string& text, const std::string& flag) {
  const auto v = parse_number(text);
  if (!v) {
    throw std::invalid_argument(flag + ": cannot parse '" + text + "' as a number");
  }
  return *v;
}

int emit(const CommandResult& result, const OutputSpec& spec, std::ostream& out, std::ostream& err) {
  for (const auto& d : result.diagnostics) {
    err << d << '\n';
  }
  const std::string content = render(result.table, spec);
  if (spec.path.empty()) {
    out << content;
    out.flush();
    if (!out) {
      err << "error: failed writing to standard output\n";
      return kIoError;
    }
  } else {
    try {
      write_atomically(spec.path, content);
    } catch (const std::exception& e) {
      err << "error: " << e.what() << '\n';
      return kIoError;
    }
  }
  return result.exit_code;
}

}  // namespace

std::optional<double> parse_number(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return parse_plain(text);
  }
  const auto num = parse_plain(text.substr(0, slash));
  const auto den = parse_plain(text.substr(slash + 1));
  if (!num || !den || *den == 0.0) {
    return std::nullopt;
  }
  return *num / *den;
}

void write_atomically(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) {
      throw std::runtime_error("cannot open '" + tmp.string() + "' for writing");
    }
    f.write(content.data(), static_cast<std::streamsize>(content.size()));
    f.flush();
    if (!f) {
      std::error_code ignored;
      fs::remove(tmp, ignored);
      throw std::runtime_error("failed writing '" + tmp.string() + "'");
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    std::error_code ignored;
    fs::remove(tmp, ignored);
    throw std::runtime_error("cannot move output into place at '" + path + "': " + ec.message());
  }
}

CommandResult sigma_command(ModelKind model, int n, const std::vector<double>& alphas, int max_order) {
  const auto curve = sigma_curve(model, n, alphas, max_order);
  CommandResult r;
  r.table.command = "sigma";
  r.table.columns = {"alpha", "order", "sigma"};
  for (const auto& row : curve.rows) {
    r.table.add_row({Fixed{row.alpha}, static_cast<long long>(row.order), Fixed{row.sigma}});
  }
  const double bound = gap_alpha_max(model, n);
  for (const double a : curve.rejected) {
    r.diagnostics.push_back("warning: alpha = " + describe(a) + " excluded: outside the gap convergence radius " +
                            describe(bound) + " for " + std::string(to_string(model)) + " n = " + std::to_string(n));
  }
  for (const double a : curve.boundary) {
    r.diagnostics.push_back("warning: alpha = " + describe(a) +
                            " lies on the convergence boundary; partial sums converge only algebraically");
  }
  return r;
}

CommandResult hydrogen_table_command(double alphaw_eV, int n_max, double rydberg_eV) {
  const auto table = comparison_table(alphaw_eV, n_max, rydberg_eV);
  CommandResult r;
  r.table.command = "hydrogen-table";
  r.table.columns = {"n", "E_complex_eV", "E_relativistic_eV", "E_quaternionic_eV", "alphaW_eV"};
  for (const auto& row : table.rows) {
    r.table.add_row({static_cast<long long>(row.n), Fixed{row.E_complex}, Fixed{row.E_relativistic},
                     Fixed{row.E_quaternionic}, Fixed{row.alphaW_eV}});
  }
  for (const int n : table.omitted) {
    r.diagnostics.push_back("warning: row n = " + std::to_string(n) + " omitted: alpha|W| = " + describe(alphaw_eV) +
                            " eV exceeds the radius Ry/n^2 = " + describe(rydberg_eV / (double(n) * n)) + " eV");
  }
  return r;
}

CommandResult levels_command(const std::vector<int>& n_list, int samples, double rydberg_eV) {
  const auto curve = hydrogen_levels_vs_potential(n_list, samples, rydberg_eV);
  CommandResult r;
  r.table.command = "levels";
  r.table.columns = {"n", "alphaW_eV", "energy_eV"};
  for (const auto& s : curve) {
    r.table.add_row({static_cast<long long>(s.n), Fixed{s.alphaW_eV}, Fixed{s.energy_eV}});
  }
  return r;
}

CommandResult oracle_command(ModelKind model, int n, double alpha, int grid_points, int order, double tolerance) {
  const auto report = oracle_compare(model, n, alpha, default_grid(model, grid_points), order, tolerance);
  CommandResult r;
  r.table.command = "oracle";
  r.table.columns = {"model",       "n",      "alpha",   "grid",    "order",
                     "unit",        "e0_analytic", "e0_discrete", "series", "closed_form",
                     "oracle",      "overlap", "dev_oracle_closed", "dev_series_oracle", "tolerance",
                     "grid_warning", "status"};
  r.table.add_row({std::string(to_string(model)), static_cast<long long>(n), Fixed{alpha},
                   static_cast<long long>(grid_points), static_cast<long long>(order),
                   std::string(energy_unit(model)), Fixed{report.e0_analytic}, Fixed{report.e0_discrete},
                   Fixed{report.series}, Fixed{report.closed_form}, Fixed{report.oracle}, Fixed{report.overlap},
                   Scientific{report.dev_oracle_closed}, Scientific{report.dev_series_oracle},
                   Scientific{report.tolerance}, report.grid_warning, std::string(report.pass ? "PASS" : "FAIL")});
  if (report.grid_warning) {
    r.diagnostics.push_back("warning: discrete E0 deviates " + describe(report.dev_e0_grid) +
                            " (relative) from the analytic level; refine --grid");
  }
  if (!report.pass) {
    r.diagnostics.push_back("error: deviations exceed tolerance " + describe(tolerance));
    r.exit_code = kToleranceFailure;
  }
  return r;
}

CommandResult series_command(double e0, double w_modulus, double alpha, int max_order) {
  const PerturbationSpec spec(e0, w_modulus, alpha);
  const auto eval = perturbed_energy(spec, max_order);
  const double closed = eval.in_radius ? closed_form_limit(spec) : std::nan("");

  CommandResult r;
  r.table.command = "series";
  r.table.columns = {"s", "E_s", "term", "partial_sum", "normalized", "closed_form", "in_radius"};
  for (int s = 1; s <= max_order; ++s) {
    const auto i = static_cast<std::size_t>(s - 1);
    double normalized = 0.0;
    if (s % 2 == 0) {
      normalized = w_modulus == 0.0 ? std::nan("") : normalized_coefficient(spec, s / 2);
    }
    r.table.add_row({static_cast<long long>(s), Scientific{correction_coefficient_closed(spec, s)},
                     Scientific{eval.terms[i]}, Fixed{eval.partial_sums[i]}, Fixed{normalized}, Fixed{closed},
                     eval.in_radius});
  }
  if (!eval.in_radius) {
    r.diagnostics.push_back("warning: |alpha W| = " + describe(spec.coupling()) + " exceeds |E0| = " +
                            describe(std::abs(e0)) + "; the series diverges and closed_form is undefined");
  } else if (eval.at_boundary) {
    r.diagnostics.push_back("warning: |alpha W| = |E0|; partial sums converge only algebraically");
  }
  return r;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quaternionic perturbation corrections to bound-state energies", "qpert"};
  app.require_subcommand(1);

  OutputSpec spec;
  std::string format = "csv";

  // sigma
  auto* sigma = app.add_subcommand("sigma", "Sigma ratio Lambda/lambda against truncation order");
  std::string sigma_model;
  int sigma_n = 1;
  std::vector<std::string> sigma_alphas;
  int sigma_order = 30;
  sigma->add_option("--model", sigma_model, "hydrogen, well or oscillator")->required();
  sigma->add_option("--n", sigma_n, "Lower level of the gap")->required();
  sigma->add_option("--alpha", sigma_alphas, "Strengths (comma separated; fractions like 1/8 allowed)")
      ->required()
      ->delimiter(',');
  sigma->add_option("--max-order", sigma_order, "Highest truncation order s")->capture_default_str();
  add_output_options(*sigma, spec, format);

  // hydrogen-table
  auto* htable = app.add_subcommand("hydrogen-table", "Bohr, relativistic and quaternionic hydrogen levels");
  std::string alphaw_text;
  int n_max = 5;
  bool codata = false;
  htable->add_option("--alphaw", alphaw_text, "alpha|W| in eV")->required();
  htable->add_option("--n-max", n_max, "Highest principal quantum number")->capture_default_str();
  htable->add_flag("--codata-rydberg", codata, "Use Ry = 13.605693 eV instead of 13.6 eV");
  add_output_options(*htable, spec, format);

  // levels
  auto* levels = app.add_subcommand("levels", "Hydrogen levels against alpha|W| up to the convergence limit");
  std::vector<int> level_list{1, 2, 3, 4};
  int samples = 21;
  levels->add_option("--n", level_list, "Principal quantum numbers (comma separated)")
      ->delimiter(',')
      ->capture_default_str();
  levels->add_option("--samples", samples, "Points per level on [0, Ry/n^2]")->capture_default_str();
  levels->add_flag("--codata-rydberg", codata, "Use Ry = 13.605693 eV instead of 13.6 eV");
  add_output_options(*levels, spec, format);

  // oracle
  auto* oracle = app.add_subcommand("oracle", "Validate the series against the embedded Hermitian spectrum");
  std::string oracle_model;
  int oracle_n = 1;
  std::string oracle_alpha;
  int grid_points = 2000;
  int oracle_order = 50;
  double tolerance = kOracleTolerance;
  oracle->add_option("--model", oracle_model, "well or oscillator")->required();
  oracle->add_option("--n", oracle_n, "Quantum number")->required();
  oracle->add_option("--alpha", oracle_alpha, "Strength (fractions allowed)")->required();
  oracle->add_option("--grid", grid_points, "Interior grid points N (matrix is 2N x 2N)")->capture_default_str();
  oracle->add_option("--order", oracle_order, "Series truncation order s")->capture_default_str();
  oracle->add_option("--tolerance", tolerance, "Relative tolerance")->capture_default_str();
  add_output_options(*oracle, spec, format);

  // series
  auto* series = app.add_subcommand("series", "Correction coefficients and partial sums for one level");
  std::string e0_text;
  std::string w_text;
  std::string alpha_text;
  int series_order = kDefaultMaxOrder;
  series->add_option("--e0", e0_text, "Unperturbed energy E0 (non-zero)")->required();
  series->add_option("--w", w_text, "Modulus |W|")->required();
  series->add_option("--alpha", alpha_text, "Strength alpha")->required();
  series->add_option("--max-order", series_order, "Highest power of alpha")->capture_default_str();
  add_output_options(*series, spec, format);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }
  spec.format = format == "json" ? Format::json : Format::csv;
  const double rydberg = codata ? kRydbergCodataEv : kRydbergEv;

  CommandResult result;
  try {
    if (*sigma) {
      result = sigma_command(require_model(sigma_model), sigma_n, parse_number_list(sigma_alphas, "--alpha"),
                             sigma_order);
    } else if (*htable) {
      result = hydrogen_table_command(require_number(alphaw_text, "--alphaw"), n_max, rydberg);
    } else if (*levels) {
      result = levels_command(level_list, samples, rydberg);
    } else if (*oracle) {
      result = oracle_command(require_model(oracle_model), oracle_n, require_number(oracle_alpha, "--alpha"),
                              grid_points, oracle_order, tolerance);
    } else if (*series) {
      result = series_command(require_number(e0_text, "--e0"), require_number(w_text, "--w"),
                              require_number(alpha_text, "--alpha"), series_order);
    }
  } catch (const EigenSolveError& e) {
    err << "error: " << e.what() << '\n';
    return kToleranceFailure;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::domain_error& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  }
  return emit(result, spec, out, err);
}

}  // namespace qpert::cli

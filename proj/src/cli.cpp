#include "rfun/cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <optional>

#include "rfun/analysis.hpp"
#include "rfun/errors.hpp"
#include "rfun/io.hpp"
#include "rfun/quantum.hpp"
#include "rfun/rfunc.hpp"

namespace rfun::cli {
namespace {

struct Config {
  double tolerance = 1e-9;
  int grid_size = 10'000;
  std::optional<std::string> log_base;
  std::string output_format = "csv";

  LogBase base() const {
    if (log_base) return parse_log_base(*log_base);
    if (const char* env = std::getenv("RFUN_LOG_BASE"); env && *env) return parse_log_base(env);
    return LogBase::two;
  }

  void validate() const {
    if (!(tolerance > 0.0)) throw ArgumentError("tolerance must be positive");
    if (grid_size < 10) throw ArgumentError("grid size must be >= 10");
  }
};

/// Usage errors raised after CLI11 parsing succeeded.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double evaluate(const std::string& which, Dimension dim, double lambda, LogBase base) {
  const RPoint p(dim, lambda);
  if (which == "R") return r_value(p, base);
  if (which == "R1") return r_first(p, base);
  if (which == "R2") return in_base(r_second(p), base);
  if (which == "gamma") return gamma_value(p);
  if (which == "g") return g_value(p);
  if (which == "f") return f_value(p);
  if (which == "hull") return hull_value(dim, lambda, base);
  throw UsageError("unknown quantity '" + which + "'");
}

void write_table(std::ostream& os, Dimension dim, int grid, LogBase base, bool json) {
  const ConvexEnvelope hull(dim);
  const double a = 1.0 + tol::scan_left_offset;
  const double b = dim.real() - tol::scan_right_offset;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  if (!json) os << "lambda,R,R_second,hull\n";
  for (int i = 0; i < grid; ++i) {
    const double x = i + 1 == grid ? b : a + (b - a) * static_cast<double>(i) / (grid - 1);
    const RPoint p(dim, x);
    const double r = r_value(p, base);
    const double r2 = in_base(r_second(p), base);
    const double h = hull.value(x, base);
    if (json) {
      rows.push_back({{"lambda", x}, {"R", r}, {"R_second", r2}, {"hull", h}});
    } else {
      os << format_roundtrip(x) << ',' << format_roundtrip(r) << ',' << format_roundtrip(r2)
         << ',' << format_roundtrip(h) << '\n';
    }
  }
  if (json) os << rows.dump(2) << '\n';
}

}  // namespace

std::string format_roundtrip(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

std::string format_significant(double value, int digits) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, digits);
  return std::string(buf, res.ptr);
}

std::vector<int> parse_m_range(const std::string& text) {
  auto parse_int = [&](std::string_view s) {
    int v = 0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
      throw UsageError("invalid dimension '" + text + "'");
    }
    return v;
  };
  const auto dots = text.find("..");
  int lo = 0;
  int hi = 0;
  if (dots == std::string::npos) {
    lo = hi = parse_int(text);
  } else {
    lo = parse_int(std::string_view(text).substr(0, dots));
    hi = parse_int(std::string_view(text).substr(dots + 2));
  }
  if (lo > hi) throw UsageError("empty dimension range '" + text + "'");
  std::vector<int> out;
  for (int m = lo; m <= hi; ++m) {
    (void)Dimension(m);
    out.push_back(m);
  }
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"R-function analysis, convex envelope and entanglement-of-formation bounds", "rfun"};
  app.fallthrough();
  app.require_subcommand(1);

  Config cfg;
  app.add_option("--tol", cfg.tolerance, "Root-finding tolerance")->capture_default_str();
  app.add_option("--grid", cfg.grid_size, "Grid size for tables and certification")
      ->capture_default_str();
  app.add_option("--log", cfg.log_base, "Logarithm base: two|natural (env RFUN_LOG_BASE)");
  app.add_option("--format", cfg.output_format, "Table output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();

  std::function<int()> action;

  int eval_m = 0;
  double eval_lambda = 0.0;
  std::string eval_which;
  auto* eval = app.add_subcommand("eval", "Evaluate a scalar function at (m, lambda)");
  eval->add_option("--m", eval_m, "Dimension m >= 2")->required();
  eval->add_option("--lambda", eval_lambda, "Point in [1, m]")->required();
  eval->add_option("--which", eval_which, "Quantity")
      ->required()
      ->check(CLI::IsMember({"R", "R1", "R2", "gamma", "g", "f", "hull"}));
  eval->callback([&] {
    action = [&] {
      const double v = evaluate(eval_which, Dimension(eval_m), eval_lambda, cfg.base());
      out << format_significant(v) << '\n';
      return exit_ok;
    };
  });

  std::string certify_m;
  auto* certify = app.add_subcommand("certify", "Certify the single-inflection property of R");
  certify->add_option("--m", certify_m, "Dimension or inclusive range a..b")->required();
  certify->callback([&] {
    action = [&] {
      if (cfg.grid_size < 1000) throw UsageError("certification needs --grid >= 1000");
      const auto dims = parse_m_range(certify_m);
      nlohmann::ordered_json docs = nlohmann::ordered_json::array();
      bool ok = true;
      for (int m : dims) {
        const auto report = certify_proof(Dimension(m), cfg.grid_size);
        ok = ok && report.overall;
        docs.push_back(to_json(report));
      }
      out << (dims.size() == 1 ? docs[0] : docs).dump(2) << '\n';
      return ok ? exit_ok : exit_check_failed;
    };
  });

  int table_m = 0;
  std::string table_output;
  auto* table = app.add_subcommand("table", "Tabulate lambda, R, R'' and co(R) for plotting");
  table->add_option("--m", table_m, "Dimension m >= 2")->required();
  table->add_option("--output,-o", table_output, "Output file (default: stdout)");
  table->callback([&] {
    action = [&] {
      const Dimension dim(table_m);
      const bool json = cfg.output_format == "json";
      if (table_output.empty()) {
        write_table(out, dim, cfg.grid_size, cfg.base(), json);
        return exit_ok;
      }
      std::ofstream file(table_output, std::ios::binary);
      if (!file) throw IoError("cannot write " + table_output);
      write_table(file, dim, cfg.grid_size, cfg.base(), json);
      file.flush();
      if (!file) throw IoError("write failed for " + table_output);
      return exit_ok;
    };
  });

  auto* eof = app.add_subcommand("eof", "Entanglement of formation");
  eof->require_subcommand(1);
  int iso_d = 0;
  double iso_f = 0.0;
  auto* iso = eof->add_subcommand("isotropic", "EOF of a d x d isotropic state");
  iso->add_option("--d", iso_d, "Local dimension d >= 2")->required();
  iso->add_option("--F", iso_f, "Fidelity in [0, 1]")->required();
  iso->callback([&] {
    action = [&] {
      out << format_significant(isotropic_eof(iso_d, iso_f, cfg.base())) << '\n';
      return exit_ok;
    };
  });
  std::string state_path;
  auto* bound = eof->add_subcommand("bound", "Lower bound co(R(Lambda)) for a state file");
  bound->add_option("--state", state_path, "Density-matrix JSON file")->required();
  bound->callback([&] {
    action = [&] {
      out << format_significant(eof_lower_bound(load_state(state_path), cfg.base())) << '\n';
      return exit_ok;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    cfg.validate();
    (void)cfg.base();
    return action ? action() : exit_usage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return exit_io;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const ValidationError& e) {
    err << "error: invalid state: " << e.what() << '\n';
  } catch (const StateFormatError& e) {
    err << "error: malformed state file: " << e.what() << '\n';
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return exit_check_failed;
  }
  return exit_usage;
}

}  // namespace rfun::cli

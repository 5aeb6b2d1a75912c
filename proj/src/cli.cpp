#include "casimir/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "CLI11.hpp"
#include "casimir/format.hpp"
#include "casimir/lifshitz.hpp"
#include "casimir/material_io.hpp"
#include "casimir/parallel.hpp"
#include "casimir/quadrature.hpp"
#include "casimir/retarded_limit.hpp"
#include "casimir/sign_atlas.hpp"
#include "casimir/verification.hpp"

namespace casimir::cli {

namespace {

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A computation ran but its quadrature did not converge.
class ConvergenceError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CommonOptions {
  std::string format = "csv";
  std::string output;
  double rel_tol = quadrature::QuadratureSpec{}.rel_tol;
  double abs_tol = quadrature::QuadratureSpec{}.abs_tol;

  quadrature::QuadratureSpec spec() const {
    quadrature::QuadratureSpec s;
    s.rel_tol = rel_tol;
    s.abs_tol = abs_tol;
    s.validate();
    return s;
  }
  bool json() const { return format == "json"; }
};

void add_common(CLI::App& cmd, CommonOptions& o) {
  cmd.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  cmd.add_option("--output,-o", o.output, "Write results to this file instead of stdout");
  cmd.add_option("--rel-tol", o.rel_tol, "Relative quadrature tolerance");
  cmd.add_option("--abs-tol", o.abs_tol, "Absolute quadrature tolerance");
}

struct MaterialOptions {
  std::string path;
  std::optional<double> eps1, eps2, eps3x, eps3z;

  MaterialSystem resolve() const {
    const bool any_inline = eps1 || eps2 || eps3x || eps3z;
    if (!path.empty() && any_inline) throw UsageError("--material conflicts with inline --eps* flags");
    MaterialSystem system;
    if (!path.empty()) {
      try {
        system = load_material(path);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
    } else {
      if (!(eps1 && eps2 && eps3x && eps3z))
        throw UsageError("give --material FILE or all of --eps1 --eps2 --eps3x --eps3z");
      system = MaterialSystem::constant(*eps1, *eps2, *eps3x, *eps3z);
    }
    if (auto report = validate(system); !report.ok()) throw UsageError("invalid material: " + report.to_string());
    return system;
  }
};

void add_material(CLI::App& cmd, MaterialOptions& m) {
  cmd.add_option("--material", m.path, "Material system JSON file");
  cmd.add_option("--eps1", m.eps1, "Static permittivity of plate 1");
  cmd.add_option("--eps2", m.eps2, "Static permittivity of plate 2");
  cmd.add_option("--eps3x", m.eps3x, "Static interlayer permittivity perpendicular to the optical axis");
  cmd.add_option("--eps3z", m.eps3z, "Static interlayer permittivity along the optical axis");
}

// Results are assembled in memory, then written by a single writer.
void emit(const CommonOptions& o, const std::string& text, std::ostream& out) {
  if (o.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(o.output);
  if (!file) throw UsageError("cannot open output file " + o.output);
  file << text;
}

struct Row {
  double separation, value, error;
  bool converged;
};

std::string render_rows(const std::vector<Row>& rows, const char* units, const CommonOptions& o) {
  std::ostringstream os;
  if (o.json()) {
    auto one = [&](const Row& r) {
      os << "{\"value\": " << json_double(r.value) << ", \"error_estimate\": " << json_double(r.error)
         << ", \"separation\": " << json_double(r.separation) << ", \"units\": \"" << units
         << "\", \"converged\": " << (r.converged ? "true" : "false") << "}";
    };
    if (rows.size() == 1) {
      one(rows.front());
      os << "\n";
    } else {
      os << "[";
      for (std::size_t i = 0; i < rows.size(); ++i) {
        os << (i ? ",\n  " : "\n  ");
        one(rows[i]);
      }
      os << "\n]\n";
    }
    return os.str();
  }
  os << "# units: separation=m, value=" << units << ", error_estimate=" << units << "\n";
  os << "separation,value,error_estimate,converged\n";
  for (const auto& r : rows)
    os << fmt_double(r.separation) << ',' << fmt_double(r.value) << ',' << fmt_double(r.error) << ','
       << (r.converged ? "true" : "false") << '\n';
  return os.str();
}

void check_separations(const std::vector<double>& seps) {
  for (double a : seps)
    if (!(a > 0.0)) throw UsageError("separations must be positive (meters)");
}

std::string json_error(const std::string& kind, const std::string& message) {
  return "{\"error\": " + json_string(message) + ", \"kind\": " + json_string(kind) + "}\n";
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Casimir energy and force between isotropic plates across a uniaxial layer", "casimir-aniso"};
  app.require_subcommand(1);

  CommonOptions common;
  MaterialOptions material;
  std::vector<double> separations;

  auto* force = app.add_subcommand("force", "Force per unit area (N/m^2, positive = attractive)");
  auto* energy = app.add_subcommand("energy", "Energy per unit area (J/m^2)");
  for (auto* cmd : {force, energy}) {
    add_common(*cmd, common);
    add_material(*cmd, material);
    cmd->add_option("--a", separations, "Plate separation(s) in meters")->required()->delimiter(',');
  }

  double m1 = 0.0, m2 = 0.0, m3 = 0.0;
  auto* psi_cmd = app.add_subcommand("psi", "Retarded-limit factor psi = psi1 + psi2");
  add_common(*psi_cmd, common);
  psi_cmd->add_option("--m1", m1, "eps1 / eps3x")->required();
  psi_cmd->add_option("--m2", m2, "eps2 / eps3x")->required();
  psi_cmd->add_option("--m3", m3, "eps3z / eps3x")->required();

  std::vector<double> m2_list, m3_list;
  double m3_min = 0.05, m3_max = 10.0;
  int m3_count = 60;
  std::string m3_spacing = "log";
  auto* sweep_cmd = app.add_subcommand("sweep", "Tabulate psi over an (M2, M3) grid at fixed M1");
  add_common(*sweep_cmd, common);
  sweep_cmd->add_option("--m1", m1, "eps1 / eps3x")->required();
  sweep_cmd->add_option("--m2", m2_list, "M2 values (comma separated)")->required()->delimiter(',');
  sweep_cmd->add_option("--m3", m3_list, "Explicit M3 values (comma separated)")->delimiter(',');
  sweep_cmd->add_option("--m3-min", m3_min, "Lower end of the generated M3 grid");
  sweep_cmd->add_option("--m3-max", m3_max, "Upper end of the generated M3 grid");
  sweep_cmd->add_option("--m3-count", m3_count, "Number of generated M3 points");
  sweep_cmd->add_option("--m3-spacing", m3_spacing, "Generated grid spacing")->check(CLI::IsMember({"log", "linear"}));

  std::optional<double> lo, hi;
  auto* border_cmd = app.add_subcommand("border", "Locate psi = 0 crossings in M3 at fixed (M1, M2)");
  add_common(*border_cmd, common);
  border_cmd->add_option("--m1", m1, "eps1 / eps3x")->required();
  border_cmd->add_option("--m2", m2_list, "M2 values (comma separated)")->required()->delimiter(',');
  border_cmd->add_option("--lo", lo, "Lower end of an explicit M3 bracket");
  border_cmd->add_option("--hi", hi, "Upper end of an explicit M3 bracket");

  auto* verify_cmd = app.add_subcommand("verify", "Run the internal consistency suites");
  add_common(*verify_cmd, common);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "casimir-aniso: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (const char* env = std::getenv(parallel::kThreadsEnv); env && !parallel::parse_thread_cap(env))
      throw UsageError(std::string(parallel::kThreadsEnv) + " must be a positive integer");

    const auto spec = [&] {
      try {
        return common.spec();
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
    }();

    if (force->parsed() || energy->parsed()) {
      const MaterialSystem system = material.resolve();
      check_separations(separations);
      std::vector<Row> rows;
      for (double a : separations) {
        if (force->parsed()) {
          const auto r = lifshitz::casimir_force(system, a, spec);
          rows.push_back({a, r.value, r.error_estimate, r.converged});
        } else {
          const auto r = lifshitz::casimir_energy(system, a, spec);
          rows.push_back({a, r.value, r.error_estimate, r.converged});
        }
      }
      for (const auto& r : rows)
        if (!r.converged) throw ConvergenceError("quadrature did not converge at separation " + fmt_double(r.separation));
      emit(common, render_rows(rows, force->parsed() ? "N/m^2" : "J/m^2", common), out);
      return kExitOk;
    }

    if (psi_cmd->parsed()) {
      const double one[] = {m2};
      const double three[] = {m3};
      const auto result = atlas::sweep_serial(m1, one, three, spec);
      if (!result.rows.front().ok()) throw std::domain_error(result.rows.front().error);
      std::ostringstream os;
      if (common.json()) {
        atlas::write_json(result, os);
      } else {
        atlas::write_csv(result, os);
      }
      emit(common, os.str(), out);
      return kExitOk;
    }

    if (sweep_cmd->parsed()) {
      std::vector<double> m3_grid = m3_list;
      if (m3_grid.empty()) {
        try {
          m3_grid = m3_spacing == "log" ? atlas::log_grid(m3_min, m3_max, m3_count)
                                        : atlas::linear_grid(m3_min, m3_max, m3_count);
        } catch (const std::invalid_argument& e) {
          throw UsageError(e.what());
        }
      }
      const auto result = atlas::sweep(m1, m2_list, m3_grid, spec);
      std::ostringstream os;
      if (common.json()) {
        atlas::write_json(result, os);
      } else {
        atlas::write_csv(result, os);
      }
      emit(common, os.str(), out);
      return kExitOk;
    }

    if (border_cmd->parsed()) {
      if (lo.has_value() != hi.has_value()) throw UsageError("--lo and --hi must be given together");
      std::vector<atlas::BorderPoint> points;
      for (double m2v : m2_list) {
        if (lo) {
          points.push_back(atlas::border_m3(m1, m2v, *lo, *hi, spec));
        } else {
          const auto found = atlas::find_borders(m1, m2v, {}, spec);
          points.insert(points.end(), found.begin(), found.end());
        }
      }
      std::ostringstream os;
      if (common.json()) {
        os << "[";
        for (std::size_t i = 0; i < points.size(); ++i) {
          os << (i ? ",\n  " : "\n  ") << "{\"m1\": " << json_double(m1) << ", \"m2\": " << json_double(points[i].m2)
             << ", \"m3_star\": " << json_double(points[i].m3_star)
             << ", \"bracket_width\": " << json_double(points[i].bracket_width) << ", \"units\": \"dimensionless\"}";
        }
        os << (points.empty() ? "]\n" : "\n]\n");
      } else {
        os << "# units: dimensionless; psi(m1, m2, m3) = 0 within m3_star +/- bracket_width\n";
        os << "m1,m2,m3_star,bracket_width\n";
        for (const auto& p : points)
          os << fmt_double(m1) << ',' << fmt_double(p.m2) << ',' << fmt_double(p.m3_star) << ','
             << fmt_double(p.bracket_width) << '\n';
      }
      emit(common, os.str(), out);
      return kExitOk;
    }

    if (verify_cmd->parsed()) {
      const auto suites = verification::run_all(spec);
      bool all = true;
      std::ostringstream os;
      if (common.json()) os << "[";
      for (std::size_t i = 0; i < suites.size(); ++i) {
        const auto& s = suites[i];
        all = all && s.passed;
        if (common.json()) {
          os << (i ? ",\n  " : "\n  ") << "{\"suite\": " << json_string(s.name)
             << ", \"passed\": " << (s.passed ? "true" : "false") << ", \"worst\": " << json_double(s.worst)
             << ", \"threshold\": " << json_double(s.threshold) << ", \"cases\": " << s.cases << "}";
        } else {
          os << (s.passed ? "PASS " : "FAIL ") << s.name << ": " << s.detail << "\n";
        }
      }
      if (common.json()) os << "\n]\n";
      emit(common, os.str(), out);
      return all ? kExitOk : kExitFailure;
    }
  } catch (const UsageError& e) {
    err << "casimir-aniso: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "casimir-aniso: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ConvergenceError& e) {
    err << "casimir-aniso: " << e.what() << "\n";
    if (common.json()) out << json_error("convergence", e.what());
    return kExitFailure;
  } catch (const std::exception& e) {
    err << "casimir-aniso: " << e.what() << "\n";
    if (common.json()) out << json_error("computation", e.what());
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace casimir::cli

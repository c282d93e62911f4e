// Command-line surface for the zeros / equilibrium / quantization library.
// Every subcommand mirrors one library operation and emits CSV or JSON.
#include "stieltjes/crossval.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

using namespace stieltjes;
using crossval::format_double;
using nlohmann::json;
using nlohmann::ordered_json;

namespace {

struct CommonOpts {
  std::string format = "csv";
  std::string output;  // empty: stdout
  std::string config_path;
};

// Writes `text` to the chosen sink. Relative paths resolve against
// STIELTJES_OUT_DIR when that variable is set.
void emit(const CommonOpts& c, const std::string& text) {
  if (c.output.empty()) {
    std::cout << text;
    return;
  }
  std::filesystem::path p = c.output;
  if (p.is_relative()) {
    if (const char* dir = std::getenv("STIELTJES_OUT_DIR")) p = dir / p;
  }
  std::ofstream out(p, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file " + p.string());
  out << text;
}

// --config <file> supplies defaults for any flag not given on the command
// line; JSON keys use the long option names without dashes.
json load_config(const std::string& path) {
  if (path.empty()) return json::object();
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("--config", "cannot open " + path);
  json j;
  in >> j;
  return j;
}

template <class T>
void merge(const json& cfg, const CLI::Option* opt, const std::string& key,
           T& value) {
  if (opt->count() == 0 && cfg.contains(key)) value = cfg.at(key).get<T>();
}

orthopoly::PolynomialFamily make_family(const std::string& name, double m,
                                        double p, double q) {
  if (name == "hermite") return orthopoly::PolynomialFamily::hermite();
  if (name == "laguerre") return orthopoly::PolynomialFamily::laguerre(m);
  if (name == "jacobi") return orthopoly::PolynomialFamily::jacobi(p, q);
  throw CLI::ValidationError("--family", "unknown family " + name);
}

qhj::ModelKind make_model_kind(const std::string& name) {
  if (name == "oscillator") return qhj::ModelKind::HarmonicOscillator;
  if (name == "coulomb") return qhj::ModelKind::CoulombRadial;
  throw CLI::ValidationError("--model", "unknown model " + name);
}

std::string positions_csv(const Eigen::VectorXd& x) {
  std::ostringstream os;
  os << "k,position\n";
  for (Eigen::Index k = 0; k < x.size(); ++k)
    os << k << ',' << format_double(x[k]) << '\n';
  return os.str();
}

std::string positions_json(const std::string& subject, int n,
                           const Eigen::VectorXd& x) {
  ordered_json j;
  j["subject"] = subject;
  j["n"] = n;
  j["positions"] = std::vector<double>(x.begin(), x.end());
  return j.dump(2) + "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stieltjes electrostatics, orthogonal-polynomial zeros and "
               "QHJ quantization, cross-checked"};
  app.require_subcommand(1);

  CommonOpts common;
  std::string family_name = "hermite", model_name = "oscillator";
  double lag_m = 0.0, jac_p = 1.0, jac_q = 1.0;
  int l = 0, n = 1, n_lo = 1, n_hi = 1;
  double tol = 1e-9;
  double curve_center = 0.0, curve_ax = 0.0, curve_ay = 0.0;
  int curve_points = 0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", common.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--output", common.output, "output file (default stdout)");
    sub->add_option("--config", common.config_path,
                    "JSON file with defaults for unset flags");
  };
  auto add_family = [&](CLI::App* sub) {
    sub->add_option("--family", family_name, "hermite | laguerre | jacobi");
    sub->add_option("--m", lag_m, "Laguerre weight exponent (> -1)");
    sub->add_option("--p", jac_p, "Jacobi fixed charge at +1 (> 0)");
    sub->add_option("--q", jac_q, "Jacobi fixed charge at -1 (> 0)");
  };
  auto add_model = [&](CLI::App* sub) {
    sub->add_option("--model", model_name, "oscillator | coulomb");
    sub->add_option("--l", l, "Coulomb angular momentum (>= 0)");
  };

  CLI::App* cmd_zeros = app.add_subcommand("zeros", "orthogonal-polynomial zeros");
  CLI::App* cmd_eq = app.add_subcommand("equilibrium", "electrostatic equilibrium");
  CLI::App* cmd_field = app.add_subcommand("field", "external field of a family");
  CLI::App* cmd_spectrum = app.add_subcommand("spectrum", "bound-state energy");
  CLI::App* cmd_riccati = app.add_subcommand("riccati", "Riccati identity sweep");
  CLI::App* cmd_quantize = app.add_subcommand("quantize", "contour quantization J");
  CLI::App* cmd_nodes = app.add_subcommand("nodes", "wavefunction nodes");
  CLI::App* cmd_verify = app.add_subcommand("verify", "zeros vs equilibrium");
  CLI::App* cmd_vmodel = app.add_subcommand("verify-model", "three-route model check");
  CLI::App* cmd_sweep = app.add_subcommand("sweep", "verify over a range of n");

  for (auto* sub : {cmd_zeros, cmd_eq, cmd_field, cmd_verify}) add_family(sub);
  for (auto* sub : {cmd_spectrum, cmd_riccati, cmd_quantize, cmd_nodes, cmd_vmodel})
    add_model(sub);
  add_family(cmd_sweep);
  add_model(cmd_sweep);
  bool sweep_model = false;
  cmd_sweep->add_flag("--use-model", sweep_model,
                      "sweep a quantum model instead of a family");
  for (auto* sub : {cmd_zeros, cmd_eq, cmd_spectrum, cmd_riccati, cmd_quantize,
                    cmd_nodes, cmd_verify, cmd_vmodel})
    sub->add_option("--n", n, "degree / quantum number");
  cmd_sweep->add_option("--n-lo", n_lo, "first n");
  cmd_sweep->add_option("--n-hi", n_hi, "last n");
  for (auto* sub : {cmd_verify, cmd_vmodel, cmd_sweep})
    sub->add_option("--tol", tol, "position tolerance");
  cmd_quantize->add_option("--curve-center", curve_center, "ellipse center");
  cmd_quantize->add_option("--curve-ax", curve_ax, "ellipse real semi-axis");
  cmd_quantize->add_option("--curve-ay", curve_ay, "ellipse imaginary semi-axis");
  cmd_quantize->add_option("--curve-points", curve_points, "samples on the curve");
  for (auto* sub : app.get_subcommands({})) add_common(sub);

  try {
    app.parse(argc, argv);
    CLI::App* sub = app.get_subcommands().front();
    const json cfg = load_config(common.config_path);
    merge(cfg, sub->get_option("--format"), "format", common.format);
    merge(cfg, sub->get_option("--output"), "output", common.output);
    if (sub->get_option_no_throw("--family"))
      merge(cfg, sub->get_option("--family"), "family", family_name);
    if (sub->get_option_no_throw("--model"))
      merge(cfg, sub->get_option("--model"), "model", model_name);
    if (sub->get_option_no_throw("--m")) merge(cfg, sub->get_option("--m"), "m", lag_m);
    if (sub->get_option_no_throw("--p")) merge(cfg, sub->get_option("--p"), "p", jac_p);
    if (sub->get_option_no_throw("--q")) merge(cfg, sub->get_option("--q"), "q", jac_q);
    if (sub->get_option_no_throw("--l")) merge(cfg, sub->get_option("--l"), "l", l);
    if (sub->get_option_no_throw("--n")) merge(cfg, sub->get_option("--n"), "n", n);
    if (sub->get_option_no_throw("--tol")) merge(cfg, sub->get_option("--tol"), "tol", tol);
    if (sub->get_option_no_throw("--n-lo")) {
      merge(cfg, sub->get_option("--n-lo"), "n_lo", n_lo);
      merge(cfg, sub->get_option("--n-hi"), "n_hi", n_hi);
    }
    const bool want_json = common.format == "json";

    if (sub == cmd_zeros) {
      const auto fam = make_family(family_name, lag_m, jac_p, jac_q);
      const auto z = orthopoly::zeros(fam, n);
      emit(common, want_json ? positions_json(family_name, n, z.positions)
                             : positions_csv(z.positions));
      return 0;
    }
    if (sub == cmd_eq) {
      const auto fam = make_family(family_name, lag_m, jac_p, jac_q);
      const auto res = electro::solve_for_family(fam, n);
      if (!res.converged) {
        std::cerr << "equilibrium solve did not converge (residual "
                  << format_double(res.residual_norm) << ")\n";
        return 3;
      }
      if (want_json) {
        ordered_json j;
        j["subject"] = family_name;
        j["n"] = n;
        j["positions"] = std::vector<double>(res.config.positions.begin(),
                                             res.config.positions.end());
        j["residual_norm"] = res.residual_norm;
        j["iterations"] = res.iterations;
        j["min_hessian_eigenvalue"] = res.min_hessian_eigenvalue;
        j["stable"] = res.stable;
        emit(common, j.dump(2) + "\n");
      } else {
        emit(common, positions_csv(res.config.positions));
      }
      std::cout << "equilibrium: n=" << n << " iters=" << res.iterations
                << " residual=" << format_double(res.residual_norm)
                << (res.stable ? " stable\n" : " UNSTABLE\n");
      return 0;
    }
    if (sub == cmd_field) {
      const auto fam = make_family(family_name, lag_m, jac_p, jac_q);
      const auto f = electro::field_for_family(fam);
      if (want_json) {
        ordered_json j;
        j["subject"] = family_name;
        j["c0"] = f.c0;
        j["c1"] = f.c1;
        for (const auto& p : f.poles)
          j["poles"].push_back({{"location", p.location}, {"strength", p.strength}});
        if (f.poles.empty()) j["poles"] = json::array();
        emit(common, j.dump(2) + "\n");
      } else {
        std::ostringstream os;
        os << "term,location,value\n";
        os << "c0,," << format_double(f.c0) << '\n';
        os << "c1,," << format_double(f.c1) << '\n';
        for (const auto& p : f.poles)
          os << "pole," << format_double(p.location) << ','
             << format_double(p.strength) << '\n';
        emit(common, os.str());
      }
      return 0;
    }

    const auto kind = make_model_kind(model_name);
    if (sub == cmd_spectrum) {
      const auto model = qhj::build_model(kind, l);
      const auto s = qhj::spectrum(model, n);
      if (want_json) {
        ordered_json j;
        j["subject"] = model_name;
        j["n"] = s.n;
        j["energy"] = s.energy;
        j["termination_rule"] = s.termination_rule;
        emit(common, j.dump(2) + "\n");
      } else {
        emit(common, "n,energy\n" + std::to_string(s.n) + "," +
                         format_double(s.energy) + "\n");
      }
      std::cout << "E_" << n << " = " << format_double(s.energy) << "\n";
      return 0;
    }
    if (sub == cmd_riccati) {
      const auto r = crossval::verify_model(kind, l, n);
      std::ostringstream os;
      os << "subject,n,max_riccati_residual\n"
         << r.subject << ',' << n << ','
         << format_double(r.max_riccati_residual) << '\n';
      if (want_json) {
        ordered_json j;
        j["subject"] = r.subject;
        j["n"] = n;
        j["max_riccati_residual"] = r.max_riccati_residual;
        emit(common, j.dump(2) + "\n");
      } else {
        emit(common, os.str());
      }
      std::cout << "max Riccati residual: "
                << format_double(r.max_riccati_residual) << "\n";
      return 0;
    }
    if (sub == cmd_quantize) {
      const auto model = qhj::build_model(kind, l);
      std::optional<numkernel::ClosedCurve> curve;
      if (curve_ax > 0.0) {
        numkernel::ClosedCurve c = qhj::default_curve(model, n);
        c.center = curve_center;
        c.semi_axis_real = curve_ax;
        c.semi_axis_imag = curve_ay > 0.0 ? curve_ay : 0.5 * curve_ax;
        if (curve_points > 0) c.points = curve_points;
        curve = c;
      }
      const double jval = qhj::quantize_contour(model, n, curve);
      char line[64];
      std::snprintf(line, sizeof(line), "J=%.9f\n", jval);
      std::cout << line;
      if (want_json) {
        ordered_json j;
        j["subject"] = model_name;
        j["n"] = n;
        j["J"] = jval;
        emit(common, j.dump(2) + "\n");
      } else if (!common.output.empty()) {
        emit(common, "subject,n,J\n" + model_name + "," + std::to_string(n) +
                         "," + format_double(jval) + "\n");
      }
      return 0;
    }
    if (sub == cmd_nodes) {
      const auto model = qhj::build_model(kind, l);
      const auto nodes = qhj::wavefunction_nodes(model, n);
      emit(common, want_json ? positions_json(model_name, n, nodes.positions)
                             : positions_csv(nodes.positions));
      return 0;
    }
    if (sub == cmd_verify || sub == cmd_vmodel || sub == cmd_sweep) {
      crossval::TolerancePolicy policy;
      policy.positions = tol;
      std::vector<crossval::CrossReport> reports;
      if (sub == cmd_verify) {
        reports.push_back(crossval::verify_family(
            make_family(family_name, lag_m, jac_p, jac_q), n, tol));
      } else if (sub == cmd_vmodel) {
        reports.push_back(crossval::verify_model(kind, l, n, policy));
      } else {
        if (!(1 <= n_lo && n_lo <= n_hi && n_hi <= 200))
          throw CLI::ValidationError("--n-lo/--n-hi",
                                     "need 1 <= n_lo <= n_hi <= 200");
        for (int k = n_lo; k <= n_hi; ++k)
          reports.push_back(
              sweep_model
                  ? crossval::verify_model(kind, l, k, policy)
                  : crossval::verify_family(
                        make_family(family_name, lag_m, jac_p, jac_q), k, tol));
      }
      bool all_pass = true;
      std::ostringstream csv;
      csv << crossval::csv_header() << '\n';
      ordered_json jarr = json::array();
      for (const auto& r : reports) {
        all_pass = all_pass && r.pass;
        csv << crossval::to_csv_row(r) << '\n';
        if (want_json)
          jarr.push_back(ordered_json::parse(crossval::to_json(r)));
        std::cout << r.subject << " n=" << r.n
                  << (r.pass ? " PASS" : " FAIL")
                  << " dev=" << format_double(r.dev_zeros_equilibrium) << "\n";
      }
      if (want_json) {
        emit(common, reports.size() == 1 ? crossval::to_json(reports.front())
                                         : jarr.dump(2) + "\n");
      } else {
        emit(common, csv.str());
      }
      return all_pass ? 0 : 1;
    }
    return 2;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 3;
  }
}

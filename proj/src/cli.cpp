#include "tcotto/cli.hpp"

#include "tcotto/entanglement.hpp"
#include "tcotto/error.hpp"
#include "tcotto/otto.hpp"
#include "tcotto/sweep.hpp"
#include "tcotto/verify.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <ctime>
#include <ostream>
#include <sstream>
#include <thread>

namespace tcotto::cli {

namespace {

struct OutputOptions {
  std::string format;
  std::string out = "-";
  bool stamp = false;
};

void add_output_options(CLI::App *cmd, OutputOptions &o, const std::string &default_format,
                        bool with_stamp) {
  o.format = default_format;
  cmd->add_option("--format", o.format, "Output encoding")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd->add_option("--out", o.out, "Output file, '-' for standard output")
      ->capture_default_str();
  if (with_stamp)
    cmd->add_flag("--stamp", o.stamp,
                  "Add a UTC generation time to the provenance block (off by default "
                  "so output is reproducible)");
}

void emit(const OutputOptions &o, const std::string &text, std::ostream &out) {
  if (o.out == "-")
    out << text;
  else
    write_file(o.out, text);
}

std::string utc_now() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::vector<double> parse_xi_values(const std::string &text) {
  std::vector<double> out;
  if (text.find(':') != std::string::npos) {
    // min:max:steps, reusing the grid axis syntax.
    const GridSpec g = parse_grid(text + ",0:1:2");
    for (int i = 0; i < g.x_steps; ++i)
      out.push_back(g.x_at(i));
    return out;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception &) {
      used = 0;
    }
    if (used == 0 || used != item.size())
      throw DomainError("--xi: cannot parse '" + item + "' as a number");
    out.push_back(v);
  }
  if (out.empty())
    throw DomainError("--xi: no values given");
  return out;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Thermal entanglement and quantum Otto cycle of two Tavis-Cummings atoms "
               "with dynamical Stark shift. Units: k_B = hbar = 1, temperatures in "
               "energy units.",
               "tcotto"};
  app.require_subcommand(1, 1);
  app.set_help_all_flag("--help-all", "Help for every subcommand");

  // eval
  double ex = 1.0, ey = 4.0;
  OutputOptions eval_out;
  auto *eval = app.add_subcommand("eval", "Concurrence at one (x, y) point, x = 2g/xi, "
                                          "y = xi*alpha^2/T (gauge xi*alpha^2 = 1)");
  eval->add_option("--x", ex, "Coupling ratio 2g/xi (> 0)")->capture_default_str();
  eval->add_option("--y", ey, "Inverse temperature in units of xi*alpha^2 (>= 0)")
      ->capture_default_str();
  add_output_options(eval, eval_out, "json", false);

  // surface
  std::string grid_text = GridSpec{}.to_string();
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  OutputOptions surf_out;
  auto *surface = app.add_subcommand("surface", "Concurrence over a uniform (x, y) grid; rows "
                                                "y outer, x inner");
  surface->add_option("--grid", grid_text, "xmin:xmax:xsteps,ymin:ymax:ysteps")
      ->capture_default_str();
  surface->add_option("--workers", workers, "Worker threads (output does not depend on it)")
      ->check(CLI::Range(1u, 256u))
      ->capture_default_str();
  add_output_options(surface, surf_out, "csv", true);

  // otto
  double g1 = 2.0, g2 = 1.0, xi = 0.0, alpha_sq = 1.0, t_hot = 4.0, t_cold = 1.0;
  OutputOptions otto_out;
  auto *otto = app.add_subcommand("otto", "Heats, work and efficiency of one Otto cycle");
  otto->add_option("--g1", g1, "Coupling during the hot isochore (energy)")->capture_default_str();
  otto->add_option("--g2", g2, "Coupling during the cold isochore (energy, <= g1)")
      ->capture_default_str();
  otto->add_option("--xi", xi, "Stark shift strength (energy, >= 0)")->capture_default_str();
  otto->add_option("--alpha-sq", alpha_sq, "Mean photon number (> 0)")->capture_default_str();
  otto->add_option("--t-hot", t_hot, "Hot bath temperature (energy, k_B = 1)")
      ->capture_default_str();
  otto->add_option("--t-cold", t_cold, "Cold bath temperature (energy, k_B = 1, < t-hot)")
      ->capture_default_str();
  add_output_options(otto, otto_out, "json", false);

  // curve
  double cg1 = 2.0, cg2 = 1.0, calpha = 1.0;
  std::string xi_text = "0:20:81";
  OutputOptions curve_out;
  auto *curve = app.add_subcommand("curve", "Efficiency against the Stark shift with both "
                                            "asymptotes");
  curve->add_option("--g1", cg1, "Hot-stroke coupling g + dg (energy)")->capture_default_str();
  curve->add_option("--g2", cg2, "Cold-stroke coupling g (energy)")->capture_default_str();
  curve->add_option("--alpha-sq", calpha, "Mean photon number (> 0)")->capture_default_str();
  curve->add_option("--xi", xi_text,
                    "Stark shifts as min:max:steps or a comma list, strictly increasing")
      ->capture_default_str();
  add_output_options(curve, curve_out, "csv", true);

  // verify
  VerifyOptions vopts;
  auto *verify = app.add_subcommand("verify", "Run the built-in identity checks; exit 0 iff "
                                              "all pass");
  verify->add_option("--samples", vopts.samples, "Random samples per property check")
      ->check(CLI::Range(1u, 1000000u))
      ->capture_default_str();
  verify->add_option("--seed", vopts.seed, "Random seed")->capture_default_str();
  verify->add_flag("--inject-rho33-regression", vopts.inject_rho33_regression,
                   "Testing hook: corrupt the closed-form state so the trace check must fail");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp &) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError &e) {
    err << "tcotto: " << e.what() << "\n";
    if (const auto *sub = app.get_subcommands().empty() ? nullptr : app.get_subcommands().front())
      err << "run 'tcotto " << sub->get_name() << " --help' for usage\n";
    else
      err << "run 'tcotto --help' for usage\n";
    return kExitUsage;
  }

  try {
    if (*eval) {
      const auto rep = concurrence_xy(ex, ey);
      if (eval_out.format == "json") {
        emit(eval_out, to_json(rep), out);
      } else {
        std::string text = "x,y,c,root0,root1,root2,root3\n" + format_double(ex) + "," +
                           format_double(ey) + "," + format_double(rep.c);
        for (double r : rep.roots)
          text += "," + format_double(r);
        emit(eval_out, text + "\n", out);
      }
    } else if (*surface) {
      const auto spec = parse_grid(grid_text);
      const auto table = concurrence_surface(spec, workers);
      auto meta = surface_provenance(table);
      if (surf_out.stamp)
        meta.add("generated", utc_now());
      emit(surf_out, surf_out.format == "csv" ? to_csv(table, meta) : to_json(table, meta), out);
    } else if (*otto) {
      const OttoCycle cycle(g1, g2, xi, alpha_sq, t_hot, t_cold);
      const auto rep = cycle_report(cycle);
      if (otto_out.format == "json") {
        emit(otto_out, to_json(rep), out);
      } else {
        emit(otto_out,
             "q_hot,q_cold,work,eta,eta_carnot,positive_work\n" + format_double(rep.q_hot) +
                 "," + format_double(rep.q_cold) + "," + format_double(rep.work) + "," +
                 format_double(rep.eta) + "," + format_double(rep.eta_carnot) + "," +
                 (rep.positive_work ? "true" : "false") + "\n",
             out);
      }
    } else if (*curve) {
      const auto xis = parse_xi_values(xi_text);
      const auto table = efficiency_curve(cg1, cg2, calpha, xis);
      auto meta = curve_provenance(table);
      if (curve_out.stamp)
        meta.add("generated", utc_now());
      emit(curve_out, curve_out.format == "csv" ? to_csv(table, meta) : to_json(table, meta),
           out);
    } else if (*verify) {
      const auto rep = run_verify(vopts);
      rep.print(out);
      return rep.ok() ? kExitOk : kExitComputation;
    }
  } catch (const Error &e) {
    err << "tcotto: " << e.what() << "\n";
    return kExitComputation;
  }
  return kExitOk;
}

} // namespace tcotto::cli

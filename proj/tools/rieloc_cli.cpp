// Command line front end: kernel evaluation, asymptotic-error sweeps, local
// convolutions, and the decay-rate experiments, all emitting CSV.

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>

#include "rieloc/asymptotics.hpp"
#include "rieloc/csv.hpp"
#include "rieloc/experiments.hpp"
#include "rieloc/filters.hpp"
#include "rieloc/kernels.hpp"
#include "rieloc/localisation.hpp"

namespace {

constexpr double kPi = std::numbers::pi;

struct ParamArgs {
  int d = 0;  // 0 means "use alpha/beta"
  double alpha = 0.0;
  double beta = 0.0;

  rieloc::JacobiParams jacobi() const {
    if (d > 0) return rieloc::SphereDim{d}.jacobi();
    return {alpha, beta};
  }
};

void add_param_flags(CLI::App* cmd, ParamArgs* args) {
  auto* dopt = cmd->add_option("--d", args->d, "sphere dimension (implies alpha = beta = (d-2)/2)");
  auto* aopt = cmd->add_option("--alpha", args->alpha, "Jacobi exponent alpha");
  auto* bopt = cmd->add_option("--beta", args->beta, "Jacobi exponent beta");
  aopt->excludes(dopt);
  bopt->excludes(dopt);
}

struct OutStream {
  std::ofstream file;
  std::ostream* os = &std::cout;
  bool to_file = false;

  explicit OutStream(const std::string& path) {
    if (!path.empty()) {
      file.open(path);
      if (!file) throw CLI::ValidationError("--out", "cannot open " + path);
      os = &file;
      to_file = true;
    }
  }
  std::ostream& get() { return *os; }
};

void print_fit(const rieloc::DecayRun& run, bool csv_went_to_file) {
  std::ostream& os = csv_went_to_file ? std::cout : std::cerr;
  os << "slope=" << rieloc::csv::format(run.fit.slope)
     << " intercept=" << rieloc::csv::format(run.fit.intercept)
     << " r2=" << rieloc::csv::format(run.fit.r2) << " points=" << run.samples.size() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dirichlet and filtered Jacobi kernels on spheres: evaluation, asymptotics, and "
               "localisation decay experiments"};
  app.require_subcommand(1);

  long long seed = 0;
  app.add_option("--seed", seed, "seed for randomized sweeps (reserved)")->capture_default_str();

  // ---- kernel ---------------------------------------------------------------
  auto* kernel_cmd = app.add_subcommand("kernel", "evaluate a kernel on a theta grid (CSV theta,value)");
  ParamArgs kparams;
  int kL = 16, ktheta_grid = 65, kkappa = 1;
  std::string kkind = "fourier", kout;
  add_param_flags(kernel_cmd, &kparams);
  kernel_cmd->add_option("--L", kL, "degree")->required();
  kernel_cmd->add_option("--kind", kkind, "fourier | filtered")
      ->check(CLI::IsMember({"fourier", "filtered"}));
  kernel_cmd->add_option("--filter-kappa", kkappa, "filter smoothness class");
  kernel_cmd->add_option("--theta-grid", ktheta_grid, "number of grid points on [0, pi]");
  kernel_cmd->add_option("--out", kout, "CSV output path (default stdout)");
  kernel_cmd->callback([&] {
    OutStream out(kout);
    const bool sphere = kparams.d > 0;
    rieloc::KernelSpec spec =
        kkind == "fourier"
            ? (sphere ? rieloc::KernelSpec::fourier(rieloc::SphereDim{kparams.d}, kL)
                      : rieloc::KernelSpec::fourier(kparams.jacobi(), kL))
            : (sphere ? rieloc::KernelSpec::filtered(rieloc::SphereDim{kparams.d},
                                                     rieloc::hermite_filter(kkappa), kL)
                      : rieloc::KernelSpec::filtered(kparams.jacobi(), rieloc::hermite_filter(kkappa),
                                                     kL));
    out.get() << "theta,value\n";
    for (int i = 0; i < ktheta_grid; ++i) {
      const double theta = std::min(kPi, kPi * i / (ktheta_grid - 1));
      rieloc::csv::write_row(out.get(), std::vector<double>{theta, kernel_value(spec, std::cos(theta))});
    }
  });

  // ---- asymp-error ----------------------------------------------------------
  auto* asymp_cmd =
      app.add_subcommand("asymp-error", "exact vs expansion over an L sweep (CSV L,exact,formula,abs_err,rel_env_err)");
  ParamArgs aparams;
  std::string alemma = "2.3", aout;
  double atheta = 1.0;
  int aLmin = 64, aLmax = 2048, akappa = 1;
  asymp_cmd->add_option("--lemma", alemma, "expansion selector: 2.3 one-term | 2.4 two-term | 2.7 filtered")
      ->check(CLI::IsMember({"2.3", "2.4", "2.7"}));
  add_param_flags(asymp_cmd, &aparams);
  asymp_cmd->add_option("--theta", atheta, "evaluation angle in (0, pi)")->required();
  asymp_cmd->add_option("--L-min", aLmin, "sweep start");
  asymp_cmd->add_option("--L-max", aLmax, "sweep end");
  asymp_cmd->add_option("--filter-kappa", akappa, "filter class (selector 2.7 only)");
  asymp_cmd->add_option("--out", aout, "CSV output path (default stdout)");
  asymp_cmd->callback([&] {
    OutStream out(aout);
    const rieloc::JacobiParams p = aparams.jacobi();
    const rieloc::Filter f = rieloc::hermite_filter(akappa);
    out.get() << "L,exact,formula,abs_err,rel_env_err\n";
    for (int L : rieloc::geometric_levels(aLmin, aLmax)) {
      double exact = 0.0;
      rieloc::ExpansionResult r;
      if (alemma == "2.3") {
        exact = rieloc::dirichlet_closed(p, L, std::cos(atheta));
        r = rieloc::dirichlet_one_term(p, L, atheta);
      } else if (alemma == "2.4") {
        exact = rieloc::dirichlet_closed(p, L, std::cos(atheta));
        const auto branch = atheta <= kPi / 2 ? rieloc::KernelBranch::from_zero
                                              : rieloc::KernelBranch::from_pi;
        r = rieloc::dirichlet_two_term(p, L, atheta, branch);
      } else {
        exact = rieloc::filtered_direct(p, f, L, std::cos(atheta));
        r = rieloc::filtered_kernel_asymp(p, f, L, atheta);
      }
      const double abs_err = std::abs(exact - r.value);
      rieloc::csv::write_row(out.get(),
                             std::vector<double>{static_cast<double>(L), exact, r.value, abs_err,
                                                 abs_err / r.envelope});
    }
  });

  // ---- localconv ------------------------------------------------------------
  auto* local_cmd = app.add_subcommand("localconv", "local convolution of the constant function");
  int ld = 2, lL = 64, lkappa = 1;
  double ldelta = kPi / 3, lpsi = 0.0;
  std::string lkind = "fourier", lsweep, lout;
  local_cmd->add_option("--d", ld, "sphere dimension")->required();
  local_cmd->add_option("--L", lL, "degree");
  local_cmd->add_option("--delta", ldelta, "cap radius in radians");
  local_cmd->add_option("--kind", lkind, "fourier | filtered")
      ->check(CLI::IsMember({"fourier", "filtered"}));
  local_cmd->add_option("--filter-kappa", lkappa, "filter smoothness class");
  local_cmd->add_option("--psi", lpsi, "colatitude of the evaluation point");
  local_cmd->add_option("--sweep", lsweep, "L0:L1 geometric sweep, emits CSV L,value");
  local_cmd->add_option("--out", lout, "CSV output path (default stdout)");
  local_cmd->callback([&] {
    OutStream out(lout);
    const rieloc::SphereDim dim{ld};
    const rieloc::Filter f = rieloc::hermite_filter(lkappa);
    auto spec_for = [&](int L) {
      return lkind == "fourier" ? rieloc::KernelSpec::fourier(dim, L)
                                : rieloc::KernelSpec::filtered(dim, f, L);
    };
    const auto one = rieloc::ZonalFunction::one();
    if (lsweep.empty()) {
      const double v = rieloc::local_convolution(dim, spec_for(lL), one, ldelta, lpsi);
      out.get() << rieloc::csv::format(v) << "\n";
      return;
    }
    const auto colon = lsweep.find(':');
    if (colon == std::string::npos) {
      throw CLI::ValidationError("--sweep", "expected L0:L1");
    }
    const int l0 = std::stoi(lsweep.substr(0, colon));
    const int l1 = std::stoi(lsweep.substr(colon + 1));
    out.get() << "L,value\n";
    for (int L : rieloc::geometric_levels(l0, l1)) {
      const double v = rieloc::local_convolution(dim, spec_for(L), one, ldelta, lpsi);
      rieloc::csv::write_row(out.get(), std::vector<double>{static_cast<double>(L), v});
    }
  });

  // ---- decay experiments ------------------------------------------------------
  auto* df_cmd = app.add_subcommand("decay-fourier", "Fourier local-convolution decay over L");
  int fd = 2, fLmin = 64, fLmax = 2048;
  double fdelta = kPi / 3, fxi = kPi / 8;
  bool fsub = false;
  std::string fout;
  df_cmd->add_option("--d", fd, "sphere dimension")->required();
  df_cmd->add_option("--delta", fdelta, "cap radius in radians");
  df_cmd->add_option("--L-min", fLmin, "sweep start");
  df_cmd->add_option("--L-max", fLmax, "sweep end");
  df_cmd->add_flag("--subsequence", fsub, "restrict to the lower-bound phase subsequence");
  df_cmd->add_option("--xi", fxi, "phase margin in (0, pi/4)");
  df_cmd->add_option("--out", fout, "CSV output path (default stdout)");
  df_cmd->callback([&] {
    OutStream out(fout);
    const auto run = rieloc::run_fourier_decay(rieloc::SphereDim{fd}, fdelta,
                                               rieloc::SweepConfig{fLmin, fLmax}, fsub, fxi);
    rieloc::write_decay_csv(out.get(), run);
    print_fit(run, out.to_file);
  });

  auto* dg_cmd = app.add_subcommand("decay-filtered", "filtered local-convolution decay over L");
  int gd = 2, gkappa = 1, gLmin = 64, gLmax = 2048;
  double gdelta = kPi / 3;
  std::string gout;
  dg_cmd->add_option("--d", gd, "sphere dimension")->required();
  dg_cmd->add_option("--delta", gdelta, "cap radius in radians");
  dg_cmd->add_option("--filter-kappa", gkappa, "filter smoothness class");
  dg_cmd->add_option("--L-min", gLmin, "sweep start");
  dg_cmd->add_option("--L-max", gLmax, "sweep end");
  dg_cmd->add_option("--out", gout, "CSV output path (default stdout)");
  dg_cmd->callback([&] {
    OutStream out(gout);
    const auto run = rieloc::run_filtered_decay(rieloc::SphereDim{gd}, gdelta, gkappa,
                                                rieloc::SweepConfig{gLmin, gLmax});
    rieloc::write_decay_csv(out.get(), run);
    print_fit(run, out.to_file);
  });

  auto* dc_cmd = app.add_subcommand("decay-circle", "circle Dirichlet local-convolution decay");
  int cLmin = 64, cLmax = 2048;
  double cdelta = kPi / 3;
  std::string cout_path;
  dc_cmd->add_option("--delta", cdelta, "excluded-arc radius in radians");
  dc_cmd->add_option("--L-min", cLmin, "sweep start");
  dc_cmd->add_option("--L-max", cLmax, "sweep end");
  dc_cmd->add_option("--out", cout_path, "CSV output path (default stdout)");
  dc_cmd->callback([&] {
    OutStream out(cout_path);
    const auto run = rieloc::run_circle_decay(cdelta, rieloc::SweepConfig{cLmin, cLmax});
    rieloc::write_decay_csv(out.get(), run);
    print_fit(run, out.to_file);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

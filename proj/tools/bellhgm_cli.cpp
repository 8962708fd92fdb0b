// Command-line front end: evaluation of the A-hypergeometric (partial Bell)
// polynomials by several methods, grid benchmarks, MLE, sampling, and exact
// conditional tests for the microcanonical Gibbs distribution.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "bellhgm/asymptotics.hpp"
#include "bellhgm/dhgm.hpp"
#include "bellhgm/enumerate.hpp"
#include "bellhgm/errors.hpp"
#include "bellhgm/hgm.hpp"
#include "bellhgm/inference.hpp"
#include "bellhgm/odds.hpp"
#include "bellhgm/polytope.hpp"
#include "bellhgm/recurrence.hpp"
#include "bellhgm/sampling.hpp"
#include "bellhgm/special_values.hpp"

using json = nlohmann::ordered_json;
using namespace bellhgm;

namespace {

struct Param {
  enum class Kind { Ones, Inv, InvFactorial, HalfRising, Gfc, File } kind = Kind::Ones;
  double alpha = 0;
  std::string path;
};

Param parse_param(const std::string& s) {
  Param p;
  if (s == "ones") {
    p.kind = Param::Kind::Ones;
  } else if (s == "inv") {
    p.kind = Param::Kind::Inv;
  } else if (s == "inv-factorial") {
    p.kind = Param::Kind::InvFactorial;
  } else if (s == "half-rising") {
    p.kind = Param::Kind::HalfRising;
  } else if (s.rfind("gfc:", 0) == 0) {
    p.kind = Param::Kind::Gfc;
    p.alpha = std::stod(s.substr(4));
  } else if (s.rfind("file:", 0) == 0) {
    p.kind = Param::Kind::File;
    p.path = s.substr(5);
  } else {
    throw std::domain_error("unknown --param: " + s);
  }
  return p;
}

std::vector<double> param_x(const Param& p, int width) {
  switch (p.kind) {
    case Param::Kind::Ones:
      return indeterminates_ones(width);
    case Param::Kind::Inv:
      return indeterminates_inv(width);
    case Param::Kind::InvFactorial:
      return indeterminates_inv_factorial(width);
    case Param::Kind::HalfRising:
      return indeterminates_gfc(0.5, width);
    case Param::Kind::Gfc:
      return indeterminates_gfc(p.alpha, width);
    case Param::Kind::File: {
      std::ifstream in(p.path);
      if (!in) throw std::domain_error("cannot open " + p.path);
      json j;
      in >> j;
      std::vector<double> x = j.get<std::vector<double>>();
      if (static_cast<int>(x.size()) < width)
        throw std::domain_error("file x has length " + std::to_string(x.size()) +
                                ", need at least " + std::to_string(width));
      x.resize(width);
      return x;
    }
  }
  throw std::domain_error("bad param");
}

Precision parse_precision(const std::string& s) {
  if (s == "double") return Precision::Double;
  if (s == "longdouble") return Precision::LongDouble;
  if (s == "quad") return Precision::Quad;
  throw std::domain_error("unknown precision: " + s);
}

std::optional<Precision> env_precision() {
  const char* e = std::getenv("BELLHGM_PRECISION");
  if (!e || !*e) return std::nullopt;
  return parse_precision(e);
}

std::vector<double> parse_vector(const std::string& s) {
  return json::parse(s).get<std::vector<double>>();
}

SizeIndex parse_size_index(const std::string& s) {
  return json::parse(s).get<SizeIndex>();
}

int guarded(const std::function<void()>& body) {
  try {
    body();
    return 0;
  } catch (const singular_error& e) {
    std::cout << json{{"error", {{"type", "singular"}, {"message", e.what()}}}}.dump() << "\n";
    std::cerr << "singular matrix: " << e.what() << "\n";
    return 3;
  } catch (const numeric_error& e) {
    std::cout << json{{"error", {{"type", "numeric"}, {"message", e.what()}}}}.dump() << "\n";
    std::cerr << "numeric failure: " << e.what() << "\n";
    return 3;
  } catch (const capacity_error& e) {
    std::cout << json{{"error", {{"type", "capacity"}, {"message", e.what()}}}}.dump() << "\n";
    std::cerr << "capacity error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cout << json{{"error", {{"type", "domain"}, {"message", e.what()}}}}.dump() << "\n";
    std::cerr << "domain error: " << e.what() << "\n";
    return 2;
  }
}

struct EvalArgs {
  int n = 4, k = 2;
  int rmin = 1, rmax = -1;
  std::string method = "recurrence";
  std::string param = "ones";
  std::string precision;
  int steps = 500;
  double alpha0 = -1.0;
  double gamma = 0;
  bool vector_out = false;
  bool timing = false;
};

void run_eval(const EvalArgs& a) {
  PartitionSpec spec(a.n, a.k, a.rmin, a.rmax);
  Param p = parse_param(a.param);
  auto prec_env = env_precision();
  auto pick_prec = [&](Precision lib_default) {
    if (!a.precision.empty()) return parse_precision(a.precision);
    if (prec_env) return *prec_env;
    return lib_default;
  };

  auto t0 = std::chrono::steady_clock::now();
  json out;
  if (a.method == "oracle") {
    std::vector<Rational> x(spec.width());
    if (p.kind == Param::Kind::Ones || (p.kind == Param::Kind::Gfc && p.alpha == -1.0)) {
      for (auto& v : x) v = 1;
    } else if (p.kind == Param::Kind::Inv) {
      for (int i = 1; i <= spec.width(); ++i) x[i - 1] = Rational(1, i);
    } else if (p.kind == Param::Kind::InvFactorial) {
      Rational f = 1;
      for (int i = 1; i <= spec.width(); ++i) {
        f /= i;
        x[i - 1] = f;
      }
    } else {
      throw std::domain_error("oracle needs an exact-rational param (ones|inv|inv-factorial)");
    }
    Rational z = oracle_Z(spec, x);
    std::ostringstream os;
    os << z;
    out["Z"] = os.str();
  } else if (a.method == "recurrence") {
    SignedLog z = recurrence_Z(spec, param_x(p, spec.width()));
    out["logZ"] = z.log();
  } else if (a.method == "exact-point") {
    SignedLog z;
    if (p.kind == Param::Kind::Ones) z = special_value(SpecialPoint::Ones, a.n, a.k);
    else if (p.kind == Param::Kind::Inv) z = special_value(SpecialPoint::Inv, a.n, a.k);
    else if (p.kind == Param::Kind::InvFactorial)
      z = special_value(SpecialPoint::InvFactorial, a.n, a.k);
    else if (p.kind == Param::Kind::HalfRising)
      z = special_value(SpecialPoint::HalfRising, a.n, a.k);
    else if (p.kind == Param::Kind::Gfc) z = special_value_gfc(p.alpha, a.n, a.k);
    else throw std::domain_error("exact-point needs ones|inv|inv-factorial|half-rising|gfc:{-1,0.5}");
    out["logZ"] = z.log();
  } else if (a.method == "hgm") {
    GaussManinVector q;
    if (p.kind == Param::Kind::Gfc) {
      q = hgm_gfc(spec, a.alpha0, p.alpha, a.steps, pick_prec(Precision::LongDouble));
    } else {
      IntegrationPath path;
      path.kind = IntegrationPath::Kind::LogLinear;
      path.x0 = indeterminates_ones(spec.width());
      path.x1 = param_x(p, spec.width());
      path.steps = a.steps;
      auto q0 = gauss_manin(spec, path.x0);
      q = hgm_integrate(spec, path, q0, pick_prec(Precision::LongDouble));
    }
    out["logZ"] = q.log_front();
    if (a.vector_out) out["Q"] = {{"unit", q.unit}, {"log_scale", q.log_scale}};
  } else if (a.method == "dhgm") {
    auto q = dhgm(spec, param_x(p, spec.width()), pick_prec(Precision::Quad));
    out["logZ"] = q.log_front();
    if (a.vector_out) out["Q"] = {{"unit", q.unit}, {"log_scale", q.log_scale}};
  } else if (a.method == "asymptotic:mittag-leffler") {
    if (p.kind != Param::Kind::Gfc) throw std::domain_error("asymptotic forms need --param gfc:<a>");
    out["logZ"] = gfc_asymptotic_logZ(a.n, a.k, p.alpha, GfcAsymptoticForm::MittagLeffler);
  } else if (a.method == "asymptotic:fixed-k") {
    if (p.kind != Param::Kind::Gfc) throw std::domain_error("asymptotic forms need --param gfc:<a>");
    out["logZ"] = gfc_asymptotic_logZ(
        a.n, a.k, p.alpha,
        p.alpha > 0 ? GfcAsymptoticForm::FixedKPos : GfcAsymptoticForm::FixedKNeg);
  } else if (a.method == "asymptotic:ips") {
    if (p.kind != Param::Kind::Gfc) throw std::domain_error("asymptotic forms need --param gfc:<a>");
    double g = a.gamma;
    if (g <= 0) throw std::domain_error("asymptotic:ips needs --gamma");
    int wr = static_cast<int>(std::lround(a.n / g)) - static_cast<int>(std::lround(a.k / g)) + 1;
    out["logZ"] = gaussian_approx_logZ(spec, indeterminates_gfc(p.alpha, wr), g);
  } else {
    throw std::domain_error("unknown --method: " + a.method);
  }
  if (a.timing) {
    auto t1 = std::chrono::steady_clock::now();
    out["time_s"] = std::chrono::duration<double>(t1 - t0).count();
  }
  std::cout << out.dump() << "\n";
}

struct BenchArgs {
  double alpha = 0.5;
  std::vector<int> n_list{100, 200, 400, 800};
  std::vector<int> nk_list{10, 30};
  std::vector<std::string> methods{"exact", "recurrence", "hgm", "dhgm"};
  int steps = 500;
  int jobs = 4;
};

void run_bench(const BenchArgs& a) {
  struct Cell {
    std::string method;
    int n, k;
    double logZ = 0, seconds = 0;
    std::string error;
  };
  std::vector<Cell> cells;
  for (const auto& m : a.methods)
    for (int nk : a.nk_list)
      for (int n : a.n_list)
        if (n > nk) cells.push_back({m, n, n - nk, 0, 0, ""});

  auto run_cell = [&](Cell c) {
    auto t0 = std::chrono::steady_clock::now();
    try {
      PartitionSpec spec(c.n, c.k);
      if (c.method == "exact") {
        if (a.alpha != 0.5 && a.alpha != -1.0) throw std::domain_error("no closed form");
        c.logZ = special_value_gfc(a.alpha, c.n, c.k).log();
      } else if (c.method == "recurrence") {
        c.logZ = recurrence_Z(spec, indeterminates_gfc(a.alpha, spec.width())).log();
      } else if (c.method == "hgm") {
        c.logZ = hgm_gfc(spec, -1.0, a.alpha, a.steps, Precision::Quad).log_front();
      } else if (c.method == "dhgm") {
        c.logZ = dhgm(spec, indeterminates_gfc(a.alpha, spec.width())).log_front();
      } else {
        throw std::domain_error("unknown method " + c.method);
      }
    } catch (const std::exception& e) {
      c.error = e.what();
    }
    auto t1 = std::chrono::steady_clock::now();
    c.seconds = std::chrono::duration<double>(t1 - t0).count();
    return c;
  };

  // worker pool over the grid cells
  std::vector<std::future<Cell>> futures;
  std::vector<Cell> done(cells.size());
  size_t next = 0, launched = 0;
  while (next < cells.size()) {
    while (launched < cells.size() && futures.size() < static_cast<size_t>(std::max(1, a.jobs))) {
      futures.push_back(std::async(std::launch::async, run_cell, cells[launched]));
      ++launched;
    }
    done[next] = futures.front().get();
    futures.erase(futures.begin());
    ++next;
  }

  // reference per (n,k): exact when available, else recurrence
  auto ref_for = [&](int n, int k) -> std::optional<double> {
    for (const auto& c : done)
      if (c.n == n && c.k == k && c.error.empty() && c.method == "exact") return c.logZ;
    for (const auto& c : done)
      if (c.n == n && c.k == k && c.error.empty() && c.method == "recurrence") return c.logZ;
    return std::nullopt;
  };

  std::cout << "# bellhgm-bench-csv v1\n";
  std::cout << "method,n,k,alpha,logZ,seconds,diff_vs_reference\n";
  std::cout.precision(10);
  for (const auto& c : done) {
    std::cout << c.method << "," << c.n << "," << c.k << "," << a.alpha << ",";
    if (!c.error.empty()) {
      std::cout << "error,,\n";
      continue;
    }
    auto ref = ref_for(c.n, c.k);
    std::cout << c.logZ << "," << c.seconds << ",";
    if (ref) std::cout << (c.logZ - *ref);
    std::cout << "\n";
  }
}

struct AsympArgs {
  std::vector<int> n_list{40, 100, 400, 800};
  std::vector<double> alphas{0.5, -1.0};
};

void run_asymp(const AsympArgs& a) {
  std::cout << "# bellhgm-asymp-csv v1\n";
  std::cout << "n,k,alpha,gamma,method,logZ,rel_err_vs_exact\n";
  std::cout.precision(10);
  for (int n : a.n_list) {
    int k = n / 2, gamma = n / 4;
    if (n % 4 != 0) throw std::domain_error("asymp grid needs n divisible by 4");
    for (double alpha : a.alphas) {
      PartitionSpec spec(n, k);
      double exact = (alpha == 0.5 || alpha == -1.0)
                         ? special_value_gfc(alpha, n, k).log()
                         : recurrence_Z(spec, indeterminates_gfc(alpha, spec.width())).log();
      auto emit = [&](const std::string& method, std::optional<double> v) {
        std::cout << n << "," << k << "," << alpha << "," << gamma << "," << method << ",";
        if (v)
          std::cout << *v << "," << std::fabs(*v - exact) / std::fabs(exact);
        else
          std::cout << ",";
        std::cout << "\n";
      };
      emit("exact", exact);
      emit("ips", gaussian_approx_logZ(spec, indeterminates_gfc(alpha, 3), gamma));
      if (alpha > 0 && alpha < 1)
        emit("mittag-leffler",
             gfc_asymptotic_logZ(n, k, alpha, GfcAsymptoticForm::MittagLeffler));
      else
        emit("mittag-leffler", std::nullopt);
      emit("fixed-k", gfc_asymptotic_logZ(n, k, alpha,
                                          alpha > 0 ? GfcAsymptoticForm::FixedKPos
                                                    : GfcAsymptoticForm::FixedKNeg));
    }
  }
}

struct MleArgs {
  int n = 10, k = 7;
  std::string model = "gfc";
  std::string sbar;
  std::string algo = "newton";
  double tol = 1e-10;
  int max_iter = 20000;
  bool emit_polytope = false;
};

const char* status_name(MleStatus s) {
  switch (s) {
    case MleStatus::Converged:
      return "converged";
    case MleStatus::NoMle:
      return "no-mle";
    case MleStatus::IterationLimit:
      return "iteration-limit";
  }
  return "?";
}

void run_mle(const MleArgs& a) {
  std::vector<double> sbar = parse_vector(a.sbar);
  json out;
  if (a.model == "full") {
    PartitionSpec spec(a.n, a.k);
    MleAlgo algo = a.algo == "gradient" ? MleAlgo::Gradient : MleAlgo::Newton;
    auto res = mle_full(spec, sbar, algo, a.tol, a.max_iter);
    out["status"] = status_name(res.status);
    if (res.status != MleStatus::NoMle) {
      out["estimate"] = res.y;
      out["residual"] = res.residual;
      out["iterations"] = res.iterations;
      if (res.status == MleStatus::Converged) {
        json g = json::array();
        for (int i = 0; i < res.fisher.rows; ++i) {
          json row = json::array();
          for (int j = 0; j < res.fisher.cols; ++j) row.push_back(res.fisher(i, j));
          g.push_back(row);
        }
        out["fisher_info"] = g;
      }
    }
  } else if (a.model == "gfc") {
    PartitionSpec spec(a.n, a.k);
    auto res = mle_curved_gfc(spec, sbar, a.tol);
    out["status"] = status_name(res.status);
    if (a.k == a.n - 3) {
      auto cub = mle_exists_cubic(a.n, sbar);
      out["existence_condition"] = cub.exists;
      out["cubic_coefficients"] = cub.coeffs;
    }
    if (res.status == MleStatus::Converged) {
      out["estimate"] = res.alpha;
      out["residual"] = res.score;
      out["iterations"] = res.iterations;
      out["fisher_info"] = res.fisher_info;
      out["asymptotic_variance_per_obs"] = 1.0 / res.fisher_info;
    }
    if (a.emit_polytope) {
      if (a.k != a.n - 3) throw std::domain_error("--emit-polytope needs k = n-3");
      json poly;
      json verts = json::array();
      for (const auto& s : enumerate_support(PartitionSpec(a.n, a.k)))
        verts.push_back({{"s", s}, {"eta34", {double(s[2]), double(s[3])}}});
      poly["vertices"] = verts;
      json curve = json::array();
      for (int i = 0; i < 200; ++i) {
        double t = static_cast<double>(i) / 199.0;
        double alpha = 1.0 - std::exp(std::log(1e-8) * t + std::log(51.0) * (1 - t));
        auto dist = AHypDistribution::from_log_x(
            PartitionSpec(a.n, a.k), log_indeterminates_gfc(alpha, a.n - a.k + 1));
        auto e = dist.eta();
        curve.push_back({{"alpha", alpha}, {"eta34", {e[2], e[3]}}});
      }
      poly["curve"] = curve;
      double b = 2.0 * (2 * a.n - 5) / ((a.n - 2) * (a.n - 3));
      poly["no_mle_boundary"] = {{"equation", "s3 + 3*s4 = c"}, {"c", b}};
      if (res.status == MleStatus::Converged) {
        auto dist = AHypDistribution::from_log_x(
            PartitionSpec(a.n, a.k), log_indeterminates_gfc(res.alpha, a.n - a.k + 1));
        auto e = dist.eta();
        poly["projection"] = {{"sbar34", {sbar[2], sbar[3]}}, {"eta34", {e[2], e[3]}}};
      }
      out["polytope"] = poly;
    }
  } else if (a.model.rfind("dm:", 0) == 0) {
    DirichletMultinomialModel model{std::stoi(a.model.substr(3))};
    auto res = mle_curved_dm(a.n, model, sbar, a.tol);
    out["status"] = status_name(res.status);
    out["existence_condition"] = dm_mle_exists(a.n, model.m, sbar);
    if (res.status == MleStatus::Converged) {
      out["estimate"] = res.alpha;
      out["residual"] = res.score;
      out["fisher_info"] = res.fisher_info;
      out["asymptotic_variance_per_obs"] = 1.0 / res.fisher_info;
    }
  } else {
    throw std::domain_error("unknown --model: " + a.model);
  }
  std::cout << out.dump() << "\n";
}

struct SampleArgs {
  int n = 4, k = 2;
  std::string param = "ones";
  std::uint64_t M = 10;
  std::uint64_t seed = 1;
  std::string sampler = "exact";
  std::uint64_t burnin = 1000, thin = 5;
};

void run_sample(const SampleArgs& a) {
  PartitionSpec spec(a.n, a.k);
  AHypDistribution dist(spec, param_x(parse_param(a.param), spec.width()));
  Rng rng(a.seed);
  if (a.sampler == "exact") {
    for (std::uint64_t t = 0; t < a.M; ++t)
      std::cout << json(sample_exact(dist, rng)).dump() << "\n";
  } else if (a.sampler == "mcmc") {
    SizeIndex s(spec.width(), 0);
    s[0] = a.k - 1;
    s[spec.width() - 1] += 1;  // (k-1) singletons plus one part of size n-k+1
    s = mcmc_run(dist, s, a.burnin, rng);
    for (std::uint64_t t = 0; t < a.M; ++t) {
      s = mcmc_run(dist, s, a.thin, rng);
      std::cout << json(s).dump() << "\n";
    }
  } else {
    throw std::domain_error("unknown --sampler: " + a.sampler);
  }
}

struct TestArgs {
  int n = 10, k = 4;
  std::string param = "ones";
  std::string sobs;
  std::uint64_t M = 100000;
  std::uint64_t seed = 1;
  std::string sampler = "exact";
  std::uint64_t burnin = 1000, thin = 5;
  bool force_mc = false;
};

void run_test(const TestArgs& a) {
  PartitionSpec spec(a.n, a.k);
  AHypDistribution dist(spec, param_x(parse_param(a.param), spec.width()));
  SizeIndex obs = parse_size_index(a.sobs);
  SimilarTestOptions opts;
  opts.burn_in = a.burnin;
  opts.thin = a.thin;
  opts.force_monte_carlo = a.force_mc;
  auto rep = similar_test(dist, obs, a.M,
                          a.sampler == "mcmc" ? SamplerKind::Mcmc : SamplerKind::Exact, a.seed,
                          opts);
  json out{{"observed_logq", rep.observed_logq},
           {"significance", rep.significance},
           {"std_error", rep.std_error},
           {"sampler", rep.sampler},
           {"sample_count", rep.sample_count},
           {"seed", rep.seed},
           {"exact_enumeration", rep.exact_enumeration}};
  std::cout << out.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"A-hypergeometric polynomial evaluation and microcanonical Gibbs inference"};
  app.require_subcommand(1);

  EvalArgs ev;
  auto* eval = app.add_subcommand("eval", "evaluate log Z_{n,k}(x) by a chosen method");
  eval->add_option("--n", ev.n, "total size n")->required();
  eval->add_option("--k", ev.k, "number of blocks k")->required();
  eval->add_option("--rmin", ev.rmin, "minimum part size");
  eval->add_option("--rmax", ev.rmax, "maximum part size");
  eval->add_option("--method", ev.method,
                   "oracle|recurrence|exact-point|hgm|dhgm|asymptotic:{ips,mittag-leffler,fixed-k}");
  eval->add_option("--param", ev.param, "ones|inv|inv-factorial|half-rising|gfc:<a>|file:<path>");
  eval->add_option("--steps", ev.steps, "RK4 steps (hgm)");
  eval->add_option("--alpha0", ev.alpha0, "hgm start point on the gfc path");
  eval->add_option("--gamma", ev.gamma, "scaling for asymptotic:ips");
  eval->add_option("--precision", ev.precision, "double|longdouble|quad");
  eval->add_flag("--vector", ev.vector_out, "also print the Gauss-Manin vector");
  eval->add_flag("--timing", ev.timing, "include wall-clock time in the output");

  BenchArgs be;
  auto* bench = app.add_subcommand("bench", "grid benchmark CSV (methods x n x n-k)");
  bench->add_option("--alpha", be.alpha, "gfc parameter");
  bench->add_option("--n-list", be.n_list, "n grid")->delimiter(',');
  bench->add_option("--nk-list", be.nk_list, "n-k grid")->delimiter(',');
  bench->add_option("--methods", be.methods, "subset of exact,recurrence,hgm,dhgm")->delimiter(',');
  bench->add_option("--steps", be.steps, "RK4 steps");
  bench->add_option("--jobs", be.jobs, "worker threads");

  AsympArgs as;
  auto* asymp = app.add_subcommand("asymp", "asymptotic-methods comparison CSV (n = 2k grid)");
  asymp->add_option("--n-list", as.n_list, "n grid (each divisible by 4)")->delimiter(',');
  asymp->add_option("--alphas", as.alphas, "gfc parameters")->delimiter(',');

  MleArgs ml;
  auto* mle = app.add_subcommand("mle", "maximum likelihood estimation");
  mle->add_option("--n", ml.n)->required();
  mle->add_option("--k", ml.k)->required();
  mle->add_option("--model", ml.model, "full|gfc|dm:<m>");
  mle->add_option("--sbar", ml.sbar, "mean size index as a JSON array")->required();
  mle->add_option("--algo", ml.algo, "newton|gradient (full model)");
  mle->add_option("--tol", ml.tol);
  mle->add_option("--max-iter", ml.max_iter);
  mle->add_flag("--emit-polytope", ml.emit_polytope, "dump plot-ready polytope data (k = n-3)");

  SampleArgs sa;
  auto* sample = app.add_subcommand("sample", "draw size indices (JSON lines)");
  sample->add_option("--n", sa.n)->required();
  sample->add_option("--k", sa.k)->required();
  sample->add_option("--param", sa.param);
  sample->add_option("--M", sa.M);
  sample->add_option("--seed", sa.seed);
  sample->add_option("--sampler", sa.sampler, "exact|mcmc");
  sample->add_option("--burnin", sa.burnin);
  sample->add_option("--thin", sa.thin);

  TestArgs te;
  auto* test = app.add_subcommand("test", "similar (exact conditional) test");
  test->add_option("--n", te.n)->required();
  test->add_option("--k", te.k)->required();
  test->add_option("--param", te.param);
  test->add_option("--sobs", te.sobs, "observed size index as a JSON array")->required();
  test->add_option("--M", te.M);
  test->add_option("--seed", te.seed);
  test->add_option("--sampler", te.sampler, "exact|mcmc");
  test->add_option("--burnin", te.burnin);
  test->add_option("--thin", te.thin);
  test->add_flag("--force-monte-carlo", te.force_mc, "skip the exact-enumeration shortcut");

  CLI11_PARSE(app, argc, argv);

  if (eval->parsed()) return guarded([&] { run_eval(ev); });
  if (bench->parsed()) return guarded([&] { run_bench(be); });
  if (asymp->parsed()) return guarded([&] { run_asymp(as); });
  if (mle->parsed()) return guarded([&] { run_mle(ml); });
  if (sample->parsed()) return guarded([&] { run_sample(sa); });
  if (test->parsed()) return guarded([&] { run_test(te); });
  return 0;
}

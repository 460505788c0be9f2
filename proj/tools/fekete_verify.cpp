// Command-line front end: one subcommand per verification suite, JSON report
// plus CSV tables written to --out.

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "fekete/errors.hpp"
#include "fekete/numtheory.hpp"
#include "fekete/polynomial.hpp"
#include "fekete/report.hpp"
#include "fekete/suites.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

struct Common {
  std::string out = "reports";
  std::uint64_t seed = fekete::kDefaultSeed;
  unsigned threads = 1;
  bool timestamps = false;
  bool quiet = false;
};

const CLI::Validator kOddPrime(
    [](std::string& s) -> std::string {
      try {
        std::size_t pos = 0;
        const auto v = std::stoull(s, &pos);
        if (pos != s.size()) return "not an integer: " + s;
        if (v < 3 || !fekete::is_prime(v)) return "not an odd prime: " + s;
      } catch (const std::exception&) {
        return "not an integer: " + s;
      }
      return {};
    },
    "ODD PRIME", "odd prime");

void print_summary(const fekete::RunReport& r, std::ostream& os) {
  for (const auto& f : r.findings) {
    os << fekete::to_string(f.status) << "  " << f.check_id << "  measured=" << fekete::fmt(f.measured)
       << " expected=" << fekete::fmt(f.expected) << " tol=" << fekete::fmt(f.tolerance);
    if (!f.detail.empty()) os << "  (" << f.detail << ")";
    os << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical verification suites for Fekete polynomials and related Littlewood polynomials"};
  app.require_subcommand(1);
  Common common;
  app.add_option("--out", common.out, "Report directory")->capture_default_str();
  app.add_option("--seed", common.seed, "Seed for randomised suites")->capture_default_str();
  app.add_option("--threads", common.threads, "Worker threads (speed only, never results)")
      ->check(CLI::Range(1u, 1024u))
      ->capture_default_str();
  app.add_flag("--timestamps", common.timestamps, "Record start/end times (breaks byte-identical reruns)");
  app.add_flag("--quiet", common.quiet, "Do not print findings to stdout");

  std::function<fekete::RunReport()> job;

  fekete::GaussParams gauss;
  auto* g = app.add_subcommand("gauss", "Gauss evaluations of f_p at the p-th roots of unity");
  g->add_option("--pmin", gauss.pmin)->capture_default_str();
  g->add_option("--pmax", gauss.pmax)->capture_default_str();
  g->add_option("--tol", gauss.tol, "Tolerance relative to sqrt(p)")->capture_default_str();
  g->callback([&] { job = [&] { gauss.threads = common.threads; return fekete::run_gauss(gauss); }; });

  fekete::MahlerParams mahler;
  auto* m = app.add_subcommand("mahler", "Mahler measures, estimator agreement, product inequalities");
  m->add_option("--pmin", mahler.pmin)->capture_default_str();
  m->add_option("--pmax", mahler.pmax)->capture_default_str();
  m->add_option("--roots-pmax", mahler.roots_pmax, "Largest prime for the root-based estimator")->capture_default_str();
  m->add_option("--samples", mahler.samples, "Quadrature nodes for M_0")->check(CLI::Range(16, 1 << 26))->capture_default_str();
  m->add_option("--agree-tol", mahler.agree_tol)->capture_default_str();
  m->add_option("--parseval-tol", mahler.parseval_tol)->capture_default_str();
  m->add_option("--instances", mahler.instances, "Random Littlewood instances")->capture_default_str();
  m->add_option("--max-degree", mahler.max_degree)->capture_default_str();
  m->add_option("--suite-p", mahler.suite_p)->check(kOddPrime)->capture_default_str();
  m->add_option("--suite-eta", mahler.suite_eta)->capture_default_str();
  m->callback([&] {
    job = [&] { mahler.seed = common.seed; mahler.threads = common.threads; return fekete::run_mahler(mahler); };
  });

  fekete::ZerosParams zeros;
  auto* z = app.add_subcommand("zeros", "Zeros of f_p on the unit circle");
  z->add_option("--pmin", zeros.pmin)->capture_default_str();
  z->add_option("--pmax", zeros.pmax)->capture_default_str();
  z->add_option("--refinement", zeros.refinement, "Grid refinement N (N p nodes)")->check(CLI::Range(2, 1 << 16))->capture_default_str();
  z->add_option("--bisect-tol", zeros.bisect_tol)->capture_default_str();
  z->add_option("--agree-pmin", zeros.agree_pmin)->capture_default_str();
  z->add_option("--agree-pmax", zeros.agree_pmax)->capture_default_str();
  z->add_option("--fraction-min-p", zeros.fraction_min_p)->capture_default_str();
  z->add_option("--fraction-lo", zeros.fraction_lo)->capture_default_str();
  z->add_option("--fraction-hi", zeros.fraction_hi)->capture_default_str();
  z->callback([&] { job = [&] { zeros.threads = common.threads; return fekete::run_zeros(zeros); }; });

  fekete::ArcsParams arcs;
  std::optional<double> arcs_delta, arcs_eta;
  auto* a = app.add_subcommand("arcs", "Arc classification: centre values and derivative maxima");
  a->add_option("--pmin", arcs.pmin)->capture_default_str();
  a->add_option("--pmax", arcs.pmax)->capture_default_str();
  a->add_option("--delta", arcs_delta, "Centre threshold (default: automatic schedule)");
  a->add_option("--gamma", arcs.gamma)->capture_default_str();
  a->add_option("--eta", arcs_eta, "Arc half-width factor (default: 0.9 delta/gamma)");
  a->add_option("--refinement", arcs.refinement)->check(CLI::Range(2, 1 << 16))->capture_default_str();
  a->add_flag("--per-arc", arcs.per_arc, "Also write one CSV row per arc");
  a->callback([&] {
    job = [&] {
      arcs.delta = arcs_delta;
      arcs.eta = arcs_eta;
      arcs.threads = common.threads;
      return fekete::run_arcs(arcs);
    };
  });

  fekete::SieveParams sieve;
  auto* s = app.add_subcommand("sieve", "Large sieve inequality: random instances and derivative chain");
  s->add_option("--instances", sieve.instances)->capture_default_str();
  s->add_option("--max-n", sieve.max_n)->capture_default_str();
  s->add_option("--pmin", sieve.pmin)->capture_default_str();
  s->add_option("--pmax", sieve.pmax)->capture_default_str();
  s->add_option("--gamma", sieve.gamma)->capture_default_str();
  s->callback([&] {
    job = [&] { sieve.seed = common.seed; sieve.threads = common.threads; return fekete::run_sieve(sieve); };
  });

  fekete::CdeltaParams cdelta;
  auto* c = app.add_subcommand("cdelta", "The distribution constant c_delta");
  c->add_option("--delta", cdelta.deltas, "One or more delta values")->capture_default_str();
  c->add_option("--tol", cdelta.tol)->capture_default_str();
  c->add_option("--reflection-tol", cdelta.reflection_tol)->capture_default_str();
  c->callback([&] { job = [&] { return fekete::run_cdelta(cdelta); }; });

  fekete::DistributionParams dist;
  auto* d = app.add_subcommand("distribution", "Empirical midpoint distribution against c_delta");
  d->add_option("--p", dist.p)->check(kOddPrime)->capture_default_str();
  d->add_option("--delta", dist.delta)->capture_default_str();
  d->add_option("--band", dist.band)->capture_default_str();
  d->add_option("--tol", dist.tol)->capture_default_str();
  d->callback([&] { job = [&] { return fekete::run_distribution(dist); }; });

  fekete::EnsembleParams ens;
  auto* e = app.add_subcommand("ensemble", "Random Littlewood ensemble means of M_q / sqrt(n)");
  e->add_option("--n", ens.n, "Degree")->check(CLI::Range(1, 1 << 12))->capture_default_str();
  e->add_option("--q", ens.q)->check(CLI::NonNegativeNumber)->capture_default_str();
  e->add_option("--samples", ens.samples)->capture_default_str();
  e->add_option("--band", ens.band)->capture_default_str();
  e->callback([&] {
    job = [&] { ens.seed = common.seed; ens.threads = common.threads; return fekete::run_ensemble(ens); };
  });

  fekete::RsParams rs;
  auto* r = app.add_subcommand("rs", "Rudin-Shapiro pairs");
  r->add_option("--nmax", rs.nmax)->check(CLI::Range(0u, fekete::kRudinShapiroMaxOrder))->capture_default_str();
  r->add_option("--tol", rs.tol)->capture_default_str();
  r->add_option("--floor", rs.floor)->capture_default_str();
  r->callback([&] { job = [&] { return fekete::run_rs(rs); }; });

  fekete::CertifyParams cert;
  std::optional<std::uint64_t> cert_p;
  std::optional<double> cert_eta;
  auto* ce = app.add_subcommand("certify", "Per-prime certificates for the lower bound on M_0(f_p)");
  auto* opt_p = ce->add_option("--p", cert_p, "Single prime")->check(kOddPrime);
  ce->add_option("--pmin", cert.pmin)->capture_default_str()->excludes(opt_p);
  ce->add_option("--pmax", cert.pmax)->capture_default_str()->excludes(opt_p);
  ce->add_option("--eta", cert_eta, "Fixed eta in (0, pi/2) (default: automatic)");
  ce->add_option("--refinement", cert.refinement)->check(CLI::Range(2, 1 << 16))->capture_default_str();
  ce->add_option("--bisect-tol", cert.bisect_tol)->capture_default_str();
  ce->add_option("--roots-max-p", cert.roots_max_p)->capture_default_str();
  ce->callback([&] {
    job = [&] {
      if (cert_p) {
        if (*cert_p < 11) throw fekete::DomainError("certify: certificates need p >= 11");
        cert.pmin = cert.pmax = *cert_p;
      }
      cert.eta = cert_eta;
      cert.threads = common.threads;
      return fekete::run_certify(cert);
    };
  });

  auto* full = app.add_subcommand("report", "Every suite at default parameters");
  full->callback([&] { job = [&] { return fekete::run_full(common.seed, common.threads); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return kExitUsage;
  }

  const std::optional<std::string> started =
      common.timestamps ? std::optional(fekete::utc_timestamp()) : std::nullopt;
  fekete::RunReport report;
  try {
    report = job();
  } catch (const std::runtime_error& ex) {  // NumericalFailure, ExactArithmeticError
    std::cerr << "numerical failure: " << ex.what() << '\n';
    report.command = app.get_subcommands().front()->get_name();
    report.numerical_failures.push_back(ex.what());
  } catch (const std::logic_error& ex) {
    // DomainError, SizeError and friends: the request itself is invalid.
    std::cerr << "usage error: " << ex.what() << '\n';
    return kExitUsage;
  }
  report.started = started;
  if (common.timestamps) report.ended = fekete::utc_timestamp();

  try {
    fekete::write_report(report, common.out);
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return kExitUsage;
  }
  if (!common.quiet) print_summary(report, std::cout);
  return report.exit_code();
}

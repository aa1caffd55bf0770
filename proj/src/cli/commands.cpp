#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "charquant/cli.hpp"
#include "charquant/error.hpp"
#include "charquant/field.hpp"

namespace charquant {

namespace {

struct Options {
  RunConfig config;
  std::string coefficients = "restricted-d";
  bool unnormalized = false;
  bool all = false;
  std::vector<int> points;
  std::string format = "table";
};

void add_common(CLI::App* cmd, Options& o, bool p_list) {
  auto* opt = cmd->add_option("--p", o.config.primes, p_list ? "primes, comma separated" : "prime p <= 13")
                  ->required()
                  ->delimiter(',');
  (void)opt;
  cmd->add_option("--format", o.format, "table or json")->check(CLI::IsMember({"table", "json"}));
  cmd->add_option("--output", o.config.output_path, "write the report here instead of standard output");
}

void add_degree(CLI::App* cmd, Options& o) {
  cmd->add_option("--max-degree", o.config.truncation.N, "complexes are built through this degree")
      ->check(CLI::Range(2, 64));
}

void log(std::ostream& err, const std::string& suite, int p) {
  err << "[charquant] " << suite << " p=" << p << "\n";
}

int order_bound(const RunConfig& c, int p) { return c.truncation.M > 0 ? c.truncation.M : 2 * p; }

ComplexSpec hh(Coefficient c, int p, const RunConfig& cfg, bool normalized) {
  return ComplexSpec{Family::HH_rel_Oprime, c, p, {cfg.truncation.N, 0}, normalized};
}

std::vector<VerificationReport> run_report(const Options& o, int p, std::ostream& err) {
  const RunConfig& c = o.config;
  std::vector<VerificationReport> out;
  auto run = [&](const std::string& name, auto&& fn) {
    log(err, name, p);
    out.push_back(fn());
  };
  run("hochschild/O", [&] { return hochschild_cohomology(hh(Coefficient::O, p, c, true)); });
  run("hochschild/Dres", [&] { return hochschild_cohomology(hh(Coefficient::Dres, p, c, true)); });
  run("full-quantization", [&] { return full_quant_check(p, {c.truncation.N, order_bound(c, p)}); });
  if (p <= 7) run("resolution", [&] { return resolution_check(p); });
  run("reduced-complex", [&] { return reduced_complex(p, c.truncation.N); });
  run("dhoch-endpoint", [&] { return dhoch_endpoint_check(p); });
  std::vector<int> pts;
  for (int a = 0; a < p; ++a) pts.push_back(a);
  run("azumaya", [&] { return azumaya_suite(p, pts); });
  if (p <= 3) run("two-sided", [&] { return two_sided_check(p, c.truncation.N, 50, c.seed); });
  if (o.all) {
    run("identities", [&] { return identity_suite({p, c.samples, c.seed}); });
    run("dold-kan/O", [&] { return dold_kan_crosscheck(hh(Coefficient::O, p, c, true)); });
    run("dold-kan/Dres", [&] { return dold_kan_crosscheck(hh(Coefficient::Dres, p, c, true)); });
    run("oracle-coherence", [&] { return oracle_coherence(hh(Coefficient::Dres, p, c, true), false, 200, c.seed); });
    run("fg-composite/M1", [&] { return fg_composite(p, 1); });
    run("fg-composite/M2", [&] { return fg_composite(p, 2); });
  }
  return out;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of differential-operator cohomology over F_p[t]", "charquant"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);
  Options o;

  auto* hoch = app.add_subcommand("hochschild", "Hochschild cohomology with the chosen coefficients");
  add_common(hoch, o, true);
  add_degree(hoch, o);
  hoch->add_option("--coefficients", o.coefficients, "structure | restricted-d | restricted-d-op | full-d")
      ->check(CLI::IsMember({"structure", "restricted-d", "restricted-d-op", "full-d"}));
  hoch->add_option("--max-order", o.config.truncation.M, "order bound for full-d (default 2p)")->check(CLI::Range(1, 64));
  hoch->add_flag("--unnormalized", o.unnormalized, "use all cochains instead of the normalized ones");

  auto* res = app.add_subcommand("resolution-check", "Exactness of the 2-periodic resolution");
  add_common(res, o, true);

  auto* red = app.add_subcommand("reduced-complex", "Cohomology of the alternating d/dx, (d/dx)^(p-1) complex");
  add_common(red, o, true);
  add_degree(red, o);

  auto* az = app.add_subcommand("azumaya", "Center, endomorphism isomorphism and fibers");
  add_common(az, o, true);
  az->add_option("--points", o.points, "fiber points, comma separated")->delimiter(',');

  auto* ids = app.add_subcommand("identities", "Randomized identities of the polydifferential complex");
  add_common(ids, o, true);
  ids->add_option("--samples", o.config.samples, "samples per identity")->check(CLI::PositiveNumber);
  ids->add_option("--seed", o.config.seed, "random seed");

  auto* two = app.add_subcommand("two-sided", "Two-sided complex and the chi map");
  add_common(two, o, true);
  add_degree(two, o);
  two->add_option("--seed", o.config.seed, "random seed for the multiplicativity samples");

  auto* rep = app.add_subcommand("report", "Run every suite and aggregate one report");
  add_common(rep, o, true);
  add_degree(rep, o);
  rep->add_option("--max-order", o.config.truncation.M, "order bound (default 2p)")->check(CLI::Range(1, 64));
  rep->add_flag("--all", o.all, "include identity suites, crosschecks and the FG composite");
  rep->add_option("--samples", o.config.samples, "samples per identity")->check(CLI::PositiveNumber);
  rep->add_option("--seed", o.config.seed, "random seed");

  try {
    std::vector<std::string> args;
    for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  RunConfig& cfg = o.config;
  cfg.command = app.get_subcommands().front()->get_name();
  cfg.format = o.format == "json" ? OutputFormat::json : OutputFormat::table;
  for (int p : cfg.primes)
    if (!is_prime(p) || p > kMaxPrime) {
      err << "usage error: p = " << p << " is not a prime <= " << kMaxPrime << "\n";
      return 2;
    }

  ReportDocument doc;
  try {
    for (int p : cfg.primes) {
      if (cfg.command == "hochschild") {
        log(err, "hochschild/" + o.coefficients, p);
        if (o.coefficients == "full-d") {
          doc.reports.push_back(full_quant_check(p, {cfg.truncation.N, order_bound(cfg, p)}));
        } else {
          const Coefficient c = o.coefficients == "structure"      ? Coefficient::O
                                : o.coefficients == "restricted-d" ? Coefficient::Dres
                                                                   : Coefficient::DresOp;
          doc.reports.push_back(hochschild_cohomology(hh(c, p, cfg, !o.unnormalized)));
        }
      } else if (cfg.command == "resolution-check") {
        log(err, "resolution", p);
        doc.reports.push_back(resolution_check(p));
      } else if (cfg.command == "reduced-complex") {
        log(err, "reduced-complex", p);
        doc.reports.push_back(reduced_complex(p, cfg.truncation.N));
      } else if (cfg.command == "azumaya") {
        std::vector<int> pts = o.points;
        if (pts.empty())
          for (int a = 0; a < p; ++a) pts.push_back(a);
        log(err, "azumaya", p);
        doc.reports.push_back(azumaya_suite(p, pts));
      } else if (cfg.command == "identities") {
        log(err, "identities", p);
        doc.reports.push_back(identity_suite({p, cfg.samples, cfg.seed}));
      } else if (cfg.command == "two-sided") {
        log(err, "two-sided", p);
        doc.reports.push_back(two_sided_check(p, cfg.truncation.N, 50, cfg.seed));
      } else if (cfg.command == "report") {
        for (auto& r : run_report(o, p, err)) doc.reports.push_back(std::move(r));
      }
    }
  } catch (const Error& e) {
    err << "error (" << to_string(e.code()) << "): " << e.what() << "\n";
    return 2;
  }

  if (cfg.command == "hochschild") {
    cfg.extra.emplace_back("coefficients", o.coefficients);
    cfg.extra.emplace_back("normalized", o.unnormalized ? "false" : "true");
  }
  if (cfg.command == "azumaya" && !o.points.empty()) {
    std::string pts;
    for (int a : o.points) pts += (pts.empty() ? "" : ",") + std::to_string(a);
    cfg.extra.emplace_back("points", pts);
  }
  if (cfg.command == "report") cfg.extra.emplace_back("all", o.all ? "true" : "false");
  doc.config = cfg;

  const std::string text = cfg.format == OutputFormat::json ? render_json(doc) : render_table(doc);
  if (cfg.output_path.empty()) {
    out << text;
  } else {
    std::ofstream f(cfg.output_path, std::ios::binary);
    if (!f) {
      err << "error: cannot write " << cfg.output_path << "\n";
      return 2;
    }
    f << text;
  }
  return doc.verdict() ? 0 : 1;
}

}  // namespace charquant

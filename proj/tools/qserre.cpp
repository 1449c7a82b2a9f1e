// qserre: verification front end for the two-parameter B2 algebra engine.
//
// Commands:
//   qserre verify <suite>|all [--degbound N] [--window N] [--jobs N]
//                 [--out FILE] [--numeric-sample r0 s0]
//   qserre ingest <file>
//   qserre explain <id>
//   qserre derivations scan|check ...
//   qserre hopf verify|auto-scan|hopf-auto-scan|check-auto ...
//
// Exit codes: 0 = all checks pass or are expected discrepancies,
//             1 = at least one failing check, 2 = usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "qserre/derivations.hpp"
#include "qserre/hopf.hpp"
#include "qserre/suites.hpp"

namespace {

using namespace qserre;

void print_report(const SuiteReport& r) {
  std::cout << "== suite " << r.suite << " (" << r.checks.size() << " checks, "
            << r.wall_seconds << " s)\n";
  for (const auto& c : r.checks) {
    std::cout << "  [" << status_name(c.status) << "] " << c.id;
    if (!c.note.empty()) std::cout << "  -- " << c.note;
    if (!c.residual.empty() && c.status != CheckStatus::kPass)
      std::cout << "  residual: " << c.residual;
    std::cout << "\n";
  }
}

void write_out(const std::string& path, const std::vector<SuiteReport>& reports) {
  if (path.empty()) return;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write report to '" + path + "'");
  out << render_report(reports);
}

Derivation parse_derivation_literal(const NamedAlgebra& alg, const std::string& text) {
  Derivation d;
  d.images.assign(alg.spec.size(), Element{});
  size_t pos = 0;
  while (pos < text.size()) {
    size_t end = text.find(';', pos);
    if (end == std::string::npos) end = text.size();
    std::string part = text.substr(pos, end - pos);
    pos = end + 1;
    const size_t eq = part.find('=');
    if (eq == std::string::npos) {
      if (part.find_first_not_of(" \t") == std::string::npos) continue;
      throw parse_error("derivation literal entries look like  X1 = <element>");
    }
    std::string key = part.substr(0, eq);
    key.erase(0, key.find_first_not_of(" \t"));
    key.erase(key.find_last_not_of(" \t") + 1);
    const int var = alg.spec.var_index(key);
    if (var < 0) throw parse_error("unknown generator '" + key + "' in derivation literal");
    d.images[var] = alg.parse(part.substr(eq + 1));
  }
  return d;
}

AutoCandidate parse_candidate_literal(const std::string& text) {
  AutoCandidate th;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    const size_t eq = tok.find('=');
    if (eq == std::string::npos)
      throw parse_error("candidate entries look like  key=value; got '" + tok + "'");
    const std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
    if (key == "sigma") {
      if (val == "id")
        th.swap_sigma = false;
      else if (val == "swap" || val == "transposition")
        th.swap_sigma = true;
      else
        throw parse_error("sigma must be 'id' or 'swap'");
    } else if (key == "a" || key == "b" || key == "c" || key == "d") {
      const int v = std::stoi(val);
      (key == "a" ? th.a : key == "b" ? th.b : key == "c" ? th.c : th.d) = v;
    } else {
      throw parse_error("unknown candidate key '" + key + "'");
    }
  }
  return th;
}

int run(int argc, char** argv) {
  CLI::App app{"exact verification suite for the two-parameter B2 quantized enveloping algebra"};
  app.require_subcommand(1);

  Config cfg;
  if (const char* env = std::getenv("QSERRE_DEGBOUND")) cfg.degbound = std::atoi(env);

  std::string out_path;
  std::vector<std::string> sample;
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--degbound", cfg.degbound, "degree bound for scans and the oracle");
    cmd->add_option_function<int>(
        "--window", [&](int w) { cfg.window = w; }, "exponent / weight window for scans");
    cmd->add_option("--jobs", cfg.jobs, "parallel workers for independent checks");
    cmd->add_option("--out", out_path, "write the JSON report here");
    cmd->add_option("--numeric-sample", sample,
                    "rational sample point r0 s0 for numeric cross-checks")
        ->expected(2);
  };
  auto finish_cfg = [&]() {
    if (!sample.empty())
      cfg.numeric_sample = std::make_pair(mpq_class(sample[0]), mpq_class(sample[1]));
  };

  // verify
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite_name;
  verify->add_option("suite", suite_name, "suite name or 'all'")->required();
  add_common(verify);
  verify->callback([&] {
    finish_cfg();
    std::vector<SuiteReport> reports;
    if (suite_name == "all") {
      reports = run_all(cfg);
    } else {
      reports.push_back(run_suite(suite_name, cfg));
    }
    for (const auto& r : reports) print_report(r);
    size_t pass = 0, disc = 0, fail = 0;
    for (const auto& r : reports) {
      pass += r.count(CheckStatus::kPass);
      disc += r.count(CheckStatus::kDiscrepancy);
      fail += r.count(CheckStatus::kFail);
    }
    std::cout << "== total: " << pass << " pass, " << disc << " discrepancy, " << fail
              << " fail\n";
    write_out(out_path, reports);
    if (report_exit_code(reports) != 0) throw CLI::RuntimeError(1);
  });

  // ingest
  auto* ingest = app.add_subcommand("ingest", "parse and validate an algebra-spec document");
  std::string spec_path;
  ingest->add_option("file", spec_path, "JSON spec document")->required();
  ingest->callback([&] {
    const auto result = ingest_spec_file(spec_path);
    std::cout << "vars:";
    for (int i = 0; i < result.spec.size(); ++i)
      std::cout << " " << result.spec.var_name(i)
                << (result.spec.invertible(i) ? "^(+-1)" : "");
    std::cout << "\n";
    if (result.confluence.ok()) {
      std::cout << "confluent: all " << result.confluence.triples_checked
                << " overlap triples agree\n";
    } else {
      std::cout << "NOT confluent; failing overlaps:\n";
      for (const auto& f : result.confluence.failures) {
        std::cout << "  X" << f.k + 1 << " X" << f.j + 1 << " X" << f.i + 1 << ": "
                  << element_str(result.spec, f.via_kj) << "  vs  "
                  << element_str(result.spec, f.via_ji) << "\n";
      }
      throw CLI::RuntimeError(1);
    }
  });

  // explain
  auto* expl = app.add_subcommand("explain", "describe a check id");
  std::string check_id;
  expl->add_option("id", check_id, "check id, e.g. torus.T1T4")->required();
  expl->callback([&] { std::cout << explain(check_id); });

  // eval
  auto* ev = app.add_subcommand("eval", "normalize an element expression in a catalog algebra");
  std::string eval_algebra = "u", eval_expr;
  ev->add_option("--algebra", eval_algebra, "u, gru, b4, b3, b2, q4, ugeq0 or vcheck");
  ev->add_option("expr", eval_expr, "element expression; W, Zp and lambda are predefined in u")
      ->required();
  ev->callback([&] {
    const auto& cat = qserre::detail::shared_catalog();
    const NamedAlgebra* alg = cat.by_name(eval_algebra);
    if (!alg) throw parse_error("unknown algebra '" + eval_algebra + "'");
    std::cout << alg->str(alg->parse(eval_expr)) << "\n";
  });

  // derivations
  auto* der = app.add_subcommand("derivations", "derivation scans and checks");
  der->require_subcommand(1);
  auto* der_scan = der->add_subcommand("scan", "per-weight derivation-space scan");
  add_common(der_scan);
  der_scan->callback([&] {
    finish_cfg();
    std::vector<SuiteReport> reports = {run_suite("hh1", cfg)};
    print_report(reports.front());
    write_out(out_path, reports);
    if (report_exit_code(reports) != 0) throw CLI::RuntimeError(1);
  });
  auto* der_check = der->add_subcommand("check", "Leibniz-check a derivation literal");
  std::string images_literal;
  der_check->add_option("--images", images_literal, "e.g. \"X1=X1; X2=X2; X3=2 X3; X4=X4\"")
      ->required();
  der_check->callback([&] {
    const NamedAlgebra u = build_u();
    const Derivation d = parse_derivation_literal(u, images_literal);
    const auto report = is_derivation(u.spec, d);
    for (const auto& e : report.entries) {
      std::cout << "relation (" << e.j + 1 << "," << e.i + 1 << "): "
                << (e.residual.is_zero() ? "ok" : "residual " + u.str(e.residual)) << "\n";
    }
    std::cout << (report.valid() ? "derivation: valid\n" : "derivation: INVALID\n");
    if (!report.valid()) throw CLI::RuntimeError(1);
  });

  // hopf
  auto* hopf = app.add_subcommand("hopf", "Hopf checks and automorphism scans");
  hopf->require_subcommand(1);
  std::string algebra_name = "vcheck";
  auto* hverify = hopf->add_subcommand("verify", "bialgebra and antipode axioms");
  hverify->add_option("--algebra", algebra_name, "vcheck or ugeq0");
  add_common(hverify);
  hverify->callback([&] {
    finish_cfg();
    std::vector<SuiteReport> reports = {run_suite("hopf-axioms", cfg)};
    print_report(reports.front());
    write_out(out_path, reports);
    if (report_exit_code(reports) != 0) throw CLI::RuntimeError(1);
  });
  auto* hauto = hopf->add_subcommand("auto-scan", "algebra-automorphism exponent scan");
  add_common(hauto);
  hauto->callback([&] {
    finish_cfg();
    std::vector<SuiteReport> reports = {run_suite("auto-scan", cfg)};
    print_report(reports.front());
    write_out(out_path, reports);
    if (report_exit_code(reports) != 0) throw CLI::RuntimeError(1);
  });
  auto* hhopf = hopf->add_subcommand("hopf-auto-scan", "Hopf-automorphism classification scan");
  add_common(hhopf);
  hhopf->callback([&] {
    finish_cfg();
    std::vector<SuiteReport> reports = {run_suite("hopf-auto", cfg)};
    print_report(reports.front());
    write_out(out_path, reports);
    if (report_exit_code(reports) != 0) throw CLI::RuntimeError(1);
  });
  auto* hcand = hopf->add_subcommand("check-auto", "check one automorphism candidate");
  std::string cand_literal;
  hcand->add_option("--candidate", cand_literal, "e.g. \"sigma=id a=1 b=2 c=1 d=-3\"")
      ->required();
  hcand->callback([&] {
    const NamedAlgebra v = build_vcheck();
    const Presentation pres = presentation_of(v);
    const AutoCandidate th = parse_candidate_literal(cand_literal);
    const auto check = is_automorphism(v, pres, th);
    for (const auto& c : check.relations)
      std::cout << c.id << ": " << (c.ok ? "ok" : "VIOLATED") << "\n";
    std::cout << "endomorphism: " << (check.endomorphism ? "yes" : "no")
              << ", inverse witness: " << (check.inverse_ok ? "yes" : "no") << "\n";
    if (!check.automorphism) throw CLI::RuntimeError(1);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::RuntimeError& e) {
    return 1;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }

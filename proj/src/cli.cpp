#include "refosc/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "refosc/ccm.hpp"
#include "refosc/errors.hpp"
#include "refosc/sampling.hpp"
#include "refosc/spectrum.hpp"
#include "refosc/suites.hpp"
#include "refosc/symmetry.hpp"

namespace refosc {

namespace {

using nlohmann::json;

struct ParamFlags {
  std::string k = "1";
  std::string alpha = "0";
  std::string beta = "0";
  std::string omega = "1";
};

void add_param_flags(CLI::App* cmd, ParamFlags& pf) {
  cmd->add_option("--k", pf.k, "k = p/q, positive rational");
  cmd->add_option("--alpha", pf.alpha, "alpha > -1, rational");
  cmd->add_option("--beta", pf.beta, "beta > -1, rational");
  cmd->add_option("--omega", pf.omega, "omega > 0, rational");
}

Params params_from(const ParamFlags& pf) {
  return make_params(pf.k, pf.alpha, pf.beta, pf.omega);
}

void write_text_atomic(const std::string& path, const std::string& text) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw IoError("cannot open " + tmp);
    out << text;
    if (!out) throw IoError("write failed: " + tmp);
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw IoError("rename failed: " + ec.message());
}

void emit(const std::string& path, const std::string& text,
          std::ostream& out) {
  if (path.empty() || path == "-")
    out << text;
  else
    write_text_atomic(path, text);
}

int cmd_spectrum(const ParamFlags& pf, int m_max, int n_max,
                 const std::string& format, const std::string& out_path,
                 std::ostream& out) {
  Params prm = params_from(pf);
  auto levels = multiplets(prm, m_max, n_max);
  // rows sorted by (E, m) with a level index per distinct energy
  struct Row {
    int m, n, mult;
    Rat an, gamma, e;
  };
  std::vector<Row> rows;
  for (size_t li = 0; li < levels.size(); ++li)
    for (auto [m, n] : levels[li].members) {
      Rat an = angular_eigenvalue(n, prm.alpha, prm.beta);
      rows.push_back(Row{m, n, static_cast<int>(li), an,
                         Rat(prm.k() * abs(an)), levels[li].value});
    }
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    if (a.e != b.e) return a.e < b.e;
    if (a.m != b.m) return a.m < b.m;
    return a.n < b.n;
  });
  std::ostringstream os;
  if (format == "csv") {
    os << "m,n,a_n,gamma,energy,multiplet\n";
    for (const Row& r : rows)
      os << r.m << "," << r.n << "," << to_string(r.an) << ","
         << to_string(r.gamma) << "," << to_string(r.e) << "," << r.mult
         << "\n";
  } else {
    json arr = json::array();
    for (const Row& r : rows)
      arr.push_back(json{{"m", r.m},
                         {"n", r.n},
                         {"a_n", to_string(r.an)},
                         {"gamma", to_string(r.gamma)},
                         {"energy", to_string(r.e)},
                         {"multiplet", r.mult}});
    json doc{{"meta",
              {{"tool", "refosc"},
               {"version", kToolVersion},
               {"k", pf.k},
               {"alpha", to_string(prm.alpha)},
               {"beta", to_string(prm.beta)},
               {"omega", to_string(prm.omega)},
               {"m_max", m_max},
               {"n_max", n_max}}},
             {"rows", arr}};
    os << doc.dump(2) << "\n";
    emit(out_path, os.str(), out);
    return 0;
  }
  emit(out_path, os.str(), out);
  return 0;
}

int cmd_verify(const ParamFlags& pf, bool params_given,
               const std::string& suite, int m_max, int n_max, bool serial,
               int threads, const std::string& stamp,
               const std::string& out_path, std::ostream& out,
               std::ostream& err) {
  VerifyOptions opt;
  opt.suites = parse_suites(suite);
  opt.bounds = Bounds{m_max, n_max};
  opt.mode = serial ? ExecMode::Serial : ExecMode::Parallel;
  opt.threads = threads;
  opt.generated_at = stamp;
  if (params_given) opt.params = params_from(pf);
  Report report = run_verify(opt);
  std::string text = report.to_json().dump(2) + "\n";
  if (out_path.empty() || out_path == "-")
    out << text;
  else
    write_report_atomic(report, out_path);
  int fails = report.count_status("fail");
  int devs = report.count_status("deviation-documented");
  err << report.checks.size() << " checks: "
      << report.count_status("pass") << " pass, " << fails << " fail, "
      << devs << " deviation-documented\n";
  return report.all_passed() ? 0 : 1;
}

int cmd_compat(const ParamFlags& pf, const std::string& format,
               const std::string& out_path, std::ostream& out) {
  Params prm = params_from(pf);
  auto entries = compat_entries(prm);
  std::string text = format == "table"
                         ? compat_to_table(entries)
                         : compat_to_json(entries).dump(2) + "\n";
  emit(out_path, text, out);
  return 0;
}

int cmd_sample(const ParamFlags& pf, int m, int n, const std::string& r_spec,
               const std::string& t_spec, const std::string& out_path,
               std::ostream& out) {
  Params prm = params_from(pf);
  ModelContext ctx(prm);
  ctx.ensure_depth(n + 1);
  SampleGrid grid = default_grid(ctx);
  auto parse_grid = [](const std::string& spec, double& lo, double& hi,
                       int& count) {
    if (spec.empty()) return;
    std::istringstream is(spec);
    std::string piece;
    std::vector<std::string> pieces;
    while (std::getline(is, piece, ':')) pieces.push_back(piece);
    if (pieces.size() != 3)
      throw ParameterOutOfRange("grid spec must be min:max:count, got '" +
                                spec + "'");
    lo = std::stod(pieces[0]);
    hi = std::stod(pieces[1]);
    count = std::stoi(pieces[2]);
    if (count < 1 || hi < lo) throw ParameterOutOfRange("bad grid spec");
  };
  parse_grid(r_spec, grid.r_min, grid.r_max, grid.r_count);
  parse_grid(t_spec, grid.theta_min, grid.theta_max, grid.theta_count);
  auto samples = sample_wavefunction(ctx, m, n, grid);
  std::ostringstream os;
  os << "r,theta,psi\n";
  os.precision(17);
  for (const auto& s : samples)
    os << s.r << "," << s.theta << "," << s.psi << "\n";
  emit(out_path, os.str(), out);
  return 0;
}

int cmd_poly(const ParamFlags& pf, const std::string& family, int count,
             const std::string& gamma_str, const std::string& out_path,
             std::ostream& out) {
  Params prm = params_from(pf);
  std::ostringstream os;
  os << "family,index,degree,coefficient\n";
  if (family == "jacobi") {
    for (int n = 0; n <= count; ++n) {
      Poly p = little_jacobi(n, prm.alpha, prm.beta);
      for (int j = 0; j <= n; ++j)
        os << "jacobi," << n << "," << j << "," << to_string(p.coeff(j))
           << "\n";
    }
  } else if (family == "laguerre") {
    Rat gamma = parse_rat(gamma_str);
    for (int m = 0; m <= count; ++m) {
      Poly p = laguerre(m, gamma);
      for (int j = 0; j <= m; ++j)
        os << "laguerre," << m << "," << j << "," << to_string(p.coeff(j))
           << "\n";
    }
  } else {
    throw ParameterOutOfRange("family must be jacobi or laguerre");
  }
  emit(out_path, os.str(), out);
  return 0;
}

int cmd_algebra(const ParamFlags& pf, const std::string& out_path,
                std::ostream& out) {
  Params prm = params_from(pf);
  ModelContext ctx(prm);
  ctx.ensure_depth(required_depth(prm, {Suite::Algebra}, Bounds{2, 4}));
  StructureResult sr = structure_polynomial(ctx);
  auto poly_json = [](const BiPoly& p) {
    json arr = json::array();
    for (const auto& [ij, v] : p.terms())
      arr.push_back(
          json{{"h", ij.first}, {"q", ij.second}, {"coeff", to_string(v)}});
    return arr;
  };
  json doc{{"meta",
            {{"tool", "refosc"},
             {"version", kToolVersion},
             {"k", pf.k},
             {"alpha", to_string(prm.alpha)},
             {"beta", to_string(prm.beta)},
             {"omega", to_string(prm.omega)}}},
           {"commutator", poly_json(sr.commutator)},
           {"anticommutator", poly_json(sr.anticommutator)},
           {"parity_consistent",
            sr.parity_consistent_comm && sr.parity_consistent_anti},
           {"degrees",
            {{"commutator_h", sr.commutator.degree_x()},
             {"commutator_q", sr.commutator.degree_y()},
             {"anticommutator_h", sr.anticommutator.degree_x()},
             {"anticommutator_q", sr.anticommutator.degree_y()}}}};
  if (prm.p == 1 && prm.q == 1) {
    auto diff_json = [](const std::vector<TermDiff>& diffs) {
      json arr = json::array();
      for (const auto& d : diffs)
        arr.push_back(json{{"h", d.h},
                           {"q", d.qpow},
                           {"derived", to_string(d.lhs)},
                           {"printed", to_string(d.rhs)}});
      return arr;
    };
    doc["printed_comparison"] = {
        {"commutator_diffs",
         diff_json(term_diff(sr.commutator, k1_printed_commutator(prm)))},
        {"anticommutator_diffs",
         diff_json(
             term_diff(sr.anticommutator, k1_printed_anticommutator(prm)))}};
  }
  emit(out_path, doc.dump(2) + "\n", out);
  return 0;
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"exact verification toolkit for a family of superintegrable "
               "Hamiltonians with reflection"};
  app.set_config("--config", "", "INI config file; command line wins");
  app.require_subcommand(1);

  // spectrum
  auto* sp = app.add_subcommand("spectrum", "energy table with multiplets");
  ParamFlags sp_pf;
  add_param_flags(sp, sp_pf);
  int sp_m = 6, sp_n = 12;
  std::string sp_fmt = "csv", sp_out = "-";
  sp->add_option("--m-max", sp_m, "largest radial index");
  sp->add_option("--n-max", sp_n, "largest angular index");
  sp->add_option("--format", sp_fmt, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  sp->add_option("--out", sp_out, "output path ('-' for stdout)");

  // verify
  auto* vf = app.add_subcommand("verify", "run verification suites");
  ParamFlags vf_pf;
  add_param_flags(vf, vf_pf);
  std::string vf_suite = "all";
  int vf_m = 6, vf_n = 12, vf_threads = 0;
  bool vf_serial = false;
  std::string vf_out = "-", vf_stamp;
  vf->add_option("--suite", vf_suite,
                 "all|orthopoly|ladders|integrals|algebra|adjoint|appendix|"
                 "ccm");
  vf->add_option("--m-max", vf_m, "largest radial index");
  vf->add_option("--n-max", vf_n, "largest angular index");
  vf->add_flag("--serial", vf_serial, "single-threaded reference execution");
  vf->add_option("--threads", vf_threads, "worker threads (0 = default)");
  vf->add_option("--stamp", vf_stamp,
                 "timestamp string recorded in the report meta");
  vf->add_option("--out", vf_out, "report path ('-' for stdout)");

  // compat
  auto* cp = app.add_subcommand("compat",
                                "typo/convention ledger with oracle "
                                "provenance");
  ParamFlags cp_pf;
  add_param_flags(cp, cp_pf);
  std::string cp_fmt = "table", cp_out = "-";
  cp->add_option("--format", cp_fmt, "table or json")
      ->check(CLI::IsMember({"table", "json"}));
  cp->add_option("--out", cp_out, "output path ('-' for stdout)");

  // sample
  auto* sm = app.add_subcommand("sample", "float samples of a wave function");
  ParamFlags sm_pf;
  add_param_flags(sm, sm_pf);
  int sm_m = 0, sm_n = 0;
  std::string sm_r, sm_t, sm_out = "-";
  sm->add_option("--m", sm_m, "radial index");
  sm->add_option("--n", sm_n, "angular index");
  sm->add_option("--r-grid", sm_r, "min:max:count");
  sm->add_option("--theta-grid", sm_t, "min:max:count");
  sm->add_option("--out", sm_out, "csv path ('-' for stdout)");

  // poly
  auto* pl = app.add_subcommand("poly", "dump polynomial coefficients");
  ParamFlags pl_pf;
  add_param_flags(pl, pl_pf);
  std::string pl_family = "jacobi", pl_gamma = "1", pl_out = "-";
  int pl_count = 8;
  pl->add_option("--family", pl_family, "jacobi or laguerre")
      ->check(CLI::IsMember({"jacobi", "laguerre"}));
  pl->add_option("--count", pl_count, "largest index to dump");
  pl->add_option("--gamma", pl_gamma, "laguerre parameter (rational)");
  pl->add_option("--out", pl_out, "csv path ('-' for stdout)");

  // algebra
  auto* al = app.add_subcommand("algebra", "dump structure polynomials");
  ParamFlags al_pf;
  add_param_flags(al, al_pf);
  std::string al_out = "-";
  al->add_option("--out", al_out, "json path ('-' for stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (sp->parsed())
      return cmd_spectrum(sp_pf, sp_m, sp_n, sp_fmt, sp_out, out);
    if (vf->parsed())
      return cmd_verify(vf_pf, vf->count("--k") || vf->count("--alpha") ||
                                   vf->count("--beta") || vf->count("--omega"),
                        vf_suite, vf_m, vf_n, vf_serial, vf_threads, vf_stamp,
                        vf_out, out, err);
    if (cp->parsed()) return cmd_compat(cp_pf, cp_fmt, cp_out, out);
    if (sm->parsed())
      return cmd_sample(sm_pf, sm_m, sm_n, sm_r, sm_t, sm_out, out);
    if (pl->parsed())
      return cmd_poly(pl_pf, pl_family, pl_count, pl_gamma, pl_out, out);
    if (al->parsed()) return cmd_algebra(al_pf, al_out, out);
  } catch (const ParameterOutOfRange& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const GridSingularity& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const IoError& e) {
    err << "io error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    err << "verification error: " << e.what() << "\n";
    return 1;
  }
  err << "usage error: no subcommand\n";
  return 2;
}

}  // namespace refosc

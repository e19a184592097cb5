#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "biharm/errors.hpp"
#include "json_io.hpp"
#include "verify_suite.hpp"

namespace biharm::cli {

namespace {

using io::Json;
using io::SchemaError;

struct Outcome {
  std::string text;
  int code = kExitOk;
};

std::string csv_row(std::initializer_list<double> values) {
  std::string row;
  bool first = true;
  for (double v : values) {
    if (!first) row += ',';
    first = false;
    row += io::format_double(v);
  }
  return row + '\n';
}

Json read_job(const std::string& path) {
  if (path.empty()) throw SchemaError("--input is required for this command");
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot read input '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw SchemaError(std::string("invalid JSON: ") + e.what());
  }
}

Outcome finish(Json report, const JobConfig& cfg, bool ok) {
  report["ok"] = ok;
  if (cfg.format == Format::Csv) throw SchemaError("csv output is not available for " + cfg.command);
  return {io::dump(report) + '\n', ok ? kExitOk : kExitVerificationFailed};
}

Outcome basis_check(const Json& job, const JobConfig& cfg) {
  Json report = Json::object();
  report["command"] = cfg.command;
  IdentityReport r;
  if (job.contains("e1") || job.contains("e2")) {
    // Raw pair, bypassing the parametrized constructor.
    const AlgebraElement e1 = io::element_from(job.at("e1"));
    const AlgebraElement e2 = io::element_from(job.contains("e2") ? job.at("e2") : Json());
    r = verify_biharmonic_identity(e1, e2, cfg.tolerance);
    report["e1"] = io::to_json(e1);
    report["e2"] = io::to_json(e2);
  } else {
    const BiharmonicBasis b = io::basis_from(job.contains("basis") ? job.at("basis") : job);
    r = verify_biharmonic_identity(b, cfg.tolerance);
    report["basis"] = io::to_json(b);
    report["e1"] = io::to_json(b.e1());
    report["e2"] = io::to_json(b.e2());
  }
  report["lhs"] = io::to_json(r.lhs);
  report["sum_sq"] = io::to_json(r.sum_sq);
  report["residual"] = r.residual;
  return finish(std::move(report), cfg, r.ok);
}

Outcome table(const Json& job, const JobConfig& cfg) {
  const BiharmonicBasis b = io::basis_from(job.contains("basis") ? job.at("basis") : job);
  const ProductTable t = b.product_table();
  const bool agrees = approx_equal(t.e1_sq, b.e1() * b.e1()) && approx_equal(t.e2_sq, b.e2() * b.e2()) &&
                      approx_equal(t.e1_e2, b.e1() * b.e2());
  Json report = Json::object();
  report["command"] = cfg.command;
  report["basis"] = io::to_json(b);
  report["e1"] = io::to_json(b.e1());
  report["e2"] = io::to_json(b.e2());
  report["e1_sq"] = io::to_json(t.e1_sq);
  report["e2_sq"] = io::to_json(t.e2_sq);
  report["e1_e2"] = io::to_json(t.e1_e2);
  report["direct_multiplication_agrees"] = agrees;
  return finish(std::move(report), cfg, agrees);
}

Outcome eval(const Json& job, const JobConfig& cfg) {
  const MonogenicFn m = io::monogenic_from(job);
  if (!job.contains("points") || !job.at("points").is_array()) {
    throw SchemaError("missing field 'points'");
  }
  std::vector<std::pair<double, double>> pts;
  for (const auto& p : job.at("points")) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number()) {
      throw SchemaError("points: expected [x, y] pairs");
    }
    pts.emplace_back(p[0].get<double>(), p[1].get<double>());
  }
  if (cfg.format == Format::Csv) {
    std::string text = "x,y,e_re,e_im,rho_re,rho_im,U1,U2,U3,U4\n";
    for (auto [x, y] : pts) {
      const AlgebraElement v = m(x, y);
      const RealComponents c = m.basis().decompose(v);
      text += csv_row({x, y, v.e().real(), v.e().imag(), v.rho().real(), v.rho().imag(), c.u1, c.u2, c.u3, c.u4});
    }
    return {text, kExitOk};
  }
  Json values = Json::array();
  for (auto [x, y] : pts) {
    const AlgebraElement v = m(x, y);
    const RealComponents c = m.basis().decompose(v);
    Json row = Json::object();
    row["x"] = x;
    row["y"] = y;
    row["zeta"] = io::to_json(m.basis().zeta(x, y));
    row["phi"] = io::to_json(v);
    row["components"] = Json::array({c.u1, c.u2, c.u3, c.u4});
    values.push_back(std::move(row));
  }
  Json report = Json::object();
  report["command"] = cfg.command;
  report["function"] = io::to_json(m);
  report["values"] = std::move(values);
  return finish(std::move(report), cfg, true);
}

Outcome components(const Json& job, const JobConfig& cfg) {
  const MonogenicFn m = io::monogenic_from(job);
  std::optional<GridSpec> grid;
  if (cfg.grid) {
    grid = io::grid_from(*cfg.grid);
  } else if (job.contains("grid")) {
    grid = io::grid_from(job.at("grid"));
  }
  const ComponentSet c = m.components();
  if (grid) grid->validate();

  if (cfg.format == Format::Csv) {
    if (!grid) throw SchemaError("csv output of components requires --grid");
    const auto fields = sample_components(m, *grid);
    std::string text = "x,y,U1,U2,U3,U4\n";
    for (int i = 0; i < grid->n; ++i)
      for (int j = 0; j < grid->n; ++j)
        text += csv_row({grid->x(i), grid->y(j), fields[0](i, j), fields[1](i, j), fields[2](i, j), fields[3](i, j)});
    return {text, kExitOk};
  }

  Json report = Json::object();
  report["command"] = cfg.command;
  report["function"] = io::to_json(m);
  Json comps = Json::object();
  const char* names[] = {"U1", "U2", "U3", "U4"};
  bool ok = true;
  Json bilap = Json::array();
  for (int k = 0; k < 4; ++k) {
    comps[names[k]] = io::to_json(c[k]);
    const RealBiPoly b = c[k].bilaplacian();
    ok = ok && b.is_zero(cfg.tolerance);
    bilap.push_back(b.max_abs_coeff());
  }
  report["components"] = std::move(comps);
  report["bilaplacian_max_coeff"] = std::move(bilap);
  if (grid) {
    const auto fields = sample_components(m, *grid);
    Json fd = Json::array();
    if (grid->n >= 5)
      for (const Field& f : fields) fd.push_back(fd_biharmonic_residual(f, grid->hx(), grid->hy()));
    report["fd_biharmonic_residual"] = std::move(fd);
    report["fd_cr_residual"] = fd_cr_residual(m, *grid);
  }
  return finish(std::move(report), cfg, ok);
}

Outcome reconstruct_job(const Json& job, const JobConfig& cfg) {
  const GoursatPair g = io::goursat_from(job);
  const Phi0Params p = job.contains("phi0") ? io::phi0_from(job.at("phi0")) : Phi0Params{};
  const MonogenicFn m = reconstruct(g, p);
  const RealBiPoly diff = m.components().u1 - goursat_u(g);
  const bool ok = diff.is_zero(cfg.tolerance);
  Json report = Json::object();
  report["command"] = cfg.command;
  report["basis"] = io::to_json(m.basis());
  report["F"] = io::to_json(m.f());
  report["F0"] = io::to_json(m.f0());
  report["phi0"] = io::to_json(p);
  report["u1"] = io::to_json(goursat_u(g));
  report["u1_residual"] = diff.max_abs_coeff();
  return finish(std::move(report), cfg, ok);
}

Outcome verify_job(const Json& job, const JobConfig& cfg) {
  verify::Options opts;
  opts.tolerance = cfg.tolerance;
  if (job.is_object() && job.contains("seed")) {
    if (!job.at("seed").is_number_unsigned()) throw SchemaError("seed: expected a non-negative integer");
    opts.seed = job.at("seed").get<std::uint64_t>();
  }
  const auto results = verify::run_all(opts);
  bool ok = true;
  for (const auto& r : results) ok = ok && r.ok;
  const int code = ok ? kExitOk : kExitVerificationFailed;

  if (cfg.format == Format::Csv) {
    std::string text = "module,check,ok,detail\n";
    for (const auto& r : results) text += r.module + ',' + r.name + ',' + (r.ok ? "1" : "0") + ',' + r.detail + '\n';
    return {text, code};
  }
  Json checks = Json::array();
  for (const auto& r : results) {
    Json c = Json::object();
    c["module"] = r.module;
    c["check"] = r.name;
    c["ok"] = r.ok;
    c["detail"] = r.detail;
    checks.push_back(std::move(c));
  }
  Json report = Json::object();
  report["command"] = cfg.command;
  report["seed"] = opts.seed;
  report["tolerance"] = opts.tolerance;
  report["checks"] = std::move(checks);
  return finish(std::move(report), cfg, ok);
}

Outcome dispatch(const JobConfig& cfg) {
  if (!(cfg.tolerance > 0.0)) throw SchemaError("tolerance must be positive");
  if (cfg.command == "verify") return verify_job(cfg.input.empty() ? Json::object() : read_job(cfg.input), cfg);
  const Json job = read_job(cfg.input);
  if (!job.is_object()) throw SchemaError("job must be a JSON object");
  if (cfg.command == "basis-check") return basis_check(job, cfg);
  if (cfg.command == "table") return table(job, cfg);
  if (cfg.command == "eval") return eval(job, cfg);
  if (cfg.command == "components") return components(job, cfg);
  if (cfg.command == "reconstruct") return reconstruct_job(job, cfg);
  throw SchemaError("unknown command '" + cfg.command + "'");
}

void report_error(std::ostream& err, std::string_view kind, std::string_view reason) {
  std::string flat(reason);
  for (char& ch : flat)
    if (ch == '\n' || ch == '\r') ch = ' ';
  err << "error: kind=" << kind << " reason=" << flat << '\n';
}

}  // namespace

int run(const JobConfig& config, std::ostream& out, std::ostream& err) {
  Outcome result;
  try {
    result = dispatch(config);
  } catch (const SchemaError& e) {
    report_error(err, "SchemaError", e.what());
    return kExitSchemaError;
  } catch (const Error& e) {
    report_error(err, to_string(e.kind()), e.what());
    return kExitSchemaError;
  } catch (const nlohmann::json::exception& e) {
    report_error(err, "SchemaError", e.what());
    return kExitSchemaError;
  }

  if (config.output.empty()) {
    out << result.text;
  } else {
    std::ofstream file(config.output, std::ios::binary);
    if (!file || !(file << result.text)) {
      report_error(err, "IOError", "cannot write output '" + config.output + "'");
      return kExitSchemaError;
    }
  }
  if (result.code == kExitVerificationFailed) report_error(err, "VerificationFailed", config.command);
  return result.code;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Biharmonic algebra kernel: bases, monogenic functions, Goursat lifts"};
  JobConfig cfg;
  std::string format = "json";
  std::string grid;
  app.add_option("command", cfg.command, "Job type")
      ->required()
      ->check(CLI::IsMember({"basis-check", "table", "eval", "components", "reconstruct", "verify"}));
  app.add_option("--input", cfg.input, "JSON job file");
  app.add_option("--output", cfg.output, "Write the report here instead of stdout");
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--tolerance", cfg.tolerance, "Relative zero tolerance for identities");
  app.add_option("--grid", grid, "Sampling grid \"x0,y0,x1,y1,n\"");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    report_error(err, "UsageError", e.what());
    return kExitSchemaError;
  }
  cfg.format = format == "csv" ? Format::Csv : Format::Json;
  if (!grid.empty()) cfg.grid = grid;
  return run(cfg, out, err);
}

}  // namespace biharm::cli

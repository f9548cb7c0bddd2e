#include "ccsym/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <iomanip>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#include "ccsym/acceptance.hpp"
#include "ccsym/errors.hpp"
#include "ccsym/io.hpp"

namespace ccsym {

namespace {

struct Request {
  std::string problem = "square";
  std::optional<double> mass;
  std::string input;
  std::optional<int> group;
  std::optional<double> axis_degrees;
  double match_tol = 1e-9;
  std::string format;
  double tol_zero = 1e-8;
  double tol_real = 1e-8;
  std::string out;
  std::string dump_rep;
};

// Display value for table mode: six significant digits, and rounding noise
// around zero shown as 0.
std::string short_number(double x) {
  if (std::abs(x) < 1e-12) x = 0;
  return format_number(x, 6);
}

std::string short_complex(const Complex& z) {
  const double re = std::abs(z.real()) < 1e-12 ? 0 : z.real();
  const double im = std::abs(z.imag()) < 1e-12 ? 0 : z.imag();
  std::string s = format_number(re, 6);
  s += im < 0 ? " - " : " + ";
  return s + format_number(std::abs(im), 6) + "i";
}

void add_problem_options(CLI::App* cmd, Request& req) {
  cmd->add_option("--problem", req.problem, "square, triangle-center or custom")
      ->check(CLI::IsMember({"square", "triangle-center", "custom"}));
  cmd->add_option("--mass", req.mass, "central mass (triangle-center)");
  cmd->add_option("--input", req.input, "configuration JSON (custom)");
  cmd->add_option("--group", req.group, "dihedral order k (custom)");
  cmd->add_option("--axis", req.axis_degrees, "reflection axis angle in degrees (custom)");
  cmd->add_option("--match-tol", req.match_tol, "position tolerance for symmetry matching");
  cmd->add_option("--tol-zero", req.tol_zero, "zero eigenvalue tolerance");
  cmd->add_option("--tol-real", req.tol_real, "real-part tolerance");
  cmd->add_option("--out", req.out, "write the report to this file");
  cmd->add_option("--dump-rep", req.dump_rep, "write the induced representation as JSON");
}

SymmetricProblem build_problem(const Request& req) {
  if (req.problem != "triangle-center" && req.mass)
    throw InputError("--mass applies to triangle-center only");
  if (req.problem != "custom" && (!req.input.empty() || req.group || req.axis_degrees))
    throw InputError("--input, --group and --axis apply to custom problems only");

  if (req.problem == "square") return square_problem();
  if (req.problem == "triangle-center") {
    if (!req.mass) throw InputError("triangle-center needs --mass");
    if (!(*req.mass > 0)) throw NonPositiveMass("--mass must be positive");
    return triangle_center_problem(*req.mass);
  }
  if (req.input.empty() || !req.group || !req.axis_degrees)
    throw InputError("custom problems need --input, --group and --axis");
  return dihedral_problem(load_configuration(req.input), *req.group,
                          *req.axis_degrees * std::numbers::pi / 180, req.match_tol);
}

void emit(const Request& req, const std::string& text, std::ostream& out) {
  if (req.out.empty())
    out << text;
  else
    write_file(req.out, text);
}

void maybe_dump_rep(const Request& req, const SymmetricProblem& p) {
  if (!req.dump_rep.empty()) write_file(req.dump_rep, to_json(p.rep).dump(2) + "\n");
}

std::string table_rows(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows)
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (width.size() <= c) width.push_back(0);
      width[c] = std::max(width[c], r[c].size());
    }
  std::ostringstream s;
  for (const auto& r : rows) {
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (c + 1 < r.size())
        s << std::left << std::setw(static_cast<int>(width[c] + 2)) << r[c];
      else
        s << r[c];
    }
    s << '\n';
  }
  return s.str();
}

int cmd_spectrum(const Request& req, std::ostream& out) {
  const auto p = build_problem(req);
  maybe_dump_rep(req, p);
  const Matrix h = hessian_scaled_potential(p.config);
  const SpectralReport report = symmetry_eigenvalues(h, p.rep, p.table);
  const double discrepancy =
      multiset_distance(report.expanded(), dense_symmetric_spectrum(h).expanded());

  std::ostringstream s;
  if (req.format == "json") {
    Json doc = {{"problem", req.problem}};
    doc.update(to_json(report));
    doc["oracle_discrepancy"] = round15(discrepancy);
    s << doc.dump(2) << '\n';
  } else if (req.format == "csv") {
    s << "value,multiplicity,irrep\n";
    for (const auto& e : report.eigenvalues)
      s << format_number(round15(e.value)) << ',' << e.multiplicity << ',' << e.irrep_label << '\n';
  } else {
    s << "problem: " << req.problem << "\nmethod: " << to_string(report.method)
      << "\nresidual: " << format_number(report.residual, 3)
      << "\noracle discrepancy: " << format_number(discrepancy, 3) << "\n\n";
    std::vector<std::vector<std::string>> rows{{"value", "multiplicity", "irrep"}};
    for (const auto& e : report.eigenvalues)
      rows.push_back({short_number(e.value), std::to_string(e.multiplicity), e.irrep_label});
    s << table_rows(rows);
  }
  emit(req, s.str(), out);
  return kExitOk;
}

int cmd_stability(const Request& req, std::ostream& out, std::ostream& err) {
  const auto p = build_problem(req);
  maybe_dump_rep(req, p);
  const auto lin = linearize(p.config);
  const auto full = full_spectrum(lin);
  StabilityReport report = classify(full.eigenvalues, req.tol_zero, req.tol_real);
  report.omega = static_cast<double>(lin.omega);

  std::vector<ReducedBlock> blocks;
  std::optional<double> discrepancy;
  try {
    blocks = reduced_blocks(p.config, p.rep, p.table, req.tol_zero);
    discrepancy = multiset_distance(block_spectrum(blocks), full.eigenvalues);
  } catch (const MixedMassOrbit& e) {
    err << "note: " << e.what() << "; reporting the full spectrum only\n";
  }

  std::ostringstream s;
  if (req.format == "json") {
    Json doc = {{"problem", req.problem}};
    doc.update(to_json(report));
    doc["oracle_residual"] = round15(full.residual);
    Json jb = Json::array();
    for (const auto& b : blocks) {
      Json members = Json::array();
      for (const auto& m : b.members)
        members.push_back({{"irrep", m.irrep_label}, {"value", round15(m.value)}, {"dimension", m.dimension}});
      jb.push_back({{"dimension", b.block.rows()}, {"members", members}, {"eigenvalues", complex_list(b.eigenvalues)}});
    }
    doc["blocks"] = jb;
    doc["block_eigenvalues"] = complex_list(block_spectrum(blocks));
    doc["discrepancy"] = discrepancy ? Json(round15(*discrepancy)) : Json();
    s << doc.dump(2) << '\n';
  } else if (req.format == "csv") {
    s << "source,block,re,im\n";
    for (const auto& v : report.eigenvalues)
      s << "full,," << format_number(round15(v.real())) << ',' << format_number(round15(v.imag())) << '\n';
    for (std::size_t k = 0; k < blocks.size(); ++k)
      for (const auto& v : blocks[k].eigenvalues)
        s << "block," << k + 1 << ',' << format_number(round15(v.real())) << ','
          << format_number(round15(v.imag())) << '\n';
  } else {
    s << "problem: " << req.problem << "\nomega: " << short_number(report.omega)
      << "\nverdict: " << report.verdict << "\nzero: " << report.zero
      << "  elliptic: " << report.elliptic << "  hyperbolic: " << report.hyperbolic
      << "\nelliptic dimension: " << report.elliptic_dimension << "\noracle residual: "
      << format_number(full.residual, 3) << "\nblock/oracle discrepancy: "
      << (discrepancy ? format_number(*discrepancy, 3) : std::string("n/a")) << "\n\nfull spectrum\n";
    for (const auto& v : report.eigenvalues) s << "  " << short_complex(v) << '\n';
    for (std::size_t k = 0; k < blocks.size(); ++k) {
      s << "\nblock " << k + 1 << " (" << blocks[k].block.rows() << "x" << blocks[k].block.rows() << "):";
      for (const auto& m : blocks[k].members) s << ' ' << m.irrep_label << '=' << short_number(m.value);
      s << '\n';
      for (const auto& v : blocks[k].eigenvalues) s << "  " << short_complex(v) << '\n';
    }
  }
  emit(req, s.str(), out);
  return kExitOk;
}

int cmd_scan(double lo, double hi, int steps, const std::string& format, const std::string& path,
             std::ostream& out) {
  if (steps < 2) throw InputError("--steps must be at least 2");
  if (!(lo > 0) || !(lo < hi)) throw InputError("need 0 < --m-lo < --m-hi");
  const auto rows = triangle_scan(lo, hi, steps);
  const auto roots = degenerate_mass_scan(lo, hi, steps);

  std::ostringstream s;
  if (format == "json") {
    Json jr = Json::array();
    for (const auto& r : rows)
      jr.push_back({{"m", round15(r.m)}, {"lambda3", round15(r.lambda3)},
                    {"lambda4", round15(r.lambda4)}, {"lambda5", round15(r.lambda5)},
                    {"f1", round15(r.f1)}, {"f2", round15(r.f2)}, {"f3", round15(r.f3)}});
    Json jd = Json::array();
    for (const auto& d : roots)
      jd.push_back({{"m", round15(d.m)}, {"kernel_dimension", d.kernel_dimension},
                    {"zero_irrep_copies", d.zero_irrep_copies}});
    s << Json{{"rows", jr}, {"degenerate_masses", jd}}.dump(2) << '\n';
  } else if (format == "table") {
    std::vector<std::vector<std::string>> t{{"m", "lambda3", "lambda4", "lambda5", "f1", "f2", "f3"}};
    for (const auto& r : rows)
      t.push_back({short_number(r.m), short_number(r.lambda3), short_number(r.lambda4),
                   short_number(r.lambda5), short_number(r.f1), short_number(r.f2), short_number(r.f3)});
    s << table_rows(t);
    for (const auto& d : roots) s << "# degenerate_mass=" << format_number(d.m, 6) << '\n';
  } else {
    write_scan_csv(s, rows, roots);
  }
  if (path.empty())
    out << s.str();
  else
    write_file(path, s.str());
  return kExitOk;
}

int cmd_verify(std::ostream& out) {
  return print_acceptance(run_acceptance(), out) ? kExitOk : kExitNumerical;
}

int exit_code(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::Input: return kExitInput;
    case ErrorKind::Io: return kExitIo;
    case ErrorKind::Numerical: return kExitNumerical;
  }
  return kExitNumerical;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Symmetry-reduced spectra and stability of planar central configurations", "ccsym"};
  app.require_subcommand(1);

  Request spec_req, stab_req;
  spec_req.format = "table";
  stab_req.format = "table";
  auto* spectrum = app.add_subcommand("spectrum", "eigenvalues of the scaled-potential Hessian");
  add_problem_options(spectrum, spec_req);
  spectrum->add_option("--format", spec_req.format)->check(CLI::IsMember({"json", "csv", "table"}));

  auto* stability = app.add_subcommand("stability", "rotating-frame linear stability");
  add_problem_options(stability, stab_req);
  stability->add_option("--format", stab_req.format)->check(CLI::IsMember({"json", "csv", "table"}));

  double m_lo = 0.1, m_hi = 2.0;
  int steps = 1000;
  std::string scan_format = "csv", scan_out;
  auto* scan = app.add_subcommand("scan", "triangle-center eigenvalues and f1, f2, f3 over m");
  scan->add_option("--m-lo", m_lo, "smallest central mass");
  scan->add_option("--m-hi", m_hi, "largest central mass");
  scan->add_option("--steps", steps, "grid points");
  scan->add_option("--format", scan_format)->check(CLI::IsMember({"json", "csv", "table"}));
  scan->add_option("--out", scan_out, "write the scan to this file");

  auto* verify = app.add_subcommand("verify", "run every acceptance check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (spectrum->parsed()) return cmd_spectrum(spec_req, out);
    if (stability->parsed()) return cmd_stability(stab_req, out, err);
    if (scan->parsed()) return cmd_scan(m_lo, m_hi, steps, scan_format, scan_out, out);
    if (verify->parsed()) return cmd_verify(out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code(e);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumerical;
  }
  return kExitInput;
}

}  // namespace ccsym

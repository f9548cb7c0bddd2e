#include "ccsym/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "ccsym/errors.hpp"

namespace ccsym {

std::string format_number(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

double round15(double x) {
  if (!std::isfinite(x)) return x;
  const double r = std::strtod(format_number(x, 15).c_str(), nullptr);
  return r == 0 ? 0.0 : r;  // no "-0"
}

MassedConfiguration parse_configuration(const Json& doc) {
  if (!doc.is_object() || !doc.contains("masses") || !doc.contains("positions"))
    throw InputError("configuration needs \"masses\" and \"positions\"");
  const auto& masses = doc.at("masses");
  const auto& positions = doc.at("positions");
  if (!masses.is_array() || !positions.is_array())
    throw InputError("\"masses\" and \"positions\" must be arrays");

  std::vector<Real> m;
  for (const auto& v : masses) {
    if (!v.is_number()) throw InputError("masses must be numbers");
    m.push_back(v.get<double>());
  }
  std::vector<PlanarPoint> q;
  for (const auto& p : positions) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number())
      throw InputError("each position must be [x, y]");
    q.push_back({p[0].get<double>(), p[1].get<double>()});
  }
  return MassedConfiguration(std::move(m), std::move(q));
}

MassedConfiguration load_configuration(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read " + path);
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
  return parse_configuration(doc);
}

Json to_json(const CharacterTable& table) {
  Json values = Json::array();
  for (const auto& row : table.values)
    for (const auto& v : row) values.push_back({round15(v.real()), round15(v.imag())});
  return {{"classes", table.class_names},
          {"sizes", table.classes.sizes},
          {"irreps", table.irrep_names},
          {"degrees", table.degrees},
          {"values", values}};
}

Json to_json(const SpectralReport& report) {
  Json entries = Json::array();
  for (const auto& e : report.eigenvalues) {
    entries.push_back({{"value", round15(e.value)},
                       {"multiplicity", e.multiplicity},
                       {"irrep", e.irrep_label.empty() ? Json() : Json(e.irrep_label)}});
  }
  return {{"method", to_string(report.method)},
          {"eigenvalues", entries},
          {"residual", round15(report.residual)}};
}

Json complex_list(const std::vector<Complex>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back({round15(v.real()), round15(v.imag())});
  return out;
}

Json to_json(const StabilityReport& report) {
  return {{"omega", round15(report.omega)},
          {"eigenvalues", complex_list(report.eigenvalues)},
          {"zero", report.zero},
          {"elliptic", report.elliptic},
          {"hyperbolic", report.hyperbolic},
          {"elliptic_dimension", report.elliptic_dimension},
          {"verdict", report.verdict}};
}

Json to_json(const InducedRepresentation& rep) {
  Json out = Json::array();
  const auto& g = rep.group();
  for (FiniteGroup::Element a = 0; a < g.order(); ++a) {
    const auto& sigma = rep.permutation(a);
    Json perm = Json::array();
    for (int s : sigma) perm.push_back(s + 1);
    const Eigen::Matrix2d q = rep.matrix(a).block<2, 2>(0, 2 * sigma.front());
    out.push_back({{"element", g.label(a)},
                   {"permutation", perm},
                   {"block", {{round15(q(0, 0)), round15(q(0, 1))},
                              {round15(q(1, 0)), round15(q(1, 1))}}}});
  }
  return out;
}

void write_scan_csv(std::ostream& out, const std::vector<ScanRow>& rows,
                    const std::vector<DegenerateMass>& degenerate) {
  out << "m,lambda3,lambda4,lambda5,f1,f2,f3\n";
  for (const auto& r : rows) {
    out << format_number(r.m) << ',' << format_number(r.lambda3) << ','
        << format_number(r.lambda4) << ',' << format_number(r.lambda5) << ','
        << format_number(r.f1) << ',' << format_number(r.f2) << ',' << format_number(r.f3)
        << '\n';
  }
  for (const auto& d : degenerate) out << "# degenerate_mass=" << format_number(d.m) << '\n';
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  out << text;
  if (!out) throw IoError("write to " + path + " failed");
}

}  // namespace ccsym

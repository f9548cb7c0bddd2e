#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "ccsym/groups.hpp"
#include "ccsym/induced_rep.hpp"
#include "ccsym/nbody.hpp"
#include "ccsym/spectral.hpp"
#include "ccsym/stability.hpp"

namespace ccsym {

using Json = nlohmann::ordered_json;

/// Value rounded to 15 significant digits, so that printing it with the
/// shortest round-trip representation gives at most 15 digits.
double round15(double x);

/// printf("%.*g")
std::string format_number(double x, int digits = 15);

/// {"masses": [...], "positions": [[x, y], ...]}. Throws InputError on
/// malformed content and IoError when the file cannot be read.
MassedConfiguration parse_configuration(const Json& doc);
MassedConfiguration load_configuration(const std::string& path);

Json to_json(const CharacterTable& table);
Json to_json(const SpectralReport& report);
Json to_json(const StabilityReport& report);
Json complex_list(const std::vector<Complex>& values);

/// Per element: label, permutation of bodies (1-based, one-line notation)
/// and the 2x2 planar block.
Json to_json(const InducedRepresentation& rep);

/// Header "m,lambda3,lambda4,lambda5,f1,f2,f3", one row per grid point, then
/// one "# degenerate_mass=..." comment line per located root.
void write_scan_csv(std::ostream& out, const std::vector<ScanRow>& rows,
                    const std::vector<DegenerateMass>& degenerate);

/// Writes `text` to `path`, throwing IoError on failure.
void write_file(const std::string& path, const std::string& text);

}  // namespace ccsym

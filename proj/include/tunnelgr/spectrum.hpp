#ifndef TUNNELGR_SPECTRUM_HPP
#define TUNNELGR_SPECTRUM_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tunnelgr/errors.hpp"
#include "tunnelgr/rational.hpp"

namespace tunnelgr {

// A knot is modeled purely by its invariant spectrum: the ambient Heegaard
// genus g(M), the exterior genus g(E(K)), and the bridge indices
// b_1* < ... < b_g* taken with respect to Heegaard surfaces of genus
// g(E(K)) - i, where g = g(E(K)) - g(M).  Every operation in this library
// consumes only these numbers.
//
// Instances are immutable after validation and safe to share across threads.
struct KnotSpectrum {
  std::string name;
  long long ambient_genus = 0;
  long long exterior_genus = 0;
  std::vector<long long> bridge_indices;  // strictly increasing, positive
  bool m_small = false;

  bool admissible() const { return exterior_genus > ambient_genus; }

  // g = g(E(K)) - g(M); equals the number of bridge indices when admissible.
  long long genus_gap() const { return exterior_genus - ambient_genus; }

  // b_g*; only meaningful for admissible spectra.
  long long max_bridge_index() const { return bridge_indices.back(); }
};

// Checks all spectrum invariants and returns the candidate unchanged.
// Throws: NegativeGenus, ExteriorBelowAmbient, LengthMismatch,
// NonIncreasingBridgeIndices.
KnotSpectrum validate_spectrum(const KnotSpectrum& candidate);

// Number of bridge indices <= c, i.e. the unique i with b_i* <= c < b_{i+1}*
// (with b_0* = 0 and b_{g+1}* = infinity).
int threshold_index(const KnotSpectrum& s, long long c);

// One-line human summary, e.g. "KMSY: gM=0 gEK=2 b*=(2,7) m-small".
std::string describe(const KnotSpectrum& s);

// Tabulated defect staircase f_K(c) for c = 0..c_max.  Exact for m-small
// spectra; the staircase steps by one exactly at each bridge index.
struct DefectProfile {
  KnotSpectrum spectrum;
  std::vector<long long> values;      // values[c] = f_K(c)
  std::vector<long long> thresholds;  // the b_i* where the staircase steps

  long long c_max() const { return static_cast<long long>(values.size()) - 1; }

  // Extends past c_max through the thresholds (the staircase is constant at
  // g beyond b_g*).
  long long value_at(long long c) const;

  bool same_staircase(const DefectProfile& other) const {
    return thresholds == other.thresholds;
  }
};

struct CatalogEntry {
  KnotSpectrum spectrum;
  std::string provenance;
  std::optional<Rational> expected_growth_rate;
};

// The knots shipped with the tool.  Every entry passes validate_spectrum and
// every recorded growth rate matches the closed form computed from the
// spectrum.
std::vector<CatalogEntry> builtin_catalog();

const CatalogEntry* find_entry(const std::vector<CatalogEntry>& catalog, std::string_view name);

// Catalog file format: a UTF-8 JSON array of objects with keys "name"
// (string), "ambient_genus" (integer), "exterior_genus" (integer),
// "bridge_indices" (array of integers), "m_small" (boolean) and optional
// "provenance" (string).  Unknown keys are rejected with an error naming the
// key.
struct CatalogIssue {
  std::string where;  // entry index and name when available
  Errc code = Errc::parse_error;
  std::string message;
};

std::string catalog_to_json_text(const std::vector<CatalogEntry>& entries, int indent = 2);

// Parses a catalog document.  A document that is not a JSON array throws
// ParseError.  Entry-level problems (unknown/missing keys, wrong types,
// invariant violations) are appended to `issues` when given, otherwise the
// first one is thrown.
std::vector<CatalogEntry> catalog_from_json_text(const std::string& text,
                                                 std::vector<CatalogIssue>* issues = nullptr);

// Loads a catalog file.  Throws FileNotFound when the path does not exist.
std::vector<CatalogEntry> load_catalog(const std::filesystem::path& path,
                                       std::vector<CatalogIssue>* issues = nullptr);

// Parses the inline form "gM,gEK,b1,b2,...".  The inline form carries no
// m-small marker; spectra default to m-small.
KnotSpectrum parse_inline_spectrum(std::string_view text, std::string_view name = "inline",
                                   bool m_small = true);

}  // namespace tunnelgr

#endif

#include "tunnelgr/spectrum.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace tunnelgr {

using nlohmann::json;

KnotSpectrum validate_spectrum(const KnotSpectrum& candidate) {
  const auto& s = candidate;
  if (s.ambient_genus < 0 || s.exterior_genus < 0) {
    throw Error(Errc::negative_genus,
                "'" + s.name + "': genera must be non-negative (gM=" +
                    std::to_string(s.ambient_genus) + ", gEK=" + std::to_string(s.exterior_genus) + ")");
  }
  if (s.exterior_genus < s.ambient_genus) {
    throw Error(Errc::exterior_below_ambient,
                "'" + s.name + "': exterior genus " + std::to_string(s.exterior_genus) +
                    " below ambient genus " + std::to_string(s.ambient_genus));
  }
  const long long expected = s.genus_gap();  // zero for inadmissible spectra
  if (static_cast<long long>(s.bridge_indices.size()) != expected) {
    throw Error(Errc::length_mismatch,
                "'" + s.name + "': expected " + std::to_string(expected) +
                    " bridge indices, got " + std::to_string(s.bridge_indices.size()));
  }
  long long previous = 0;  // chain starts at b_0* = 0, so entries must be positive
  for (long long b : s.bridge_indices) {
    if (b <= previous) {
      throw Error(Errc::non_increasing_bridge_indices,
                  "'" + s.name + "': bridge indices must satisfy 0 < b_1* < ... < b_g*");
    }
    previous = b;
  }
  return s;
}

int threshold_index(const KnotSpectrum& s, long long c) {
  const auto& b = s.bridge_indices;
  return static_cast<int>(std::upper_bound(b.begin(), b.end(), c) - b.begin());
}

std::string describe(const KnotSpectrum& s) {
  std::ostringstream out;
  out << s.name << ": gM=" << s.ambient_genus << " gEK=" << s.exterior_genus << " b*=(";
  for (std::size_t i = 0; i < s.bridge_indices.size(); ++i) {
    if (i) out << ",";
    out << s.bridge_indices[i];
  }
  out << ")";
  if (!s.admissible())
    out << " inadmissible";
  else if (s.m_small)
    out << " m-small";
  else
    out << " not-m-small";
  return out.str();
}

long long DefectProfile::value_at(long long c) const {
  if (c >= 0 && c < static_cast<long long>(values.size())) return values[c];
  return std::upper_bound(thresholds.begin(), thresholds.end(), c) - thresholds.begin();
}

std::vector<CatalogEntry> builtin_catalog() {
  std::vector<CatalogEntry> catalog;
  catalog.push_back({validate_spectrum({"unknot", 0, 0, {}, false}),
                     "trivial knot; exterior is a solid torus, growth rate 1 as for every "
                     "inadmissible knot",
                     Rational(1)});
  catalog.push_back({validate_spectrum({"2bridge", 0, 2, {1, 2}, true}),
                     "non-trivial 2-bridge knot: tunnel number one, admits a (1,1) "
                     "decomposition, bridge number 2",
                     Rational(0)});
  catalog.push_back({validate_spectrum({"torus-3-4", 0, 2, {1, 3}, true}),
                     "(3,4) torus knot: tunnel number one, admits a (1,1) decomposition, "
                     "bridge number 3; torus knots are m-small",
                     Rational(0)});
  catalog.push_back({validate_spectrum({"KMSY", 0, 2, {2, 7}, true}),
                     "Morimoto-Sakuma-Yokota knots: hyperbolic, m-small, tunnel number one, "
                     "torus bridge index 2; bridge number 7 holds for all but finitely many "
                     "members (Bowman-Taylor-Zupan) and is used here for the whole family",
                     Rational(1, 2)});
  catalog.push_back({validate_spectrum({"illustration-5-7-23", 0, 3, {5, 7, 23}, true}),
                     "hypothetical m-small spectrum with bridge indices 5, 7, 23; no knot "
                     "realizing it is currently known",
                     Rational(5, 7)});
  return catalog;
}

const CatalogEntry* find_entry(const std::vector<CatalogEntry>& catalog, std::string_view name) {
  for (const auto& entry : catalog)
    if (entry.spectrum.name == name) return &entry;
  return nullptr;
}

std::string catalog_to_json_text(const std::vector<CatalogEntry>& entries, int indent) {
  json doc = json::array();
  for (const auto& entry : entries) {
    json obj;
    obj["name"] = entry.spectrum.name;
    obj["ambient_genus"] = entry.spectrum.ambient_genus;
    obj["exterior_genus"] = entry.spectrum.exterior_genus;
    obj["bridge_indices"] = entry.spectrum.bridge_indices;
    obj["m_small"] = entry.spectrum.m_small;
    if (!entry.provenance.empty()) obj["provenance"] = entry.provenance;
    doc.push_back(std::move(obj));
  }
  return doc.dump(indent);
}

namespace {

const std::set<std::string>& allowed_keys() {
  static const std::set<std::string> keys = {"name",           "ambient_genus", "exterior_genus",
                                             "bridge_indices", "m_small",       "provenance"};
  return keys;
}

CatalogEntry entry_from_object(const json& obj, const std::string& where) {
  if (!obj.is_object())
    throw Error(Errc::parse_error, where + ": expected a JSON object");
  for (const auto& item : obj.items()) {
    if (!allowed_keys().count(item.key()))
      throw Error(Errc::parse_error, where + ": unknown key '" + item.key() + "'");
  }
  for (const char* key : {"name", "ambient_genus", "exterior_genus", "bridge_indices", "m_small"}) {
    if (!obj.contains(key))
      throw Error(Errc::parse_error, where + ": missing required key '" + std::string(key) + "'");
  }
  if (!obj["name"].is_string())
    throw Error(Errc::parse_error, where + ": 'name' must be a string");
  if (!obj["ambient_genus"].is_number_integer())
    throw Error(Errc::parse_error, where + ": 'ambient_genus' must be an integer");
  if (!obj["exterior_genus"].is_number_integer())
    throw Error(Errc::parse_error, where + ": 'exterior_genus' must be an integer");
  if (!obj["bridge_indices"].is_array())
    throw Error(Errc::parse_error, where + ": 'bridge_indices' must be an array of integers");
  for (const auto& value : obj["bridge_indices"]) {
    if (!value.is_number_integer())
      throw Error(Errc::parse_error, where + ": 'bridge_indices' must contain only integers");
  }
  if (!obj["m_small"].is_boolean())
    throw Error(Errc::parse_error, where + ": 'm_small' must be a boolean");
  if (obj.contains("provenance") && !obj["provenance"].is_string())
    throw Error(Errc::parse_error, where + ": 'provenance' must be a string");

  KnotSpectrum candidate;
  candidate.name = obj["name"].get<std::string>();
  candidate.ambient_genus = obj["ambient_genus"].get<long long>();
  candidate.exterior_genus = obj["exterior_genus"].get<long long>();
  candidate.bridge_indices = obj["bridge_indices"].get<std::vector<long long>>();
  candidate.m_small = obj["m_small"].get<bool>();

  CatalogEntry entry;
  entry.spectrum = validate_spectrum(candidate);
  if (obj.contains("provenance")) entry.provenance = obj["provenance"].get<std::string>();
  return entry;
}

}  // namespace

std::vector<CatalogEntry> catalog_from_json_text(const std::string& text,
                                                 std::vector<CatalogIssue>* issues) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(Errc::parse_error, e.what());
  }
  if (!doc.is_array()) throw Error(Errc::parse_error, "catalog document must be a JSON array");

  std::vector<CatalogEntry> entries;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    std::string where = "entry " + std::to_string(i);
    if (doc[i].is_object() && doc[i].contains("name") && doc[i]["name"].is_string())
      where += " ('" + doc[i]["name"].get<std::string>() + "')";
    try {
      entries.push_back(entry_from_object(doc[i], where));
    } catch (const Error& e) {
      if (!issues) throw;
      issues->push_back({where, e.code(), e.what()});
    }
  }
  return entries;
}

std::vector<CatalogEntry> load_catalog(const std::filesystem::path& path,
                                       std::vector<CatalogIssue>* issues) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::file_not_found, "cannot open catalog file '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return catalog_from_json_text(buffer.str(), issues);
}

KnotSpectrum parse_inline_spectrum(std::string_view text, std::string_view name, bool m_small) {
  std::vector<long long> numbers;
  std::string token;
  std::istringstream in{std::string(text)};
  while (std::getline(in, token, ',')) {
    try {
      std::size_t used = 0;
      long long value = std::stoll(token, &used);
      while (used < token.size() && std::isspace(static_cast<unsigned char>(token[used]))) ++used;
      if (used != token.size()) throw std::invalid_argument(token);
      numbers.push_back(value);
    } catch (const std::exception&) {
      throw Error(Errc::parse_error, "inline spectrum: '" + token + "' is not an integer");
    }
  }
  if (numbers.size() < 2)
    throw Error(Errc::parse_error, "inline spectrum needs at least 'gM,gEK'");

  KnotSpectrum candidate;
  candidate.name = std::string(name);
  candidate.ambient_genus = numbers[0];
  candidate.exterior_genus = numbers[1];
  candidate.bridge_indices.assign(numbers.begin() + 2, numbers.end());
  candidate.m_small = m_small;
  return validate_spectrum(candidate);
}

}  // namespace tunnelgr

#include "fibcube/certificate.hpp"

#include <cstdint>
#include <limits>

#include <json.hpp>

namespace fibcube {

using nlohmann::json;

Certificate to_certificate(const Packing& packing) {
  Certificate out;
  out.n = packing.n;
  out.k = packing.k;
  out.count = packing.cubes.size();
  out.cubes.reserve(packing.cubes.size());
  for (const auto& cube : packing.cubes) {
    out.cubes.push_back(RawCube{cube.base().str(), cube.dirs()});
  }
  return out;
}

std::string to_json(const Certificate& certificate) {
  // ordered_json keeps n, k, count, cubes in this order on the wire
  nlohmann::ordered_json doc;
  doc["n"] = certificate.n;
  doc["k"] = certificate.k;
  doc["count"] = certificate.count;
  auto& cubes = doc["cubes"] = nlohmann::ordered_json::array();
  for (const auto& cube : certificate.cubes) {
    nlohmann::ordered_json entry;
    entry["base"] = cube.base;
    entry["dirs"] = cube.dirs;
    cubes.push_back(std::move(entry));
  }
  return doc.dump();
}

namespace {

// Certificates describing cubes beyond this order are rejected outright.
constexpr std::int64_t kMaxOrder = 4096;

std::int64_t read_int(const json& doc, const char* key, std::int64_t max) {
  const auto it = doc.find(key);
  if (it == doc.end() || !it->is_number_integer()) {
    throw CertificateError(std::string("certificate: field '") + key +
                               "' missing or not an integer",
                           {});
  }
  const auto value = it->get<std::int64_t>();
  if (value < 0 || value > max) {
    throw CertificateError(std::string("certificate: field '") + key +
                               "' out of range",
                           {});
  }
  return value;
}

bool read_cube(const json& entry, RawCube& out) {
  if (!entry.is_object()) return false;
  const auto base = entry.find("base");
  const auto dirs = entry.find("dirs");
  if (base == entry.end() || !base->is_string()) return false;
  if (dirs == entry.end() || !dirs->is_array()) return false;
  out.base = base->get<std::string>();
  out.dirs.clear();
  for (const auto& d : *dirs) {
    if (!d.is_number_integer()) return false;
    const auto value = d.get<std::int64_t>();
    if (value < std::numeric_limits<int>::min() ||
        value > std::numeric_limits<int>::max()) return false;
    out.dirs.push_back(static_cast<int>(value));
  }
  return true;
}

}  // namespace

Certificate parse_certificate(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw CertificateError(std::string("certificate: invalid JSON: ") + e.what(),
                           {});
  }
  if (!doc.is_object()) {
    throw CertificateError("certificate: top level must be an object", {});
  }
  Certificate out;
  out.n = static_cast<int>(read_int(doc, "n", kMaxOrder));
  out.k = static_cast<int>(read_int(doc, "k", kMaxOrder));
  out.count = static_cast<std::size_t>(
      read_int(doc, "count", std::numeric_limits<std::int64_t>::max()));
  const auto cubes = doc.find("cubes");
  if (cubes == doc.end() || !cubes->is_array()) {
    throw CertificateError("certificate: field 'cubes' missing or not an array",
                           {});
  }
  std::vector<std::size_t> bad;
  out.cubes.resize(cubes->size());
  for (std::size_t i = 0; i < cubes->size(); ++i) {
    if (!read_cube((*cubes)[i], out.cubes[i])) bad.push_back(i);
  }
  if (!bad.empty()) {
    std::string what = "certificate: malformed cube entries at index";
    for (std::size_t i : bad) what += " " + std::to_string(i);
    throw CertificateError(what, std::move(bad));
  }
  return out;
}

}  // namespace fibcube

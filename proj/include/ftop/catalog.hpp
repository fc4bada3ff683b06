#ifndef FTOP_CATALOG_HPP_
#define FTOP_CATALOG_HPP_

// Persisted catalog of all topologies on n points. The file is a header line
//
//   ftop-catalog v1 n=3 records=29
//
// followed by one compact JSON record per line, in enumeration order.

#include <array>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ftop/enumerate.hpp"
#include "ftop/serialize.hpp"
#include "ftop/set_classes.hpp"
#include "ftop/space_properties.hpp"

namespace ftop {

inline constexpr int kCatalogVersion = 1;
inline constexpr int kMaxCatalogPoints = 4;

/// 64-bit FNV-1a over the ground-set size and the members of a family, each
/// member as four little-endian bytes in canonical order.
inline std::uint64_t family_fingerprint(int n, const SetFamily& fam) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto byte = [&h](std::uint8_t b) {
    h ^= b;
    h *= 0x100000001b3ULL;
  };
  byte(static_cast<std::uint8_t>(n));
  for (Subset s : fam.members()) {
    for (int k = 0; k < 4; ++k) byte(static_cast<std::uint8_t>(s.bits() >> (8 * k)));
  }
  return h;
}

struct PropertyVector {
  std::uint64_t id = 0;  // position in enumeration order
  std::uint32_t properties = 0;
  std::array<std::uint64_t, kSetClassCount> fingerprints{};

  bool operator==(const PropertyVector&) const = default;
};

inline PropertyVector property_vector(const FiniteSpace& space, std::uint64_t id) {
  PropertyVector v;
  v.id = id;
  v.properties = property_mask(space);
  for (std::size_t i = 0; i < kSetClassCount; ++i) {
    v.fingerprints[i] = family_fingerprint(space.size(), family(space, kAllSetClasses[i]));
  }
  return v;
}

struct CatalogRecord {
  FiniteSpace space;
  PropertyVector vector;
};

struct CatalogFile {
  int version = kCatalogVersion;
  int n = 0;
  std::vector<CatalogRecord> records;
};

inline CatalogFile build_catalog(int n) {
  if (n < 0 || n > kMaxCatalogPoints) {
    throw Error(ErrorKind::kTooLarge, "catalogs support n <= 4, got " + std::to_string(n));
  }
  CatalogFile file;
  file.n = n;
  std::uint64_t id = 0;
  for (FiniteSpace& s : enumerate_topologies(n)) {
    PropertyVector v = property_vector(s, id++);
    file.records.push_back({std::move(s), v});
  }
  return file;
}

namespace detail {

inline std::string hex(std::uint64_t v, int width) {
  char buf[24];
  std::snprintf(buf, sizeof buf, "%0*llx", width, static_cast<unsigned long long>(v));
  return buf;
}

inline std::uint64_t parse_hex(const Json& doc, const std::string& what) {
  if (!doc.is_string()) schema_error(what + " must be a hex string");
  const std::string& s = doc.get_ref<const std::string&>();
  std::size_t used = 0;
  std::uint64_t v = 0;
  try {
    v = std::stoull(s, &used, 16);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) schema_error(what + " is not a hex number: " + s);
  return v;
}

}  // namespace detail

inline Json record_to_json(const CatalogRecord& r) {
  Json fps = Json::array();
  for (std::uint64_t f : r.vector.fingerprints) fps.push_back(detail::hex(f, 16));
  return Json{{"id", r.vector.id},
              {"properties", "0x" + detail::hex(r.vector.properties, 5)},
              {"fingerprints", std::move(fps)},
              {"space", space_to_json(r.space)}};
}

inline std::string serialize_catalog(const CatalogFile& file) {
  std::string out = "ftop-catalog v" + std::to_string(file.version) + " n=" +
                    std::to_string(file.n) + " records=" + std::to_string(file.records.size()) +
                    "\n";
  for (const CatalogRecord& r : file.records) out += record_to_json(r).dump() + "\n";
  return out;
}

inline void write_catalog(const CatalogFile& file, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::kWriteFailure, "cannot open " + path + " for writing");
  out << serialize_catalog(file);
  out.flush();
  if (!out) throw Error(ErrorKind::kWriteFailure, "failed writing " + path);
}

inline CatalogFile parse_catalog(const std::string& text) {
  std::istringstream in(text);
  std::string header;
  std::getline(in, header);
  CatalogFile file;
  std::size_t expected = 0;
  {
    int version = 0;
    int n = 0;
    unsigned long long records = 0;
    if (std::sscanf(header.c_str(), "ftop-catalog v%d n=%d records=%llu", &version, &n,
                    &records) != 3) {
      detail::schema_error("bad catalog header: " + header);
    }
    if (version != kCatalogVersion) {
      detail::schema_error("unsupported catalog version " + std::to_string(version));
    }
    file.version = version;
    file.n = n;
    expected = records;
  }
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const Json doc = detail::parse_json(line, "catalog record");
    CatalogRecord r{load_space(detail::require(doc, "space", "catalog record")), {}};
    const Json& id = detail::require(doc, "id", "catalog record");
    if (!id.is_number_unsigned()) detail::schema_error("catalog record id must be unsigned");
    r.vector.id = id.get<std::uint64_t>();
    r.vector.properties = static_cast<std::uint32_t>(
        detail::parse_hex(detail::require(doc, "properties", "catalog record"), "properties"));
    const Json& fps = detail::require(doc, "fingerprints", "catalog record");
    if (!fps.is_array() || fps.size() != kSetClassCount) {
      detail::schema_error("catalog record needs " + std::to_string(kSetClassCount) +
                           " fingerprints");
    }
    for (std::size_t i = 0; i < kSetClassCount; ++i) {
      r.vector.fingerprints[i] = detail::parse_hex(fps[i], "fingerprint");
    }
    if (r.space.size() != file.n) detail::schema_error("catalog record has the wrong size");
    file.records.push_back(std::move(r));
  }
  if (file.records.size() != expected) {
    detail::schema_error("catalog header promises " + std::to_string(expected) + " records, found " +
                         std::to_string(file.records.size()));
  }
  return file;
}

inline CatalogFile read_catalog(const std::string& path) {
  return parse_catalog(detail::read_file(path));
}

/// Index of the first record whose stored vector differs from a fresh
/// computation, if any.
inline std::optional<std::size_t> first_stale_record(const CatalogFile& file) {
  for (std::size_t i = 0; i < file.records.size(); ++i) {
    const CatalogRecord& r = file.records[i];
    if (!(property_vector(r.space, r.vector.id) == r.vector)) return i;
  }
  return std::nullopt;
}

}  // namespace ftop

#endif  // FTOP_CATALOG_HPP_

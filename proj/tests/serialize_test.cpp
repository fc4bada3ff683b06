#include <cstdio>
#include <filesystem>
#include <fstream>

#include <gtest/gtest.h>

#include "ftop/catalog.hpp"
#include "ftop/enumerate.hpp"
#include "ftop/fixtures.hpp"
#include "ftop/serialize.hpp"

using namespace ftop;
using namespace ftop::fixtures;

namespace {

ErrorKind load_error(const std::string& text) {
  try {
    load_space_text(text);
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "loaded: " << text;
  return ErrorKind::kWriteFailure;
}

std::string data(const std::string& name) { return std::string(FTOP_DATA_DIR) + "/" + name; }

}  // namespace

TEST(LoadSpace, Examples) {
  EXPECT_TRUE(load_space_text(R"({"points":["a","b"],"opens":[[],["a"],["a","b"]]})") ==
              sierpinski());
  EXPECT_TRUE(load_space_text(
                  R"({"points":["a","b","c"],"opens":[[],["a"],["b"],["a","b"],["a","b","c"]]})") ==
              e3_tau());
  EXPECT_EQ(load_error(R"({"points":["a"],"opens":[[]]})"), ErrorKind::kMissingExtremes);
}

TEST(LoadSpace, OrderInsensitive) {
  const FiniteSpace s =
      load_space_text(R"({"opens":[["b","a"],["a"],[],["a","b"],["a"]],"points":["a","b"]})");
  EXPECT_TRUE(s == sierpinski());
}

TEST(LoadSpace, KeepsLabels) {
  const FiniteSpace s = load_space_text(R"({"points":["x","y"],"opens":[[],["y"],["x","y"]]})");
  EXPECT_EQ(s.labels(), (std::vector<std::string>{"x", "y"}));
  EXPECT_EQ(space_to_json(s).dump(), R"({"opens":[[],["y"],["x","y"]],"points":["x","y"]})");
}

TEST(LoadSpace, Errors) {
  EXPECT_EQ(load_error("not json"), ErrorKind::kSchemaError);
  EXPECT_EQ(load_error("[]"), ErrorKind::kSchemaError);
  EXPECT_EQ(load_error(R"({"points":["a"]})"), ErrorKind::kSchemaError);
  EXPECT_EQ(load_error(R"({"points":"a","opens":[]})"), ErrorKind::kSchemaError);
  EXPECT_EQ(load_error(R"({"points":[1],"opens":[]})"), ErrorKind::kSchemaError);
  EXPECT_EQ(load_error(R"({"points":["a","a"],"opens":[[],["a"]]})"), ErrorKind::kSchemaError);
  EXPECT_EQ(load_error(R"({"points":["a"],"opens":[[],"a"]})"), ErrorKind::kSchemaError);
  EXPECT_EQ(load_error(R"({"points":["a"],"opens":[[],["z"]]})"), ErrorKind::kOutOfRange);
  EXPECT_EQ(load_error(R"({"points":["a","b","c"],"opens":[[],["a"],["b"],["a","b","c"]]})"),
            ErrorKind::kNotALattice);
}

TEST(LoadSpace, ErrorsMentionLabels) {
  try {
    load_space_text(R"({"points":["p","q","r"],"opens":[[],["p"],["q"],["p","q","r"]]})");
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("{p,q}"), std::string::npos) << e.what();
  }
  try {
    load_space_text(R"({"points":["a"],"opens":[[],["zz"]]})");
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("zz"), std::string::npos) << e.what();
  }
}

TEST(LoadSpace, RoundTripOnEverySmallSpace) {
  for (int n = 0; n <= 3; ++n) {
    for (const FiniteSpace& s : enumerate_topologies(n)) {
      const std::string text = space_to_json(s).dump();
      const FiniteSpace back = load_space_text(text);
      ASSERT_TRUE(back == s) << text;
      ASSERT_EQ(space_to_json(back).dump(), text);
    }
  }
}

TEST(LoadSpace, Files) {
  EXPECT_TRUE(load_space_file(data("e3tau.json")) == e3_tau());
  EXPECT_TRUE(load_space_file(data("e3sigma.json")) == e3_sigma());
  EXPECT_TRUE(load_space_file(data("sierpinski.json")) == sierpinski());
  EXPECT_THROW(load_space_file(data("missing.json")), Error);
}

TEST(Maps, RoundTrip) {
  auto x = std::make_shared<const FiniteSpace>(e3_tau());
  auto y = std::make_shared<const FiniteSpace>(sierpinski());
  const SpaceMap f(x, y, {1, 0, 1});
  const Json doc = map_to_json(f);
  EXPECT_EQ(doc.dump(), R"({"assignment":{"a":"b","b":"a","c":"b"}})");
  EXPECT_EQ(load_map(doc, x, y).assignment(), f.assignment());
  EXPECT_THROW(load_map(Json::parse(R"({"assignment":{"a":"b"}})"), x, y), Error);
  EXPECT_THROW(load_map(Json::parse(R"({"assignment":{"a":"q","b":"a","c":"a"}})"), x, y), Error);
  EXPECT_THROW(load_map(Json::parse(R"({"map":{}})"), x, y), Error);
}

TEST(Witness, RoundTrip) {
  const Witness w = witness_of(SpaceMap::identity(e3_tau(), e3_sigma()));
  const Json doc = witness_to_json(w);
  const Witness back = load_witness(doc);
  EXPECT_TRUE(*back.domain == *w.domain);
  EXPECT_TRUE(*back.codomain == *w.codomain);
  EXPECT_EQ(back.assignment, w.assignment);

  Witness space_only;
  space_only.domain = std::make_shared<const FiniteSpace>(sierpinski());
  EXPECT_FALSE(witness_to_json(space_only).contains("assignment"));
  EXPECT_FALSE(load_witness(witness_to_json(space_only)).has_map());
}

TEST(Report, JsonAndTable) {
  VerificationReport r;
  r.claim_id = "demo";
  r.statement = "a => b";
  r.n_max = 2;
  r.space_count = 6;
  r.map_count = 40;
  r.filtered = 7;
  r.verdict = Verdict::refuted;
  r.witness = witness_of(SpaceMap::identity(sierpinski(), sierpinski()));
  const Json doc = report_to_json(r);
  EXPECT_EQ(doc["claim"], "demo");
  EXPECT_EQ(doc["verdict"], "refuted");
  EXPECT_EQ(doc["instances"], 40);
  EXPECT_TRUE(doc["witness"].contains("assignment"));
  const std::string table = report_table(r);
  EXPECT_NE(table.find("verdict    refuted"), std::string::npos) << table;
  EXPECT_NE(table.find("f = a->a b->b"), std::string::npos) << table;
}

TEST(Catalog, RecordCounts) {
  EXPECT_EQ(build_catalog(0).records.size(), 1U);
  EXPECT_EQ(build_catalog(2).records.size(), 4U);
  EXPECT_EQ(build_catalog(3).records.size(), 29U);
  try {
    build_catalog(5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kTooLarge);
  }
}

TEST(Catalog, VectorsAreRecomputable) {
  const CatalogFile file = build_catalog(3);
  const auto spaces = enumerate_topologies(3);
  for (std::size_t i = 0; i < file.records.size(); ++i) {
    const CatalogRecord& r = file.records[i];
    EXPECT_TRUE(r.space == spaces[i]);
    EXPECT_EQ(r.vector.id, i);
    EXPECT_EQ(r.vector.properties, property_mask(spaces[i]));
    EXPECT_EQ(r.vector.fingerprints[0], family_fingerprint(3, spaces[i].opens()));
  }
  EXPECT_FALSE(first_stale_record(file).has_value());
}

TEST(Catalog, SerializationRoundTrip) {
  const CatalogFile file = build_catalog(3);
  const std::string text = serialize_catalog(file);
  EXPECT_EQ(text.substr(0, text.find('\n')), "ftop-catalog v1 n=3 records=29");
  const CatalogFile back = parse_catalog(text);
  ASSERT_EQ(back.records.size(), file.records.size());
  for (std::size_t i = 0; i < back.records.size(); ++i) {
    EXPECT_TRUE(back.records[i].space == file.records[i].space);
    EXPECT_EQ(back.records[i].vector, file.records[i].vector);
  }
  EXPECT_EQ(serialize_catalog(back), text);
  EXPECT_EQ(serialize_catalog(build_catalog(3)), text);
}

TEST(Catalog, StaleRecordsAreDetected) {
  CatalogFile file = build_catalog(2);
  file.records[2].vector.properties ^= 1U;
  EXPECT_EQ(first_stale_record(file), std::optional<std::size_t>(2));
  file = build_catalog(2);
  file.records[1].vector.fingerprints[5] += 1;
  EXPECT_EQ(first_stale_record(file), std::optional<std::size_t>(1));
}

TEST(Catalog, ParseErrors) {
  EXPECT_THROW(parse_catalog("nonsense\n"), Error);
  EXPECT_THROW(parse_catalog("ftop-catalog v2 n=0 records=0\n"), Error);
  EXPECT_THROW(parse_catalog("ftop-catalog v1 n=0 records=2\n"), Error);
  std::string text = serialize_catalog(build_catalog(1));
  text.replace(text.find("\"id\":0"), 6, "\"id\":\"x\"");
  EXPECT_THROW(parse_catalog(text), Error);
}

TEST(Catalog, WriteAndRead) {
  const auto path = std::filesystem::temp_directory_path() / "ftop_catalog_test.txt";
  const CatalogFile file = build_catalog(2);
  write_catalog(file, path.string());
  const CatalogFile back = read_catalog(path.string());
  EXPECT_EQ(serialize_catalog(back), serialize_catalog(file));
  std::filesystem::remove(path);
  try {
    write_catalog(file, "/nonexistent-dir/catalog.txt");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kWriteFailure);
  }
}

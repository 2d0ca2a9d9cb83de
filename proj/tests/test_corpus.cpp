// SPDX-License-Identifier: Apache-2.0
#include <filesystem>

#include "doctest.h"
#include "textreuse/corpus.hpp"
#include "textreuse/error.hpp"
#include "textreuse/synthbench.hpp"
#include "textreuse/tsv.hpp"

using namespace textreuse;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& name) : path(fs::temp_directory_path() / name) {
    fs::remove_all(path);
    fs::create_directories(path / "texts");
  }
  ~TempDir() { fs::remove_all(path); }
};

void write_doc(const fs::path& root, const std::string& id, const std::string& text) {
  write_file(root / "texts" / (id + ".txt"), text);
}

const std::string kHeader = "doc_id\tyear\tauthor\ttitle\tcollection\n";

}  // namespace

TEST_CASE("two valid documents") {
  TempDir dir("textreuse_corpus_two");
  write_file(dir.path / "metadata.tsv", kHeader + "a\t1700\tX\tT1\tC\nb\t1710\t\tT2\tC\n");
  write_doc(dir.path, "a", "Hello ſ world");
  write_doc(dir.path, "b", "Other");
  const Corpus c = ingest_corpus(dir.path);
  CHECK(c.size() == 2);
  CHECK(c.at("a").text.size() == 13);
  CHECK(c.at("b").meta.author.empty());
  CHECK(c.total_chars() == 18);
  CHECK(c.index_of("b") == 1u);
  CHECK(c.find("zzz") == nullptr);
  CHECK_THROWS_AS(c.at("zzz"), NotFound);
}

TEST_CASE("ingest errors") {
  TempDir dir("textreuse_corpus_errors");
  SUBCASE("duplicate id names the id") {
    write_file(dir.path / "metadata.tsv", kHeader + "a\t1700\tX\tT\tC\na\t1701\tY\tT\tC\n");
    write_doc(dir.path, "a", "text");
    try {
      ingest_corpus(dir.path);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(std::string(e.what()).find("a") != std::string::npos);
      CHECK(std::string(e.what()).find("duplicate") != std::string::npos);
    }
  }
  SUBCASE("missing text file") {
    write_file(dir.path / "metadata.tsv", kHeader + "a\t1700\tX\tT\tC\n");
    CHECK_THROWS_AS(ingest_corpus(dir.path), Error);
  }
  SUBCASE("invalid utf-8") {
    write_file(dir.path / "metadata.tsv", kHeader + "a\t1700\tX\tT\tC\n");
    write_doc(dir.path, "a", "bad \xff byte");
    CHECK_THROWS_AS(ingest_corpus(dir.path), Error);
  }
  SUBCASE("year out of range") {
    write_file(dir.path / "metadata.tsv", kHeader + "a\t999\tX\tT\tC\n");
    write_doc(dir.path, "a", "text");
    CHECK_THROWS_AS(ingest_corpus(dir.path), Error);
  }
  SUBCASE("malformed row reports its line") {
    write_file(dir.path / "metadata.tsv", kHeader + "a\t1700\tX\tT\tC\nb\t17x0\tX\tT\tC\n");
    write_doc(dir.path, "a", "text");
    write_doc(dir.path, "b", "text");
    try {
      ingest_corpus(dir.path);
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 3);
    }
  }
  SUBCASE("empty text") {
    write_file(dir.path / "metadata.tsv", kHeader + "a\t1700\tX\tT\tC\n");
    write_doc(dir.path, "a", "");
    CHECK_THROWS_AS(ingest_corpus(dir.path), Error);
  }
  SUBCASE("annotation beyond the text") {
    write_file(dir.path / "metadata.tsv", kHeader + "a\t1700\tX\tT\tC\n");
    write_doc(dir.path, "a", "text");
    fs::create_directories(dir.path / "annotations");
    write_file(dir.path / "annotations" / "a.tsv", "raw_position\tinserted_length\n9\t3\n");
    CHECK_THROWS_AS(ingest_corpus(dir.path), Error);
  }
}

TEST_CASE("fixture catalogue: row 5 metadata, page map and annotations") {
  const fs::path root = fs::path(TEXTREUSE_FIXTURES) / "catalogue";
  const Corpus c = ingest_corpus(root);
  const auto rows = parse_metadata(read_file(root / "metadata.tsv"), "metadata.tsv");
  REQUIRE(rows.size() >= 5);
  CHECK(c.size() == rows.size());
  CHECK(c.at(rows[4].doc_id).meta == rows[4]);
  const auto& annotated = c.at("1566600301");
  REQUIRE(annotated.shift_table);
  REQUIRE(annotated.page_map);
  CHECK(annotated.page_map->tokens().front().char_start == 0);
  CHECK(annotated.page_at(0) == 1);
  CHECK(annotated.page_at(annotated.text.size() - 1) > 1);
  const auto& plain = c.at("1649800202");
  CHECK_FALSE(plain.page_map);
  CHECK(plain.page_at(1799) == 1);
  CHECK(plain.page_at(1800) == 2);
  // Ingestion is deterministic.
  const Corpus again = ingest_corpus(root);
  for (std::size_t i = 0; i < c.size(); ++i) {
    CHECK(again[i].meta == c[i].meta);
    CHECK(again[i].text.size() == c[i].text.size());
  }
}

TEST_CASE("generated corpus of 100 documents matches the generator manifest") {
  GenSpec spec;
  spec.num_docs = 100;
  spec.doc_length_range = {2000, 4000};
  spec.num_plants = 30;
  spec.plant_length_range = {200, 600};
  spec.seed = 3;
  const auto gen = generate(spec);
  TempDir dir("textreuse_corpus_generated");
  gen.write(dir.path);
  const Corpus c = ingest_corpus(dir.path);
  CHECK(c.size() == 100);
  // Total from manifest.tsv, read independently of the generator object.
  std::size_t manifest_total = 0;
  read_tsv(read_file(dir.path / "manifest.tsv"), "manifest.tsv", "doc_id\tlength", [&](const auto& f, std::size_t line) {
    if (f[0] == "TOTAL") manifest_total = static_cast<std::size_t>(parse_int(f[1], "manifest", line, "length"));
  });
  CHECK(c.total_chars() == manifest_total);
  CHECK(c.total_chars() == gen.total_chars());
}

TEST_CASE("same-author rule") {
  DocMetadata a{"a", 1700, "Hume, David", "", ""};
  DocMetadata b{"b", 1700, "Hume, David", "", ""};
  DocMetadata anon1{"c", 1700, "", "", ""};
  DocMetadata anon2{"d", 1700, "", "", ""};
  CHECK(same_author(a, b));
  CHECK_FALSE(same_author(anon1, anon2));
  CHECK_FALSE(same_author(a, anon1));
}

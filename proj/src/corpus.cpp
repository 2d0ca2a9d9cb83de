// SPDX-License-Identifier: Apache-2.0
#include "textreuse/corpus.hpp"

#include <stdexcept>

#include "textreuse/error.hpp"
#include "textreuse/tsv.hpp"

namespace textreuse {

namespace fs = std::filesystem;

namespace {
constexpr std::string_view kMetadataHeader = "doc_id\tyear\tauthor\ttitle\tcollection";
}

int Document::page_at(std::size_t raw_off) const {
  if (page_map && !page_map->empty()) return page_map->page_at(raw_off);
  return synthetic_page(raw_off);
}

bool same_author(const DocMetadata& a, const DocMetadata& b) noexcept {
  return !a.author.empty() && a.author == b.author;
}

void Corpus::add(Document doc) {
  const auto& id = doc.meta.doc_id;
  if (id.empty()) throw Error("empty doc_id");
  if (by_id_.count(id)) throw Error("duplicate doc_id: " + id);
  if (doc.meta.year < kMinYear || doc.meta.year > kMaxYear) {
    throw Error("year out of range for " + id + ": " + std::to_string(doc.meta.year));
  }
  if (doc.text.empty()) throw Error("empty text for " + id);
  const std::size_t n = doc.text.size();
  if (doc.shift_table && doc.shift_table->raw_length() != n) {
    throw Error("annotation table length mismatch for " + id);
  }
  if (doc.page_map && !doc.page_map->empty() && doc.page_map->tokens().back().char_end > n) {
    throw Error("page map extends past text for " + id);
  }
  by_id_.emplace(id, docs_.size());
  docs_.push_back(std::move(doc));
}

const Document* Corpus::find(std::string_view doc_id) const {
  const auto it = by_id_.find(doc_id);
  return it == by_id_.end() ? nullptr : &docs_[it->second];
}

const Document& Corpus::at(std::string_view doc_id) const {
  if (const Document* d = find(doc_id)) return *d;
  throw NotFound("unknown document: " + std::string(doc_id));
}

std::optional<std::size_t> Corpus::index_of(std::string_view doc_id) const {
  const auto it = by_id_.find(doc_id);
  if (it == by_id_.end()) return std::nullopt;
  return it->second;
}

std::size_t Corpus::total_chars() const noexcept {
  std::size_t total = 0;
  for (const auto& d : docs_) total += d.text.size();
  return total;
}

std::vector<DocMetadata> parse_metadata(std::string_view tsv, std::string_view label) {
  std::vector<DocMetadata> rows;
  read_tsv(tsv, label, kMetadataHeader, [&](const auto& f, std::size_t line) {
    DocMetadata m;
    m.doc_id = std::string(f[0]);
    if (m.doc_id.empty()) throw ParseError(std::string(label), line, "empty doc_id");
    const auto year = parse_int(f[1], label, line, "year");
    if (year < kMinYear || year > kMaxYear) {
      throw ParseError(std::string(label), line, "year " + std::to_string(year) + " outside [1000, 2100]");
    }
    m.year = static_cast<int>(year);
    m.author = std::string(f[2]);
    m.title = std::string(f[3]);
    m.collection = std::string(f[4]);
    rows.push_back(std::move(m));
  });
  return rows;
}

std::string format_metadata(std::span<const DocMetadata> rows) {
  std::string out(kMetadataHeader);
  out += '\n';
  for (const auto& m : rows) {
    out += m.doc_id + '\t' + std::to_string(m.year) + '\t' + m.author + '\t' + m.title + '\t' + m.collection + '\n';
  }
  return out;
}

Corpus ingest_corpus(const fs::path& root) {
  const fs::path meta_path = root / "metadata.tsv";
  if (!fs::is_regular_file(meta_path)) throw Error("missing " + meta_path.string());
  const auto rows = parse_metadata(read_file(meta_path), meta_path.string());

  Corpus corpus;
  for (const auto& meta : rows) {
    if (corpus.find(meta.doc_id)) throw Error("duplicate doc_id: " + meta.doc_id);
    const fs::path text_path = root / "texts" / (meta.doc_id + ".txt");
    if (!fs::is_regular_file(text_path)) throw Error("missing text file for " + meta.doc_id + ": " + text_path.string());
    auto text = Utf8Text::from_utf8(read_file(text_path));
    if (!text) throw Error("text is not valid UTF-8: " + text_path.string());

    Document doc;
    doc.meta = meta;
    doc.text = std::move(*text);
    const std::size_t n = doc.text.size();

    const fs::path ann_path = root / "annotations" / (meta.doc_id + ".tsv");
    if (fs::is_regular_file(ann_path)) {
      doc.shift_table = parse_shift_table(read_file(ann_path), ann_path.string(), n);
    }
    const fs::path map_path = root / "pagemaps" / (meta.doc_id + ".tsv");
    if (fs::is_regular_file(map_path)) {
      PageMap map = parse_page_map(read_file(map_path), map_path.string(), n,
                                   doc.shift_table ? &*doc.shift_table : nullptr);
      if (!map.empty()) doc.page_map = std::move(map);
    }
    corpus.add(std::move(doc));
  }
  return corpus;
}

}  // namespace textreuse

// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "textreuse/offsetmap.hpp"
#include "textreuse/text.hpp"

namespace textreuse {

inline constexpr int kMinYear = 1000;
inline constexpr int kMaxYear = 2100;

struct DocMetadata {
  std::string doc_id;
  int year = 0;
  std::string author;
  std::string title;
  std::string collection;
  friend bool operator==(const DocMetadata&, const DocMetadata&) = default;
};

struct Document {
  DocMetadata meta;
  Utf8Text text;
  std::optional<OffsetShiftTable> shift_table;
  std::optional<PageMap> page_map;

  const std::string& id() const noexcept { return meta.doc_id; }

  /// Page of a raw offset: page map when present, else fixed-size synthetic pages.
  int page_at(std::size_t raw_off) const;
};

/// Two documents count as same-author only if both authors are non-empty
/// and byte-identical.
bool same_author(const DocMetadata& a, const DocMetadata& b) noexcept;

/// Immutable-after-build set of documents in ingestion order.
class Corpus {
 public:
  /// Validates document invariants; throws textreuse::Error on a duplicate
  /// id, a year outside [kMinYear, kMaxYear], empty text, or annotation and
  /// page-map data outside the text.
  void add(Document doc);

  std::size_t size() const noexcept { return docs_.size(); }
  std::span<const Document> documents() const noexcept { return docs_; }
  const Document& operator[](std::size_t i) const { return docs_[i]; }

  const Document* find(std::string_view doc_id) const;
  /// Throws NotFound.
  const Document& at(std::string_view doc_id) const;
  std::optional<std::size_t> index_of(std::string_view doc_id) const;

  std::size_t total_chars() const noexcept;

 private:
  std::vector<Document> docs_;
  std::map<std::string, std::size_t, std::less<>> by_id_;
};

/// Loads a corpus directory: metadata.tsv, texts/<id>.txt, and optional
/// annotations/<id>.tsv and pagemaps/<id>.tsv.
Corpus ingest_corpus(const std::filesystem::path& root);

std::vector<DocMetadata> parse_metadata(std::string_view tsv, std::string_view label);
std::string format_metadata(std::span<const DocMetadata> rows);

}  // namespace textreuse

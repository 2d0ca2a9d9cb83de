// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "textreuse/corpus.hpp"

namespace textreuse {

struct SearchResult {
  std::string doc_id;
  int year = 0;
  std::string author;
  std::string title;
  int score = 0;  // distinct query terms matched
  friend bool operator==(const SearchResult&, const SearchResult&) = default;
};

struct SearchOptions {
  std::size_t limit = 100;
  std::size_t min_prefix_length = 3;
  std::size_t min_fuzzy_length = 5;
  int max_edit_distance = 1;
};

/// Lowercased author + title tokens, split on whitespace and punctuation.
std::vector<std::u32string> tokenize_field(std::string_view text);
/// Lowercased whitespace-separated query terms, distinct, in first-seen order.
std::vector<std::u32string> split_query(std::string_view query);

/// Optimal string alignment distance (adjacent transpositions count 1).
std::size_t damerau_levenshtein(std::u32string_view a, std::u32string_view b);

bool term_matches(std::u32string_view term, std::u32string_view token, const SearchOptions& opts);

/// Pre-tokenized metadata of a corpus.
class MetadataIndex {
 public:
  explicit MetadataIndex(const Corpus& corpus);

  /// Ranked by score desc, year asc, doc_id asc; at most opts.limit rows.
  std::vector<SearchResult> search(std::string_view query, const SearchOptions& opts = {}) const;

 private:
  struct Entry {
    const DocMetadata* meta;
    std::vector<std::u32string> tokens;
  };
  std::vector<Entry> entries_;
};

std::vector<SearchResult> search(const Corpus& corpus, std::string_view query, const SearchOptions& opts = {});

enum class SortOrder { Asc, Desc };

struct SortKey {
  std::string column;
  SortOrder order = SortOrder::Asc;
};

/// Stable re-sort on one column (doc_id, year, author, title, score), so
/// rows that tie keep their previous relative order. When `previous` is
/// given the rows are first stably sorted by it. Throws
/// std::invalid_argument for an unknown column.
std::vector<SearchResult> resort(std::vector<SearchResult> results, std::string_view column, SortOrder order,
                                 const std::optional<SortKey>& previous = std::nullopt);

}  // namespace textreuse

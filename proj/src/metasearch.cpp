// SPDX-License-Identifier: Apache-2.0
#include "textreuse/metasearch.hpp"

#include <algorithm>
#include <stdexcept>

#include "textreuse/text.hpp"

namespace textreuse {

namespace {

std::u32string lossy_decode(std::string_view s) {
  if (auto d = decode_utf8(s)) return std::move(*d);
  // Invalid bytes become separators.
  std::u32string out;
  for (unsigned char c : s) out.push_back(c < 0x80 ? c : U' ');
  return out;
}

bool is_space(char32_t c) {
  return c == U' ' || c == U'\t' || c == U'\n' || c == U'\r' || c == U'\f' || c == U'\v' || c == 0xA0 ||
         c == 0x3000 || (c >= 0x2000 && c <= 0x200B);
}

}  // namespace

std::vector<std::u32string> tokenize_field(std::string_view text) {
  std::vector<std::u32string> tokens;
  std::u32string cur;
  for (char32_t c : lossy_decode(text)) {
    if (is_separator(c)) {
      if (!cur.empty()) tokens.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(fold_lower(c));
    }
  }
  if (!cur.empty()) tokens.push_back(std::move(cur));
  return tokens;
}

std::vector<std::u32string> split_query(std::string_view query) {
  std::vector<std::u32string> terms;
  std::u32string cur;
  auto flush = [&] {
    // Punctuation hugging a term ("Hume,") is not part of it.
    while (!cur.empty() && is_separator(cur.back())) cur.pop_back();
    std::size_t lead = 0;
    while (lead < cur.size() && is_separator(cur[lead])) ++lead;
    cur.erase(0, lead);
    if (!cur.empty() && std::find(terms.begin(), terms.end(), cur) == terms.end()) terms.push_back(cur);
    cur.clear();
  };
  for (char32_t c : lossy_decode(query)) {
    if (is_space(c)) {
      flush();
    } else {
      cur.push_back(fold_lower(c));
    }
  }
  flush();
  return terms;
}

std::size_t damerau_levenshtein(std::u32string_view a, std::u32string_view b) {
  const std::size_t n = a.size();
  const std::size_t m = b.size();
  std::vector<std::size_t> prev2(m + 1), prev(m + 1), cur(m + 1);
  for (std::size_t j = 0; j <= m; ++j) prev[j] = j;
  for (std::size_t i = 1; i <= n; ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= m; ++j) {
      const std::size_t cost = a[i - 1] == b[j - 1] ? 0 : 1;
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + cost});
      if (i > 1 && j > 1 && a[i - 1] == b[j - 2] && a[i - 2] == b[j - 1]) cur[j] = std::min(cur[j], prev2[j - 2] + 1);
    }
    std::swap(prev2, prev);
    std::swap(prev, cur);
  }
  return prev[m];
}

bool term_matches(std::u32string_view term, std::u32string_view token, const SearchOptions& opts) {
  if (term == token) return true;
  if (term.size() >= opts.min_prefix_length && token.size() > term.size() && token.substr(0, term.size()) == term) {
    return true;
  }
  if (term.size() >= opts.min_fuzzy_length && token.size() >= opts.min_fuzzy_length) {
    const std::size_t len_diff = term.size() > token.size() ? term.size() - token.size() : token.size() - term.size();
    const auto max_d = static_cast<std::size_t>(opts.max_edit_distance);
    if (len_diff <= max_d && damerau_levenshtein(term, token) <= max_d) return true;
  }
  return false;
}

MetadataIndex::MetadataIndex(const Corpus& corpus) {
  entries_.reserve(corpus.size());
  for (const Document& d : corpus.documents()) {
    Entry e{&d.meta, tokenize_field(d.meta.author)};
    for (auto& t : tokenize_field(d.meta.title)) e.tokens.push_back(std::move(t));
    std::sort(e.tokens.begin(), e.tokens.end());
    e.tokens.erase(std::unique(e.tokens.begin(), e.tokens.end()), e.tokens.end());
    entries_.push_back(std::move(e));
  }
}

std::vector<SearchResult> MetadataIndex::search(std::string_view query, const SearchOptions& opts) const {
  const auto terms = split_query(query);
  std::vector<SearchResult> results;
  if (terms.empty()) return results;
  for (const Entry& e : entries_) {
    int score = 0;
    for (const auto& term : terms) {
      const bool hit = std::any_of(e.tokens.begin(), e.tokens.end(),
                                   [&](const std::u32string& tok) { return term_matches(term, tok, opts); });
      score += hit;
    }
    if (score > 0) results.push_back({e.meta->doc_id, e.meta->year, e.meta->author, e.meta->title, score});
  }
  std::sort(results.begin(), results.end(), [](const SearchResult& a, const SearchResult& b) {
    if (a.score != b.score) return a.score > b.score;
    if (a.year != b.year) return a.year < b.year;
    return a.doc_id < b.doc_id;
  });
  if (results.size() > opts.limit) results.resize(opts.limit);
  return results;
}

std::vector<SearchResult> search(const Corpus& corpus, std::string_view query, const SearchOptions& opts) {
  return MetadataIndex(corpus).search(query, opts);
}

namespace {

int compare_on(const SearchResult& a, const SearchResult& b, std::string_view column) {
  auto cmp = [](const auto& x, const auto& y) { return x < y ? -1 : (y < x ? 1 : 0); };
  if (column == "doc_id") return cmp(a.doc_id, b.doc_id);
  if (column == "year") return cmp(a.year, b.year);
  if (column == "author") return cmp(a.author, b.author);
  if (column == "title") return cmp(a.title, b.title);
  if (column == "score") return cmp(a.score, b.score);
  throw std::invalid_argument("unknown sort column: " + std::string(column));
}

void stable_sort_on(std::vector<SearchResult>& rows, std::string_view column, SortOrder order) {
  if (rows.empty()) {
    SearchResult probe;
    compare_on(probe, probe, column);  // validates the column name
    return;
  }
  std::stable_sort(rows.begin(), rows.end(), [&](const SearchResult& a, const SearchResult& b) {
    const int c = compare_on(a, b, column);
    return order == SortOrder::Asc ? c < 0 : c > 0;
  });
}

}  // namespace

std::vector<SearchResult> resort(std::vector<SearchResult> results, std::string_view column, SortOrder order,
                                 const std::optional<SortKey>& previous) {
  if (previous) stable_sort_on(results, previous->column, previous->order);
  stable_sort_on(results, column, order);
  return results;
}

}  // namespace textreuse

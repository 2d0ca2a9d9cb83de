// SPDX-License-Identifier: Apache-2.0
#include "textreuse/offsetmap.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "textreuse/error.hpp"
#include "textreuse/tsv.hpp"

namespace textreuse {

OffsetShiftTable::OffsetShiftTable(std::vector<Insertion> insertions, std::size_t raw_length)
    : insertions_(std::move(insertions)), raw_length_(raw_length) {
  cumulative_.reserve(insertions_.size());
  std::size_t total = 0;
  for (std::size_t i = 0; i < insertions_.size(); ++i) {
    const Insertion& ins = insertions_[i];
    if (ins.inserted_length == 0) throw std::invalid_argument("insertion length must be positive");
    if (ins.raw_position > raw_length) throw std::invalid_argument("insertion beyond end of text");
    if (i > 0 && ins.raw_position <= insertions_[i - 1].raw_position) {
      throw std::invalid_argument("insertion positions must be strictly increasing");
    }
    total += ins.inserted_length;
    cumulative_.push_back(total);
  }
}

std::size_t OffsetShiftTable::raw_to_annotated(std::size_t raw_off) const {
  if (raw_off > raw_length_) throw std::out_of_range("raw offset beyond end of text");
  const auto it = std::upper_bound(insertions_.begin(), insertions_.end(), raw_off,
                                   [](std::size_t x, const Insertion& ins) { return x < ins.raw_position; });
  const auto n = static_cast<std::size_t>(it - insertions_.begin());
  return raw_off + (n == 0 ? 0 : cumulative_[n - 1]);
}

std::size_t OffsetShiftTable::annotated_to_raw(std::size_t ann_off) const {
  if (ann_off > annotated_length()) throw std::out_of_range("annotated offset beyond end of text");
  // Insertion i starts at annotated raw_position + (inserted before i).
  std::size_t lo = 0;
  std::size_t hi = insertions_.size();
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    const std::size_t before = mid == 0 ? 0 : cumulative_[mid - 1];
    if (insertions_[mid].raw_position + before <= ann_off) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  if (lo == 0) return ann_off;
  const std::size_t i = lo - 1;
  const std::size_t block_start = insertions_[i].raw_position + (i == 0 ? 0 : cumulative_[i - 1]);
  if (ann_off < block_start + insertions_[i].inserted_length) return insertions_[i].raw_position;
  return ann_off - cumulative_[i];
}

PageMap::PageMap(std::vector<PageToken> tokens) : tokens_(std::move(tokens)) {
  if (tokens_.empty()) throw std::invalid_argument("page map has no tokens");
  for (std::size_t i = 0; i < tokens_.size(); ++i) {
    const PageToken& t = tokens_[i];
    if (t.char_start >= t.char_end) throw std::invalid_argument("page token span is empty");
    if (t.page < 1) throw std::invalid_argument("page numbers start at 1");
    if (i > 0) {
      const PageToken& prev = tokens_[i - 1];
      if (t.char_start < prev.char_end) throw std::invalid_argument("page tokens overlap or are unsorted");
      if (t.page < prev.page) throw std::invalid_argument("page numbers decrease");
    }
  }
}

int PageMap::page_at(std::size_t raw_off) const {
  if (tokens_.empty()) return synthetic_page(raw_off);
  const auto it = std::upper_bound(tokens_.begin(), tokens_.end(), raw_off,
                                   [](std::size_t x, const PageToken& t) { return x < t.char_start; });
  if (it == tokens_.begin()) return tokens_.front().page;
  return std::prev(it)->page;
}

std::vector<PageToken> PageMap::highlight_regions(std::size_t start, std::size_t end) const {
  std::vector<PageToken> out;
  if (start >= end) return out;
  // Ends are sorted because tokens are disjoint and sorted.
  auto it = std::upper_bound(tokens_.begin(), tokens_.end(), start,
                             [](std::size_t x, const PageToken& t) { return x < t.char_end; });
  for (; it != tokens_.end() && it->char_start < end; ++it) out.push_back(*it);
  return out;
}

std::span<const PageToken> PageMap::page_tokens(int page) const {
  const auto first = std::lower_bound(tokens_.begin(), tokens_.end(), page,
                                      [](const PageToken& t, int p) { return t.page < p; });
  const auto last = std::upper_bound(first, tokens_.end(), page,
                                     [](int p, const PageToken& t) { return p < t.page; });
  return {first, last};
}

std::pair<std::size_t, std::size_t> PageMap::page_range(int page, std::size_t text_length) const {
  const auto on_page = page_tokens(page);
  if (on_page.empty()) return {0, 0};
  const std::size_t first_index = static_cast<std::size_t>(on_page.data() - tokens_.data());
  const std::size_t begin = first_index == 0 ? 0 : on_page.front().char_start;
  const std::size_t next = first_index + on_page.size();
  const std::size_t end = next < tokens_.size() ? tokens_[next].char_start : text_length;
  return {begin, std::max(begin, end)};
}

OffsetShiftTable parse_shift_table(std::string_view tsv, std::string_view label, std::size_t raw_length) {
  std::vector<Insertion> insertions;
  read_tsv(tsv, label, "raw_position\tinserted_length", [&](const auto& f, std::size_t line) {
    const auto pos = parse_int(f[0], label, line, "raw_position");
    const auto len = parse_int(f[1], label, line, "inserted_length");
    if (pos < 0 || static_cast<std::size_t>(pos) > raw_length) {
      throw ParseError(std::string(label), line, "raw_position outside text");
    }
    if (len <= 0) throw ParseError(std::string(label), line, "inserted_length must be positive");
    if (!insertions.empty() && static_cast<std::size_t>(pos) <= insertions.back().raw_position) {
      throw ParseError(std::string(label), line, "raw_position must be strictly increasing");
    }
    insertions.push_back({static_cast<std::size_t>(pos), static_cast<std::size_t>(len)});
  });
  return OffsetShiftTable(std::move(insertions), raw_length);
}

PageMap parse_page_map(std::string_view tsv, std::string_view label, std::size_t raw_length,
                       const OffsetShiftTable* shifts) {
  std::vector<PageToken> tokens;
  const std::size_t limit = shifts ? shifts->annotated_length() : raw_length;
  read_tsv(tsv, label, "char_start\tchar_end\tpage\tx\ty\tw\th", [&](const auto& f, std::size_t line) {
    const auto start = parse_int(f[0], label, line, "char_start");
    const auto end = parse_int(f[1], label, line, "char_end");
    const auto page = parse_int(f[2], label, line, "page");
    if (start < 0 || end <= start || static_cast<std::size_t>(end) > limit) {
      throw ParseError(std::string(label), line, "token span outside text");
    }
    if (page < 1) throw ParseError(std::string(label), line, "page must be >= 1");
    PageToken t;
    t.char_start = static_cast<std::size_t>(start);
    t.char_end = static_cast<std::size_t>(end);
    if (shifts) {
      t.char_start = shifts->annotated_to_raw(t.char_start);
      t.char_end = shifts->annotated_to_raw(t.char_end);
      if (t.char_start >= t.char_end) return;  // heading material only
    }
    t.page = static_cast<int>(page);
    t.box = {static_cast<int>(parse_int(f[3], label, line, "x")), static_cast<int>(parse_int(f[4], label, line, "y")),
             static_cast<int>(parse_int(f[5], label, line, "w")), static_cast<int>(parse_int(f[6], label, line, "h"))};
    if (!tokens.empty()) {
      if (t.char_start < tokens.back().char_end) throw ParseError(std::string(label), line, "tokens overlap or are unsorted");
      if (t.page < tokens.back().page) throw ParseError(std::string(label), line, "page numbers decrease");
    }
    tokens.push_back(t);
  });
  if (tokens.empty()) return PageMap();
  return PageMap(std::move(tokens));
}

}  // namespace textreuse

// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace textreuse {

struct Insertion {
  std::size_t raw_position = 0;
  std::size_t inserted_length = 0;
};

/// Translates between raw text offsets (the coordinate system of edges)
/// and offsets into an annotated copy of the text with extra material
/// (chapter headings and the like) inserted at known raw positions.
///
/// Raw offset x maps to x plus the lengths of all insertions at raw
/// positions <= x, so an insertion at p lands immediately before raw
/// character p. Annotated offsets inside an inserted block map back to the
/// block's raw position.
class OffsetShiftTable {
 public:
  OffsetShiftTable() = default;

  /// Throws std::invalid_argument unless positions are strictly increasing,
  /// within [0, raw_length], and every length is positive.
  OffsetShiftTable(std::vector<Insertion> insertions, std::size_t raw_length);

  std::span<const Insertion> insertions() const noexcept { return insertions_; }
  std::size_t raw_length() const noexcept { return raw_length_; }
  std::size_t annotated_length() const noexcept { return raw_length_ + total_inserted(); }

  /// Throws std::out_of_range for raw_off > raw_length().
  std::size_t raw_to_annotated(std::size_t raw_off) const;
  /// Throws std::out_of_range for ann_off > annotated_length().
  std::size_t annotated_to_raw(std::size_t ann_off) const;

 private:
  std::size_t total_inserted() const noexcept { return cumulative_.empty() ? 0 : cumulative_.back(); }

  std::vector<Insertion> insertions_;
  // cumulative_[i] = total inserted length of insertions_[0..i].
  std::vector<std::size_t> cumulative_;
  std::size_t raw_length_ = 0;
};

struct Box {
  int x = 0;
  int y = 0;
  int w = 0;
  int h = 0;
  friend bool operator==(const Box&, const Box&) = default;
};

struct PageToken {
  std::size_t char_start = 0;
  std::size_t char_end = 0;
  int page = 1;
  Box box;
  friend bool operator==(const PageToken&, const PageToken&) = default;
};

/// Token-level page layout of a document in raw offsets.
class PageMap {
 public:
  PageMap() = default;

  /// Tokens must be non-empty spans, sorted, disjoint, on pages >= 1 that
  /// never decrease. Throws std::invalid_argument otherwise, or when empty.
  explicit PageMap(std::vector<PageToken> tokens);

  std::span<const PageToken> tokens() const noexcept { return tokens_; }
  bool empty() const noexcept { return tokens_.empty(); }

  /// Page of the token containing raw_off, else of the nearest preceding
  /// token, else of the first token.
  int page_at(std::size_t raw_off) const;

  /// Tokens overlapping [start, end) in document order.
  std::vector<PageToken> highlight_regions(std::size_t start, std::size_t end) const;

  /// Raw range covered by `page`: from its first token's start (0 for the
  /// first page) to the next page's first token start (or text_length).
  /// Returns an empty range when no token is on `page`.
  std::pair<std::size_t, std::size_t> page_range(int page, std::size_t text_length) const;

  /// Tokens on `page`.
  std::span<const PageToken> page_tokens(int page) const;

 private:
  std::vector<PageToken> tokens_;
};

/// Page size used when a document has no page map.
inline constexpr std::size_t kSyntheticPageChars = 1800;

inline int synthetic_page(std::size_t raw_off) noexcept {
  return 1 + static_cast<int>(raw_off / kSyntheticPageChars);
}

OffsetShiftTable parse_shift_table(std::string_view tsv, std::string_view label, std::size_t raw_length);

/// Parses a page map file. With `shifts`, the file's offsets are taken to be
/// annotated-text offsets and are translated to raw offsets; tokens that fall
/// entirely inside inserted material are dropped. An empty file yields an
/// empty PageMap.
PageMap parse_page_map(std::string_view tsv, std::string_view label, std::size_t raw_length,
                       const OffsetShiftTable* shifts);

}  // namespace textreuse

// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace textreuse {

// Decodes strict UTF-8 (no overlongs, no surrogates). Returns nullopt on
// any invalid sequence.
std::optional<std::u32string> decode_utf8(std::string_view bytes);

void append_utf8(std::string& out, char32_t cp);
std::string encode_utf8(std::u32string_view cps);

// Lowercase, diacritic-stripping fold onto [a-z0-9]. Covers ASCII,
// Latin-1, the long s, and the oe/ae ligatures. Returns 0 for anything
// that is not a letter or digit in that range.
char32_t fold_alnum(char32_t cp) noexcept;

// Simple lowercase for metadata matching: ASCII and Latin-1 letters are
// folded like fold_alnum, other code points pass through unchanged.
char32_t fold_lower(char32_t cp) noexcept;

// True for code points treated as token separators in metadata text.
bool is_separator(char32_t cp) noexcept;

/// UTF-8 text addressed by Unicode scalar value offsets.
///
/// All offsets exchanged between components (edge spans, page maps,
/// annotation tables) are code point offsets. Non-ASCII texts keep a byte
/// checkpoint every 64 code points so slicing stays cheap.
class Utf8Text {
 public:
  Utf8Text() = default;

  /// nullopt when `bytes` is not valid UTF-8.
  static std::optional<Utf8Text> from_utf8(std::string bytes);

  std::size_t size() const noexcept { return length_; }
  bool empty() const noexcept { return length_ == 0; }
  const std::string& bytes() const noexcept { return bytes_; }

  /// Code points [begin, end) as UTF-8. Bounds are clamped to size().
  std::string slice(std::size_t begin, std::size_t end) const;
  std::u32string codepoints() const;
  std::u32string codepoints(std::size_t begin, std::size_t end) const;

 private:
  std::size_t byte_offset(std::size_t cp) const;

  std::string bytes_;
  std::size_t length_ = 0;
  std::vector<std::uint32_t> checkpoints_;
};

}  // namespace textreuse

// SPDX-License-Identifier: Apache-2.0
#include "textreuse/text.hpp"

#include <algorithm>

namespace textreuse {

namespace {

constexpr std::size_t kCheckpointStride = 64;

// Length of the sequence starting with `lead`, 0 if `lead` cannot start one.
int sequence_length(unsigned char lead) {
  if (lead < 0x80) return 1;
  if (lead >= 0xC2 && lead <= 0xDF) return 2;
  if (lead >= 0xE0 && lead <= 0xEF) return 3;
  if (lead >= 0xF0 && lead <= 0xF4) return 4;
  return 0;
}

// Decodes one scalar at `pos`; returns bytes consumed or 0 when invalid.
int decode_one(std::string_view s, std::size_t pos, char32_t& out) {
  const auto lead = static_cast<unsigned char>(s[pos]);
  const int len = sequence_length(lead);
  if (len == 0 || pos + len > s.size()) return 0;
  if (len == 1) {
    out = lead;
    return 1;
  }
  char32_t cp = lead & (0x7F >> len);
  for (int i = 1; i < len; ++i) {
    const auto c = static_cast<unsigned char>(s[pos + i]);
    if ((c & 0xC0) != 0x80) return 0;
    cp = (cp << 6) | (c & 0x3F);
  }
  if ((len == 3 && cp < 0x800) || (len == 4 && (cp < 0x10000 || cp > 0x10FFFF))) return 0;
  if (cp >= 0xD800 && cp <= 0xDFFF) return 0;
  out = cp;
  return len;
}

// Latin-1 Supplement letters U+00C0..U+00FF folded to ASCII; 0 for × and ÷.
constexpr char kLatin1Fold[] =
    "aaaaaaaceeeeiiii"  // C0-CF
    "dnooooo\0ouuuuyts"  // D0-DF
    "aaaaaaaceeeeiiii"  // E0-EF
    "dnooooo\0ouuuuyty";  // F0-FF

}  // namespace

std::optional<std::u32string> decode_utf8(std::string_view bytes) {
  std::u32string out;
  out.reserve(bytes.size());
  for (std::size_t pos = 0; pos < bytes.size();) {
    char32_t cp = 0;
    const int n = decode_one(bytes, pos, cp);
    if (n == 0) return std::nullopt;
    out.push_back(cp);
    pos += n;
  }
  return out;
}

void append_utf8(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

std::string encode_utf8(std::u32string_view cps) {
  std::string out;
  out.reserve(cps.size());
  for (char32_t cp : cps) append_utf8(out, cp);
  return out;
}

char32_t fold_alnum(char32_t cp) noexcept {
  if (cp < 0x80) {
    if (cp >= 'a' && cp <= 'z') return cp;
    if (cp >= 'A' && cp <= 'Z') return cp - 'A' + 'a';
    if (cp >= '0' && cp <= '9') return cp;
    return 0;
  }
  if (cp >= 0xC0 && cp <= 0xFF) return static_cast<unsigned char>(kLatin1Fold[cp - 0xC0]);
  switch (cp) {
    case 0x017F:  // long s
      return 's';
    case 0x0152:
    case 0x0153:
      return 'o';
    default:
      return 0;
  }
}

char32_t fold_lower(char32_t cp) noexcept {
  if (const char32_t f = fold_alnum(cp)) return f;
  return cp;
}

bool is_separator(char32_t cp) noexcept {
  if (cp < 0x80) return fold_alnum(cp) == 0;
  if (cp <= 0xBF) return true;  // C1 controls, NBSP, Latin-1 punctuation
  if (cp == 0xD7 || cp == 0xF7) return true;
  if (cp >= 0x2000 && cp <= 0x206F) return true;  // general punctuation
  if (cp >= 0x3000 && cp <= 0x303F) return true;
  return cp == 0xFEFF;
}

std::optional<Utf8Text> Utf8Text::from_utf8(std::string bytes) {
  Utf8Text t;
  const bool ascii = std::all_of(bytes.begin(), bytes.end(),
                                 [](char c) { return static_cast<unsigned char>(c) < 0x80; });
  if (ascii) {
    t.length_ = bytes.size();
    t.bytes_ = std::move(bytes);
    return t;
  }
  std::size_t count = 0;
  for (std::size_t pos = 0; pos < bytes.size();) {
    char32_t cp = 0;
    const int n = decode_one(bytes, pos, cp);
    if (n == 0) return std::nullopt;
    if (count % kCheckpointStride == 0) t.checkpoints_.push_back(static_cast<std::uint32_t>(pos));
    ++count;
    pos += n;
  }
  t.length_ = count;
  t.bytes_ = std::move(bytes);
  return t;
}

std::size_t Utf8Text::byte_offset(std::size_t cp) const {
  if (checkpoints_.empty() || cp >= length_) return cp >= length_ ? bytes_.size() : cp;
  std::size_t pos = checkpoints_[cp / kCheckpointStride];
  for (std::size_t i = cp % kCheckpointStride; i > 0; --i) {
    pos += sequence_length(static_cast<unsigned char>(bytes_[pos]));
  }
  return pos;
}

std::string Utf8Text::slice(std::size_t begin, std::size_t end) const {
  end = std::min(end, length_);
  if (begin >= end) return {};
  const std::size_t b = byte_offset(begin);
  return bytes_.substr(b, byte_offset(end) - b);
}

std::u32string Utf8Text::codepoints() const { return codepoints(0, length_); }

std::u32string Utf8Text::codepoints(std::size_t begin, std::size_t end) const {
  end = std::min(end, length_);
  if (begin >= end) return {};
  const std::size_t b = byte_offset(begin);
  // Valid by construction.
  return *decode_utf8(std::string_view(bytes_).substr(b, byte_offset(end) - b));
}

}  // namespace textreuse

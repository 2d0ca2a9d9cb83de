// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "textreuse/corpus.hpp"
#include "textreuse/edge.hpp"

namespace textreuse {

/// Noise-tolerant view of a raw text: lowercase [a-z0-9] with every run of
/// other characters collapsed to one space and leading/trailing runs
/// dropped. to_raw[i] is the raw offset that produced chars[i].
struct NormalizedText {
  std::string chars;
  std::vector<std::uint32_t> to_raw;

  std::size_t size() const noexcept { return chars.size(); }
};

NormalizedText normalize(std::u32string_view raw);

inline constexpr int kMinSeedLength = 4;
inline constexpr int kMaxSeedLength = 12;  // 37^12 < 2^64

/// Sorted k-gram -> positions index over a normalized text.
class KmerIndex {
 public:
  KmerIndex() = default;
  /// Throws std::invalid_argument for k outside [kMinSeedLength, kMaxSeedLength].
  KmerIndex(const NormalizedText& doc, int k);

  int k() const noexcept { return k_; }
  bool empty() const noexcept { return codes_.empty(); }
  std::size_t distinct_grams() const noexcept { return codes_.size(); }
  std::size_t total_positions() const noexcept { return positions_.size(); }

  /// Sorted start positions of `gram`; empty when absent or of the wrong length.
  std::span<const std::uint32_t> positions(std::string_view gram) const;

  std::span<const std::uint64_t> codes() const noexcept { return codes_; }
  std::span<const std::uint32_t> positions_at(std::size_t code_index) const;
  std::span<const std::uint32_t> positions_of_code(std::uint64_t code) const;

  /// Exact base-37 code of a k-gram of normalized characters.
  static std::uint64_t encode(std::string_view gram);

 private:
  int k_ = 0;
  std::vector<std::uint64_t> codes_;
  std::vector<std::uint32_t> offsets_;  // size codes_.size() + 1
  std::vector<std::uint32_t> positions_;
};

inline KmerIndex build_kmer_index(const NormalizedText& doc, int k) { return KmerIndex(doc, k); }

struct SeedHit {
  std::uint32_t q_pos = 0;
  std::uint32_t t_pos = 0;
  int k = 0;

  std::int64_t diagonal() const noexcept { return std::int64_t{t_pos} - std::int64_t{q_pos}; }
  friend bool operator==(const SeedHit&, const SeedHit&) = default;
};

struct AlignParams {
  int k = 10;
  int match = 2;
  int mismatch = -2;
  int gap = -3;
  int band = 16;
  int x_drop = 25;
  std::int64_t min_align_length = 120;
  double min_positives = 70.0;
  std::size_t max_seed_occurrences = 1000;  // repeat masking
  double dedup_overlap = 0.9;
};

/// Local alignment in normalized coordinates.
struct RawAlignment {
  std::size_t q_start = 0;
  std::size_t q_end = 0;
  std::size_t t_start = 0;
  std::size_t t_end = 0;
  int score = 0;
  std::int64_t columns = 0;
  std::int64_t identities = 0;

  double positives_percent() const noexcept {
    return columns == 0 ? 0.0 : 100.0 * static_cast<double>(identities) / static_cast<double>(columns);
  }
};

/// All (q_pos, t_pos) pairs sharing a k-gram, sorted by diagonal then q_pos.
/// Grams occurring more than `max_occurrences` times in the target are skipped.
std::vector<SeedHit> find_seeds(const NormalizedText& query, const KmerIndex& target_index, int k,
                                std::size_t max_occurrences = 1000);
/// Same result as the text overload, by merging two indexes.
std::vector<SeedHit> find_seeds(const KmerIndex& query_index, const KmerIndex& target_index,
                                std::size_t max_occurrences = 1000);

/// Banded X-drop extension in both directions from a seed, without
/// applying the length and identity thresholds.
RawAlignment extend_seed_unfiltered(const NormalizedText& query, const NormalizedText& target,
                                    const SeedHit& seed, const AlignParams& params);

/// As above; nullopt when the alignment is shorter than
/// params.min_align_length columns or below params.min_positives.
std::optional<RawAlignment> extend_seed(const NormalizedText& query, const NormalizedText& target,
                                        const SeedHit& seed, const AlignParams& params);

bool passes_thresholds(const RawAlignment& a, const AlignParams& params) noexcept;

/// Seeds, greedy non-redundant extension, and near-duplicate removal over
/// two normalized texts. Results are sorted by (q_start, t_start).
std::vector<RawAlignment> align_texts(const NormalizedText& query, const KmerIndex& query_index,
                                      const NormalizedText& target, const KmerIndex& target_index,
                                      const AlignParams& params);
std::vector<RawAlignment> align_texts(const NormalizedText& query, const NormalizedText& target,
                                      const AlignParams& params);

/// A document with its normalized text and seed index precomputed.
struct PreparedDocument {
  const Document* doc = nullptr;
  NormalizedText text;
  KmerIndex index;
};

PreparedDocument prepare_document(const Document& doc, const AlignParams& params);

/// Edges between two prepared documents, canonical orientation and order.
std::vector<Edge> detect_prepared(const PreparedDocument& a, const PreparedDocument& b,
                                  const AlignParams& params);

/// Throws std::invalid_argument when both documents share an id.
std::vector<Edge> detect_pair(const Document& a, const Document& b, const AlignParams& params);

/// All unordered document pairs. Output is canonically sorted and
/// independent of `threads`; edge_ids are left at 0.
std::vector<Edge> detect_corpus(const Corpus& corpus, const AlignParams& params, unsigned threads = 1);

}  // namespace textreuse

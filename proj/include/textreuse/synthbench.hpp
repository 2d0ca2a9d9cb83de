// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "textreuse/corpus.hpp"
#include "textreuse/edge.hpp"
#include "textreuse/error.hpp"
#include "textreuse/offsetmap.hpp"

namespace textreuse {

struct CliqueSpec {
  int size = 0;
  int passage_length = 0;
};

/// Parameters of a synthetic corpus with planted reuse.
struct GenSpec {
  int num_docs = 100;
  std::pair<int, int> doc_length_range{10000, 30000};
  int num_plants = 200;
  std::pair<int, int> plant_length_range{200, 2000};
  double noise_rate = 0.05;
  std::vector<CliqueSpec> clique_specs;
  std::uint64_t seed = 42;
  /// Path of the text the background model is trained on; empty uses the
  /// built-in sample.
  std::string source_text;
  int copies_per_plant = 2;
  /// When > 0, the second copy of every ordinary plant gets a run of this
  /// many random letters written over its middle.
  int burst_length = 0;
  std::size_t page_chars = 1800;
  double annotated_fraction = 0.2;
  std::pair<int, int> year_range{1650, 1800};

  /// Throws std::invalid_argument naming the first bad field.
  void validate() const;
};

/// Reads a GenSpec from a flat TOML file (key = value; integers, reals,
/// strings, booleans and nested arrays). `cliques = [[size, length], ...]`.
/// Throws ParseError on syntax or unknown keys, std::invalid_argument from
/// GenSpec::validate().
GenSpec parse_gen_spec(std::string_view toml, std::string_view label);
GenSpec read_gen_spec(const std::filesystem::path& path);

class GenerationError : public Error {
 public:
  using Error::Error;
};

struct Placement {
  std::string doc_id;
  std::size_t start = 0;
  std::size_t end = 0;
};

struct PlantTruth {
  int plant_id = 0;
  std::size_t length = 0;
  std::uint64_t text_hash = 0;  // FNV-1a of the clean passage (UTF-8)
  bool clique = false;
  std::vector<Placement> placements;
};

struct GroundTruth {
  std::vector<PlantTruth> plants;
  std::vector<std::string> doc_ids;
};

struct GeneratedDoc {
  DocMetadata meta;
  std::u32string text;
  std::vector<Insertion> insertions;
  std::vector<PageToken> tokens;  // raw offsets
};

struct GeneratedCorpus {
  std::vector<GeneratedDoc> docs;
  GroundTruth truth;

  std::size_t total_chars() const;
  /// Same corpus as write() followed by ingest_corpus().
  Corpus to_corpus() const;
  /// Writes metadata.tsv, texts/, pagemaps/, annotations/, truth.tsv,
  /// plants.tsv and manifest.tsv. Page maps of annotated documents are
  /// written in annotated offsets.
  void write(const std::filesystem::path& dir) const;
};

/// Character trigram sampler with a little unigram smoothing so output
/// does not reproduce long stretches of the training text.
class TrigramModel {
 public:
  explicit TrigramModel(std::u32string_view training);
  std::u32string sample(std::size_t length, std::mt19937_64& rng);

 private:
  std::u32string training_;
  std::vector<std::pair<std::uint64_t, std::vector<char32_t>>> contexts_;  // sorted by key
  char32_t c1_ = U' ';
  char32_t c2_ = U' ';
  bool started_ = false;
};

/// OCR-style corruption: substitutions drawn partly from a confusion set
/// (s/f, e/c, rn/m, ...), insertions and deletions, at `rate` per character.
std::u32string apply_noise(std::u32string_view clean, double rate, std::mt19937_64& rng);

std::string_view builtin_source_text();

/// Deterministic for a fixed spec. Throws GenerationError when plants
/// cannot be placed without overlap.
GeneratedCorpus generate(const GenSpec& spec);

std::string format_truth(const GroundTruth& truth);
/// Reads truth.tsv; document ids come from metadata.tsv in the same
/// directory when present, otherwise from the truth rows.
GroundTruth read_truth(const std::filesystem::path& truth_tsv);
GroundTruth parse_truth(std::string_view tsv, std::string_view label);

struct PlantHits {
  int plant_id = 0;
  std::size_t pairs = 0;
  std::size_t recalled = 0;
};

struct EvalReport {
  double recall = 0.0;
  double precision = 1.0;
  bool zero_edges = false;  // precision is reported as 1.0 when there are no edges
  std::size_t truth_pairs = 0;
  std::size_t recalled_pairs = 0;
  std::size_t edge_count = 0;
  std::size_t true_positive_edges = 0;
  std::vector<PlantHits> per_plant;
};

/// A truth pair (two placements of one plant) is recalled when an edge on
/// the same two documents overlaps both placements with IoU >= threshold;
/// an edge is a true positive when it recalls some truth pair. Throws
/// Error for edges naming documents outside the truth corpus.
EvalReport evaluate(std::span<const Edge> edges, const GroundTruth& truth, double iou_threshold = 0.5);

std::string format_eval_tsv(const EvalReport& report);
std::string format_eval_summary(const EvalReport& report);

std::uint64_t fnv1a(std::string_view bytes) noexcept;

}  // namespace textreuse

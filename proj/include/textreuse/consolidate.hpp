// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "textreuse/corpus.hpp"
#include "textreuse/edge.hpp"

namespace textreuse {

struct DefragParams {
  std::int64_t gap_limit = 180;          // G
  std::int64_t diagonal_limit = 80;      // D
  std::int64_t overlap_tolerance = 50;   // largest negative gap still merged
};

/// Merges fragments of one reuse instance broken apart by noise.
///
/// Two edges on the same document pair merge when the gap between their
/// spans lies in [-overlap_tolerance, gap_limit] on both sides and their
/// diagonals (t2_start - t1_start) differ by at most diagonal_limit. The
/// merged edge takes span hulls, summed align_length and the
/// length-weighted mean positives. Repeats until nothing merges. Input
/// must be canonical; output is canonically sorted with edge_ids 1..n.
std::vector<Edge> defragment(std::span<const Edge> edges, const DefragParams& params = {});

bool mergeable(const Edge& a, const Edge& b, const DefragParams& params) noexcept;
Edge merge_edges(const Edge& a, const Edge& b);

struct Passage {
  std::int64_t passage_id = 0;
  std::string doc_id;
  std::size_t start = 0;
  std::size_t end = 0;
  std::vector<std::int64_t> member_edge_ids;
};

struct PassageGraph {
  std::vector<Passage> passages;  // passage_id = index + 1
  /// Passage id pairs (lower id first) linked by at least one edge, sorted, unique.
  std::vector<std::pair<std::int64_t, std::int64_t>> links;

  const Passage& passage(std::int64_t id) const { return passages.at(static_cast<std::size_t>(id - 1)); }
};

/// Unifies edge sides in the same document whose spans overlap by at least
/// `overlap_frac` of the shorter span. Edges with edge_id 0 are numbered by
/// position (index + 1).
PassageGraph build_passages(std::span<const Edge> edges, double overlap_frac = 0.5);

struct Cluster {
  std::int64_t cluster_id = 0;
  std::int64_t source = 0;          // passage id
  std::vector<std::int64_t> sinks;  // passage ids, ascending
};

using YearLookup = std::function<int(std::string_view doc_id)>;

/// Connected components of the passage links, each reduced to a star from
/// its earliest passage (year, then doc_id, then start). Singleton
/// components are dropped. Clusters are numbered by ascending source id.
std::vector<Cluster> first_source(const PassageGraph& graph, const YearLookup& year_of);
std::vector<Cluster> first_source(const PassageGraph& graph, const Corpus& corpus);

std::string format_passages(std::span<const Passage> passages);
std::string format_clusters(std::span<const Cluster> clusters);
std::vector<Passage> parse_passages(std::string_view tsv, std::string_view label);
/// Rebuilds clusters from star-edge rows; cluster ids must be contiguous per cluster.
std::vector<Cluster> parse_clusters(std::string_view tsv, std::string_view label);

}  // namespace textreuse

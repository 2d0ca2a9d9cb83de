// SPDX-License-Identifier: Apache-2.0
#include "textreuse/edgestore.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <tuple>

#include "textreuse/error.hpp"
#include "textreuse/tsv.hpp"

namespace textreuse {

std::optional<Direction> parse_direction(std::string_view s) {
  if (s == "in") return Direction::In;
  if (s == "out") return Direction::Out;
  if (s == "both") return Direction::Both;
  return std::nullopt;
}

std::string_view to_string(Direction d) {
  switch (d) {
    case Direction::In:
      return "in";
    case Direction::Out:
      return "out";
    case Direction::Both:
      return "both";
  }
  return "out";
}

EdgeStore::EdgeStore(std::shared_ptr<const Corpus> corpus, std::vector<Edge> edges) : corpus_(std::move(corpus)) {
  const Corpus& c = *corpus_;
  edges_.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    const auto d1 = c.index_of(e.t1_id);
    const auto d2 = c.index_of(e.t2_id);
    if (!d1) throw Error("edge " + std::to_string(i + 1) + ": unknown document " + e.t1_id);
    if (!d2) throw Error("edge " + std::to_string(i + 1) + ": unknown document " + e.t2_id);
    if (*d1 == *d2) throw Error("edge " + std::to_string(i + 1) + ": links a document to itself");
    if (e.t1_start >= e.t1_end || e.t1_end > c[*d1].text.size() || e.t2_start >= e.t2_end ||
        e.t2_end > c[*d2].text.size()) {
      throw Error("edge " + std::to_string(i + 1) + ": span outside document text");
    }
    edges_.push_back({e.edge_id != 0 ? e.edge_id : static_cast<std::int64_t>(i) + 1, static_cast<std::uint32_t>(*d1),
                      static_cast<std::uint32_t>(*d2), e.t1_start, e.t1_end, e.t2_start, e.t2_end, e.align_length,
                      e.positives_percent});
  }
  std::sort(edges_.begin(), edges_.end(), [](const StoredEdge& a, const StoredEdge& b) { return a.edge_id < b.edge_id; });
  for (std::size_t i = 1; i < edges_.size(); ++i) {
    if (edges_[i].edge_id == edges_[i - 1].edge_id) throw Error("duplicate edge_id " + std::to_string(edges_[i].edge_id));
  }

  // Rank documents by id so adjacency sorting avoids string compares.
  const std::size_t n = c.size();
  std::vector<std::uint32_t> by_name(n);
  std::iota(by_name.begin(), by_name.end(), 0u);
  std::sort(by_name.begin(), by_name.end(), [&](std::uint32_t a, std::uint32_t b) { return c[a].id() < c[b].id(); });
  std::vector<std::uint32_t> name_rank(n);
  for (std::uint32_t r = 0; r < n; ++r) name_rank[by_name[r]] = r;

  adj_offsets_.assign(n + 1, 0);
  for (const auto& e : edges_) {
    ++adj_offsets_[e.doc1 + 1];
    ++adj_offsets_[e.doc2 + 1];
  }
  for (std::size_t i = 0; i < n; ++i) adj_offsets_[i + 1] += adj_offsets_[i];
  adj_edges_.resize(adj_offsets_[n]);
  std::vector<std::uint32_t> fill(adj_offsets_.begin(), adj_offsets_.end() - 1);
  for (std::uint32_t i = 0; i < edges_.size(); ++i) {
    adj_edges_[fill[edges_[i].doc1]++] = i;
    adj_edges_[fill[edges_[i].doc2]++] = i;
  }
  for (std::uint32_t d = 0; d < n; ++d) {
    auto key = [&](std::uint32_t idx) {
      const StoredEdge& e = edges_[idx];
      const bool first = e.doc1 == d;
      const std::uint32_t other = first ? e.doc2 : e.doc1;
      return std::make_tuple(c[other].meta.year, name_rank[other], first ? e.start1 : e.start2, e.edge_id);
    };
    std::sort(adj_edges_.begin() + adj_offsets_[d], adj_edges_.begin() + adj_offsets_[d + 1],
              [&](std::uint32_t a, std::uint32_t b) { return key(a) < key(b); });
  }
}

EdgeStore EdgeStore::load(const std::string& path, std::shared_ptr<const Corpus> corpus) {
  std::vector<std::size_t> lines;
  auto edges = parse_edges(read_file(path), path, &lines);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (const std::string* id : {&edges[i].t1_id, &edges[i].t2_id}) {
      if (!corpus->find(*id)) throw ParseError(path, lines[i], "unknown doc_id " + *id);
    }
  }
  return EdgeStore(std::move(corpus), std::move(edges));
}

const EdgeStore::StoredEdge* EdgeStore::find(std::int64_t edge_id) const {
  const auto it = std::lower_bound(edges_.begin(), edges_.end(), edge_id,
                                   [](const StoredEdge& e, std::int64_t id) { return e.edge_id < id; });
  return it != edges_.end() && it->edge_id == edge_id ? &*it : nullptr;
}

Edge EdgeStore::edge(const StoredEdge& e) const {
  const Corpus& c = *corpus_;
  return Edge{e.edge_id, c[e.doc1].id(), e.start1, e.end1, c[e.doc2].id(), e.start2, e.end2, e.align_length,
              e.positives_percent};
}

std::vector<std::int64_t> EdgeStore::edges_of(std::string_view doc_id) const {
  const auto d = corpus_->index_of(doc_id);
  if (!d) throw NotFound("unknown document: " + std::string(doc_id));
  std::vector<std::int64_t> ids;
  for (std::uint32_t i = adj_offsets_[*d]; i < adj_offsets_[*d + 1]; ++i) ids.push_back(edges_[adj_edges_[i]].edge_id);
  return ids;
}

bool EdgeStore::matches(const StoredEdge& e, std::uint32_t primary, const EdgeQuery& q) const {
  const Corpus& c = *corpus_;
  const std::uint32_t other = e.doc1 == primary ? e.doc2 : e.doc1;
  const DocMetadata& pm = c[primary].meta;
  const DocMetadata& om = c[other].meta;
  if (q.direction == Direction::Out && om.year < pm.year) return false;
  if (q.direction == Direction::In && om.year > pm.year) return false;
  if (q.year_from && om.year < *q.year_from) return false;
  if (q.year_to && om.year > *q.year_to) return false;
  if (q.exclude_same_author && same_author(pm, om)) return false;
  return true;
}

EnrichedEdge EdgeStore::enrich(const StoredEdge& e, std::uint32_t primary) const {
  const Corpus& c = *corpus_;
  const bool first = e.doc1 == primary;
  const Document& p = c[primary];
  const Document& o = c[first ? e.doc2 : e.doc1];
  EnrichedEdge out;
  out.edge_id = e.edge_id;
  out.primary_id = p.id();
  out.primary_start = first ? e.start1 : e.start2;
  out.primary_end = first ? e.end1 : e.end2;
  out.other_id = o.id();
  out.other_start = first ? e.start2 : e.start1;
  out.other_end = first ? e.end2 : e.end1;
  out.align_length = e.align_length;
  out.positives_percent = e.positives_percent;
  out.other_year = o.meta.year;
  out.other_author = o.meta.author;
  out.other_title = o.meta.title;
  out.primary_page = p.page_at(out.primary_start);
  out.page_from_map = p.page_map.has_value();
  out.year_gap = std::abs(o.meta.year - p.meta.year);
  return out;
}

std::vector<EnrichedEdge> EdgeStore::query(const EdgeQuery& q) const {
  const auto d = corpus_->index_of(q.doc_id);
  if (!d) throw NotFound("unknown document: " + q.doc_id);
  if (q.year_from && q.year_to && *q.year_from > *q.year_to) throw std::invalid_argument("year_from > year_to");
  const auto primary = static_cast<std::uint32_t>(*d);
  std::vector<EnrichedEdge> out;
  for (std::uint32_t i = adj_offsets_[primary]; i < adj_offsets_[primary + 1]; ++i) {
    const StoredEdge& e = edges_[adj_edges_[i]];
    if (matches(e, primary, q)) out.push_back(enrich(e, primary));
  }
  return out;
}

DirectionCounts EdgeStore::counts(std::string_view doc_id) const {
  const auto d = corpus_->index_of(doc_id);
  if (!d) throw NotFound("unknown document: " + std::string(doc_id));
  const auto primary = static_cast<std::uint32_t>(*d);
  EdgeQuery in_q{std::string(doc_id), Direction::In, std::nullopt, std::nullopt, true};
  EdgeQuery out_q{std::string(doc_id), Direction::Out, std::nullopt, std::nullopt, true};
  DirectionCounts counts;
  for (std::uint32_t i = adj_offsets_[primary]; i < adj_offsets_[primary + 1]; ++i) {
    const StoredEdge& e = edges_[adj_edges_[i]];
    counts.in_count += matches(e, primary, in_q);
    counts.out_count += matches(e, primary, out_q);
  }
  return counts;
}

}  // namespace textreuse

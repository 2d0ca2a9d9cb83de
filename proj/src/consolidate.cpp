// SPDX-License-Identifier: Apache-2.0
#include "textreuse/consolidate.hpp"

#include <algorithm>
#include <iterator>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

#include "textreuse/error.hpp"
#include "textreuse/tsv.hpp"
#include "textreuse/union_find.hpp"

namespace textreuse {

namespace {

// Negative when the spans overlap (minus the overlap length).
std::int64_t span_gap(std::size_t a0, std::size_t a1, std::size_t b0, std::size_t b1) noexcept {
  return static_cast<std::int64_t>(std::max(a0, b0)) - static_cast<std::int64_t>(std::min(a1, b1));
}

std::int64_t diagonal(const Edge& e) noexcept {
  return static_cast<std::int64_t>(e.t2_start) - static_cast<std::int64_t>(e.t1_start);
}

void defragment_group(std::vector<Edge>& group, const DefragParams& params) {
  bool changed = true;
  while (changed) {
    changed = false;
    std::sort(group.begin(), group.end(), canonical_less);
    for (std::size_t i = 0; i < group.size(); ++i) {
      for (std::size_t j = i + 1; j < group.size();) {
        if (static_cast<std::int64_t>(group[j].t1_start) - static_cast<std::int64_t>(group[i].t1_end) >
            params.gap_limit) {
          break;  // sorted by t1_start: every later gap is larger
        }
        if (mergeable(group[i], group[j], params)) {
          group[i] = merge_edges(group[i], group[j]);
          group.erase(group.begin() + static_cast<std::ptrdiff_t>(j));
          changed = true;
          j = i + 1;
        } else {
          ++j;
        }
      }
    }
  }
}

}  // namespace

bool mergeable(const Edge& a, const Edge& b, const DefragParams& params) noexcept {
  if (a.t1_id != b.t1_id || a.t2_id != b.t2_id) return false;
  const auto g1 = span_gap(a.t1_start, a.t1_end, b.t1_start, b.t1_end);
  const auto g2 = span_gap(a.t2_start, a.t2_end, b.t2_start, b.t2_end);
  if (g1 < -params.overlap_tolerance || g1 > params.gap_limit) return false;
  if (g2 < -params.overlap_tolerance || g2 > params.gap_limit) return false;
  const auto dd = diagonal(a) - diagonal(b);
  return (dd < 0 ? -dd : dd) <= params.diagonal_limit;
}

Edge merge_edges(const Edge& a, const Edge& b) {
  Edge m = a;
  m.t1_start = std::min(a.t1_start, b.t1_start);
  m.t1_end = std::max(a.t1_end, b.t1_end);
  m.t2_start = std::min(a.t2_start, b.t2_start);
  m.t2_end = std::max(a.t2_end, b.t2_end);
  m.align_length = a.align_length + b.align_length;
  m.positives_percent =
      m.align_length == 0
          ? (a.positives_percent + b.positives_percent) / 2.0
          : (a.positives_percent * static_cast<double>(a.align_length) +
             b.positives_percent * static_cast<double>(b.align_length)) /
                static_cast<double>(m.align_length);
  m.edge_id = 0;
  return m;
}

std::vector<Edge> defragment(std::span<const Edge> edges, const DefragParams& params) {
  std::vector<Edge> sorted(edges.begin(), edges.end());
  sort_canonical(sorted);
  std::vector<Edge> out;
  out.reserve(sorted.size());
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i;
    while (j < sorted.size() && sorted[j].t1_id == sorted[i].t1_id && sorted[j].t2_id == sorted[i].t2_id) ++j;
    std::vector<Edge> group(sorted.begin() + static_cast<std::ptrdiff_t>(i),
                            sorted.begin() + static_cast<std::ptrdiff_t>(j));
    defragment_group(group, params);
    std::move(group.begin(), group.end(), std::back_inserter(out));
    i = j;
  }
  sort_canonical(out);
  for (std::size_t i = 0; i < out.size(); ++i) out[i].edge_id = static_cast<std::int64_t>(i) + 1;
  return out;
}

PassageGraph build_passages(std::span<const Edge> edges, double overlap_frac) {
  struct Side {
    const std::string* doc;
    std::size_t start;
    std::size_t end;
    std::int64_t edge_id;
    std::size_t edge_index;
  };
  std::vector<Side> sides;
  sides.reserve(edges.size() * 2);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    const std::int64_t id = e.edge_id != 0 ? e.edge_id : static_cast<std::int64_t>(i) + 1;
    sides.push_back({&e.t1_id, e.t1_start, e.t1_end, id, i});
    sides.push_back({&e.t2_id, e.t2_start, e.t2_end, id, i});
  }
  std::vector<std::size_t> order(sides.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::tie(*sides[a].doc, sides[a].start, sides[a].end, a) < std::tie(*sides[b].doc, sides[b].start, sides[b].end, b);
  });

  DisjointSet sets(sides.size());
  for (std::size_t oi = 0; oi < order.size(); ++oi) {
    const Side& a = sides[order[oi]];
    for (std::size_t oj = oi + 1; oj < order.size(); ++oj) {
      const Side& b = sides[order[oj]];
      if (*b.doc != *a.doc || b.start >= a.end) break;
      const std::size_t overlap = std::min(a.end, b.end) - b.start;
      const std::size_t shorter = std::min(a.end - a.start, b.end - b.start);
      if (static_cast<double>(overlap) >= overlap_frac * static_cast<double>(shorter)) sets.unite(order[oi], order[oj]);
    }
  }

  // Gather per root, then number passages by (doc, start, end).
  std::map<std::size_t, Passage> by_root;
  for (std::size_t s = 0; s < sides.size(); ++s) {
    const std::size_t root = sets.find(s);
    auto [it, inserted] = by_root.try_emplace(root);
    Passage& p = it->second;
    if (inserted) {
      p.doc_id = *sides[s].doc;
      p.start = sides[s].start;
      p.end = sides[s].end;
    }
    p.start = std::min(p.start, sides[s].start);
    p.end = std::max(p.end, sides[s].end);
    p.member_edge_ids.push_back(sides[s].edge_id);
  }
  PassageGraph graph;
  std::vector<std::pair<std::size_t, Passage*>> roots;
  for (auto& [root, p] : by_root) roots.emplace_back(root, &p);
  std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) {
    return std::tie(a.second->doc_id, a.second->start, a.second->end, a.first) <
           std::tie(b.second->doc_id, b.second->start, b.second->end, b.first);
  });
  std::map<std::size_t, std::int64_t> id_of_root;
  for (auto& [root, p] : roots) {
    std::sort(p->member_edge_ids.begin(), p->member_edge_ids.end());
    p->member_edge_ids.erase(std::unique(p->member_edge_ids.begin(), p->member_edge_ids.end()),
                             p->member_edge_ids.end());
    p->passage_id = static_cast<std::int64_t>(graph.passages.size()) + 1;
    id_of_root[root] = p->passage_id;
    graph.passages.push_back(std::move(*p));
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    std::int64_t a = id_of_root[sets.find(2 * i)];
    std::int64_t b = id_of_root[sets.find(2 * i + 1)];
    if (a == b) continue;
    if (b < a) std::swap(a, b);
    graph.links.emplace_back(a, b);
  }
  std::sort(graph.links.begin(), graph.links.end());
  graph.links.erase(std::unique(graph.links.begin(), graph.links.end()), graph.links.end());
  return graph;
}

std::vector<Cluster> first_source(const PassageGraph& graph, const YearLookup& year_of) {
  const std::size_t n = graph.passages.size();
  DisjointSet sets(n);
  for (const auto& [a, b] : graph.links) sets.unite(static_cast<std::size_t>(a - 1), static_cast<std::size_t>(b - 1));

  std::vector<int> years(n);
  for (std::size_t i = 0; i < n; ++i) years[i] = year_of(graph.passages[i].doc_id);

  std::map<std::size_t, std::vector<std::size_t>> components;
  for (std::size_t i = 0; i < n; ++i) components[sets.find(i)].push_back(i);

  std::vector<Cluster> clusters;
  for (auto& [root, members] : components) {
    if (members.size() < 2) continue;
    const auto earliest = [&](std::size_t a, std::size_t b) {
      const Passage& pa = graph.passages[a];
      const Passage& pb = graph.passages[b];
      return std::tie(years[a], pa.doc_id, pa.start, pa.passage_id) <
             std::tie(years[b], pb.doc_id, pb.start, pb.passage_id);
    };
    const std::size_t src = *std::min_element(members.begin(), members.end(), earliest);
    Cluster c;
    c.source = graph.passages[src].passage_id;
    for (std::size_t m : members) {
      if (m != src) c.sinks.push_back(graph.passages[m].passage_id);
    }
    std::sort(c.sinks.begin(), c.sinks.end());
    clusters.push_back(std::move(c));
  }
  std::sort(clusters.begin(), clusters.end(), [](const Cluster& a, const Cluster& b) { return a.source < b.source; });
  for (std::size_t i = 0; i < clusters.size(); ++i) clusters[i].cluster_id = static_cast<std::int64_t>(i) + 1;
  return clusters;
}

std::vector<Cluster> first_source(const PassageGraph& graph, const Corpus& corpus) {
  return first_source(graph, [&](std::string_view id) { return corpus.at(id).meta.year; });
}

std::string format_passages(std::span<const Passage> passages) {
  std::string out = "passage_id\tdoc_id\tstart\tend\n";
  for (const auto& p : passages) {
    out += std::to_string(p.passage_id) + '\t' + p.doc_id + '\t' + std::to_string(p.start) + '\t' +
           std::to_string(p.end) + '\n';
  }
  return out;
}

std::string format_clusters(std::span<const Cluster> clusters) {
  std::string out = "cluster_id\tsource_passage_id\tsink_passage_id\n";
  for (const auto& c : clusters) {
    for (auto sink : c.sinks) {
      out += std::to_string(c.cluster_id) + '\t' + std::to_string(c.source) + '\t' + std::to_string(sink) + '\n';
    }
  }
  return out;
}

std::vector<Passage> parse_passages(std::string_view tsv, std::string_view label) {
  std::vector<Passage> out;
  read_tsv(tsv, label, "passage_id\tdoc_id\tstart\tend", [&](const auto& f, std::size_t line) {
    Passage p;
    p.passage_id = parse_int(f[0], label, line, "passage_id");
    p.doc_id = std::string(f[1]);
    const auto s = parse_int(f[2], label, line, "start");
    const auto e = parse_int(f[3], label, line, "end");
    if (s < 0 || e <= s) throw ParseError(std::string(label), line, "empty or negative span");
    p.start = static_cast<std::size_t>(s);
    p.end = static_cast<std::size_t>(e);
    out.push_back(std::move(p));
  });
  return out;
}

std::vector<Cluster> parse_clusters(std::string_view tsv, std::string_view label) {
  std::vector<Cluster> out;
  std::set<std::int64_t> seen;
  read_tsv(tsv, label, "cluster_id\tsource_passage_id\tsink_passage_id", [&](const auto& f, std::size_t line) {
    const auto id = parse_int(f[0], label, line, "cluster_id");
    const auto src = parse_int(f[1], label, line, "source_passage_id");
    const auto sink = parse_int(f[2], label, line, "sink_passage_id");
    if (out.empty() || out.back().cluster_id != id) {
      if (!seen.insert(id).second) throw ParseError(std::string(label), line, "cluster rows are not contiguous");
      out.push_back({id, src, {}});
    } else if (out.back().source != src) {
      throw ParseError(std::string(label), line, "cluster has two sources");
    }
    out.back().sinks.push_back(sink);
  });
  return out;
}

}  // namespace textreuse

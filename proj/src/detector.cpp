// SPDX-License-Identifier: Apache-2.0
#include "textreuse/detector.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <iterator>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <tuple>
#include <utility>

namespace textreuse {

namespace {

constexpr std::uint64_t kAlphabet = 37;

inline std::uint64_t char_code(char c) noexcept {
  if (c == ' ') return 0;
  if (c >= 'a' && c <= 'z') return static_cast<std::uint64_t>(c - 'a') + 1;
  return static_cast<std::uint64_t>(c - '0') + 27;
}

void check_k(int k) {
  if (k < kMinSeedLength || k > kMaxSeedLength) {
    throw std::invalid_argument("seed length must be in [" + std::to_string(kMinSeedLength) + ", " +
                                std::to_string(kMaxSeedLength) + "]");
  }
}

// Calls fn(pos, code) for every k-gram of `chars` that is not all spaces.
template <typename Fn>
void for_each_gram(std::string_view chars, int k, Fn&& fn) {
  const auto kk = static_cast<std::size_t>(k);
  if (chars.size() < kk) return;
  std::uint64_t lead_weight = 1;
  for (int i = 1; i < k; ++i) lead_weight *= kAlphabet;
  std::uint64_t code = 0;
  std::size_t spaces = 0;
  for (std::size_t i = 0; i < chars.size(); ++i) {
    if (i >= kk) {
      code -= char_code(chars[i - kk]) * lead_weight;
      if (chars[i - kk] == ' ') --spaces;
    }
    code = code * kAlphabet + char_code(chars[i]);
    if (chars[i] == ' ') ++spaces;
    if (i + 1 >= kk && spaces < kk) fn(static_cast<std::uint32_t>(i + 1 - kk), code);
  }
}

void sort_seeds(std::vector<SeedHit>& seeds) {
  std::sort(seeds.begin(), seeds.end(), [](const SeedHit& a, const SeedHit& b) {
    const auto da = a.diagonal();
    const auto db = b.diagonal();
    return da != db ? da < db : a.q_pos < b.q_pos;
  });
}

constexpr int kDead = INT_MIN / 4;

enum : std::uint8_t { kDiag = 0, kUp = 1, kLeft = 2 };

struct Extension {
  int score = 0;
  std::size_t q_len = 0;
  std::size_t t_len = 0;
  std::int64_t columns = 0;
  std::int64_t identities = 0;
};

// One-directional banded X-drop extension. a(i) / b(j) give the i-th
// character away from the seed boundary in each sequence.
template <typename AccessA, typename AccessB>
Extension extend_one_way(std::size_t a_len, AccessA a, std::size_t b_len, AccessB b, const AlignParams& p) {
  const int width = p.band;
  const auto cols = static_cast<std::size_t>(2 * width + 1);
  std::vector<int> prev(cols, kDead);
  std::vector<int> cur(cols, kDead);
  std::vector<std::uint8_t> trace;
  trace.reserve(cols * std::min<std::size_t>(a_len + 1, 4096));

  int best = 0;
  std::size_t best_i = 0;
  std::size_t best_j = 0;

  // Band slot of column j in row i is j - i + width.
  for (std::size_t i = 0; i <= a_len; ++i) {
    std::fill(cur.begin(), cur.end(), kDead);
    trace.resize(trace.size() + cols, kDiag);
    std::uint8_t* tr = trace.data() + i * cols;
    bool alive = false;
    const std::int64_t j_lo = std::max<std::int64_t>(0, static_cast<std::int64_t>(i) - width);
    const std::int64_t j_hi = std::min<std::int64_t>(static_cast<std::int64_t>(b_len), static_cast<std::int64_t>(i) + width);
    for (std::int64_t j = j_lo; j <= j_hi; ++j) {
      const auto slot = static_cast<std::size_t>(j - static_cast<std::int64_t>(i) + width);
      int h = kDead;
      std::uint8_t from = kDiag;
      if (i == 0 && j == 0) {
        h = 0;
      } else {
        if (i > 0 && j > 0 && prev[slot] != kDead) {
          const bool same = a(i - 1) == b(static_cast<std::size_t>(j - 1));
          h = prev[slot] + (same ? p.match : p.mismatch);
          from = kDiag;
        }
        if (i > 0 && slot + 1 < cols && prev[slot + 1] != kDead && prev[slot + 1] + p.gap > h) {
          h = prev[slot + 1] + p.gap;
          from = kUp;
        }
        if (slot > 0 && cur[slot - 1] != kDead && cur[slot - 1] + p.gap > h) {
          h = cur[slot - 1] + p.gap;
          from = kLeft;
        }
      }
      if (h == kDead || h < best - p.x_drop) continue;
      cur[slot] = h;
      tr[slot] = from;
      alive = true;
      if (h > best) {
        best = h;
        best_i = i;
        best_j = static_cast<std::size_t>(j);
      }
    }
    if (!alive) break;
    std::swap(prev, cur);
  }

  Extension ext;
  ext.score = best;
  ext.q_len = best_i;
  ext.t_len = best_j;
  std::size_t i = best_i;
  std::size_t j = best_j;
  while (i > 0 || j > 0) {
    const auto slot = static_cast<std::size_t>(static_cast<std::int64_t>(j) - static_cast<std::int64_t>(i) + width);
    const std::uint8_t from = trace[i * cols + slot];
    ++ext.columns;
    if (from == kDiag) {
      if (a(i - 1) == b(j - 1)) ++ext.identities;
      --i;
      --j;
    } else if (from == kUp) {
      --i;
    } else {
      --j;
    }
  }
  return ext;
}

double overlap_of_shorter(std::size_t a0, std::size_t a1, std::size_t b0, std::size_t b1) {
  const std::size_t lo = std::max(a0, b0);
  const std::size_t hi = std::min(a1, b1);
  if (hi <= lo) return 0.0;
  const std::size_t shorter = std::min(a1 - a0, b1 - b0);
  return shorter == 0 ? 0.0 : static_cast<double>(hi - lo) / static_cast<double>(shorter);
}

}  // namespace

NormalizedText normalize(std::u32string_view raw) {
  NormalizedText out;
  out.chars.reserve(raw.size());
  out.to_raw.reserve(raw.size());
  bool pending_space = false;
  std::uint32_t space_origin = 0;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const char32_t f = fold_alnum(raw[i]);
    if (f == 0) {
      if (!pending_space) space_origin = static_cast<std::uint32_t>(i);
      pending_space = true;
      continue;
    }
    if (pending_space && !out.chars.empty()) {
      out.chars.push_back(' ');
      out.to_raw.push_back(space_origin);
    }
    pending_space = false;
    out.chars.push_back(static_cast<char>(f));
    out.to_raw.push_back(static_cast<std::uint32_t>(i));
  }
  return out;
}

std::uint64_t KmerIndex::encode(std::string_view gram) {
  std::uint64_t code = 0;
  for (char c : gram) code = code * kAlphabet + char_code(c);
  return code;
}

KmerIndex::KmerIndex(const NormalizedText& doc, int k) : k_(k) {
  check_k(k);
  std::vector<std::pair<std::uint64_t, std::uint32_t>> grams;
  if (doc.size() >= static_cast<std::size_t>(k)) grams.reserve(doc.size() - static_cast<std::size_t>(k) + 1);
  for_each_gram(doc.chars, k, [&](std::uint32_t pos, std::uint64_t code) { grams.emplace_back(code, pos); });
  std::sort(grams.begin(), grams.end());
  positions_.reserve(grams.size());
  for (const auto& [code, pos] : grams) {
    if (codes_.empty() || codes_.back() != code) {
      codes_.push_back(code);
      offsets_.push_back(static_cast<std::uint32_t>(positions_.size()));
    }
    positions_.push_back(pos);
  }
  offsets_.push_back(static_cast<std::uint32_t>(positions_.size()));
}

std::span<const std::uint32_t> KmerIndex::positions_at(std::size_t code_index) const {
  return std::span<const std::uint32_t>(positions_).subspan(offsets_[code_index],
                                                             offsets_[code_index + 1] - offsets_[code_index]);
}

std::span<const std::uint32_t> KmerIndex::positions_of_code(std::uint64_t code) const {
  const auto it = std::lower_bound(codes_.begin(), codes_.end(), code);
  if (it == codes_.end() || *it != code) return {};
  return positions_at(static_cast<std::size_t>(it - codes_.begin()));
}

std::span<const std::uint32_t> KmerIndex::positions(std::string_view gram) const {
  if (k_ == 0 || gram.size() != static_cast<std::size_t>(k_)) return {};
  return positions_of_code(encode(gram));
}

std::vector<SeedHit> find_seeds(const NormalizedText& query, const KmerIndex& target_index, int k,
                                std::size_t max_occurrences) {
  if (k != target_index.k()) throw std::invalid_argument("seed length differs from index");
  std::vector<SeedHit> seeds;
  for_each_gram(query.chars, k, [&](std::uint32_t q_pos, std::uint64_t code) {
    const auto hits = target_index.positions_of_code(code);
    if (hits.size() > max_occurrences) return;
    for (std::uint32_t t_pos : hits) seeds.push_back({q_pos, t_pos, k});
  });
  sort_seeds(seeds);
  return seeds;
}

std::vector<SeedHit> find_seeds(const KmerIndex& query_index, const KmerIndex& target_index,
                                std::size_t max_occurrences) {
  if (query_index.k() != target_index.k()) throw std::invalid_argument("indexes use different seed lengths");
  const int k = query_index.k();
  std::vector<SeedHit> seeds;
  const auto qc = query_index.codes();
  const auto tc = target_index.codes();
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < qc.size() && j < tc.size()) {
    if (qc[i] < tc[j]) {
      ++i;
    } else if (tc[j] < qc[i]) {
      ++j;
    } else {
      const auto t_hits = target_index.positions_at(j);
      if (t_hits.size() <= max_occurrences) {
        for (std::uint32_t q_pos : query_index.positions_at(i)) {
          for (std::uint32_t t_pos : t_hits) seeds.push_back({q_pos, t_pos, k});
        }
      }
      ++i;
      ++j;
    }
  }
  sort_seeds(seeds);
  return seeds;
}

RawAlignment extend_seed_unfiltered(const NormalizedText& query, const NormalizedText& target, const SeedHit& seed,
                                    const AlignParams& params) {
  const std::string& q = query.chars;
  const std::string& t = target.chars;
  const auto k = static_cast<std::size_t>(seed.k);
  const std::size_t qs = seed.q_pos;
  const std::size_t ts = seed.t_pos;
  if (qs + k > q.size() || ts + k > t.size()) throw std::invalid_argument("seed outside text");

  const std::size_t q_right = qs + k;
  const std::size_t t_right = ts + k;
  const Extension right = extend_one_way(
      q.size() - q_right, [&](std::size_t i) { return q[q_right + i]; }, t.size() - t_right,
      [&](std::size_t j) { return t[t_right + j]; }, params);
  const Extension left = extend_one_way(
      qs, [&](std::size_t i) { return q[qs - 1 - i]; }, ts, [&](std::size_t j) { return t[ts - 1 - j]; }, params);

  std::int64_t seed_identities = 0;
  for (std::size_t i = 0; i < k; ++i) seed_identities += q[qs + i] == t[ts + i];

  RawAlignment aln;
  aln.q_start = qs - left.q_len;
  aln.t_start = ts - left.t_len;
  aln.q_end = q_right + right.q_len;
  aln.t_end = t_right + right.t_len;
  aln.score = left.score + right.score + static_cast<int>(seed_identities) * params.match +
              static_cast<int>(static_cast<std::int64_t>(k) - seed_identities) * params.mismatch;
  aln.columns = left.columns + right.columns + static_cast<std::int64_t>(k);
  aln.identities = left.identities + right.identities + seed_identities;
  return aln;
}

bool passes_thresholds(const RawAlignment& a, const AlignParams& params) noexcept {
  return a.columns >= params.min_align_length && a.positives_percent() >= params.min_positives;
}

std::optional<RawAlignment> extend_seed(const NormalizedText& query, const NormalizedText& target, const SeedHit& seed,
                                        const AlignParams& params) {
  RawAlignment aln = extend_seed_unfiltered(query, target, seed, params);
  if (!passes_thresholds(aln, params)) return std::nullopt;
  return aln;
}

std::vector<RawAlignment> align_texts(const NormalizedText& query, const KmerIndex& query_index,
                                      const NormalizedText& target, const KmerIndex& target_index,
                                      const AlignParams& params) {
  const auto seeds = find_seeds(query_index, target_index, params.max_seed_occurrences);
  std::vector<RawAlignment> accepted;

  // A rejected extension on the current diagonal: later seeds that sit
  // inside its span would rediscover the same alignment.
  std::int64_t rejected_diag = INT64_MIN;
  std::size_t rejected_q_end = 0;

  for (const SeedHit& seed : seeds) {
    const bool covered = std::any_of(accepted.begin(), accepted.end(), [&](const RawAlignment& a) {
      return seed.q_pos >= a.q_start && seed.q_pos < a.q_end && seed.t_pos >= a.t_start && seed.t_pos < a.t_end;
    });
    if (covered) continue;
    if (seed.diagonal() == rejected_diag && seed.q_pos + static_cast<std::size_t>(seed.k) <= rejected_q_end) continue;

    RawAlignment aln = extend_seed_unfiltered(query, target, seed, params);
    if (passes_thresholds(aln, params)) {
      accepted.push_back(aln);
    } else {
      rejected_diag = seed.diagonal();
      rejected_q_end = aln.q_end;
    }
  }

  std::vector<bool> dropped(accepted.size(), false);
  for (std::size_t i = 0; i < accepted.size(); ++i) {
    for (std::size_t j = i + 1; j < accepted.size() && !dropped[i]; ++j) {
      if (dropped[j]) continue;
      const RawAlignment& a = accepted[i];
      const RawAlignment& b = accepted[j];
      if (overlap_of_shorter(a.q_start, a.q_end, b.q_start, b.q_end) >= params.dedup_overlap &&
          overlap_of_shorter(a.t_start, a.t_end, b.t_start, b.t_end) >= params.dedup_overlap) {
        if (b.score > a.score) {
          dropped[i] = true;
        } else {
          dropped[j] = true;
        }
      }
    }
  }
  std::vector<RawAlignment> out;
  for (std::size_t i = 0; i < accepted.size(); ++i) {
    if (!dropped[i]) out.push_back(accepted[i]);
  }
  std::sort(out.begin(), out.end(), [](const RawAlignment& a, const RawAlignment& b) {
    return std::tie(a.q_start, a.t_start, a.q_end, a.t_end) < std::tie(b.q_start, b.t_start, b.q_end, b.t_end);
  });
  return out;
}

std::vector<RawAlignment> align_texts(const NormalizedText& query, const NormalizedText& target,
                                      const AlignParams& params) {
  return align_texts(query, KmerIndex(query, params.k), target, KmerIndex(target, params.k), params);
}

PreparedDocument prepare_document(const Document& doc, const AlignParams& params) {
  PreparedDocument p;
  p.doc = &doc;
  p.text = normalize(doc.text.codepoints());
  p.index = KmerIndex(p.text, params.k);
  return p;
}

std::vector<Edge> detect_prepared(const PreparedDocument& a, const PreparedDocument& b, const AlignParams& params) {
  if (a.doc->id() == b.doc->id()) throw std::invalid_argument("cannot align a document with itself");
  const PreparedDocument& q = a.doc->id() < b.doc->id() ? a : b;
  const PreparedDocument& t = &q == &a ? b : a;

  std::vector<Edge> edges;
  for (const RawAlignment& aln : align_texts(q.text, q.index, t.text, t.index, params)) {
    Edge e;
    e.t1_id = q.doc->id();
    e.t1_start = q.text.to_raw[aln.q_start];
    e.t1_end = q.text.to_raw[aln.q_end - 1] + 1;
    e.t2_id = t.doc->id();
    e.t2_start = t.text.to_raw[aln.t_start];
    e.t2_end = t.text.to_raw[aln.t_end - 1] + 1;
    e.align_length = aln.columns;
    e.positives_percent = aln.positives_percent();
    edges.push_back(std::move(e));
  }
  sort_canonical(edges);
  return edges;
}

std::vector<Edge> detect_pair(const Document& a, const Document& b, const AlignParams& params) {
  return detect_prepared(prepare_document(a, params), prepare_document(b, params), params);
}

std::vector<Edge> detect_corpus(const Corpus& corpus, const AlignParams& params, unsigned threads) {
  const std::size_t n = corpus.size();
  threads = std::max(1u, threads);
  std::vector<PreparedDocument> prepared(n);
  std::vector<Edge> all;
  std::mutex out_mutex;
  std::atomic<std::size_t> next{0};

  auto run_workers = [&](auto&& body) {
    if (threads == 1) {
      body();
      return;
    }
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(body);
    for (auto& th : pool) th.join();
  };

  run_workers([&] {
    for (std::size_t i = next++; i < n; i = next++) prepared[i] = prepare_document(corpus[i], params);
  });

  next = 0;
  run_workers([&] {
    std::vector<Edge> local;
    // Row-major walk over the upper triangle, one query document per task.
    for (std::size_t i = next++; i < n; i = next++) {
      for (std::size_t j = i + 1; j < n; ++j) {
        auto edges = detect_prepared(prepared[i], prepared[j], params);
        std::move(edges.begin(), edges.end(), std::back_inserter(local));
      }
    }
    std::lock_guard lock(out_mutex);
    std::move(local.begin(), local.end(), std::back_inserter(all));
  });

  sort_canonical(all);
  return all;
}

}  // namespace textreuse

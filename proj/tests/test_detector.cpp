// SPDX-License-Identifier: Apache-2.0
#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "textreuse/detector.hpp"
#include "textreuse/synthbench.hpp"

using namespace textreuse;

namespace {

Document make_doc(const std::string& id, int year, const std::u32string& text) {
  Document d;
  d.meta = {id, year, "A " + id, "T", "C"};
  d.text = *Utf8Text::from_utf8(encode_utf8(text));
  return d;
}

std::string random_string(std::mt19937_64& rng, std::size_t n, std::string_view alphabet) {
  std::string s;
  for (std::size_t i = 0; i < n; ++i) s.push_back(alphabet[rng() % alphabet.size()]);
  return s;
}

std::u32string widen(std::string_view s) { return std::u32string(s.begin(), s.end()); }

// Substitutes `count` distinct, non-adjacent positions of s with a different letter.
std::string substitute(std::string s, std::size_t count, std::mt19937_64& rng) {
  std::set<std::size_t> used;
  while (used.size() < count) {
    const std::size_t p = 5 + rng() % (s.size() - 10);
    if (used.count(p) || used.count(p - 1) || used.count(p + 1)) continue;
    used.insert(p);
    s[p] = s[p] == 'x' ? 'y' : 'x';
  }
  return s;
}

const std::string_view kLetters = "abcdefghijklmnopqrstuvwxyz ";

}  // namespace

TEST_CASE("normalization examples") {
  auto n = normalize(U"The Dog");
  CHECK(n.chars == "the dog");
  CHECK(n.to_raw == std::vector<std::uint32_t>{0, 1, 2, 3, 4, 5, 6});

  n = normalize(U"A—B");
  CHECK(n.chars == "a b");
  CHECK(n.to_raw == std::vector<std::uint32_t>{0, 1, 2});

  const std::u32string raw = U"Eſſays,  &c.";
  n = normalize(raw);
  CHECK(n.chars == "essays c");
  for (std::size_t i = 0; i < n.size(); ++i) {
    const char32_t src = raw[n.to_raw[i]];
    if (n.chars[i] == ' ') {
      CHECK(fold_alnum(src) == 0);
    } else {
      CHECK(fold_alnum(src) == static_cast<char32_t>(n.chars[i]));
    }
  }
  CHECK(normalize(U"").chars.empty());
  CHECK(normalize(U"  ,,  ").chars.empty());
}

TEST_CASE("normalization invariants on random text") {
  std::mt19937_64 rng(1);
  const std::u32string alphabet = U"abcXYZ019 ,.;—ſÉé\n\t";
  for (int round = 0; round < 300; ++round) {
    std::u32string raw;
    const std::size_t len = rng() % 200;
    for (std::size_t i = 0; i < len; ++i) raw.push_back(alphabet[rng() % alphabet.size()]);
    const auto n = normalize(raw);
    REQUIRE(n.to_raw.size() == n.chars.size());
    for (std::size_t i = 0; i < n.size(); ++i) {
      const char c = n.chars[i];
      CHECK(((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == ' '));
      CHECK(n.to_raw[i] < raw.size());
      if (i > 0) {
        CHECK(n.to_raw[i] > n.to_raw[i - 1]);
        CHECK_FALSE((c == ' ' && n.chars[i - 1] == ' '));
      }
    }
  }
}

TEST_CASE("k-gram index") {
  const auto doc = normalize(U"abcdabcd");
  const KmerIndex idx(doc, 4);
  CHECK(idx.distinct_grams() == 4);
  CHECK(std::vector<std::uint32_t>(idx.positions("abcd").begin(), idx.positions("abcd").end()) ==
        std::vector<std::uint32_t>{0, 4});
  CHECK(idx.positions("bcda").size() == 1);
  CHECK(idx.positions("cdab").size() == 1);
  CHECK(idx.positions("dabc").size() == 1);
  CHECK(idx.positions("zzzz").empty());
  CHECK(idx.positions("abc").empty());

  CHECK(KmerIndex(normalize(U"abcdefghij"), 10).distinct_grams() == 1);
  CHECK(KmerIndex(normalize(U"abc"), 4).empty());
  CHECK_THROWS_AS(KmerIndex(doc, 3), std::invalid_argument);
  CHECK_THROWS_AS(KmerIndex(doc, 13), std::invalid_argument);

  std::mt19937_64 rng(2);
  for (int k : {4, 7, 10, 12}) {
    const auto text = normalize(widen(random_string(rng, 1000, "abc d")));
    const KmerIndex index(text, k);
    const auto table = oracle::kmer_table(text.chars, k);
    CHECK(index.total_positions() == text.size() - static_cast<std::size_t>(k) + 1);
    CHECK(index.distinct_grams() == table.size());
    for (const auto& [gram, pos] : table) {
      const auto got = index.positions(gram);
      CHECK(std::vector<std::uint32_t>(got.begin(), got.end()) == pos);
    }
  }
}

TEST_CASE("seed finding matches an all-pairs scan") {
  const auto same = normalize(U"abcdefghij");
  const auto hits = find_seeds(same, KmerIndex(same, 10), 10);
  REQUIRE(hits.size() == 1);
  CHECK(hits[0] == SeedHit{0, 0, 10});
  CHECK(find_seeds(normalize(U"abcdefghijk"), KmerIndex(normalize(U"lmnopqrstuvw"), 4), 4).empty());

  std::mt19937_64 rng(4);
  for (int round = 0; round < 40; ++round) {
    const auto q = normalize(widen(random_string(rng, 400, "ab c")));
    const auto t = normalize(widen(random_string(rng, 400, "ab c")));
    for (std::size_t cap : {std::size_t{3}, std::size_t{1000}}) {
      const KmerIndex qi(q, 6), ti(t, 6);
      const auto expected = oracle::all_seeds(q.chars, t.chars, 6, cap);
      CHECK(find_seeds(q, ti, 6, cap) == expected);
      CHECK(find_seeds(qi, ti, cap) == expected);
    }
  }
}

TEST_CASE("a noisy 300-char passage yields a seed inside it in nearly every draw") {
  std::mt19937_64 rng(10);
  TrigramModel model(*decode_utf8(builtin_source_text()));
  int misses = 0;
  const int draws = 1000;
  for (int d = 0; d < draws; ++d) {
    const std::u32string passage = model.sample(300, rng);
    const std::u32string left = model.sample(400, rng) + U" ";
    const std::u32string a = left + apply_noise(passage, 0.05, rng) + U" " + model.sample(400, rng);
    const std::u32string b = model.sample(250, rng) + U" " + apply_noise(passage, 0.05, rng) + U" " + model.sample(250, rng);
    const auto na = normalize(a);
    const auto nb = normalize(b);
    const auto hits = find_seeds(na, KmerIndex(nb, 10), 10);
    bool inside = false;
    for (const auto& h : hits) {
      const auto qa = na.to_raw[h.q_pos];
      const auto tb = nb.to_raw[h.t_pos];
      if (qa >= left.size() && qa < left.size() + 300 && tb >= 251 && tb < 251 + 300) inside = true;
    }
    misses += !inside;
  }
  CHECK(misses <= 1);
}

TEST_CASE("extension on identical and short strings") {
  std::mt19937_64 rng(6);
  AlignParams p;
  const auto s200 = normalize(widen(random_string(rng, 200, "abcdefghijklmnopqrstuvwxyz")));
  auto a = extend_seed(s200, s200, {0, 0, 10}, p);
  REQUIRE(a);
  CHECK(a->q_start == 0);
  CHECK(a->q_end == 200);
  CHECK(a->t_start == 0);
  CHECK(a->t_end == 200);
  CHECK(a->columns == 200);
  CHECK(a->positives_percent() == doctest::Approx(100.0));

  const auto s100 = normalize(widen(random_string(rng, 100, "abcdefghijklmnopqrstuvwxyz")));
  CHECK_FALSE(extend_seed(s100, s100, {40, 40, 10}, p));
  CHECK(extend_seed_unfiltered(s100, s100, {40, 40, 10}, p).columns == 100);
}

TEST_CASE("extension of a passage with scattered substitutions equals the full dynamic program") {
  std::mt19937_64 rng(8);
  AlignParams p;
  for (int round = 0; round < 10; ++round) {
    const std::string passage = random_string(rng, 500, kLetters.substr(0, 26));
    const std::string q = random_string(rng, 80, kLetters) + passage + random_string(rng, 80, kLetters);
    const std::string t = random_string(rng, 50, kLetters) + substitute(passage, 10, rng) + random_string(rng, 60, kLetters);
    NormalizedText nq{q, {}}, nt{t, {}};
    for (std::size_t i = 0; i < q.size(); ++i) nq.to_raw.push_back(static_cast<std::uint32_t>(i));
    for (std::size_t i = 0; i < t.size(); ++i) nt.to_raw.push_back(static_cast<std::uint32_t>(i));
    // Seed on an unmodified 10-gram near the middle.
    std::optional<SeedHit> seed;
    for (std::size_t off = 240; off < 300 && !seed; ++off) {
      if (q.compare(80 + off, 10, t, 50 + off, 10) == 0) {
        seed = SeedHit{static_cast<std::uint32_t>(80 + off), static_cast<std::uint32_t>(50 + off), 10};
      }
    }
    REQUIRE(seed);
    const auto got = extend_seed(nq, nt, *seed, p);
    const auto best = oracle::best_local(q, t, p.match, p.mismatch, p.gap);
    REQUIRE(got);
    REQUIRE(best);
    CHECK(got->identities >= 480);
    CHECK(std::abs(static_cast<long>(got->q_start) - 80) <= 5);
    CHECK(std::abs(static_cast<long>(got->q_end) - 580) <= 5);
    CHECK(std::abs(static_cast<long>(got->t_start) - 50) <= 5);
    CHECK(std::abs(static_cast<long>(got->t_end) - 550) <= 5);
    CHECK(got->score == best->score);
    CHECK(got->q_start == best->q_start);
    CHECK(got->q_end == best->q_end);
    CHECK(got->t_start == best->t_start);
    CHECK(got->t_end == best->t_end);
    CHECK(got->columns == best->columns);
    CHECK(got->identities == best->identities);
    // Substitutions only: the alignment is gapless.
    CHECK(got->columns == static_cast<std::int64_t>(got->q_end - got->q_start));
    CHECK(got->columns == static_cast<std::int64_t>(got->t_end - got->t_start));
  }
}

TEST_CASE("detect_pair basics") {
  std::mt19937_64 rng(12);
  TrigramModel model(*decode_utf8(builtin_source_text()));
  AlignParams p;

  const auto a = make_doc("a", 1700, U"abcdefghijklmnopqrstuvwxyz0123456789 the quick brown fox");
  const auto b = make_doc("b", 1700, U"zyxwvutsrqponmlkjihgfedcba9876543210 jumps over the lazy dog");
  CHECK(detect_pair(a, b, p).empty());

  const auto text = model.sample(3000, rng);
  const auto x = make_doc("x", 1700, text);
  const auto y = make_doc("y", 1710, text);
  const auto edges = detect_pair(x, y, p);
  REQUIRE(edges.size() == 1);
  CHECK(edges[0].positives_percent == doctest::Approx(100.0));
  CHECK(edges[0].t1_start <= 3);
  CHECK(edges[0].t1_end >= 2997);
  CHECK(edges[0].t1_start == edges[0].t2_start);
  CHECK(edges[0].t1_end == edges[0].t2_end);
  CHECK_THROWS_AS(detect_pair(x, x, p), std::invalid_argument);
}

TEST_CASE("three planted passages of 200, 600 and 1500 chars give exactly three edges") {
  TrigramModel model(*decode_utf8(builtin_source_text()));
  AlignParams p;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    std::mt19937_64 rng(seed);
    std::u32string a, b;
    std::vector<std::array<std::size_t, 4>> truth;
    for (std::size_t len : {200u, 600u, 1500u}) {
      a += model.sample(1200, rng);
      b += model.sample(900, rng);
      const auto passage = model.sample(len, rng);
      const auto ca = apply_noise(passage, 0.05, rng);
      const auto cb = apply_noise(passage, 0.05, rng);
      truth.push_back({a.size(), a.size() + ca.size(), b.size(), b.size() + cb.size()});
      a += ca;
      b += cb;
    }
    a += model.sample(1000, rng);
    b += model.sample(1000, rng);
    const auto edges = detect_pair(make_doc("a", 1700, a), make_doc("b", 1720, b), p);
    REQUIRE(edges.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
      CHECK(oracle::iou(edges[i].t1_start, edges[i].t1_end, truth[i][0], truth[i][1]) >= 0.8);
      CHECK(oracle::iou(edges[i].t2_start, edges[i].t2_end, truth[i][2], truth[i][3]) >= 0.8);
    }
  }
}

TEST_CASE("detect_pair is symmetric and its spans re-align at the reported identity") {
  TrigramModel model(*decode_utf8(builtin_source_text()));
  AlignParams p;
  std::mt19937_64 rng(21);
  for (int round = 0; round < 6; ++round) {
    const auto passage = model.sample(700, rng);
    const auto a = make_doc("p", 1700, model.sample(500, rng) + apply_noise(passage, 0.08, rng) + model.sample(300, rng));
    const auto b = make_doc("q", 1700, model.sample(200, rng) + apply_noise(passage, 0.08, rng) + model.sample(600, rng));
    const auto ab = detect_pair(a, b, p);
    const auto ba = detect_pair(b, a, p);
    CHECK(ab == ba);
    REQUIRE_FALSE(ab.empty());
    for (const auto& e : ab) {
      CHECK(e.t1_id < e.t2_id);
      CHECK(e.t1_start < e.t1_end);
      CHECK(e.t2_start < e.t2_end);
      CHECK(e.t1_end <= a.text.size());
      CHECK(e.t2_end <= b.text.size());
      CHECK(e.positives_percent >= 0.0);
      CHECK(e.positives_percent <= 100.0);
      const auto s1 = normalize(a.text.codepoints(e.t1_start, e.t1_end)).chars;
      const auto s2 = normalize(b.text.codepoints(e.t2_start, e.t2_end)).chars;
      CHECK(e.align_length >= static_cast<std::int64_t>(std::max(s1.size(), s2.size())));
      CHECK(oracle::global_identity(s1, s2) >= e.positives_percent - 5.0);
    }
  }
}

TEST_CASE("detect_corpus over small corpora") {
  TrigramModel model(*decode_utf8(builtin_source_text()));
  AlignParams p;
  std::mt19937_64 rng(30);

  Corpus one;
  one.add(make_doc("solo", 1700, model.sample(2000, rng)));
  CHECK(detect_corpus(one, p).empty());

  // Six documents sharing one passage: every pair is linked.
  Corpus six;
  const auto passage = model.sample(800, rng);
  for (int i = 0; i < 6; ++i) {
    six.add(make_doc("c" + std::to_string(i), 1700 + 10 * i,
                     model.sample(600 + 100 * static_cast<std::size_t>(i), rng) + apply_noise(passage, 0.03, rng) +
                         model.sample(700, rng)));
  }
  const auto clique = detect_corpus(six, p);
  std::set<std::pair<std::string, std::string>> pairs;
  for (const auto& e : clique) pairs.insert({e.t1_id, e.t2_id});
  CHECK(pairs.size() == 15);
  CHECK(detect_corpus(six, p, 3) == clique);

  // Two identical documents and one unrelated.
  Corpus trio;
  const auto shared = model.sample(1500, rng);
  trio.add(make_doc("i1", 1700, shared));
  trio.add(make_doc("i2", 1705, shared));
  trio.add(make_doc("u", 1710, model.sample(1500, rng)));
  const auto edges = detect_corpus(trio, p);
  REQUIRE_FALSE(edges.empty());
  for (const auto& e : edges) {
    CHECK(e.t1_id == "i1");
    CHECK(e.t2_id == "i2");
  }

  // Adding an unrelated document leaves existing edges unchanged.
  Corpus seven;
  for (const auto& d : six.documents()) seven.add(d);
  seven.add(make_doc("zz", 1800, model.sample(3000, rng)));
  auto grown = detect_corpus(seven, p);
  std::erase_if(grown, [](const Edge& e) { return e.t1_id == "zz" || e.t2_id == "zz"; });
  CHECK(grown == clique);
}

// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <filesystem>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "textreuse/corpus.hpp"
#include "textreuse/metasearch.hpp"

using namespace textreuse;

namespace {

Document make_doc(const std::string& id, int year, const std::string& author, const std::string& title) {
  Document d;
  d.meta = {id, year, author, title, "C"};
  d.text = *Utf8Text::from_utf8("x");
  return d;
}

// Edit distance at most one (substitution, insertion, deletion or adjacent
// swap), by direct case analysis.
bool within_one_edit(const std::u32string& a, const std::u32string& b) {
  if (a == b) return true;
  if (a.size() == b.size()) {
    std::vector<std::size_t> diff;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] != b[i]) diff.push_back(i);
    }
    if (diff.size() == 1) return true;
    return diff.size() == 2 && diff[1] == diff[0] + 1 && a[diff[0]] == b[diff[1]] && a[diff[1]] == b[diff[0]];
  }
  const std::u32string& s = a.size() < b.size() ? a : b;
  const std::u32string& l = a.size() < b.size() ? b : a;
  if (l.size() != s.size() + 1) return false;
  for (std::size_t skip = 0; skip < l.size(); ++skip) {
    if (l.substr(0, skip) + l.substr(skip + 1) == s) return true;
  }
  return false;
}

std::u32string lower_ascii(std::string_view s) {
  std::u32string out;
  for (char c : s) out.push_back(static_cast<char32_t>(std::tolower(static_cast<unsigned char>(c))));
  return out;
}

std::vector<std::u32string> ascii_tokens(const std::string& s) {
  std::vector<std::u32string> out;
  std::string cur;
  for (char c : s + " ") {
    if (std::isalnum(static_cast<unsigned char>(c))) {
      cur.push_back(c);
    } else if (!cur.empty()) {
      out.push_back(lower_ascii(cur));
      cur.clear();
    }
  }
  return out;
}

int brute_score(const std::vector<std::u32string>& terms, const DocMetadata& m) {
  auto tokens = ascii_tokens(m.author + " " + m.title);
  int score = 0;
  for (const auto& term : terms) {
    bool hit = false;
    for (const auto& tok : tokens) {
      if (tok == term || (term.size() >= 3 && tok.rfind(term, 0) == 0) ||
          (term.size() >= 5 && tok.size() >= 5 && within_one_edit(term, tok))) {
        hit = true;
      }
    }
    score += hit;
  }
  return score;
}

}  // namespace

TEST_CASE("a surname matches an author field with dates") {
  Corpus c;
  c.add(make_doc("1", 1753, "Hume, David (1711-1776)", "Essays"));
  const auto r = search(c, "hume");
  REQUIRE(r.size() == 1);
  CHECK(r[0].score == 1);
  CHECK(search(c, "1711").size() == 1);
  CHECK(search(c, "   ").empty());
  CHECK(search(c, "").empty());
}

TEST_CASE("catalogue query ranks three-term matches above two-term matches") {
  const Corpus c = ingest_corpus(std::filesystem::path(TEXTREUSE_FIXTURES) / "catalogue");
  const auto r = search(c, "david hume essays");
  REQUIRE(r.size() >= 10);
  std::size_t threes = 0;
  while (threes < r.size() && r[threes].score == 3) ++threes;
  CHECK(threes == 8);
  REQUIRE(threes < r.size());
  CHECK(r[threes].score == 2);
  CHECK(r[threes].doc_id == "0411000100");
  for (std::size_t i = 1; i < r.size(); ++i) {
    CHECK(r[i - 1].score >= r[i].score);
    if (r[i - 1].score == r[i].score) {
      CHECK(std::make_pair(r[i - 1].year, r[i - 1].doc_id) < std::make_pair(r[i].year, r[i].doc_id));
    }
  }
  // Year ascending among the Hume volumes, then doc_id.
  CHECK(r[0].year == 1753);
  CHECK(r[0].doc_id == "0127602403");
  CHECK(search(c, "DAVID HUME ESSAYS").size() == r.size());
  const auto upper = search(c, "DAVID HUME ESSAYS");
  for (std::size_t i = 0; i < r.size(); ++i) CHECK(upper[i].doc_id == r[i].doc_id);
}

TEST_CASE("prefix and fuzzy guards") {
  Corpus c;
  c.add(make_doc("1", 1700, "Hume, David", "Essays moral and political"));
  CHECK(search(c, "ess").size() == 1);
  CHECK(search(c, "es").empty());
  CHECK(search(c, "esays").size() == 1);    // deletion
  CHECK(search(c, "essyas").size() == 1);   // adjacent swap
  CHECK(search(c, "morall").size() == 1);   // insertion, both long enough
  CHECK(search(c, "humr").empty());         // too short for fuzzy
  CHECK(search(c, "politcs").empty());      // two edits
  CHECK(damerau_levenshtein(U"essays", U"essyas") == 1);
  CHECK(damerau_levenshtein(U"kitten", U"sitting") == 3);
  CHECK(damerau_levenshtein(U"", U"abc") == 3);
}

TEST_CASE("random catalogues agree with brute-force scoring; results capped at 100") {
  std::mt19937_64 rng(5);
  const std::vector<std::string> words{"essays", "treatise", "human", "nature", "moral", "political", "history",
                                       "england", "discourse", "hume", "david", "smith", "adam", "letters", "essay",
                                       "esays", "natures", "humane", "politick", "histories"};
  for (int round = 0; round < 20; ++round) {
    Corpus c;
    for (int i = 0; i < 200; ++i) {
      std::string title;
      const int n = 1 + static_cast<int>(rng() % 5);
      for (int w = 0; w < n; ++w) title += words[rng() % words.size()] + (w + 1 < n ? " " : "");
      c.add(make_doc("d" + std::to_string(1000 + i), 1650 + static_cast<int>(rng() % 150),
                     words[rng() % words.size()] + ", " + words[rng() % words.size()], title));
    }
    std::string q;
    for (int t = 0; t < 3; ++t) q += words[rng() % words.size()] + " ";
    auto terms = split_query(q);
    const auto r = search(c, q);
    CHECK(r.size() <= 100);
    std::vector<std::tuple<int, int, std::string>> expected;
    for (const auto& d : c.documents()) {
      const int s = brute_score(terms, d.meta);
      if (s > 0) expected.emplace_back(-s, d.meta.year, d.meta.doc_id);
    }
    std::sort(expected.begin(), expected.end());
    const std::size_t keep = std::min<std::size_t>(100, expected.size());
    REQUIRE(r.size() == keep);
    for (std::size_t i = 0; i < keep; ++i) {
      CHECK(r[i].doc_id == std::get<2>(expected[i]));
      CHECK(r[i].score == -std::get<0>(expected[i]));
    }
    if (expected.size() > 100) {
      for (std::size_t i = 100; i < expected.size(); ++i) CHECK(-std::get<0>(expected[i]) <= r.back().score);
    }
  }
}

TEST_CASE("150 matching documents are cut to 100") {
  Corpus c;
  for (int i = 0; i < 150; ++i) {
    c.add(make_doc("m" + std::to_string(i), 1700 + i % 50, "Author", i < 40 ? "essays on trade" : "essays"));
  }
  const auto r = search(c, "essays trade");
  REQUIRE(r.size() == 100);
  std::size_t twos = 0;
  for (const auto& x : r) twos += x.score == 2;
  CHECK(twos == 40);
}

TEST_CASE("unmatched documents never change results") {
  Corpus a, b;
  for (int i = 0; i < 5; ++i) {
    a.add(make_doc("x" + std::to_string(i), 1700 + i, "Hume, David", "Essays"));
    b.add(make_doc("x" + std::to_string(i), 1700 + i, "Hume, David", "Essays"));
  }
  b.add(make_doc("zz", 1600, "Nobody", "Nothing relevant"));
  const auto ra = search(a, "hume essays"), rb = search(b, "hume essays");
  REQUIRE(ra.size() == rb.size());
  for (std::size_t i = 0; i < ra.size(); ++i) CHECK(ra[i].doc_id == rb[i].doc_id);
}

TEST_CASE("re-sorting is stable so earlier orderings carry over") {
  std::vector<SearchResult> rows{
      {"a", 1760, "Smith", "t1", 1}, {"b", 1750, "Hume", "t2", 2}, {"c", 1740, "Smith", "t3", 1},
      {"d", 1755, "Hume", "t4", 1},  {"e", 1745, "Adams", "t5", 3},
  };
  const auto by_year = resort(rows, "year", SortOrder::Asc);
  CHECK(resort(by_year, "year", SortOrder::Asc) == by_year);
  const auto by_author = resort(by_year, "author", SortOrder::Asc);
  std::vector<std::string> order;
  for (const auto& r : by_author) order.push_back(r.doc_id);
  CHECK(order == std::vector<std::string>{"e", "b", "d", "c", "a"});
  const auto with_previous = resort(rows, "author", SortOrder::Asc, SortKey{"year", SortOrder::Asc});
  CHECK(with_previous == by_author);
  const auto desc = resort(rows, "score", SortOrder::Desc);
  CHECK(desc.front().doc_id == "e");
  CHECK_THROWS_AS(resort(rows, "colour", SortOrder::Asc), std::invalid_argument);

  std::mt19937_64 rng(9);
  for (int round = 0; round < 200; ++round) {
    std::vector<SearchResult> v;
    for (int i = 0; i < 30; ++i) {
      v.push_back({"id" + std::to_string(rng() % 10), 1700 + static_cast<int>(rng() % 5),
                   std::string(1, static_cast<char>('A' + rng() % 4)), "t", 1 + static_cast<int>(rng() % 3)});
    }
    std::vector<std::size_t> idx(v.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) {
      return std::make_pair(v[x].author, x) < std::make_pair(v[y].author, y);
    });
    const auto got = resort(v, "author", SortOrder::Asc);
    for (std::size_t i = 0; i < v.size(); ++i) CHECK(got[i] == v[idx[i]]);
    std::sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) {
      return std::make_pair(-v[x].year, x) < std::make_pair(-v[y].year, y);
    });
    const auto got_desc = resort(v, "year", SortOrder::Desc);
    for (std::size_t i = 0; i < v.size(); ++i) CHECK(got_desc[i] == v[idx[i]]);
  }
}

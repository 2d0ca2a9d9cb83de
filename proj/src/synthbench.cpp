// SPDX-License-Identifier: Apache-2.0
#include "textreuse/synthbench.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "textreuse/tsv.hpp"

namespace textreuse {

namespace fs = std::filesystem;

namespace {

// Fraction of background characters drawn from the unigram distribution
// instead of the trigram context.
constexpr double kSmoothing = 0.1;
// Minimum background between two placements in one document; wider than the
// defragmentation gap limit so separate plants never merge.
constexpr std::size_t kPlacementMargin = 250;
constexpr int kMaxRetries = 1000;

std::uint64_t context_key(char32_t a, char32_t b) { return (std::uint64_t{a} << 21) | b; }

std::size_t uniform_index(std::mt19937_64& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

int uniform_int(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

double uniform_real(std::mt19937_64& rng) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng); }

char32_t random_letter(std::mt19937_64& rng) { return U'a' + static_cast<char32_t>(uniform_index(rng, 26)); }

bool is_space(char32_t c) { return c == U' ' || c == U'\n' || c == U'\t' || c == U'\r'; }

const char* const kAuthors[] = {
    "Ashby, Thomas",     "Barrow, Eleanor",  "Carew, John",      "Dalton, Mary",     "Everard, William",
    "Fenwick, Robert",   "Gale, Samuel",     "Harley, Anne",     "Ingram, Edward",   "Jessop, Henry",
    "Kemble, Sarah",     "Lowther, James",   "Marlow, Richard",  "Norris, Elizabeth", "Oakley, George",
    "Pryce, Charles",    "Quarles, Francis", "Rowe, Nicholas",   "Stanhope, Philip", "Tindal, Matthew",
    "Underhill, Jane",   "Vane, Henry",      "Walpole, Horace",  "Yorke, Joseph",
};

const char* const kTitleHeads[] = {
    "An Essay on", "Observations upon", "A Treatise of", "Reflections on", "A Discourse concerning",
    "Letters on", "Thoughts upon", "An Inquiry into",
};

const char* const kTitleTopics[] = {
    "Trade and Commerce", "Moral Sentiments", "the Study of History", "Natural Philosophy",
    "Taste in Writing", "Parties", "the Poor", "Education", "Gardens", "Government", "Religion",
    "the Human Understanding",
};

struct PlannedPlacement {
  int plant_index;
  std::size_t nominal_start;
  std::size_t nominal_length;
  bool burst;
};

bool fits(const std::vector<PlannedPlacement>& existing, std::size_t start, std::size_t length) {
  for (const auto& p : existing) {
    const std::size_t a_end = p.nominal_start + p.nominal_length + kPlacementMargin;
    const std::size_t b_end = start + length + kPlacementMargin;
    if (start < a_end && p.nominal_start < b_end) return false;
  }
  return true;
}

std::vector<PageToken> layout_pages(std::u32string_view text, std::size_t page_chars) {
  constexpr int kLineChars = 64;
  constexpr int kCharWidth = 9;
  constexpr int kLineHeight = 22;
  std::vector<PageToken> tokens;
  int page = 1;
  std::size_t page_start = 0;
  int line = 0;
  int column = 0;
  std::size_t i = 0;
  while (i < text.size()) {
    if (is_space(text[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && !is_space(text[j])) ++j;
    if (i - page_start >= page_chars && !tokens.empty()) {
      ++page;
      page_start = i;
      line = 0;
      column = 0;
    }
    const int len = static_cast<int>(std::min<std::size_t>(j - i, kLineChars));
    if (column > 0 && column + len > kLineChars) {
      ++line;
      column = 0;
    }
    PageToken t;
    t.char_start = i;
    t.char_end = j;
    t.page = page;
    t.box = {72 + column * kCharWidth, 96 + line * kLineHeight, len * kCharWidth, 18};
    tokens.push_back(t);
    column += len + 1;
    i = j;
  }
  return tokens;
}

std::vector<Insertion> plan_insertions(const std::vector<PageToken>& tokens, std::mt19937_64& rng) {
  if (tokens.size() < 2) return {};
  const int count = uniform_int(rng, 1, 3);
  std::set<std::size_t> starts;
  for (int i = 0; i < count; ++i) starts.insert(tokens[uniform_index(rng, tokens.size())].char_start);
  std::vector<Insertion> out;
  for (std::size_t s : starts) out.push_back({s, static_cast<std::size_t>(uniform_int(rng, 8, 40))});
  return out;
}

std::string format_page_map(const GeneratedDoc& doc) {
  std::string out = "char_start\tchar_end\tpage\tx\ty\tw\th\n";
  std::optional<OffsetShiftTable> shifts;
  if (!doc.insertions.empty()) shifts.emplace(doc.insertions, doc.text.size());
  char buf[160];
  for (const auto& t : doc.tokens) {
    std::size_t s = t.char_start;
    std::size_t e = t.char_end;
    if (shifts) {
      s = shifts->raw_to_annotated(s);
      e = shifts->raw_to_annotated(e - 1) + 1;
    }
    std::snprintf(buf, sizeof buf, "%zu\t%zu\t%d\t%d\t%d\t%d\t%d\n", s, e, t.page, t.box.x, t.box.y, t.box.w,
                  t.box.h);
    out += buf;
  }
  return out;
}

}  // namespace

void GenSpec::validate() const {
  auto fail = [](const std::string& what) { throw std::invalid_argument("invalid spec: " + what); };
  if (num_docs < 1) fail("num_docs must be >= 1");
  if (doc_length_range.first < 1 || doc_length_range.first > doc_length_range.second) fail("doc_length_range");
  if (num_plants < 0) fail("num_plants must be >= 0");
  if (plant_length_range.first < 1 || plant_length_range.first > plant_length_range.second) {
    fail("plant_length_range");
  }
  if (num_plants > 0 && plant_length_range.second > doc_length_range.first) {
    fail("plant_length_range must fit within the shortest document");
  }
  if (!(noise_rate >= 0.0 && noise_rate < 1.0)) fail("noise_rate must be in [0, 1)");
  if (copies_per_plant < 2) fail("copies_per_plant must be >= 2");
  if (num_plants > 0 && copies_per_plant > num_docs) fail("copies_per_plant exceeds num_docs");
  for (const auto& c : clique_specs) {
    if (c.size < 2 || c.size > num_docs) fail("clique size must be in [2, num_docs]");
    if (c.passage_length < 1 || c.passage_length > doc_length_range.first) {
      fail("clique passage_length must fit within the shortest document");
    }
  }
  if (burst_length < 0) fail("burst_length must be >= 0");
  if (burst_length > 0 && burst_length >= plant_length_range.first) fail("burst_length must be shorter than plants");
  if (page_chars == 0) fail("page_chars must be positive");
  if (!(annotated_fraction >= 0.0 && annotated_fraction <= 1.0)) fail("annotated_fraction must be in [0, 1]");
  if (year_range.first < kMinYear || year_range.second > kMaxYear || year_range.first > year_range.second) {
    fail("year_range");
  }
}

TrigramModel::TrigramModel(std::u32string_view training) : training_(training) {
  if (training_.size() < 3) throw std::invalid_argument("source text too short for a trigram model");
  std::map<std::uint64_t, std::vector<char32_t>> table;
  for (std::size_t i = 2; i < training_.size(); ++i) {
    table[context_key(training_[i - 2], training_[i - 1])].push_back(training_[i]);
  }
  contexts_.assign(std::make_move_iterator(table.begin()), std::make_move_iterator(table.end()));
}

std::u32string TrigramModel::sample(std::size_t length, std::mt19937_64& rng) {
  if (!started_) {
    const std::size_t i = uniform_index(rng, training_.size() - 2);
    c1_ = training_[i];
    c2_ = training_[i + 1];
    started_ = true;
  }
  std::u32string out;
  out.reserve(length);
  while (out.size() < length) {
    char32_t next = 0;
    if (uniform_real(rng) >= kSmoothing) {
      const auto key = context_key(c1_, c2_);
      auto it = std::lower_bound(contexts_.begin(), contexts_.end(), key,
                                 [](const auto& entry, std::uint64_t k) { return entry.first < k; });
      if (it != contexts_.end() && it->first == key) next = it->second[uniform_index(rng, it->second.size())];
    }
    if (next == 0) next = training_[uniform_index(rng, training_.size())];
    out.push_back(next);
    c1_ = c2_;
    c2_ = next;
  }
  return out;
}

std::u32string apply_noise(std::u32string_view clean, double rate, std::mt19937_64& rng) {
  std::u32string out;
  out.reserve(clean.size() + clean.size() / 8);
  for (std::size_t i = 0; i < clean.size(); ++i) {
    const char32_t c = clean[i];
    if (rate <= 0.0 || uniform_real(rng) >= rate) {
      out.push_back(c);
      continue;
    }
    const double kind = uniform_real(rng);
    if (kind < 0.7) {
      if (uniform_real(rng) < 0.6) {
        switch (c) {
          case U's': out.push_back(uniform_real(rng) < 0.5 ? U'f' : U'ſ'); continue;
          case U'ſ': out.push_back(U'f'); continue;
          case U'f': out.push_back(U's'); continue;
          case U'e': out.push_back(U'c'); continue;
          case U'c': out.push_back(U'e'); continue;
          case U'm': out += U"rn"; continue;
          case U'n': out.push_back(U'u'); continue;
          case U'u': out.push_back(U'n'); continue;
          case U'i': out.push_back(U'l'); continue;
          case U'l': out.push_back(U'1'); continue;
          case U'h': out.push_back(U'b'); continue;
          case U'o': out.push_back(U'c'); continue;
          case U'r':
            if (i + 1 < clean.size() && clean[i + 1] == U'n') {
              out.push_back(U'm');
              ++i;
              continue;
            }
            break;
          default: break;
        }
      }
      char32_t sub = random_letter(rng);
      if (sub == c) sub = sub == U'z' ? U'a' : sub + 1;
      out.push_back(sub);
    } else if (kind < 0.85) {
      out.push_back(c);
      out.push_back(uniform_real(rng) < 0.8 ? random_letter(rng) : U'.');
    }
    // else: deletion
  }
  return out;
}

GeneratedCorpus generate(const GenSpec& spec) {
  spec.validate();
  std::mt19937_64 rng(spec.seed);

  std::u32string training;
  if (spec.source_text.empty()) {
    training = *decode_utf8(builtin_source_text());
  } else {
    auto decoded = decode_utf8(read_file(spec.source_text));
    if (!decoded) throw GenerationError("source text is not valid UTF-8: " + spec.source_text);
    training = std::move(*decoded);
  }
  TrigramModel model(training);

  const auto n_docs = static_cast<std::size_t>(spec.num_docs);
  std::vector<DocMetadata> meta(n_docs);
  std::vector<std::size_t> target_length(n_docs);
  for (std::size_t d = 0; d < n_docs; ++d) {
    char id[16];
    std::snprintf(id, sizeof id, "d%04zu", d + 1);
    meta[d].doc_id = id;
    meta[d].year = uniform_int(rng, spec.year_range.first, spec.year_range.second);
    meta[d].author = uniform_real(rng) < 0.1 ? "" : kAuthors[uniform_index(rng, std::size(kAuthors))];
    meta[d].title = std::string(kTitleHeads[uniform_index(rng, std::size(kTitleHeads))]) + " " +
                    kTitleTopics[uniform_index(rng, std::size(kTitleTopics))];
    meta[d].collection = "SYN";
    target_length[d] = static_cast<std::size_t>(uniform_int(rng, spec.doc_length_range.first, spec.doc_length_range.second));
  }

  struct PlantPlan {
    std::u32string text;
    bool clique;
  };
  std::vector<PlantPlan> plants;
  std::vector<std::vector<PlannedPlacement>> per_doc(n_docs);
  std::vector<bool> year_fixed(n_docs, false);
  std::vector<std::size_t> order(n_docs);
  for (std::size_t d = 0; d < n_docs; ++d) order[d] = d;

  auto place = [&](std::size_t length, std::size_t copies, bool clique) {
    const int plant_index = static_cast<int>(plants.size());
    for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
      std::shuffle(order.begin(), order.end(), rng);
      std::vector<std::size_t> docs(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(copies));
      std::vector<std::size_t> starts;
      bool ok = true;
      for (std::size_t d : docs) {
        const std::size_t start = uniform_index(rng, target_length[d] - length + 1);
        if (!fits(per_doc[d], start, length)) {
          ok = false;
          break;
        }
        starts.push_back(start);
      }
      if (!ok) continue;
      if (clique) {
        // Distinct years: redraw unfixed duplicates, give up on fixed collisions.
        std::set<int> fixed_years;
        for (std::size_t d : docs) {
          if (year_fixed[d] && !fixed_years.insert(meta[d].year).second) ok = false;
        }
        if (!ok) continue;
        const int span = spec.year_range.second - spec.year_range.first + 1;
        if (static_cast<std::size_t>(span) < copies) throw GenerationError("year range too narrow for clique");
        std::set<int> used = fixed_years;
        for (std::size_t d : docs) {
          if (year_fixed[d]) continue;
          while (used.count(meta[d].year)) meta[d].year = uniform_int(rng, spec.year_range.first, spec.year_range.second);
          used.insert(meta[d].year);
        }
        for (std::size_t d : docs) year_fixed[d] = true;
      }
      const std::size_t burst_copy = spec.burst_length > 0 && !clique ? 1 : copies;
      for (std::size_t c = 0; c < copies; ++c) {
        per_doc[docs[c]].push_back({plant_index, starts[c], length, c == burst_copy});
      }
      plants.push_back({model.sample(length, rng), clique});
      return;
    }
    throw GenerationError("could not place plant " + std::to_string(plant_index + 1) + " without overlap after " +
                          std::to_string(kMaxRetries) + " retries");
  };

  for (const auto& c : spec.clique_specs) {
    place(static_cast<std::size_t>(c.passage_length), static_cast<std::size_t>(c.size), true);
  }
  for (int p = 0; p < spec.num_plants; ++p) {
    const auto length = static_cast<std::size_t>(uniform_int(rng, spec.plant_length_range.first, spec.plant_length_range.second));
    place(length, static_cast<std::size_t>(spec.copies_per_plant), false);
  }

  GeneratedCorpus out;
  out.truth.plants.resize(plants.size());
  for (std::size_t p = 0; p < plants.size(); ++p) {
    auto& pt = out.truth.plants[p];
    pt.plant_id = static_cast<int>(p + 1);
    pt.length = plants[p].text.size();
    pt.text_hash = fnv1a(encode_utf8(plants[p].text));
    pt.clique = plants[p].clique;
  }

  for (std::size_t d = 0; d < n_docs; ++d) {
    auto& planned = per_doc[d];
    std::sort(planned.begin(), planned.end(),
              [](const auto& a, const auto& b) { return a.nominal_start < b.nominal_start; });
    GeneratedDoc doc;
    doc.meta = meta[d];
    std::size_t cursor = 0;
    for (const auto& pl : planned) {
      doc.text += model.sample(pl.nominal_start - cursor, rng);
      std::u32string copy = plants[static_cast<std::size_t>(pl.plant_index)].text;
      if (pl.burst) {
        const std::size_t b = static_cast<std::size_t>(spec.burst_length);
        const std::size_t from = (copy.size() - b) / 2;
        for (std::size_t i = from; i < from + b; ++i) copy[i] = random_letter(rng);
      }
      copy = apply_noise(copy, spec.noise_rate, rng);
      const std::size_t start = doc.text.size();
      doc.text += copy;
      out.truth.plants[static_cast<std::size_t>(pl.plant_index)].placements.push_back(
          {doc.meta.doc_id, start, doc.text.size()});
      cursor = pl.nominal_start + pl.nominal_length;
    }
    if (cursor < target_length[d]) doc.text += model.sample(target_length[d] - cursor, rng);
    if (doc.text.empty()) doc.text += model.sample(1, rng);
    doc.tokens = layout_pages(doc.text, spec.page_chars);
    if (uniform_real(rng) < spec.annotated_fraction) doc.insertions = plan_insertions(doc.tokens, rng);
    out.truth.doc_ids.push_back(doc.meta.doc_id);
    out.docs.push_back(std::move(doc));
  }
  // Placements in document order within each plant.
  for (auto& pt : out.truth.plants) {
    std::sort(pt.placements.begin(), pt.placements.end(), [](const Placement& a, const Placement& b) {
      return std::tie(a.doc_id, a.start) < std::tie(b.doc_id, b.start);
    });
  }
  return out;
}

std::size_t GeneratedCorpus::total_chars() const {
  std::size_t n = 0;
  for (const auto& d : docs) n += d.text.size();
  return n;
}

Corpus GeneratedCorpus::to_corpus() const {
  Corpus corpus;
  for (const auto& g : docs) {
    Document doc;
    doc.meta = g.meta;
    doc.text = *Utf8Text::from_utf8(encode_utf8(g.text));
    if (!g.insertions.empty()) doc.shift_table = OffsetShiftTable(g.insertions, g.text.size());
    if (!g.tokens.empty()) doc.page_map = PageMap(g.tokens);
    corpus.add(std::move(doc));
  }
  return corpus;
}

void GeneratedCorpus::write(const fs::path& dir) const {
  fs::create_directories(dir / "texts");
  fs::create_directories(dir / "pagemaps");
  fs::create_directories(dir / "annotations");
  std::vector<DocMetadata> rows;
  std::string manifest = "doc_id\tlength\n";
  for (const auto& d : docs) {
    rows.push_back(d.meta);
    write_file(dir / "texts" / (d.meta.doc_id + ".txt"), encode_utf8(d.text));
    if (!d.tokens.empty()) write_file(dir / "pagemaps" / (d.meta.doc_id + ".tsv"), format_page_map(d));
    if (!d.insertions.empty()) {
      std::string ann = "raw_position\tinserted_length\n";
      for (const auto& ins : d.insertions) {
        ann += std::to_string(ins.raw_position) + "\t" + std::to_string(ins.inserted_length) + "\n";
      }
      write_file(dir / "annotations" / (d.meta.doc_id + ".tsv"), ann);
    }
    manifest += d.meta.doc_id + "\t" + std::to_string(d.text.size()) + "\n";
  }
  manifest += "TOTAL\t" + std::to_string(total_chars()) + "\n";
  write_file(dir / "metadata.tsv", format_metadata(rows));
  write_file(dir / "truth.tsv", format_truth(truth));
  std::string plant_rows = "plant_id\tlength\ttext_hash\tclique\n";
  for (const auto& p : truth.plants) {
    char hash[24];
    std::snprintf(hash, sizeof hash, "%016llx", static_cast<unsigned long long>(p.text_hash));
    plant_rows += std::to_string(p.plant_id) + "\t" + std::to_string(p.length) + "\t" + hash + "\t" +
                  (p.clique ? "1" : "0") + "\n";
  }
  write_file(dir / "plants.tsv", plant_rows);
  write_file(dir / "manifest.tsv", manifest);
}

std::string format_truth(const GroundTruth& truth) {
  std::string out = "plant_id\tdoc_id\tstart\tend\n";
  for (const auto& p : truth.plants) {
    for (const auto& pl : p.placements) {
      out += std::to_string(p.plant_id) + "\t" + pl.doc_id + "\t" + std::to_string(pl.start) + "\t" +
             std::to_string(pl.end) + "\n";
    }
  }
  return out;
}

GroundTruth parse_truth(std::string_view tsv, std::string_view label) {
  GroundTruth truth;
  std::map<int, std::size_t> index;
  std::set<std::string> ids;
  read_tsv(tsv, label, "plant_id\tdoc_id\tstart\tend", [&](const auto& f, std::size_t line) {
    const auto id = parse_int(f[0], label, line, "plant_id");
    const auto start = parse_int(f[2], label, line, "start");
    const auto end = parse_int(f[3], label, line, "end");
    if (f[1].empty()) throw ParseError(std::string(label), line, "empty doc_id");
    if (start < 0 || end <= start) throw ParseError(std::string(label), line, "empty or negative span");
    auto [it, fresh] = index.try_emplace(static_cast<int>(id), truth.plants.size());
    if (fresh) {
      truth.plants.emplace_back();
      truth.plants.back().plant_id = static_cast<int>(id);
    }
    auto& plant = truth.plants[it->second];
    plant.placements.push_back({std::string(f[1]), static_cast<std::size_t>(start), static_cast<std::size_t>(end)});
    plant.length = std::max(plant.length, static_cast<std::size_t>(end - start));
    ids.emplace(f[1]);
  });
  truth.doc_ids.assign(ids.begin(), ids.end());
  return truth;
}

GroundTruth read_truth(const fs::path& truth_tsv) {
  GroundTruth truth = parse_truth(read_file(truth_tsv), truth_tsv.string());
  const fs::path meta_path = truth_tsv.parent_path() / "metadata.tsv";
  if (fs::is_regular_file(meta_path)) {
    std::set<std::string> ids(truth.doc_ids.begin(), truth.doc_ids.end());
    for (const auto& m : parse_metadata(read_file(meta_path), meta_path.string())) ids.insert(m.doc_id);
    truth.doc_ids.assign(ids.begin(), ids.end());
  }
  return truth;
}

EvalReport evaluate(std::span<const Edge> edges, const GroundTruth& truth, double iou_threshold) {
  const std::set<std::string_view> known(truth.doc_ids.begin(), truth.doc_ids.end());

  struct TruthPair {
    std::size_t plant;
    Placement a;  // a.doc_id < b.doc_id
    Placement b;
    bool recalled = false;
  };
  std::vector<TruthPair> pairs;
  for (std::size_t p = 0; p < truth.plants.size(); ++p) {
    const auto& pl = truth.plants[p].placements;
    for (std::size_t i = 0; i < pl.size(); ++i) {
      for (std::size_t j = i + 1; j < pl.size(); ++j) {
        if (pl[i].doc_id == pl[j].doc_id) continue;
        if (pl[i].doc_id < pl[j].doc_id) {
          pairs.push_back({p, pl[i], pl[j]});
        } else {
          pairs.push_back({p, pl[j], pl[i]});
        }
      }
    }
  }
  std::map<std::pair<std::string_view, std::string_view>, std::vector<std::size_t>> by_docs;
  for (std::size_t i = 0; i < pairs.size(); ++i) by_docs[{pairs[i].a.doc_id, pairs[i].b.doc_id}].push_back(i);

  EvalReport report;
  report.edge_count = edges.size();
  report.truth_pairs = pairs.size();
  for (const auto& raw : edges) {
    if (!known.count(raw.t1_id)) throw Error("edge " + std::to_string(raw.edge_id) + " names unknown document " + raw.t1_id);
    if (!known.count(raw.t2_id)) throw Error("edge " + std::to_string(raw.edge_id) + " names unknown document " + raw.t2_id);
    Edge e = raw;
    canonicalize(e);
    auto it = by_docs.find({e.t1_id, e.t2_id});
    if (it == by_docs.end()) continue;
    bool tp = false;
    for (std::size_t idx : it->second) {
      auto& tpair = pairs[idx];
      if (span_iou(e.t1_start, e.t1_end, tpair.a.start, tpair.a.end) >= iou_threshold &&
          span_iou(e.t2_start, e.t2_end, tpair.b.start, tpair.b.end) >= iou_threshold) {
        tpair.recalled = true;
        tp = true;
      }
    }
    if (tp) ++report.true_positive_edges;
  }

  report.per_plant.resize(truth.plants.size());
  for (std::size_t p = 0; p < truth.plants.size(); ++p) report.per_plant[p].plant_id = truth.plants[p].plant_id;
  for (const auto& tpair : pairs) {
    ++report.per_plant[tpair.plant].pairs;
    if (tpair.recalled) {
      ++report.per_plant[tpair.plant].recalled;
      ++report.recalled_pairs;
    }
  }
  report.recall = pairs.empty() ? 1.0 : static_cast<double>(report.recalled_pairs) / static_cast<double>(pairs.size());
  report.zero_edges = edges.empty();
  report.precision = edges.empty() ? 1.0
                                   : static_cast<double>(report.true_positive_edges) / static_cast<double>(edges.size());
  return report;
}

std::string format_eval_tsv(const EvalReport& report) {
  std::string out = "plant_id\tpairs\trecalled\n";
  for (const auto& p : report.per_plant) {
    out += std::to_string(p.plant_id) + "\t" + std::to_string(p.pairs) + "\t" + std::to_string(p.recalled) + "\n";
  }
  return out;
}

std::string format_eval_summary(const EvalReport& report) {
  std::ostringstream out;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", report.recall);
  out << "recall     " << buf << "  (" << report.recalled_pairs << "/" << report.truth_pairs << " truth pairs)\n";
  std::snprintf(buf, sizeof buf, "%.4f", report.precision);
  out << "precision  " << buf << "  (" << report.true_positive_edges << "/" << report.edge_count << " edges)";
  if (report.zero_edges) out << "  [no edges: precision undefined, reported as 1.0]";
  out << "\n";
  return out.str();
}

std::uint64_t fnv1a(std::string_view bytes) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace textreuse

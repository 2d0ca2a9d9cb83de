// SPDX-License-Identifier: Apache-2.0
// Reader for the flat TOML subset used by generator spec files.

#include <cctype>
#include <charconv>
#include <set>
#include <string>
#include <vector>

#include "textreuse/synthbench.hpp"
#include "textreuse/tsv.hpp"

namespace textreuse {

namespace {

struct Value {
  enum class Kind { Integer, Real, String, Boolean, Array } kind = Kind::Integer;
  std::int64_t integer = 0;
  double real = 0.0;
  std::string text;
  bool boolean = false;
  std::vector<Value> items;
};

class LineParser {
 public:
  LineParser(std::string_view src, std::string label, std::size_t line)
      : src_(src), label_(std::move(label)), line_(line) {}

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(label_, line_, what); }

  void skip_space() {
    while (pos_ < src_.size() && (src_[pos_] == ' ' || src_[pos_] == '\t')) ++pos_;
  }

  bool at_end_or_comment() {
    skip_space();
    return pos_ >= src_.size() || src_[pos_] == '#';
  }

  std::string key() {
    skip_space();
    const std::size_t begin = pos_;
    while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) ++pos_;
    if (begin == pos_) fail("expected a key");
    std::string k(src_.substr(begin, pos_ - begin));
    skip_space();
    if (pos_ >= src_.size() || src_[pos_] != '=') fail("expected '=' after " + k);
    ++pos_;
    return k;
  }

  Value value() {
    skip_space();
    if (pos_ >= src_.size()) fail("missing value");
    const char c = src_[pos_];
    Value v;
    if (c == '[') {
      ++pos_;
      v.kind = Value::Kind::Array;
      skip_space();
      if (pos_ < src_.size() && src_[pos_] == ']') {
        ++pos_;
        return v;
      }
      for (;;) {
        v.items.push_back(value());
        skip_space();
        if (pos_ >= src_.size()) fail("unterminated array");
        if (src_[pos_] == ',') {
          ++pos_;
          skip_space();
          if (pos_ < src_.size() && src_[pos_] == ']') {
            ++pos_;
            return v;
          }
          continue;
        }
        if (src_[pos_] == ']') {
          ++pos_;
          return v;
        }
        fail("expected ',' or ']' in array");
      }
    }
    if (c == '"') {
      ++pos_;
      v.kind = Value::Kind::String;
      while (pos_ < src_.size() && src_[pos_] != '"') {
        if (src_[pos_] == '\\' && pos_ + 1 < src_.size()) {
          ++pos_;
          const char e = src_[pos_];
          v.text.push_back(e == 'n' ? '\n' : e == 't' ? '\t' : e);
        } else {
          v.text.push_back(src_[pos_]);
        }
        ++pos_;
      }
      if (pos_ >= src_.size()) fail("unterminated string");
      ++pos_;
      return v;
    }
    const std::size_t begin = pos_;
    while (pos_ < src_.size() && src_[pos_] != ',' && src_[pos_] != ']' && src_[pos_] != '#' && src_[pos_] != ' ' &&
           src_[pos_] != '\t') {
      ++pos_;
    }
    std::string tok(src_.substr(begin, pos_ - begin));
    std::erase(tok, '_');
    if (tok == "true" || tok == "false") {
      v.kind = Value::Kind::Boolean;
      v.boolean = tok == "true";
      return v;
    }
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    if (tok.find_first_of(".eE") == std::string::npos) {
      v.kind = Value::Kind::Integer;
      auto [p, ec] = std::from_chars(first, last, v.integer);
      if (ec == std::errc() && p == last) return v;
    } else {
      v.kind = Value::Kind::Real;
      auto [p, ec] = std::from_chars(first, last, v.real);
      if (ec == std::errc() && p == last) return v;
    }
    fail("bad value '" + tok + "'");
  }

 private:
  std::string_view src_;
  std::string label_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

}  // namespace

GenSpec parse_gen_spec(std::string_view toml, std::string_view label) {
  GenSpec spec;
  std::set<std::string> seen;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= toml.size()) {
    const std::size_t nl = toml.find('\n', pos);
    std::string_view line = toml.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? toml.size() + 1 : nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    LineParser p(line, std::string(label), line_no);
    if (p.at_end_or_comment()) continue;
    const std::string key = p.key();
    const Value v = p.value();
    if (!p.at_end_or_comment()) p.fail("trailing characters after value");
    if (!seen.insert(key).second) p.fail("duplicate key " + key);

    auto as_int = [&](const Value& x) -> std::int64_t {
      if (x.kind != Value::Kind::Integer) p.fail(key + ": expected an integer");
      return x.integer;
    };
    auto as_real = [&](const Value& x) -> double {
      if (x.kind == Value::Kind::Integer) return static_cast<double>(x.integer);
      if (x.kind != Value::Kind::Real) p.fail(key + ": expected a number");
      return x.real;
    };
    auto as_pair = [&](const Value& x) -> std::pair<int, int> {
      if (x.kind != Value::Kind::Array || x.items.size() != 2) p.fail(key + ": expected [min, max]");
      return {static_cast<int>(as_int(x.items[0])), static_cast<int>(as_int(x.items[1]))};
    };

    if (key == "num_docs") {
      spec.num_docs = static_cast<int>(as_int(v));
    } else if (key == "doc_length_range") {
      spec.doc_length_range = as_pair(v);
    } else if (key == "num_plants") {
      spec.num_plants = static_cast<int>(as_int(v));
    } else if (key == "plant_length_range") {
      spec.plant_length_range = as_pair(v);
    } else if (key == "noise_rate") {
      spec.noise_rate = as_real(v);
    } else if (key == "clique_specs" || key == "cliques") {
      if (v.kind != Value::Kind::Array) p.fail(key + ": expected an array of [size, passage_length]");
      spec.clique_specs.clear();
      for (const auto& item : v.items) {
        const auto [size, length] = as_pair(item);
        spec.clique_specs.push_back({size, length});
      }
    } else if (key == "seed") {
      const auto s = as_int(v);
      if (s < 0) p.fail("seed must be non-negative");
      spec.seed = static_cast<std::uint64_t>(s);
    } else if (key == "source_text") {
      if (v.kind != Value::Kind::String) p.fail("source_text: expected a string");
      spec.source_text = v.text;
    } else if (key == "copies_per_plant") {
      spec.copies_per_plant = static_cast<int>(as_int(v));
    } else if (key == "burst_length") {
      spec.burst_length = static_cast<int>(as_int(v));
    } else if (key == "page_chars") {
      const auto n = as_int(v);
      if (n <= 0) p.fail("page_chars must be positive");
      spec.page_chars = static_cast<std::size_t>(n);
    } else if (key == "annotated_fraction") {
      spec.annotated_fraction = as_real(v);
    } else if (key == "year_range") {
      spec.year_range = as_pair(v);
    } else {
      p.fail("unknown key " + key);
    }
  }
  spec.validate();
  return spec;
}

GenSpec read_gen_spec(const std::filesystem::path& path) {
  GenSpec spec = parse_gen_spec(read_file(path), path.string());
  // Relative source paths are taken relative to the spec file.
  if (!spec.source_text.empty() && std::filesystem::path(spec.source_text).is_relative()) {
    spec.source_text = (path.parent_path() / spec.source_text).string();
  }
  return spec;
}

}  // namespace textreuse

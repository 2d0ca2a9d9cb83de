// SPDX-License-Identifier: Apache-2.0
#include "textreuse/tsv.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "textreuse/error.hpp"

namespace textreuse {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return std::move(ss).str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path.string());
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw Error("write failed: " + path.string());
}

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

void read_tsv(std::string_view contents, std::string_view label, std::string_view header,
              const std::function<void(const std::vector<std::string_view>&, std::size_t)>& row) {
  const std::string file(label);
  const std::size_t columns = split_tabs(header).size();
  std::size_t line_no = 0;
  std::size_t pos = 0;
  bool seen_header = false;
  while (pos < contents.size()) {
    std::size_t nl = contents.find('\n', pos);
    if (nl == std::string_view::npos) nl = contents.size();
    std::string_view line = contents.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!seen_header) {
      if (line != header) throw ParseError(file, line_no, "expected header '" + std::string(header) + "'");
      seen_header = true;
      continue;
    }
    if (line.empty()) continue;
    const auto fields = split_tabs(line);
    if (fields.size() != columns) {
      throw ParseError(file, line_no,
                       "expected " + std::to_string(columns) + " columns, got " +
                           std::to_string(fields.size()));
    }
    row(fields, line_no);
  }
  if (!seen_header) throw ParseError(file, 1, "missing header");
}

std::int64_t parse_int(std::string_view field, std::string_view label, std::size_t line,
                       std::string_view column) {
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc() || ptr != field.data() + field.size() || field.empty()) {
    throw ParseError(std::string(label), line,
                     "bad integer in " + std::string(column) + ": '" + std::string(field) + "'");
  }
  return v;
}

double parse_real(std::string_view field, std::string_view label, std::size_t line,
                  std::string_view column) {
  double v = 0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc() || ptr != field.data() + field.size() || field.empty()) {
    throw ParseError(std::string(label), line,
                     "bad number in " + std::string(column) + ": '" + std::string(field) + "'");
  }
  return v;
}

}  // namespace textreuse

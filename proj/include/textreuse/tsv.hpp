// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace textreuse {

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

std::vector<std::string_view> split_tabs(std::string_view line);

/// Line-oriented TSV reader with a fixed header.
///
/// Each data row is handed to `row` with its 1-based line number. Blank
/// trailing lines are ignored; a wrong header or column count raises
/// ParseError naming `label`.
void read_tsv(std::string_view contents, std::string_view label, std::string_view header,
              const std::function<void(const std::vector<std::string_view>&, std::size_t)>& row);

std::int64_t parse_int(std::string_view field, std::string_view label, std::size_t line,
                       std::string_view column);
double parse_real(std::string_view field, std::string_view label, std::size_t line,
                  std::string_view column);

}  // namespace textreuse

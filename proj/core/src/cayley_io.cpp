// Copyright 2026 The nsgroup Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "nsgroup/cayley_io.hpp"

#include <fstream>
#include <sstream>

namespace nsgroup {
namespace {

constexpr std::string_view kLabelPrefix = "# label:";

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

bool is_blank(const std::string& line) { return trim(line).empty(); }

}  // namespace

FiniteGroup read_cayley(std::istream& in, const Limits& limits,
                        bool unchecked) {
  std::string line;
  std::string label = "G";
  std::size_t line_no = 0;
  auto next_content_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      if (!is_blank(line)) return true;
    }
    return false;
  };

  if (!next_content_line()) throw CayleyFormatError("empty cayley input");
  if (line.rfind(kLabelPrefix, 0) == 0) {
    label = trim(std::string_view(line).substr(kLabelPrefix.size()));
    if (!next_content_line()) {
      throw CayleyFormatError("missing order line after label");
    }
  }
  std::size_t n = 0;
  {
    std::istringstream header(line);
    if (!(header >> n) || n == 0) {
      throw CayleyFormatError("line " + std::to_string(line_no) +
                              ": expected a positive order");
    }
    std::string extra;
    if (header >> extra) {
      throw CayleyFormatError("line " + std::to_string(line_no) +
                              ": trailing text after order");
    }
  }
  if (n > limits.group_order) {
    throw OrderCapExceeded("cayley table of order " + std::to_string(n) +
                           " exceeds the group cap " +
                           std::to_string(limits.group_order));
  }
  std::vector<std::vector<Element>> rows;
  rows.reserve(n);
  while (rows.size() < n) {
    if (!next_content_line()) {
      throw CayleyFormatError("expected " + std::to_string(n) +
                              " table rows, got " +
                              std::to_string(rows.size()));
    }
    std::istringstream row_in(line);
    std::vector<Element> row;
    long long v = 0;
    while (row_in >> v) {
      if (v < 0) {
        throw CayleyFormatError("line " + std::to_string(line_no) +
                                ": negative index");
      }
      row.push_back(static_cast<Element>(v));
    }
    if (!row_in.eof()) {
      throw CayleyFormatError("line " + std::to_string(line_no) +
                              ": non-numeric entry");
    }
    if (row.size() != n) {
      throw CayleyFormatError("line " + std::to_string(line_no) + ": expected " +
                              std::to_string(n) + " entries, got " +
                              std::to_string(row.size()));
    }
    rows.push_back(std::move(row));
  }
  if (next_content_line()) {
    throw CayleyFormatError("line " + std::to_string(line_no) +
                            ": unexpected content after table");
  }
  return from_cayley_table(rows, std::move(label), limits, unchecked);
}

FiniteGroup read_cayley_file(const std::filesystem::path& path,
                             const Limits& limits, bool unchecked) {
  std::ifstream in(path);
  if (!in) throw CayleyFormatError("cannot open " + path.string());
  return read_cayley(in, limits, unchecked);
}

void write_cayley(std::ostream& out, const FiniteGroup& g) {
  const std::size_t n = g.order();
  out << kLabelPrefix << ' ' << g.label() << '\n' << n << '\n';
  for (Element a = 0; a < n; ++a) {
    const auto row = g.row(a);
    for (std::size_t b = 0; b < n; ++b) {
      if (b != 0) out << ' ';
      out << row[b];
    }
    out << '\n';
  }
}

std::string to_cayley_string(const FiniteGroup& g) {
  std::ostringstream os;
  write_cayley(os, g);
  return os.str();
}

}  // namespace nsgroup

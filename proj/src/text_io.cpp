// Copyright 2026 The Authors.
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


#include "regflow/text_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "regflow/errors.hpp"

namespace regflow {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

std::vector<Line> lex(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) {
      raw = raw.substr(0, hash);
    }
    std::istringstream is{std::string(raw)};
    Line line{number, {}};
    for (std::string tok; is >> tok;) line.tokens.push_back(tok);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    pos = end + 1;
  }
  return lines;
}

[[noreturn]] void parse_error(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::kParse, "line " + std::to_string(line) + ": " + what);
}

Integer to_integer(const std::string& tok, std::size_t line) {
  std::string_view digits = tok;
  if (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) digits.remove_prefix(1);
  if (digits.empty() ||
      !std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); })) {
    parse_error(line, "expected an integer, found '" + tok + "'");
  }
  return Integer(tok[0] == '+' ? tok.substr(1) : tok, 10);
}

std::size_t to_count(const std::string& tok, std::size_t line) {
  const Integer v = to_integer(tok, line);
  if (v < 0 || !v.fits_ulong_p() || v > 1'000'000) {
    parse_error(line, "expected a size, found '" + tok + "'");
  }
  return v.get_ui();
}

// Reads "rows cols" at lines[at] and the rows after it; consumes all of
// the remaining lines.
IntegerMatrix matrix_from(const std::vector<Line>& lines, std::size_t at,
                          std::size_t last_line) {
  if (at >= lines.size()) parse_error(last_line, "missing \"rows cols\" line");
  const Line& head = lines[at];
  if (head.tokens.size() != 2) parse_error(head.number, "expected \"rows cols\"");
  const std::size_t rows = to_count(head.tokens[0], head.number);
  const std::size_t cols = to_count(head.tokens[1], head.number);
  const std::size_t available = lines.size() - at - 1;
  if (available < rows) {
    throw Error(ErrorCode::kDimension, "expected " + std::to_string(rows) + " rows, found " +
                                           std::to_string(available));
  }
  if (available > rows) parse_error(lines[at + 1 + rows].number, "unexpected extra row");
  std::vector<Integer> entries;
  entries.reserve(rows * cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const Line& l = lines[at + 1 + i];
    if (l.tokens.size() != cols) {
      throw Error(ErrorCode::kDimension, "line " + std::to_string(l.number) + ": expected " +
                                             std::to_string(cols) + " entries, found " +
                                             std::to_string(l.tokens.size()));
    }
    for (const auto& tok : l.tokens) entries.push_back(to_integer(tok, l.number));
  }
  return IntegerMatrix(rows, cols, std::move(entries));
}

std::size_t last_line_of(std::string_view text) {
  return static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n')) + 1;
}

}  // namespace

IntegerMatrix parse_matrix(std::string_view text) {
  return matrix_from(lex(text), 0, last_line_of(text));
}

GramMatrix parse_gram(std::string_view text) {
  const auto lines = lex(text);
  if (lines.empty() || lines[0].tokens.size() != 2 || lines[0].tokens[0] != "gram") {
    parse_error(lines.empty() ? 1 : lines[0].number, "expected \"gram s\" header");
  }
  const std::size_t s = to_count(lines[0].tokens[1], lines[0].number);
  IntegerMatrix m = matrix_from(lines, 1, last_line_of(text));
  if (m.rows() != s || m.cols() != s) {
    throw Error(ErrorCode::kDimension, "gram header announces order " + std::to_string(s) +
                                           " but matrix is " + std::to_string(m.rows()) + "x" +
                                           std::to_string(m.cols()));
  }
  return GramMatrix(std::move(m));
}

namespace {

struct LabelledMatrix {
  std::vector<std::string> labels;
  IntegerMatrix rep;
};

LabelledMatrix labelled_matrix(std::string_view text) {
  const auto lines = lex(text);
  if (lines.empty() || lines[0].tokens.size() != 3 || lines[0].tokens[0] != "matroid") {
    parse_error(lines.empty() ? 1 : lines[0].number, "expected \"matroid r m\" header");
  }
  const std::size_t r = to_count(lines[0].tokens[1], lines[0].number);
  const std::size_t m = to_count(lines[0].tokens[2], lines[0].number);
  std::vector<std::string> labels;
  std::size_t matrix_at = 1;
  if (m > 0) {
    if (lines.size() < 2) parse_error(lines[0].number, "missing label line");
    labels = lines[1].tokens;
    if (labels.size() != m) {
      throw Error(ErrorCode::kDimension, "line " + std::to_string(lines[1].number) +
                                             ": expected " + std::to_string(m) + " labels");
    }
    matrix_at = 2;
  }
  IntegerMatrix rep = matrix_from(lines, matrix_at, last_line_of(text));
  if (rep.rows() != r || rep.cols() != m) {
    throw Error(ErrorCode::kDimension, "matroid header announces " + std::to_string(r) + "x" +
                                           std::to_string(m) + " but matrix is " +
                                           std::to_string(rep.rows()) + "x" +
                                           std::to_string(rep.cols()));
  }
  return {std::move(labels), std::move(rep)};
}

}  // namespace

RegularMatroid parse_matroid(std::string_view text, const Limits& limits) {
  LabelledMatrix lm = labelled_matrix(text);
  return RegularMatroid(std::move(lm.labels), std::move(lm.rep), limits);
}

IntegerMatrix parse_matroid_matrix(std::string_view text) {
  return labelled_matrix(text).rep;
}

std::vector<Edge> parse_graph(std::string_view text) {
  std::vector<Edge> edges;
  for (const Line& l : lex(text)) {
    if (l.tokens.size() != 2) parse_error(l.number, "expected \"tail head\"");
    const Integer tail = to_integer(l.tokens[0], l.number);
    const Integer head = to_integer(l.tokens[1], l.number);
    if (!tail.fits_slong_p() || !head.fits_slong_p()) parse_error(l.number, "vertex id too large");
    edges.emplace_back(tail.get_si(), head.get_si());
  }
  return edges;
}

IntegerVector parse_vector(std::string_view text) {
  std::string flat(text);
  // Every comma must sit between two integers.
  const std::string_view body(flat.data(), std::min(flat.find('#'), flat.size()));
  for (std::size_t at = body.find(','); at != std::string_view::npos; at = body.find(',', at + 1)) {
    const auto before = body.find_last_not_of(" \t\r\n", at == 0 ? std::string_view::npos : at - 1);
    const auto after = body.find_first_not_of(" \t\r\n", at + 1);
    if (at == 0 || before == std::string_view::npos || body[before] == ',' ||
        after == std::string_view::npos || body[after] == ',') {
      parse_error(1, "empty field in vector");
    }
  }
  std::replace(flat.begin(), flat.end(), ',', ' ');
  const auto lines = lex(flat);
  if (lines.size() != 1) parse_error(lines.empty() ? 1 : lines[1].number, "expected one line of integers");
  IntegerVector v;
  for (const auto& tok : lines[0].tokens) v.push_back(to_integer(tok, lines[0].number));
  return v;
}

InputKind detect_kind(std::string_view text) {
  const auto lines = lex(text);
  if (!lines.empty()) {
    if (lines[0].tokens[0] == "matroid") return InputKind::kMatroid;
    if (lines[0].tokens[0] == "gram") return InputKind::kGram;
  }
  return InputKind::kGraph;
}

RegularMatroid parse_regular_matroid(std::string_view text, const Limits& limits) {
  switch (detect_kind(text)) {
    case InputKind::kMatroid:
      return parse_matroid(text, limits);
    case InputKind::kGraph: {
      const auto edges = parse_graph(text);
      return from_graph(edges);
    }
    default:
      throw Error(ErrorCode::kParse, "expected a graph or a matroid file");
  }
}

std::string matroid_text(const RegularMatroid& m) {
  std::ostringstream os;
  os << "matroid " << m.rank() << ' ' << m.size() << '\n';
  if (m.size() > 0) {
    for (std::size_t j = 0; j < m.size(); ++j) os << (j > 0 ? " " : "") << m.ground()[j];
    os << '\n';
  }
  os << m.rep();
  return os.str();
}

std::string gram_text(const GramMatrix& g) {
  return "gram " + std::to_string(g.order()) + "\n" + to_text(g.entries());
}

std::string vector_text(const IntegerVector& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i > 0 ? " " : "") << v[i];
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kParse, "cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace regflow

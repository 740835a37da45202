/*
 * Copyright 2026 The instanton-quiver Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "iq/text_format.hpp"

#include <charconv>
#include <sstream>
#include <vector>

namespace iq {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

std::vector<std::string> split(std::string_view s) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    const auto start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t' && s[i] != '\r') ++i;
    if (i > start) out.emplace_back(s.substr(start, i - start));
  }
  return out;
}

class LineReader {
 public:
  explicit LineReader(std::string_view text) {
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
      auto end = text.find('\n', pos);
      if (end == std::string_view::npos) end = text.size();
      ++number;
      auto tokens = split(text.substr(pos, end - pos));
      if (!tokens.empty() && tokens.front().front() != '#') lines_.push_back({number, std::move(tokens)});
      pos = end + 1;
    }
    end_line_ = number + 1;
  }

  bool done() const { return next_ == lines_.size(); }

  const Line& take(const char* expecting) {
    if (done()) throw ParseError(end_line_, std::string("unexpected end of input, expected ") + expecting);
    return lines_[next_++];
  }

  void expect_done() const {
    if (!done()) throw ParseError(lines_[next_].number, "unexpected trailing content");
  }

 private:
  std::vector<Line> lines_;
  std::size_t next_ = 0;
  std::size_t end_line_ = 1;
};

std::size_t parse_count(const std::string& tok, std::size_t line) {
  std::size_t v = 0;
  const auto* first = tok.data();
  const auto* last = tok.data() + tok.size();
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) throw ParseError(line, "expected a non-negative integer, got '" + tok + "'");
  return v;
}

RationalMatrix read_block(LineReader& in, const std::string& name, std::size_t rows, std::size_t cols) {
  const auto& head = in.take(name.c_str());
  if (head.tokens.size() != 1 || head.tokens[0] != name)
    throw ParseError(head.number, "expected block header '" + name + "'");
  RationalMatrix m(rows, cols);
  if (cols == 0) return m;
  for (std::size_t r = 0; r < rows; ++r) {
    const auto& line = in.take(("row of " + name).c_str());
    if (line.tokens.size() != cols)
      throw ParseError(line.number, name + ": expected " + std::to_string(cols) + " entries, got " +
                                        std::to_string(line.tokens.size()));
    for (std::size_t c = 0; c < cols; ++c) {
      try {
        m(r, c) = Rational::parse(line.tokens[c]);
      } catch (const std::invalid_argument& e) {
        throw ParseError(line.number, e.what());
      }
    }
  }
  return m;
}

void write_block(std::ostringstream& os, const std::string& name, const RationalMatrix& m) {
  os << name << '\n';
  if (m.cols() == 0) return;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m(r, c).to_string();
    os << '\n';
  }
}

const Line& take_header(LineReader& in, const std::string& keyword, std::size_t counts) {
  const auto& head = in.take((keyword + " header").c_str());
  if (head.tokens.empty() || head.tokens[0] != keyword)
    throw ParseError(head.number, "expected '" + keyword + "' header");
  if (head.tokens.size() != counts + 1)
    throw ParseError(head.number, keyword + " header needs " + std::to_string(counts) + " counts");
  return head;
}

}  // namespace

FileKind detect_kind(std::string_view text) {
  LineReader in(text);
  if (in.done()) return FileKind::Unknown;
  const auto& first = in.take("header");
  if (first.tokens[0] == "QREP") return FileKind::Qrep;
  if (first.tokens[0] == "MONAD") return FileKind::Monad;
  return FileKind::Unknown;
}

std::string write_qrep(const QuiverRep& r) {
  std::ostringstream os;
  const auto& d = r.dim();
  os << "QREP " << d.s_minus1 << ' ' << d.s0 << ' ' << d.s1 << '\n';
  for (std::size_t i = 0; i < 4; ++i) write_block(os, "F" + std::to_string(i), r.f(i));
  for (std::size_t i = 0; i < 4; ++i) write_block(os, "G" + std::to_string(i), r.g(i));
  return os.str();
}

QuiverRep read_qrep(std::string_view text) {
  LineReader in(text);
  const auto& head = take_header(in, "QREP", 3);
  const DimVector d{parse_count(head.tokens[1], head.number), parse_count(head.tokens[2], head.number),
                    parse_count(head.tokens[3], head.number)};
  std::array<RationalMatrix, 4> f, g;
  for (std::size_t i = 0; i < 4; ++i) f[i] = read_block(in, "F" + std::to_string(i), d.s0, d.s_minus1);
  for (std::size_t i = 0; i < 4; ++i) g[i] = read_block(in, "G" + std::to_string(i), d.s1, d.s0);
  in.expect_done();
  return QuiverRep(d, std::move(f), std::move(g));
}

std::string write_monad(const Monad& m) {
  std::ostringstream os;
  os << "MONAD " << m.charge() << '\n';
  for (std::size_t i = 0; i < 4; ++i) write_block(os, "A" + std::to_string(i), m.alpha().coeff(i));
  for (std::size_t i = 0; i < 4; ++i) write_block(os, "B" + std::to_string(i), m.beta().coeff(i));
  return os.str();
}

Monad read_monad(std::string_view text) {
  LineReader in(text);
  const auto& head = take_header(in, "MONAD", 1);
  const auto n = parse_count(head.tokens[1], head.number);
  if (n == 0) throw ParseError(head.number, "charge must be positive");
  std::array<RationalMatrix, 4> a, b;
  for (std::size_t i = 0; i < 4; ++i) a[i] = read_block(in, "A" + std::to_string(i), 2 * n + 2, n);
  for (std::size_t i = 0; i < 4; ++i) b[i] = read_block(in, "B" + std::to_string(i), n, 2 * n + 2);
  in.expect_done();
  return Monad(LinearPencil(a), LinearPencil(b));
}

}  // namespace iq

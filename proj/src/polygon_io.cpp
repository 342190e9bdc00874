// Copyright 2026 The kgon Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "kgon/polygon_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace kgon {

namespace {

Error SyntaxError(std::size_t line, const std::string& what) {
  return Error(ErrorCode::kSyntax, "line " + std::to_string(line) + ": " + what, {line});
}

Coord ParseCoord(std::string_view token, std::size_t line) {
  Coord value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (!token.empty() && token.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec == std::errc::result_out_of_range) {
    throw Error(ErrorCode::kCoordinateOutOfRange,
                "line " + std::to_string(line) + ": coordinate " + std::string(token) +
                    " is out of range",
                {line});
  }
  if (ec != std::errc() || ptr != last || first == last) {
    throw SyntaxError(line, "expected an integer, got '" + std::string(token) + "'");
  }
  return value;
}

std::vector<Point2> ReadText(std::string_view text) {
  std::vector<Point2> points;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }

    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      if (j > i) tokens.push_back(line.substr(i, j - i));
      i = j;
    }
    if (tokens.empty()) continue;
    if (tokens.size() != 2) {
      throw SyntaxError(line_no,
                        "expected two integers, got " + std::to_string(tokens.size()) + " fields");
    }
    points.push_back({ParseCoord(tokens[0], line_no), ParseCoord(tokens[1], line_no)});
  }
  return points;
}

std::size_t LineOfOffset(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + offset, '\n'));
}

std::vector<Point2> ReadJson(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SyntaxError(LineOfOffset(text, e.byte == 0 ? 0 : e.byte - 1), "invalid JSON");
  }
  if (!doc.is_array()) throw SyntaxError(1, "expected a JSON array of [x, y] pairs");
  std::vector<Point2> points;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const auto& pair = doc[i];
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
        !pair[1].is_number_integer()) {
      throw Error(ErrorCode::kSyntax,
                  "element " + std::to_string(i) + ": expected an [x, y] integer pair", {1});
    }
    if (pair[0].is_number_unsigned() && pair[0].get<std::uint64_t>() > 0x7fffffffffffffffULL) {
      throw Error(ErrorCode::kCoordinateOutOfRange, "element " + std::to_string(i) +
                                                        ": coordinate out of range");
    }
    if (pair[1].is_number_unsigned() && pair[1].get<std::uint64_t>() > 0x7fffffffffffffffULL) {
      throw Error(ErrorCode::kCoordinateOutOfRange, "element " + std::to_string(i) +
                                                        ": coordinate out of range");
    }
    points.push_back({pair[0].get<Coord>(), pair[1].get<Coord>()});
  }
  return points;
}

}  // namespace

std::vector<Point2> ReadPoints(std::string_view text) {
  const auto first = std::find_if(text.begin(), text.end(), [](char c) {
    return !std::isspace(static_cast<unsigned char>(c));
  });
  if (first != text.end() && *first == '[') return ReadJson(text);
  return ReadText(text);
}

Validated ParsePolygon(std::string_view text) {
  const std::vector<Point2> points = ReadPoints(text);
  try {
    return Validate(points);
  } catch (const Error& e) {
    throw Error(e.code(), std::string("polygon: ") + e.what(), e.where());
  }
}

Validated ReadPolygonFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kInvalidInput, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParsePolygon(buffer.str());
}

std::string FormatPolygon(const ConvexPolygon& polygon) {
  std::ostringstream out;
  for (const Point2& p : polygon.vertices()) out << p.x << ' ' << p.y << '\n';
  return out.str();
}

}  // namespace kgon

#include "pls/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "pls/error.hpp"

namespace pls {

namespace {

struct Token {
  std::string_view text;
  int column = 0;
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return out;
}

int parse_int(const Token& token, int line) {
  int value = 0;
  const char* first = token.text.data();
  const char* last = first + token.text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw ParseError(line, token.column, "expected an integer or '.', got '" + std::string(token.text) + "'");
  }
  if (value <= 0) throw ParseError(line, token.column, "symbols must be positive");
  return value;
}

}  // namespace

PartialLatinSquare parse_grid(std::string_view text) {
  std::vector<std::vector<int>> rows;
  std::vector<int> row_lines;
  std::vector<int> alphabet;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    auto tokens = tokenize(line);
    if (tokens.empty() || tokens.front().text.front() == '#') {
      if (end == text.size()) break;
      continue;
    }
    if (tokens.front().text == "alphabet:") {
      for (std::size_t i = 1; i < tokens.size(); ++i) alphabet.push_back(parse_int(tokens[i], line_no));
    } else {
      std::vector<int> row;
      for (const Token& t : tokens) row.push_back(t.text == "." ? kEmpty : parse_int(t, line_no));
      if (!rows.empty() && row.size() != rows.front().size()) {
        throw ParseError(line_no, 1, "expected " + std::to_string(rows.front().size()) + " tokens, got " +
                                         std::to_string(row.size()));
      }
      rows.push_back(std::move(row));
      row_lines.push_back(line_no);
    }
    if (end == text.size()) break;
  }
  if (rows.empty()) throw ParseError(line_no, 1, "no rows");
  const int n = static_cast<int>(rows.size());
  if (static_cast<int>(rows.front().size()) != n) {
    throw ParseError(row_lines.back(), 1, std::to_string(n) + " rows of " +
                                              std::to_string(rows.front().size()) + " tokens; expected a square");
  }
  Grid g = alphabet.empty() ? Grid(n) : Grid(n, alphabet);
  for (int r = 1; r <= n; ++r)
    for (int c = 1; c <= n; ++c) g.at(r, c) = rows[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)];
  return validate(std::move(g));
}

namespace {

std::pair<int, int> locate(std::string_view text, std::size_t byte) {
  int line = 1, column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

}  // namespace

PartialLatinSquare parse_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    auto [line, column] = locate(text, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError(line, column, e.what());
  }
  try {
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("cells")) {
      throw ParseError(1, 1, "expected an object with \"n\" and \"cells\"");
    }
    const int n = doc.at("n").get<int>();
    if (n <= 0) throw ParseError(1, 1, "\"n\" must be positive");
    Grid g = doc.contains("alphabet") ? Grid(n, doc.at("alphabet").get<std::vector<int>>()) : Grid(n);
    for (const auto& cell : doc.at("cells")) {
      const auto t = cell.get<std::vector<int>>();
      if (t.size() != 3) throw ParseError(1, 1, "each cell must be [r, c, s]");
      if (t[0] < 1 || t[0] > n || t[1] < 1 || t[1] > n) {
        throw ParseError(1, 1, "cell (" + std::to_string(t[0]) + "," + std::to_string(t[1]) + ") outside the grid");
      }
      if (t[2] <= 0) throw ParseError(1, 1, "symbols must be positive");
      if (g.at(t[0], t[1]) != kEmpty) {
        throw ParseError(1, 1, "cell (" + std::to_string(t[0]) + "," + std::to_string(t[1]) + ") given twice");
      }
      g.at(t[0], t[1]) = t[2];
    }
    return validate(std::move(g));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(1, 1, e.what());
  }
}

PartialLatinSquare parse_square(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_json(text);
  return parse_grid(text);
}

PartialLatinSquare read_square(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, 0, "cannot read " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_square(buffer.str());
}

std::string to_grid(const PartialLatinSquare& p) {
  std::string out;
  if (!p.has_standard_alphabet()) {
    out += "alphabet:";
    for (int s : p.alphabet()) out += " " + std::to_string(s);
    out += '\n';
  }
  out += to_string(p);
  return out;
}

std::string to_json(const PartialLatinSquare& p) {
  nlohmann::json doc;
  doc["n"] = p.order();
  if (!p.has_standard_alphabet()) doc["alphabet"] = p.alphabet();
  nlohmann::json cells = nlohmann::json::array();
  for (const Triple& t : p.triples()) cells.push_back({t.row, t.col, t.symbol});
  doc["cells"] = std::move(cells);
  return doc.dump();
}

}  // namespace pls

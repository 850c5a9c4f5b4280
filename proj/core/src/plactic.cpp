#include "garnorm/plactic.hpp"

#include <algorithm>
#include <map>

namespace garnorm {

std::string format_column(const Column& c) {
  if (c.empty()) return "∅";
  std::string out = "[";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(c[i]);
  }
  return out + "]";
}

Column parse_column(std::string_view text) {
  if (text == "∅" || text == "[]") return {};
  if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
    throw ParseError("column must look like [3,1], got '" + std::string(text) + "'");
  }
  Column c;
  std::string_view body = text.substr(1, text.size() - 2);
  while (!body.empty()) {
    const auto comma = body.find(',');
    const std::string tok(body.substr(0, comma));
    try {
      std::size_t used = 0;
      c.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw ParseError("");
    } catch (const std::exception&) {
      throw ParseError("bad column entry '" + tok + "'");
    }
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  for (std::size_t i = 1; i < c.size(); ++i) {
    if (c[i] >= c[i - 1]) throw ParseError("column entries must strictly decrease");
  }
  return c;
}

bool is_tableau_pair(const Column& s1, const Column& s2) {
  if (s1.size() < s2.size()) return false;
  // Columns are stored decreasing; the k-th smallest is counted from the end.
  for (std::size_t k = 0; k < s2.size(); ++k) {
    if (s1[s1.size() - 1 - k] > s2[s2.size() - 1 - k]) return false;
  }
  return true;
}

std::pair<Column, Column> insert_pair(const Column& s1, const Column& s2) {
  std::vector<std::vector<int>> rows;
  auto insert = [&rows](int x) {
    for (auto& row : rows) {
      auto it = std::upper_bound(row.begin(), row.end(), x);
      if (it == row.end()) {
        row.push_back(x);
        return;
      }
      std::swap(*it, x);
    }
    rows.push_back({x});
  };
  for (int x : s1) insert(x);
  for (int x : s2) insert(x);
  Column c1;
  Column c2;
  for (auto r = rows.rbegin(); r != rows.rend(); ++r) {
    c1.push_back((*r)[0]);
    if (r->size() > 1) c2.push_back((*r)[1]);
  }
  return {c1, c2};
}

std::vector<Column> plactic_columns(int x) {
  if (x < 1 || x > 6) throw RangeError("plactic instance needs 1 <= |X| <= 6");
  std::vector<Column> cols;
  for (unsigned mask = 0; mask < (1u << x); ++mask) {
    Column c;
    for (int v = x; v >= 1; --v) {
      if (mask & (1u << (v - 1))) c.push_back(v);
    }
    cols.push_back(std::move(c));
  }
  std::sort(cols.begin(), cols.end(), [](const Column& a, const Column& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return cols;
}

Normaliser plactic_normaliser(int x) {
  const auto cols = plactic_columns(x);
  std::vector<std::string> names;
  for (const auto& c : cols) names.push_back(format_column(c));
  Alphabet alphabet(names, std::string("∅"));
  std::map<Column, Letter> index;
  for (Letter i = 0; i < cols.size(); ++i) index.emplace(cols[i], i);
  QuadraticMap map(alphabet, [cols, index](Letter s, Letter t) {
    const auto [a, b] = insert_pair(cols[s], cols[t]);
    return LetterPair{index.at(a), index.at(b)};
  });
  return Normaliser(std::move(map), ClassPair{3, 3});
}

Column plactic_column(const Normaliser& nz, Letter l) {
  return parse_column(nz.alphabet().name(l));
}

std::vector<Column> tableau_of(const Normaliser& nz, const Word& w) {
  std::vector<Column> out;
  for (Letter l : geodesic_normal_form(nz, w)) out.push_back(plactic_column(nz, l));
  return out;
}

}  // namespace garnorm

#include "bonnet/graph/literal.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace bonnet::graph {

std::string to_literal(const Graph& g) {
  std::ostringstream o;
  o << "graph h=" << g.num_half_edges() << " e=[";
  for (int e = 0; e < g.num_edges(); ++e)
    o << (e ? " " : "") << g.ends(e).first << ':' << g.ends(e).second;
  o << "] v=[";
  for (int v = 0; v < g.num_vertices(); ++v) {
    o << (v ? " " : "");
    for (std::size_t i = 0; i < g.star(v).size(); ++i) o << (i ? "." : "") << g.star(v)[i];
  }
  for (Side s : {Side::in, Side::out}) {
    std::vector<std::pair<int, int>> ls;
    for (int v = 0; v < g.num_vertices(); ++v)
      if (g.leaf_label(v) && g.leaf_label(v)->side == s) ls.emplace_back(g.leaf_label(v)->index, g.star(v)[0]);
    std::sort(ls.begin(), ls.end());
    o << (s == Side::in ? "] in=[" : "] out=[");
    for (std::size_t i = 0; i < ls.size(); ++i) o << (i ? " " : "") << ls[i].first << '@' << ls[i].second;
  }
  o << "] tori=[";
  std::vector<std::pair<Label, int>> ts;
  for (int e = 0; e < g.num_edges(); ++e)
    if (g.torus_label(e)) ts.emplace_back(*g.torus_label(e), g.ends(e).first);
  std::sort(ts.begin(), ts.end());
  for (std::size_t i = 0; i < ts.size(); ++i) o << (i ? " " : "") << to_string(ts[i].first) << '@' << ts[i].second;
  o << "] flags=[" << (g.allow_bivalent() ? "bivalent" : "") << "]";
  return o.str();
}

namespace {

struct Reader {
  std::string_view s;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("graph literal: " + what + " at offset " + std::to_string(pos));
  }
  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  void expect(std::string_view word) {
    skip_ws();
    if (s.substr(pos, word.size()) != word) fail("expected '" + std::string(word) + "'");
    pos += word.size();
  }
  int number() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) fail("expected a number");
    return std::stoi(std::string(s.substr(start, pos - start)));
  }
  // Contents between '[' and ']' split on whitespace.
  std::vector<std::string> list(std::string_view key) {
    expect(key);
    expect("=[");
    std::size_t end = s.find(']', pos);
    if (end == std::string_view::npos) fail("unterminated list");
    std::istringstream in{std::string(s.substr(pos, end - pos))};
    pos = end + 1;
    std::vector<std::string> out;
    for (std::string t; in >> t;) out.push_back(t);
    return out;
  }
};

int to_int(const std::string& t) {
  if (t.empty() || !std::all_of(t.begin(), t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw std::invalid_argument("graph literal: bad number '" + t + "'");
  return std::stoi(t);
}

std::pair<std::string, std::string> split(const std::string& t, char sep) {
  auto p = t.find(sep);
  if (p == std::string::npos) throw std::invalid_argument("graph literal: missing '" + std::string(1, sep) + "' in " + t);
  return {t.substr(0, p), t.substr(p + 1)};
}

}  // namespace

Graph parse_graph(std::string_view text) {
  Reader r{text};
  r.expect("graph");
  r.expect("h=");
  int n = r.number();
  GraphData d;
  d.pairing.assign(n, -1);
  for (const auto& t : r.list("e")) {
    auto [a, b] = split(t, ':');
    int x = to_int(a), y = to_int(b);
    if (x >= n || y >= n) throw std::invalid_argument("graph literal: half-edge out of range");
    d.pairing[x] = y;
    d.pairing[y] = x;
  }
  for (const auto& t : r.list("v")) {
    std::vector<int> block;
    std::istringstream in(t);
    for (std::string part; std::getline(in, part, '.');) block.push_back(to_int(part));
    d.vertices.push_back(std::move(block));
  }
  for (Side s : {Side::in, Side::out})
    for (const auto& t : r.list(s == Side::in ? "in" : "out")) {
      auto [k, h] = split(t, '@');
      d.boundary.emplace_back(to_int(h), Label{s, to_int(k)});
    }
  for (const auto& t : r.list("tori")) {
    auto [l, h] = split(t, '@');
    Label lab;
    if (l.rfind("in", 0) == 0) {
      lab = {Side::in, to_int(l.substr(2))};
    } else if (l.rfind("out", 0) == 0) {
      lab = {Side::out, to_int(l.substr(3))};
    } else {
      throw std::invalid_argument("graph literal: bad torus label " + l);
    }
    d.tori.emplace_back(to_int(h), lab);
  }
  for (const auto& t : r.list("flags")) {
    if (t != "bivalent") throw std::invalid_argument("graph literal: unknown flag " + t);
    d.allow_bivalent = true;
  }
  r.skip_ws();
  if (r.pos != text.size()) r.fail("trailing characters");
  for (int h : d.pairing)
    if (h < 0) throw std::invalid_argument("graph literal: unpaired half-edge");
  return build_graph(d);
}

}  // namespace bonnet::graph

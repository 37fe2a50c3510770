#include "bonnet/operad/tree_literal.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <vector>

namespace bonnet::operad {

namespace {

std::string render(const PortTree& t, int node) {
  // (min port, text)
  std::vector<std::pair<int, std::string>> kids;
  for (int p = 1; p < t.ports(); ++p)
    if (t.node_of_port(p) == node) kids.emplace_back(p, std::to_string(p));
  for (int i = 0; i < t.degree(); ++i)
    if (t.parent_node(i) == node) {
      Mask s = t.splits()[i];
      int lo = 0;
      while (!((s >> lo) & 1u)) ++lo;
      kids.emplace_back(lo, render(t, i + 1));
    }
  std::sort(kids.begin(), kids.end());
  std::string out = "(";
  for (std::size_t i = 0; i < kids.size(); ++i) out += (i ? "," : "") + kids[i].second;
  return out + ")";
}

struct Parser {
  std::string_view s;
  std::size_t pos = 0;
  std::vector<Mask> splits;
  std::vector<int> seen;

  [[noreturn]] void fail(const std::string& w) const {
    throw std::invalid_argument("tree literal: " + w + " at offset " + std::to_string(pos));
  }
  char peek() const { return pos < s.size() ? s[pos] : '\0'; }
  Mask node(bool root) {
    if (peek() != '(') fail("expected '('");
    ++pos;
    Mask all = 0;
    int children = 0;
    for (;;) {
      if (peek() == '(') {
        all |= node(false);
      } else if (std::isdigit(static_cast<unsigned char>(peek()))) {
        int v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) v = v * 10 + (s[pos++] - '0');
        if (v < 1 || v > 30) fail("port out of range");
        seen.push_back(v);
        all |= Mask{1} << v;
      } else {
        fail("expected port or '('");
      }
      ++children;
      if (peek() == ',') {
        ++pos;
        continue;
      }
      if (peek() == ')') {
        ++pos;
        break;
      }
      fail("expected ',' or ')'");
    }
    if (children < 2) fail("node needs at least two children");
    if (!root) splits.push_back(all);
    return all;
  }
};

}  // namespace

std::string to_literal(const PortTree& t) { return render(t, 0); }

PortTree parse_tree(std::string_view text) {
  Parser p{text};
  p.node(true);
  if (p.pos != text.size()) p.fail("trailing characters");
  std::sort(p.seen.begin(), p.seen.end());
  for (std::size_t i = 0; i < p.seen.size(); ++i)
    if (p.seen[i] != static_cast<int>(i) + 1) throw std::invalid_argument("tree literal: ports must be 1..n once each");
  return PortTree(static_cast<int>(p.seen.size()) + 1, p.splits);
}

}  // namespace bonnet::operad

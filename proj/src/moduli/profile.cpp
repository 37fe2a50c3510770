#include "bonnet/moduli/profile.hpp"

#include <charconv>
#include <stdexcept>
#include <vector>

namespace bonnet::moduli {

BoundaryProfile make_profile(int g, int e, int t) {
  BoundaryProfile v;
  v.g = g;
  v.e_out = e > 0 ? 1 : 0;
  v.e_in = e - v.e_out;
  v.t_out = t;
  return v;
}

namespace {

int parse_count(std::string_view s, std::string_view whole) {
  int x = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (s.empty() || ec != std::errc() || p != s.data() + s.size() || x < 0)
    throw std::invalid_argument("bad profile: " + std::string(whole));
  return x;
}

std::pair<int, int> parse_split(std::string_view s, std::string_view whole) {
  auto plus = s.find('+');
  if (plus == std::string_view::npos) return {-1, parse_count(s, whole)};
  return {parse_count(s.substr(0, plus), whole), parse_count(s.substr(plus + 1), whole)};
}

}  // namespace

BoundaryProfile parse_profile(std::string_view s) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    auto c = s.find(',', start);
    parts.push_back(s.substr(start, c - start));
    if (c == std::string_view::npos) break;
    start = c + 1;
  }
  if (parts.size() != 3) throw std::invalid_argument("bad profile: " + std::string(s));
  int g = parse_count(parts[0], s);
  auto [ei, eo] = parse_split(parts[1], s);
  auto [ti, to] = parse_split(parts[2], s);
  BoundaryProfile v = make_profile(g, eo + (ei < 0 ? 0 : ei), to + (ti < 0 ? 0 : ti));
  if (ei >= 0) {
    v.e_in = ei;
    v.e_out = eo;
  }
  if (ti >= 0) {
    v.t_in = ti;
    v.t_out = to;
  }
  return v;
}

std::string to_string(const BoundaryProfile& v) {
  return std::to_string(v.g) + "," + std::to_string(v.e_in) + "+" + std::to_string(v.e_out) + "," +
         std::to_string(v.t_in) + "+" + std::to_string(v.t_out);
}

bool is_admissible(const BoundaryProfile& v) {
  if (v.g < 0 || v.e_in < 0 || v.e_out < 0 || v.t_in < 0 || v.t_out < 0) return false;
  if (v.e() + v.t() < 1) return false;
  if (v.g == 0 && v.e() == 0) return false;
  if (v.g == 0 && v.e() == 1 && v.t() == 0) return false;
  return true;
}

void require_admissible(const BoundaryProfile& v) {
  if (!is_admissible(v)) throw std::invalid_argument("profile not admissible: " + to_string(v));
}

BoundaryProfile profile_of(const graph::Graph& g) {
  BoundaryProfile v;
  v.e_in = g.count_boundary(graph::Side::in);
  v.e_out = g.count_boundary(graph::Side::out);
  v.t_in = g.count_tori(graph::Side::in);
  v.t_out = g.count_tori(graph::Side::out);
  v.g = graph::genus(g) - v.t();
  return v;
}

int max_internal_vertices(const BoundaryProfile& v) { return v.e() + 2 * (v.g + v.t()) - 2; }

int max_internal_edges(const BoundaryProfile& v) { return max_internal_vertices(v) - 1 + v.g + v.t(); }

}  // namespace bonnet::moduli

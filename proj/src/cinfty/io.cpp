#include "bonnet/cinfty/io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace bonnet::cinfty {

using nlohmann::json;

namespace {

Rational coefficient(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return linalg::parse_rational(j.get<std::string>());
  throw AlgebraError("coefficient must be an integer or a \"p/q\" string");
}

int generator(const CInftyAlgebra& a, const json& j) {
  if (!j.is_string()) throw AlgebraError("generator references must be names");
  try {
    return a.index_of(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw AlgebraError(e.what());
  }
}

}  // namespace

CInftyAlgebra load_algebra(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw AlgebraError(std::string("parse error: ") + e.what());
  }
  CInftyAlgebra a;
  try {
    if (!doc.is_object()) throw AlgebraError("document must be an object");
    for (const auto& [k, v] : doc.items())
      if (k != "name" && k != "convention" && k != "arity_cap" && k != "basis" && k != "differential" &&
          k != "operations" && k != "pairing")
        throw AlgebraError("unknown field: " + k);
    a.name = doc.value("name", std::string("algebra"));
    const std::string conv = doc.value("convention", std::string("homological"));
    if (conv == "homological")
      a.convention = Convention::homological;
    else if (conv == "cohomological")
      a.convention = Convention::cohomological;
    else
      throw AlgebraError("convention must be homological or cohomological");
    const int sign = a.convention == Convention::cohomological ? -1 : 1;
    if (!doc.contains("basis") || !doc["basis"].is_array()) throw AlgebraError("missing basis");
    for (const auto& g : doc["basis"]) a.basis.push_back({g.at("name").get<std::string>(), sign * g.at("degree").get<int>()});
    if (doc.contains("differential"))
      for (const auto& t : doc["differential"]) {
        if (!t.is_array() || t.size() != 3) throw AlgebraError("differential entries are [source, target, coefficient]");
        add_to(a.differential[generator(a, t[0])], generator(a, t[1]), coefficient(t[2]));
      }
    for (auto it = a.differential.begin(); it != a.differential.end();)
      it = it->second.empty() ? a.differential.erase(it) : std::next(it);
    int top = 2;
    if (doc.contains("operations"))
      for (const auto& [k, entries] : doc["operations"].items()) {
        int arity = 0;
        try {
          arity = std::stoi(k);
        } catch (const std::exception&) {
        }
        if (arity < 2 || std::to_string(arity) != k) throw AlgebraError("bad operation arity: " + k);
        top = std::max(top, arity);
        for (const auto& t : entries) {
          if (!t.is_array() || static_cast<int>(t.size()) != arity + 2)
            throw AlgebraError("m_" + k + " entries are [inputs..., output, coefficient]");
          std::vector<int> in;
          for (int i = 0; i < arity; ++i) in.push_back(generator(a, t[i]));
          add_to(a.operations[in], generator(a, t[arity]), coefficient(t[arity + 1]));
        }
      }
    for (auto it = a.operations.begin(); it != a.operations.end();)
      it = it->second.empty() ? a.operations.erase(it) : std::next(it);
    a.arity_cap = doc.value("arity_cap", top);
    if (doc.contains("pairing"))
      for (const auto& t : doc["pairing"]) {
        if (!t.is_array() || t.size() != 3) throw AlgebraError("pairing entries are [left, right, coefficient]");
        Rational c = coefficient(t[2]);
        auto key = std::make_pair(generator(a, t[0]), generator(a, t[1]));
        c += a.pairing.count(key) ? a.pairing[key] : Rational(0);
        if (c == 0)
          a.pairing.erase(key);
        else
          a.pairing[key] = c;
      }
    check_structure(a);
  } catch (const AlgebraError&) {
    throw;
  } catch (const std::exception& e) {
    throw AlgebraError(e.what());
  }
  return a;
}

CInftyAlgebra load_algebra_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw AlgebraError("cannot read " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return load_algebra(ss.str());
}

std::string save_algebra(const CInftyAlgebra& a) {
  const int sign = a.convention == Convention::cohomological ? -1 : 1;
  json doc = json::object();
  doc["name"] = a.name;
  doc["convention"] = a.convention == Convention::cohomological ? "cohomological" : "homological";
  doc["arity_cap"] = a.arity_cap;
  doc["basis"] = json::array();
  for (const auto& g : a.basis) doc["basis"].push_back({{"name", g.name}, {"degree", sign * g.degree}});
  doc["differential"] = json::array();
  for (const auto& [s, img] : a.differential)
    for (const auto& [t, c] : img)
      doc["differential"].push_back({a.basis[s].name, a.basis[t].name, linalg::to_string(c)});
  doc["operations"] = json::object();
  for (const auto& [in, out] : a.operations)
    for (const auto& [o, c] : out) {
      json e = json::array();
      for (int i : in) e.push_back(a.basis[i].name);
      e.push_back(a.basis[o].name);
      e.push_back(linalg::to_string(c));
      doc["operations"][std::to_string(in.size())].push_back(e);
    }
  doc["pairing"] = json::array();
  for (const auto& [ij, c] : a.pairing)
    doc["pairing"].push_back({a.basis[ij.first].name, a.basis[ij.second].name, linalg::to_string(c)});
  return doc.dump(2) + "\n";
}

}  // namespace bonnet::cinfty

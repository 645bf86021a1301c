#include "rootspace/serialization.hpp"

#include <fstream>
#include <sstream>

#include "rootspace/errors.hpp"

namespace rootspace {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ParseError("at " + (where.empty() ? std::string("/") : where) + ": " + what);
}

Rational read_rational(const json& v, const std::string& where) {
  if (v.is_number_integer()) return Rational(Integer(std::to_string(v.get<long long>())));
  if (!v.is_string()) fail(where, "expected a rational string such as \"1/2\"");
  try {
    return parse_rational(v.get<std::string>());
  } catch (const ParseError& e) {
    fail(where, e.what());
  }
}

}  // namespace

json to_json(const RootSystem& rs) {
  json doc;
  doc["rank"] = rs.rank;
  json gram = json::array();
  for (std::size_t r = 0; r < rs.rank; ++r)
    for (std::size_t c = 0; c < rs.rank; ++c) gram.push_back(to_string(rs.gram(r, c)));
  doc["gram"] = gram;
  json roots = json::array();
  for (const auto& root : rs.roots) {
    json v = json::array();
    for (const auto& x : root) v.push_back(to_string(x));
    roots.push_back(v);
  }
  doc["roots"] = roots;
  if (rs.labels.size() == rs.roots.size() && !rs.labels.empty()) doc["labels"] = rs.labels;
  return doc;
}

RootSystem root_system_from_json(const json& doc) {
  if (!doc.is_object()) fail("", "expected an object with rank, gram and roots");
  if (!doc.contains("rank") || !doc["rank"].is_number_integer()) fail("/rank", "expected a positive integer");
  const long long rank_value = doc["rank"].get<long long>();
  if (rank_value < 1 || rank_value > 64) fail("/rank", "rank must be between 1 and 64");
  const std::size_t rank = static_cast<std::size_t>(rank_value);

  if (!doc.contains("gram") || !doc["gram"].is_array()) fail("/gram", "expected an array");
  const json& g = doc["gram"];
  RationalMatrix gram(rank, rank);
  if (g.size() == rank * rank && (g.empty() || !g[0].is_array())) {
    for (std::size_t k = 0; k < g.size(); ++k) gram(k / rank, k % rank) = read_rational(g[k], "/gram/" + std::to_string(k));
  } else if (g.size() == rank) {
    for (std::size_t r = 0; r < rank; ++r) {
      const std::string where = "/gram/" + std::to_string(r);
      if (!g[r].is_array() || g[r].size() != rank) fail(where, "expected a row of " + std::to_string(rank) + " entries");
      for (std::size_t c = 0; c < rank; ++c) gram(r, c) = read_rational(g[r][c], where + "/" + std::to_string(c));
    }
  } else {
    fail("/gram", "expected " + std::to_string(rank * rank) + " entries (row-major) or " + std::to_string(rank) + " rows");
  }

  if (!doc.contains("roots") || !doc["roots"].is_array()) fail("/roots", "expected an array");
  std::vector<RationalVector> roots;
  for (std::size_t k = 0; k < doc["roots"].size(); ++k) {
    const json& v = doc["roots"][k];
    const std::string where = "/roots/" + std::to_string(k);
    if (!v.is_array() || v.size() != rank) fail(where, "expected " + std::to_string(rank) + " coordinates");
    RationalVector root;
    for (std::size_t c = 0; c < rank; ++c) root.push_back(read_rational(v[c], where + "/" + std::to_string(c)));
    roots.push_back(std::move(root));
  }

  RootSystem rs;
  try {
    rs = make_root_system(rank, gram, roots);
  } catch (const StructuralError& e) {
    fail("", e.what());
  }
  if (doc.contains("labels")) {
    const json& l = doc["labels"];
    if (!l.is_array() || l.size() != rs.roots.size()) fail("/labels", "expected one label per root");
    for (std::size_t k = 0; k < l.size(); ++k) {
      if (!l[k].is_string()) fail("/labels/" + std::to_string(k), "expected a string");
      rs.labels.push_back(l[k].get<std::string>());
    }
  }
  return rs;
}

RootSystem parse_root_system(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return root_system_from_json(doc);
}

RootSystem load_root_system(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream text;
  text << in.rdbuf();
  try {
    return parse_root_system(text.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

json to_json(const DynkinDiagram& d) {
  json doc;
  doc["nodes"] = json::array();
  for (const auto& n : d.nodes) doc["nodes"].push_back({{"len2", to_string(n.len2)}});
  doc["edges"] = json::array();
  for (const auto& e : d.edges) {
    json edge = {{"a", e.a}, {"b", e.b}, {"mult", e.mult}};
    edge["arrow"] = e.arrow_to ? json(*e.arrow_to) : json(nullptr);
    doc["edges"].push_back(edge);
  }
  return doc;
}

}  // namespace rootspace

#include "rootspace/dynkin.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <sstream>

#include "rootspace/errors.hpp"

namespace rootspace {

namespace {

struct Adjacency {
  // neighbour -> (multiplicity, +1 if the arrow points at the neighbour, -1 if at us, 0 none)
  std::vector<std::map<std::size_t, std::pair<int, int>>> of;

  explicit Adjacency(const DynkinDiagram& d) : of(d.nodes.size()) {
    for (const auto& e : d.edges) {
      const int toward_b = e.arrow_to ? (*e.arrow_to == e.b ? 1 : -1) : 0;
      of[e.a][e.b] = {e.mult, toward_b};
      of[e.b][e.a] = {e.mult, -toward_b};
    }
  }
  std::size_t degree(std::size_t v) const { return of[v].size(); }
  std::pair<int, int> link(std::size_t u, std::size_t v) const {
    auto it = of[u].find(v);
    return it == of[u].end() ? std::pair<int, int>{0, 0} : it->second;
  }
};

bool component_isomorphic(const DynkinDiagram& d1, const Adjacency& g1, const std::vector<std::size_t>& c1,
                          const DynkinDiagram& d2, const Adjacency& g2, const std::vector<std::size_t>& c2) {
  if (c1.size() != c2.size()) return false;
  // Visit c1 in BFS order so every step after the first is constrained by a mapped neighbour.
  std::vector<std::size_t> order;
  {
    std::vector<bool> seen(d1.nodes.size(), false);
    std::deque<std::size_t> q{c1.front()};
    seen[c1.front()] = true;
    while (!q.empty()) {
      auto u = q.front();
      q.pop_front();
      order.push_back(u);
      for (const auto& [v, _] : g1.of[u])
        if (!seen[v]) {
          seen[v] = true;
          q.push_back(v);
        }
    }
  }
  std::map<std::size_t, std::size_t> image;
  std::vector<bool> used(d2.nodes.size(), false);
  std::function<bool(std::size_t)> extend = [&](std::size_t k) {
    if (k == order.size()) return true;
    const std::size_t u = order[k];
    for (auto v : c2) {
      if (used[v] || g1.degree(u) != g2.degree(v) || d1.nodes[u].len2 != d2.nodes[v].len2) continue;
      bool ok = true;
      for (const auto& [mu, mv] : image)
        if (g1.link(u, mu) != g2.link(v, mv)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      image[u] = v;
      used[v] = true;
      if (extend(k + 1)) return true;
      image.erase(u);
      used[v] = false;
    }
    return false;
  };
  return extend(0);
}

// Nodes of a path component from one end to the other.
std::vector<std::size_t> walk_path(const Adjacency& g, std::size_t start) {
  std::vector<std::size_t> path{start};
  std::size_t prev = start, cur = start;
  for (bool moved = true; moved;) {
    moved = false;
    for (const auto& [v, _] : g.of[cur])
      if (v != prev && (path.size() < 2 || v != path[path.size() - 2]) && std::find(path.begin(), path.end(), v) == path.end()) {
        prev = cur;
        cur = v;
        path.push_back(v);
        moved = true;
        break;
      }
  }
  return path;
}

std::vector<std::size_t> ends_of(const Adjacency& g, const std::vector<std::size_t>& comp) {
  std::vector<std::size_t> ends;
  for (auto v : comp)
    if (g.degree(v) <= 1) ends.push_back(v);
  return ends;
}

bool is_path(const Adjacency& g, const std::vector<std::size_t>& comp) {
  return std::all_of(comp.begin(), comp.end(), [&](std::size_t v) { return g.degree(v) <= 2; });
}

// Path order with a multiple edge at an end placed on the right.
std::vector<std::size_t> oriented_path(const Adjacency& g, const std::vector<std::size_t>& comp) {
  if (comp.size() == 1) return comp;
  const auto ends = ends_of(g, comp);
  std::vector<std::size_t> path = walk_path(g, ends.front());
  if (g.link(path[0], path[1]).first > 1 && g.link(path[path.size() - 2], path.back()).first == 1)
    std::reverse(path.begin(), path.end());
  return path;
}

std::string connector(const Adjacency& g, std::size_t left, std::size_t right) {
  const auto [mult, toward_right] = g.link(left, right);
  if (mult == 1) return "-";
  const std::string bar = mult == 2 ? "=" : "≡";
  return toward_right > 0 ? bar + ">" : "<" + bar;
}

std::string label_component(const DynkinDiagram& d, const Adjacency& g, const std::vector<std::size_t>& comp) {
  const std::size_t k = comp.size();
  if (k == 1) return "A1";
  int doubles = 0, triples = 0;
  for (const auto& e : d.edges)
    if (std::binary_search(comp.begin(), comp.end(), e.a)) {
      doubles += e.mult == 2;
      triples += e.mult == 3;
    }
  if (!is_path(g, comp)) {
    if (doubles || triples) return "unknown";
    std::vector<std::size_t> branch;
    for (auto v : comp)
      if (g.degree(v) >= 3) branch.push_back(v);
    if (branch.size() != 1 || g.degree(branch[0]) != 3) return "unknown";
    std::vector<std::size_t> arms;
    for (const auto& [first, _] : g.of[branch[0]]) {
      std::size_t len = 1, prev = branch[0], cur = first;
      while (g.degree(cur) == 2) {
        auto it = std::find_if(g.of[cur].begin(), g.of[cur].end(), [&](const auto& kv) { return kv.first != prev; });
        prev = cur;
        cur = it->first;
        ++len;
      }
      if (g.degree(cur) != 1) return "unknown";
      arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] == 1 && arms[1] == 1) return "D" + std::to_string(k);
    if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return "E" + std::to_string(k);
    return "unknown";
  }
  if (!doubles && !triples) return "A" + std::to_string(k);
  if (triples == 1 && !doubles && k == 2) return "G2";
  if (doubles != 1 || triples) return "unknown";
  if (k == 2) return "B2=C2";
  const auto path = oriented_path(g, comp);
  const std::size_t last = path.back(), before = path[path.size() - 2];
  if (g.link(before, last).first == 2) return g.link(before, last).second > 0 ? "B" + std::to_string(k) : "C" + std::to_string(k);
  if (k == 4 && g.link(path[1], path[2]).first == 2) return "F4";
  return "unknown";
}

std::vector<std::string> render_component(const Adjacency& g, const std::vector<std::size_t>& comp) {
  if (is_path(g, comp)) {
    const auto path = oriented_path(g, comp);
    std::string line = "o";
    for (std::size_t k = 1; k < path.size(); ++k) line += connector(g, path[k - 1], path[k]) + "o";
    return {line};
  }
  // Main chain = a longest path; every other node must hang off it directly.
  auto farthest = [&](std::size_t from) {
    std::map<std::size_t, std::size_t> dist{{from, 0}}, parent;
    std::deque<std::size_t> q{from};
    std::size_t best = from;
    while (!q.empty()) {
      auto u = q.front();
      q.pop_front();
      if (dist[u] > dist[best] || (dist[u] == dist[best] && u < best)) best = u;
      for (const auto& [v, _] : g.of[u])
        if (!dist.count(v)) {
          dist[v] = dist[u] + 1;
          parent[v] = u;
          q.push_back(v);
        }
    }
    std::vector<std::size_t> chain{best};
    while (chain.back() != from) chain.push_back(parent[chain.back()]);
    return chain;
  };
  auto chain = farthest(farthest(comp.front()).front());
  if (chain.front() > chain.back()) std::reverse(chain.begin(), chain.end());
  std::string top = "o";
  std::vector<std::size_t> column{0};
  std::size_t width = 1;
  for (std::size_t k = 1; k < chain.size(); ++k) {
    const std::string c = connector(g, chain[k - 1], chain[k]);
    top += c + "o";
    width += (c == "-" ? 1 : 2) + 1;
    column.push_back(width - 1);
  }
  std::string mid(width, ' '), low(width, ' ');
  std::size_t hung = 0;
  for (std::size_t k = 0; k < chain.size(); ++k)
    for (const auto& [v, link] : g.of[chain[k]])
      if (std::find(chain.begin(), chain.end(), v) == chain.end()) {
        if (g.degree(v) != 1 || link.first != 1) return {top, "(further branches omitted)"};
        mid[column[k]] = '|';
        low[column[k]] = 'o';
        ++hung;
      }
  if (hung + chain.size() != comp.size()) return {top, "(further branches omitted)"};
  return {top, mid, low};
}

}  // namespace

DynkinDiagram build_diagram(const RootSystem& rs, const Base& base) {
  DynkinDiagram d;
  std::vector<Rational> raw;
  for (auto s : base.simple) {
    raw.push_back(rs.pair(rs.roots.at(s), rs.roots.at(s)));
    d.nodes.push_back({0, s});
  }
  for (std::size_t a = 0; a < d.nodes.size(); ++a)
    for (std::size_t b = a + 1; b < d.nodes.size(); ++b) {
      const auto& x = rs.roots[d.nodes[a].root_index];
      const auto& y = rs.roots[d.nodes[b].root_index];
      const Rational xy = rs.pair(x, y);
      if (sgn(xy) > 0) throw StructuralError("simple roots " + rs.label(d.nodes[a].root_index) + " and " +
                                             rs.label(d.nodes[b].root_index) + " form an acute angle");
      const Rational pq = 4 * xy * xy / (raw[a] * raw[b]);
      if (!is_integer(pq) || pq > 3) throw StructuralError("simple roots violate the angle cases");
      const int mult = static_cast<int>(pq.get_num().get_si());
      if (mult == 0) continue;
      DynkinEdge e{a, b, mult, std::nullopt};
      if (mult >= 2) e.arrow_to = raw[a] < raw[b] ? a : b;
      d.edges.push_back(e);
    }

  std::vector<std::size_t> comp_of(d.nodes.size(), d.nodes.size());
  for (std::size_t s = 0; s < d.nodes.size(); ++s) {
    if (comp_of[s] != d.nodes.size()) continue;
    std::vector<std::size_t> comp{s};
    comp_of[s] = d.components.size();
    for (std::size_t h = 0; h < comp.size(); ++h)
      for (const auto& e : d.edges) {
        const std::size_t u = comp[h];
        const std::size_t v = e.a == u ? e.b : e.b == u ? e.a : d.nodes.size();
        if (v != d.nodes.size() && comp_of[v] == d.nodes.size()) {
          comp_of[v] = d.components.size();
          comp.push_back(v);
        }
      }
    std::sort(comp.begin(), comp.end());
    Rational least = raw[comp.front()];
    for (auto v : comp) least = std::min(least, raw[v]);
    for (auto v : comp) d.nodes[v].len2 = raw[v] / least;
    d.components.push_back(std::move(comp));
  }
  return d;
}

DynkinDiagram diagram_of(const RootSystem& rs) { return build_diagram(rs, find_base(rs)); }

bool isomorphic(const DynkinDiagram& a, const DynkinDiagram& b) {
  if (a.nodes.size() != b.nodes.size() || a.edges.size() != b.edges.size() ||
      a.components.size() != b.components.size())
    return false;
  const Adjacency ga(a), gb(b);
  std::vector<bool> taken(b.components.size(), false);
  for (const auto& ca : a.components) {
    bool matched = false;
    for (std::size_t k = 0; k < b.components.size() && !matched; ++k)
      if (!taken[k] && component_isomorphic(a, ga, ca, b, gb, b.components[k])) taken[k] = matched = true;
    if (!matched) return false;
  }
  return true;
}

std::vector<std::string> classification_label(const DynkinDiagram& d) {
  const Adjacency g(d);
  std::vector<std::string> labels;
  for (const auto& c : d.components) labels.push_back(label_component(d, g, c));
  std::sort(labels.begin(), labels.end());
  return labels;
}

std::optional<Integer> weyl_order_from_labels(const std::vector<std::string>& labels) {
  auto factorial = [](long n) {
    Integer f = 1;
    for (long k = 2; k <= n; ++k) f *= k;
    return f;
  };
  Integer total = 1;
  for (const auto& l : labels) {
    if (l == "B2=C2") {
      total *= 8;
      continue;
    }
    if (l.size() < 2) return std::nullopt;
    const char kind = l[0];
    long n = 0;
    try {
      n = std::stol(l.substr(1));
    } catch (const std::exception&) {
      return std::nullopt;
    }
    Integer two_n;
    mpz_ui_pow_ui(two_n.get_mpz_t(), 2, static_cast<unsigned long>(n));
    switch (kind) {
      case 'A': total *= factorial(n + 1); break;
      case 'B':
      case 'C': total *= two_n * factorial(n); break;
      case 'D': total *= two_n / 2 * factorial(n); break;
      case 'E':
        if (n == 6) total *= 51840;
        else if (n == 7) total *= 2903040;
        else if (n == 8) total *= Integer("696729600");
        else return std::nullopt;
        break;
      case 'F': total *= 1152; break;
      case 'G': total *= 12; break;
      default: return std::nullopt;
    }
  }
  return total;
}

std::string render_ascii(const DynkinDiagram& d) {
  const Adjacency g(d);
  std::vector<std::vector<std::string>> blocks;
  for (const auto& c : d.components) blocks.push_back(render_component(g, c));
  const bool flat = std::all_of(blocks.begin(), blocks.end(), [](const auto& b) { return b.size() == 1; });
  std::ostringstream os;
  auto put = [&](std::string line) {
    line.erase(line.find_last_not_of(' ') + 1);
    os << line << '\n';
  };
  if (flat) {
    std::string line;
    for (std::size_t k = 0; k < blocks.size(); ++k) line += (k ? "   " : "") + blocks[k][0];
    put(line);
    return os.str();
  }
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    if (k) os << '\n';
    for (const auto& line : blocks[k]) put(line);
  }
  return os.str();
}

bool equivalent(const RootSystem& a, const RootSystem& b) {
  return a.rank == b.rank && isomorphic(diagram_of(a), diagram_of(b));
}

}  // namespace rootspace

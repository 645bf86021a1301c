#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "rootspace/root_system.hpp"

namespace rootspace {

struct DynkinNode {
  Rational len2;           // squared length relative to the shortest root in its component
  std::size_t root_index;  // simple root this node stands for
};

struct DynkinEdge {
  std::size_t a, b;                    // a < b
  int mult;                            // 1, 2 or 3
  std::optional<std::size_t> arrow_to;  // the shorter end when mult >= 2
};

struct DynkinDiagram {
  std::vector<DynkinNode> nodes;
  std::vector<DynkinEdge> edges;
  std::vector<std::vector<std::size_t>> components;  // sorted, ordered by first node
};

/// Throws StructuralError on an acute pair of simple roots.
DynkinDiagram build_diagram(const RootSystem& rs, const Base& base);
DynkinDiagram diagram_of(const RootSystem& rs);

bool isomorphic(const DynkinDiagram& a, const DynkinDiagram& b);

/// One label per component, sorted: "A3", "B4", "C4", "D5", "E6", "F4", "G2",
/// "B2=C2" for the rank-2 double edge, "unknown" when nothing matches.
std::vector<std::string> classification_label(const DynkinDiagram& d);

/// Order of the Weyl group implied by the labels; nullopt for "unknown".
std::optional<Integer> weyl_order_from_labels(const std::vector<std::string>& labels);

/// Text drawing: "o-o=>o" style chains, branches hung below the main chain.
/// Every line ends in a newline; components are separated by a blank line
/// unless all of them fit on one line.
std::string render_ascii(const DynkinDiagram& d);

}  // namespace rootspace

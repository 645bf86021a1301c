#include "rootspace/format.hpp"

namespace rootspace {

std::string render_terms(const std::vector<std::pair<Rational, std::string>>& terms) {
  std::string out;
  for (const auto& [c, name] : terms) {
    if (sgn(c) == 0) continue;
    const Rational mag = abs(c);
    if (out.empty()) out += sgn(c) < 0 ? "-" : "";
    else out += sgn(c) < 0 ? " - " : " + ";
    if (mag != 1) out += is_integer(mag) ? mag.get_str() : "(" + mag.get_str() + ")";
    out += name;
  }
  return out.empty() ? "0" : out;
}

std::string render_torus(const ClassicalAlgebra& a, const RationalVector& torus_coords) {
  if (a.family() == Family::SU) {
    const RationalVector lambda = a.diagonal_parameters(torus_coords);
    std::vector<std::size_t> nonzero;
    for (std::size_t p = 0; p < lambda.size(); ++p)
      if (sgn(lambda[p]) != 0) nonzero.push_back(p);
    if (nonzero.size() == 2 && lambda[nonzero[0]] == -lambda[nonzero[1]]) {
      const std::string name = "H_" + index_suffix(static_cast<int>(nonzero[0] + 1), static_cast<int>(nonzero[1] + 1));
      return render_terms({{lambda[nonzero[0]], name}});
    }
  }
  std::vector<std::pair<Rational, std::string>> terms;
  for (std::size_t k = 0; k < a.rank(); ++k) terms.emplace_back(torus_coords[k], a.torus_basis()[k].name);
  return render_terms(terms);
}

std::string render_element(const ClassicalAlgebra& a, const Matrix& m) {
  const RationalVector c = a.coordinates(m);
  const RationalVector t(c.begin(), c.begin() + static_cast<long>(a.rank()));
  std::vector<std::pair<Rational, std::string>> terms;
  for (std::size_t k = a.rank(); k < a.dim(); ++k) terms.emplace_back(c[k], a.basis_element(k).name);
  const std::string off = render_terms(terms);
  if (is_zero(t)) return off;
  const std::string torus = render_torus(a, t);
  if (off == "0") return torus;
  return torus + (off.front() == '-' ? " - " + off.substr(1) : " + " + off);
}

std::string render_expansion(const RootSystem& rs, const Base& base, std::size_t root) {
  std::vector<std::pair<Rational, std::string>> terms;
  for (std::size_t k = 0; k < base.simple.size(); ++k)
    terms.emplace_back(Rational(static_cast<long>(base.expansion.at(root)[k])), rs.label(base.simple[k]));
  return rs.label(root) + " = " + render_terms(terms);
}

}  // namespace rootspace

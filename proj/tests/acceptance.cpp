// Acceptance suite: one PASS/FAIL line per criterion.
//
// Everything is exact rational arithmetic, so every comparison below uses
// kTolerance = 0: two values agree only if they are equal.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "rootspace/cli.hpp"
#include "rootspace/complexification.hpp"
#include "rootspace/decomposition.hpp"
#include "rootspace/dynkin.hpp"
#include "rootspace/errors.hpp"
#include "rootspace/root_system.hpp"

using namespace rootspace;

namespace {

const Rational kTolerance = 0;

bool agree(const Rational& a, const Rational& b) { return abs(a - b) <= kTolerance; }

bool agree(const Matrix& a, const Matrix& b) {
  const Matrix d = a - b;
  for (std::size_t r = 0; r < d.dim(); ++r)
    for (std::size_t c = 0; c < d.dim(); ++c)
      for (const Rational* x : {&d(r, c).r, &d(r, c).i, &d(r, c).j, &d(r, c).k})
        if (abs(*x) > kTolerance) return false;
  return true;
}

struct Outcome {
  bool pass = true;
  std::string detail;
  // Failures that cannot be fixed without contradicting the generator definitions.
  std::string known_failure;
};

// Diagonal i-matrix with the given coefficients, built from scratch.
Matrix imaginary_diagonal(const std::vector<Rational>& d, ScalarFamily f) {
  Matrix m(d.size(), f);
  for (std::size_t k = 0; k < d.size(); ++k) m.set(k, k, Quaternion(0, d[k], 0, 0));
  return m;
}

// su(n) H_ij for any i != j: i at (i,i), -i at (j,j).
Matrix su_h(int n, int i, int j) {
  std::vector<Rational> d(static_cast<std::size_t>(n));
  d[static_cast<std::size_t>(i - 1)] = 1;
  d[static_cast<std::size_t>(j - 1)] = -1;
  return imaginary_diagonal(d, ScalarFamily::complex);
}

// Expression such as "-(1/2)E_ij +(1/2)Y_ij" or "2F_12", with the index
// letters i, j, k replaced by the given numbers.
Matrix expected(const ClassicalAlgebra& a, const std::string& expr, std::map<char, int> idx = {}) {
  Matrix out(a.matrix_dim(), a.scalars());
  if (expr == "0") return out;
  std::istringstream in(expr);
  for (std::string term; in >> term;) {
    std::size_t p = 0;
    Rational c = 1;
    if (term[p] == '+' || term[p] == '-') c = term[p++] == '-' ? -1 : 1;
    if (term[p] == '(') {
      const std::size_t close = term.find(')', p);
      c *= parse_rational(term.substr(p + 1, close - p - 1));
      p = close + 1;
    } else {
      std::size_t q = p;
      while (q < term.size() && std::isdigit(static_cast<unsigned char>(term[q]))) ++q;
      if (q > p) c *= parse_rational(term.substr(p, q - p));
      p = q;
    }
    const char letter = term[p];
    std::vector<int> ids;
    for (std::size_t q = p + 2; q < term.size(); ++q)
      ids.push_back(idx.count(term[q]) ? idx.at(term[q]) : term[q] - '0');
    Matrix g;
    if (a.family() == Family::SU && letter == 'H') {
      g = su_h(a.n(), ids.at(0), ids.at(1));
    } else {
      std::string name{letter, '_'};
      name += ids.size() == 1 ? index_suffix(ids[0]) : index_suffix(ids[0], ids[1]);
      g = a.element(name);
    }
    out += c * g;
  }
  return out;
}

struct Rule {
  std::string lhs, rhs, value;
};

// Checks every rule for every assignment of distinct indices; returns (checked, failed).
std::pair<std::size_t, std::size_t> check_rules(const ClassicalAlgebra& a, const std::vector<Rule>& rules,
                                                int letters, std::vector<std::string>& failures) {
  std::size_t checked = 0, failed = 0;
  const int n = a.n();
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= (letters == 3 ? n : 1); ++k) {
        if (i == j || (letters == 3 && (k == i || k == j))) continue;
        const std::map<char, int> idx{{'i', i}, {'j', j}, {'k', k}};
        for (const auto& r : rules) {
          ++checked;
          const Matrix got = bracket(expected(a, r.lhs, idx), expected(a, r.rhs, idx));
          if (!agree(got, expected(a, r.value, idx))) {
            ++failed;
            if (failures.size() < 4)
              failures.push_back(a.name() + " [" + r.lhs + "," + r.rhs + "] i=" + std::to_string(i) +
                                 " j=" + std::to_string(j) + (letters == 3 ? " k=" + std::to_string(k) : ""));
          }
        }
      }
  return {checked, failed};
}

std::vector<ClassicalAlgebra> algebras_up_to(int max_n) {
  std::vector<ClassicalAlgebra> out;
  for (int n = 2; n <= max_n; ++n) out.push_back(build(Family::SU, n));
  for (int n = 2; n <= max_n; ++n) out.push_back(build(Family::SO_even, n));
  for (int n = 1; n <= max_n; ++n) out.push_back(build(Family::SO_odd, n));
  for (int n = 1; n <= max_n; ++n) out.push_back(build(Family::Sp, n));
  return out;
}

std::size_t label_index(const RootSystem& rs, const std::string& label) {
  for (std::size_t k = 0; k < rs.roots.size(); ++k)
    if (rs.label(k) == label) return k;
  throw StructuralError("no root labelled " + label);
}

long factorial(long n) { return n <= 1 ? 1 : n * factorial(n - 1); }

// ---------------------------------------------------------------------------

Outcome table_reproduction() {
  Outcome o;
  std::vector<std::string> failures;

  // su(3): upper triangle of the printed table, canonical order.
  const ClassicalAlgebra su3 = build(Family::SU, 3);
  const std::vector<std::vector<std::string>> su3_rows{
      {"0", "0", "2F_12", "-2E_12", "-F_23", "E_23", "F_13", "-E_13"},
      {"0", "-F_12", "E_12", "2F_23", "-2E_23", "F_13", "-E_13"},
      {"0", "2H_12", "E_13", "F_13", "-E_23", "-F_23"},
      {"0", "F_13", "-E_13", "F_23", "-E_23"},
      {"0", "2H_23", "E_12", "F_12"},
      {"0", "-F_12", "E_12"},
      {"0", "2H_13"},
      {"0"}};
  std::size_t su_cells = 0, su_bad = 0;
  for (std::size_t r = 0; r < 8; ++r)
    for (std::size_t c = r + 1; c < 8; ++c) {
      ++su_cells;
      const Matrix got = bracket(su3.basis_element(r).matrix, su3.basis_element(c).matrix);
      if (!agree(got, expected(su3, su3_rows[r][c - r]))) {
        ++su_bad;
        failures.push_back("su(3) cell " + su3.basis_element(r).name + "," + su3.basis_element(c).name);
      }
    }

  const std::vector<Rule> even{
      {"E_ij", "E_jk", "E_ik"}, {"E_ij", "F_jk", "F_ik"}, {"F_ij", "E_jk", "F_ik"}, {"F_ij", "F_jk", "-E_ik"},
      {"X_ij", "X_jk", "E_ik"}, {"X_ij", "Y_jk", "-F_ik"}, {"Y_ij", "X_jk", "F_ik"}, {"Y_ij", "Y_jk", "E_ik"},
      {"E_ij", "X_jk", "X_ik"}, {"E_ij", "Y_jk", "Y_ik"}, {"F_ij", "X_jk", "Y_ik"}, {"F_ij", "Y_jk", "-X_ik"}};
  const std::vector<Rule> odd{
      {"E_ij", "V_i", "-V_j"}, {"E_ij", "W_i", "-W_j"}, {"F_ij", "V_i", "W_j"}, {"F_ij", "W_i", "-V_j"},
      {"E_ij", "V_j", "V_i"},  {"E_ij", "W_j", "W_i"},  {"F_ij", "V_j", "W_i"}, {"F_ij", "W_j", "-V_i"},
      {"X_ij", "V_i", "-W_j"}, {"X_ij", "W_i", "-V_j"}, {"Y_ij", "V_i", "V_j"}, {"Y_ij", "W_i", "-W_j"},
      {"X_ij", "V_j", "W_i"},  {"X_ij", "W_j", "V_i"},  {"Y_ij", "V_j", "-V_i"}, {"Y_ij", "W_j", "W_i"},
      {"V_i", "V_j", "-(1/2)E_ij +(1/2)Y_ij"}, {"V_i", "W_j", "(1/2)F_ij -(1/2)X_ij"},
      {"W_i", "V_j", "-(1/2)F_ij -(1/2)X_ij"}, {"W_i", "W_j", "-(1/2)E_ij -(1/2)Y_ij"}};
  std::size_t so_cells = 0, so_bad = 0;
  for (int n : {2, 3}) {
    for (Family f : {Family::SO_even, Family::SO_odd}) {
      const auto [c3, b3] = check_rules(build(f, n), even, 3, failures);
      so_cells += c3;
      so_bad += b3;
    }
    const auto [c2, b2] = check_rules(build(Family::SO_odd, n), odd, 2, failures);
    so_cells += c2;
    so_bad += b2;
  }

  // sp(n): the seven sample values as printed, then the same targets with the
  // coefficient the generator definitions give.
  const std::vector<Rule> sp_printed{{"E_ij", "E_jk", "2E_ik"}, {"A_ij", "A_jk", "-2E_ik"}, {"E_ij", "A_jk", "2A_ik"},
                                     {"A_ij", "J_i", "2E_ij"},  {"A_ij", "J_j", "-2E_ij"},  {"A_ij", "J_i", "-2A_ij"},
                                     {"E_ij", "J_j", "2A_ij"}};
  // Row six repeats the left side of row four; the sum it states
  // (alpha_ij - gamma_i = -beta_ij) belongs to [E_ij, J_i].
  const std::vector<Rule> sp_targets{{"E_ij", "E_jk", "E_ik"}, {"A_ij", "A_jk", "-E_ik"}, {"E_ij", "A_jk", "A_ik"},
                                     {"A_ij", "J_i", "E_ij"},  {"A_ij", "J_j", "-E_ij"},  {"E_ij", "J_i", "-A_ij"},
                                     {"E_ij", "J_j", "A_ij"}};
  std::size_t sp_cells = 0, sp_bad = 0, sp_target_cells = 0, sp_target_bad = 0;
  std::vector<std::string> sp_failures;
  for (int n : {2, 3}) {
    const ClassicalAlgebra sp = build(Family::Sp, n);
    for (std::size_t r = 0; r < 7; ++r) {
      const int letters = r < 3 ? 3 : 2;
      const auto [c, b] = check_rules(sp, {sp_printed[r]}, letters, sp_failures);
      sp_cells += c;
      sp_bad += b;
      const auto [ct, bt] = check_rules(sp, {sp_targets[r]}, letters, failures);
      sp_target_cells += ct;
      sp_target_bad += bt;
    }
  }

  std::ostringstream d;
  d << "su(3) " << su_cells - su_bad << "/" << su_cells << " cells; so " << so_cells - so_bad << "/" << so_cells
    << " instances; sp targets " << sp_target_cells - sp_target_bad << "/" << sp_target_cells
    << "; sp printed values " << sp_cells - sp_bad << "/" << sp_cells;
  for (const auto& f : failures) d << "; mismatch " << f;
  o.detail = d.str();
  o.pass = su_bad == 0 && so_bad == 0 && sp_target_bad == 0 && sp_bad == 0;
  if (su_bad == 0 && so_bad == 0 && sp_target_bad == 0 && sp_bad > 0)
    o.known_failure =
        "printed sp sample values carry a factor 2 the matrices do not produce (e.g. [E_12,E_23] = E_13 exactly, as in "
        "su(3)); every target space and sign is reproduced";
  return o;
}

Outcome worked_example() {
  Outcome o;
  const ClassicalAlgebra su3 = build(Family::SU, 3);
  const Matrix X = imaginary_diagonal({7, 5, -12}, ScalarFamily::complex);
  const Decomposition dec = decompose(su3);
  std::vector<Rational> values;
  for (std::size_t i = 0; i < dec.size(); ++i) values.push_back(dec.root_value(i, X));
  const std::vector<std::string> labels{dec.root_data()[0].label, dec.root_data()[1].label, dec.root_data()[2].label};
  const bool order = labels == std::vector<std::string>{"alpha_12", "alpha_23", "alpha_13"};
  const bool vals = agree(values[0], 2) && agree(values[1], 17) && agree(values[2], 19);
  const bool br = agree(bracket(X, su3.element("E_13")), Rational(19) * su3.element("F_13"));
  o.pass = order && vals && br;
  o.detail = "(a12, a23, a13)(X) = (" + to_string(values[0]) + ", " + to_string(values[1]) + ", " +
             to_string(values[2]) + "), [X,E_13] = 19F_13: " + (br ? "yes" : "no");
  return o;
}

Outcome dual_root_formulas() {
  Outcome o;
  std::size_t systems = 0;
  for (const auto& a : algebras_up_to(5)) {
    const int n = a.n();
    std::vector<Matrix> oracle;
    auto H = [&](int i) { return a.element("H_" + index_suffix(i)); };
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        switch (a.family()) {
          case Family::SU: oracle.push_back(su_h(n, i, j)); break;
          case Family::SO_even:
          case Family::SO_odd:
            oracle.push_back(make_rational(1, 2) * (H(i) - H(j)));
            oracle.push_back(make_rational(1, 2) * (H(i) + H(j)));
            break;
          case Family::Sp:
            oracle.push_back(H(i) - H(j));
            oracle.push_back(H(i) + H(j));
            break;
        }
      }
    for (int i = 1; i <= n; ++i) {
      if (a.family() == Family::SO_odd) oracle.push_back(make_rational(1, 2) * H(i));
      if (a.family() == Family::Sp) oracle.push_back(Rational(2) * H(i));
    }
    std::set<RationalVector> want, got;
    for (const auto& m : oracle) {
      const RationalVector c = a.torus_coordinates(m);
      want.insert(c);
      want.insert(-c);
    }
    const Decomposition dec = decompose(a);
    for (const auto& d : dec.root_data()) {
      got.insert(a.torus_coordinates(d.dual_root));
      got.insert(-a.torus_coordinates(d.dual_root));
    }
    ++systems;
    if (want != got) {
      o.pass = false;
      o.detail += a.name() + " differs; ";
    }
  }
  o.detail += std::to_string(systems) + " algebras with n <= 5 compared against explicit diagonal matrices";
  return o;
}

Outcome weyl_orders() {
  Outcome o;
  std::vector<std::string> parts;
  auto check = [&](const ClassicalAlgebra& a, long want) {
    const std::size_t got = weyl_group(from_decomposition(decompose(a))).size();
    if (got != static_cast<std::size_t>(want)) {
      o.pass = false;
      parts.push_back(a.name() + " " + std::to_string(got) + " != " + std::to_string(want));
    }
    return got;
  };
  std::size_t count = 0;
  for (int n = 2; n <= 5; ++n, ++count) check(build(Family::SU, n), factorial(n));
  for (int n = 1; n <= 4; ++n, count += 2) {
    check(build(Family::SO_odd, n), (1L << n) * factorial(n));
    check(build(Family::Sp, n), (1L << n) * factorial(n));
  }
  for (int n = 2; n <= 4; ++n, ++count) check(build(Family::SO_even, n), (1L << (n - 1)) * factorial(n));
  o.detail = std::to_string(count) + " groups enumerated";
  for (const auto& p : parts) o.detail += "; " + p;
  return o;
}

Outcome base_expansions() {
  Outcome o;
  struct Case {
    Family family;
    int n;
    std::string last_simple;
    std::map<std::string, std::map<std::string, long>> expansions;
  };
  const std::vector<std::string> chain{"alpha_12", "alpha_23", "alpha_34", "alpha_45", "alpha_56", "alpha_67", "alpha_78"};
  const std::vector<Case> cases{
      {Family::SO_even, 8, "beta_78",
       {{"beta_35", {{"alpha_34", 1}, {"alpha_45", 1}, {"alpha_56", 2}, {"alpha_67", 2}, {"alpha_78", 1}, {"beta_78", 1}}}}},
      {Family::SO_odd, 8, "gamma_8",
       {{"beta_35", {{"alpha_34", 1}, {"alpha_45", 1}, {"alpha_56", 2}, {"alpha_67", 2}, {"alpha_78", 2}, {"gamma_8", 2}}},
        {"gamma_3", {{"alpha_34", 1}, {"alpha_45", 1}, {"alpha_56", 1}, {"alpha_67", 1}, {"alpha_78", 1}, {"gamma_8", 1}}}}},
      {Family::Sp, 8, "gamma_8",
       {{"beta_35", {{"alpha_34", 1}, {"alpha_45", 1}, {"alpha_56", 2}, {"alpha_67", 2}, {"alpha_78", 2}, {"gamma_8", 1}}},
        {"gamma_3", {{"alpha_34", 2}, {"alpha_45", 2}, {"alpha_56", 2}, {"alpha_67", 2}, {"alpha_78", 2}, {"gamma_8", 1}}}}}};
  std::size_t checked = 0;
  for (const auto& c : cases) {
    const ClassicalAlgebra a = build(c.family, c.n);
    const RootSystem rs = from_decomposition(decompose(a));
    std::vector<std::size_t> delta;
    for (const auto& l : chain) delta.push_back(label_index(rs, l));
    delta.push_back(label_index(rs, c.last_simple));
    // The reference base; base_from_simple checks the base property itself.
    const Base base = base_from_simple(rs, delta);
    const Base found = find_base(rs);
    if (std::set<std::size_t>(found.simple.begin(), found.simple.end()) !=
        std::set<std::size_t>(delta.begin(), delta.end())) {
      o.pass = false;
      o.detail += a.name() + ": computed base differs from the reference; ";
    }
    for (const auto& [root, coeffs] : c.expansions) {
      ++checked;
      const std::size_t r = label_index(rs, root);
      for (std::size_t s = 0; s < base.simple.size(); ++s) {
        const std::string name = rs.label(base.simple[s]);
        const long want = coeffs.count(name) ? coeffs.at(name) : 0;
        if (base.expansion[r][s] != want) {
          o.pass = false;
          o.detail += a.name() + " " + root + " coefficient of " + name + " is " + std::to_string(base.expansion[r][s]) +
                      ", expected " + std::to_string(want) + "; ";
        }
      }
    }
  }
  o.detail += std::to_string(checked) + " expansions over the reference base, computed base agrees";
  return o;
}

Outcome dynkin_identities() {
  Outcome o;
  auto sys = [](Family f, int n) { return from_decomposition(decompose(build(f, n))); };
  const bool a = equivalent(sys(Family::SU, 4), sys(Family::SO_even, 3));
  const bool b = equivalent(sys(Family::Sp, 2), sys(Family::SO_odd, 2));
  const bool c = equivalent(sys(Family::Sp, 1), sys(Family::SO_odd, 1));
  const auto so4 = classification_label(diagram_of(sys(Family::SO_even, 2)));
  const bool d = so4 == std::vector<std::string>{"A1", "A1"};

  // Every classical algebra of rank <= 6, then all cross-family pairs.
  struct Entry {
    Family family;
    std::string name;
    DynkinDiagram diagram;
  };
  std::vector<Entry> all;
  for (int r = 1; r <= 6; ++r) {
    auto add = [&](Family f, int n) {
      const ClassicalAlgebra alg = build(f, n);
      const Family group = f == Family::SO_odd ? Family::SO_even : f;  // so(m) is one family
      all.push_back({group, alg.name(), diagram_of(from_decomposition(decompose(alg)))});
    };
    add(Family::SU, r + 1);
    if (r >= 2) add(Family::SO_even, r);
    add(Family::SO_odd, r);
    add(Family::Sp, r);
  }
  // su(2) = sp(1) as groups, so so(3) joins them.
  const std::set<std::set<std::string>> allowed{{"sp(1)", "so(3)"}, {"su(2)", "sp(1)"}, {"su(2)", "so(3)"},
                                                {"sp(2)", "so(5)"}, {"su(4)", "so(6)"}};
  std::set<std::set<std::string>> found;
  std::size_t pairs = 0;
  for (std::size_t x = 0; x < all.size(); ++x)
    for (std::size_t y = x + 1; y < all.size(); ++y) {
      if (all[x].family == all[y].family) continue;
      ++pairs;
      if (isomorphic(all[x].diagram, all[y].diagram)) found.insert({all[x].name, all[y].name});
    }
  o.pass = a && b && c && d && found == allowed;
  o.detail = std::string("su(4)~so(6) ") + (a ? "yes" : "no") + ", sp(2)~so(5) " + (b ? "yes" : "no") +
             ", sp(1)~so(3) " + (c ? "yes" : "no") + ", so(4) = A1+A1 " + (d ? "yes" : "no") + "; " +
             std::to_string(pairs) + " cross-family pairs, isomorphic:";
  for (const auto& p : found) o.detail += " {" + *p.begin() + "," + *p.rbegin() + "}";
  return o;
}

// Root spaces by brute force: canonical 2-planes preserved by every torus generator.
std::size_t invariant_planes(const ClassicalAlgebra& a) {
  std::size_t count = 0;
  const auto& off = a.offtorus_basis();
  for (std::size_t k = 0; k + 1 < off.size(); k += 2) {
    bool invariant = true;
    for (const auto& h : a.torus_basis())
      for (std::size_t s = 0; s < 2; ++s) {
        const Matrix img = bracket(h.matrix, off[k + s].matrix);
        const Matrix in_plane = (inner_product(img, off[k].matrix) / inner_product(off[k].matrix, off[k].matrix)) *
                                    off[k].matrix +
                                (inner_product(img, off[k + 1].matrix) /
                                 inner_product(off[k + 1].matrix, off[k + 1].matrix)) *
                                    off[k + 1].matrix;
        if (!agree(img, in_plane)) invariant = false;
      }
    count += invariant;
  }
  return count;
}

Outcome root_counts() {
  Outcome o;
  std::size_t n_alg = 0;
  for (const auto& a : algebras_up_to(5)) {
    const long n = a.n();
    long closed = 0;
    switch (a.family()) {
      case Family::SU: closed = n * (n - 1); break;
      case Family::SO_even: closed = 2 * n * (n - 1); break;
      case Family::SO_odd:
      case Family::Sp: closed = 2 * n * n; break;
    }
    const Decomposition dec = decompose(a);
    const std::size_t brute = 2 * invariant_planes(a);
    ++n_alg;
    if (root_count(dec) != static_cast<std::size_t>(closed) || brute != root_count(dec)) {
      o.pass = false;
      o.detail += a.name() + ": " + std::to_string(root_count(dec)) + " computed, " + std::to_string(brute) +
                  " brute force, " + std::to_string(closed) + " closed form; ";
    }
  }
  o.detail += std::to_string(n_alg) + " algebras, decomposition = brute force = closed form";
  return o;
}

Outcome property_suites() {
  Outcome o;
  std::vector<std::string> notes;
  // Jacobi and Ad-invariance over every ordered basis triple.
  for (const auto& a : {build(Family::SU, 3), build(Family::SO_odd, 2), build(Family::Sp, 2)}) {
    std::size_t triples = 0, bad = 0;
    for (std::size_t x = 0; x < a.dim(); ++x)
      for (std::size_t y = 0; y < a.dim(); ++y) {
        const Matrix &A = a.basis_element(x).matrix, &B = a.basis_element(y).matrix;
        const Matrix AB = bracket(A, B);
        for (std::size_t z = 0; z < a.dim(); ++z) {
          const Matrix& C = a.basis_element(z).matrix;
          ++triples;
          const Matrix jac = bracket(A, bracket(B, C)) + bracket(B, bracket(C, A)) + bracket(C, AB);
          if (!jac.is_zero()) ++bad;
          if (!agree(inner_product(AB, C), -inner_product(B, bracket(A, C)))) ++bad;
        }
      }
    notes.push_back(a.name() + " " + std::to_string(triples) + " triples");
    if (bad) {
      o.pass = false;
      notes.back() += " (" + std::to_string(bad) + " failures)";
    }
  }

  // Axioms, ad_X^2 and the complex eigen relation on every computed system up to n = 5.
  std::size_t systems = 0;
  for (const auto& a : algebras_up_to(5)) {
    const Decomposition dec = decompose(a);
    ++systems;
    if (!verify_axioms(from_decomposition(dec)).ok) {
      o.pass = false;
      notes.push_back(a.name() + " axioms fail");
    }
    const Matrix& X = dec.regular_X();
    for (std::size_t i = 0; i < dec.size(); ++i) {
      const Rational v = dec.root_value(i, X);
      for (const Matrix* w : {&dec.root_data()[i].E, &dec.root_data()[i].F})
        if (!agree(bracket(X, bracket(X, *w)), -(v * v) * *w)) {
          o.pass = false;
          notes.push_back(a.name() + " ad_X^2 fails on " + dec.root_data()[i].label);
        }
    }
    const Matrix zero(a.matrix_dim(), a.scalars());
    const auto spaces = complex_root_spaces(dec);
    for (const auto& s : spaces)
      for (const auto& h : a.torus_basis())
        for (const ComplexElement& Xc : {ComplexElement{h.matrix, zero}, ComplexElement{zero, h.matrix}}) {
          const auto [re, im] = complex_root_value(dec, s, Xc);
          if (!(complex_bracket(Xc, s.generator) == scale(re, im, s.generator))) {
            o.pass = false;
            notes.push_back(a.name() + " eigen relation fails");
          }
        }
  }
  notes.push_back(std::to_string(systems) + " systems: axioms, ad_X^2, eigen relation");

  // Root sums, both routes, every ordered pair.
  for (const auto& a : {build(Family::SU, 4), build(Family::SO_odd, 3), build(Family::Sp, 3)}) {
    const Decomposition dec = decompose(a);
    const auto spaces = complex_root_spaces(dec);
    std::size_t pairs = 0;
    try {
      for (std::size_t i = 0; i < dec.size(); ++i)
        for (std::size_t j = 0; j < dec.size(); ++j) {
          if (i == j) continue;
          ++pairs;
          const BracketTarget t = bracket_target(dec, i, j);
          const Matrix br = bracket(dec.root_data()[i].E, dec.root_data()[j].E);
          Matrix rest = br;
          if (t.plus) rest -= project(dec, t.plus->index, br);
          if (t.minus) rest -= project(dec, t.minus->index, br);
          if (!rest.is_zero()) throw InvariantError("direct route: bracket leaves the predicted spaces");
          general_bracket_table(dec, i, j);
          rootsums_via_complexification(dec, spaces, i, j);
        }
      notes.push_back(a.name() + " root sums " + std::to_string(pairs) + " pairs agree");
    } catch (const std::exception& e) {
      o.pass = false;
      notes.push_back(a.name() + " root sums: " + e.what());
    }
  }
  for (std::size_t k = 0; k < notes.size(); ++k) o.detail += (k ? "; " : "") + notes[k];
  return o;
}

Outcome rank2_completeness() {
  Outcome o;
  const auto catalog = rank2_catalog();
  bool axioms = true;
  for (const auto& [name, rs] : catalog) axioms = axioms && verify_axioms(rs).ok;
  std::vector<std::set<std::string>> classes;
  for (std::size_t k = 0; k < catalog.size(); ++k) {
    bool placed = false;
    for (auto& c : classes) {
      std::size_t rep = 0;
      while (catalog[rep].first != *c.begin()) ++rep;
      if (equivalent(catalog[rep].second, catalog[k].second)) {
        c.insert(catalog[k].first);
        placed = true;
        break;
      }
    }
    if (!placed) classes.push_back({catalog[k].first});
  }
  const std::set<std::set<std::string>> want{{"A1xA1"}, {"A2"}, {"B2", "C2"}, {"G2"}};
  const std::set<std::set<std::string>> got(classes.begin(), classes.end());
  o.pass = axioms && catalog.size() == 5 && got == want;
  o.detail = std::string("axioms ") + (axioms ? "ok" : "FAIL") + ", classes:";
  for (const auto& c : classes) {
    o.detail += " {";
    for (const auto& n : c) o.detail += (n == *c.begin() ? "" : ",") + n;
    o.detail += "}";
  }
  return o;
}

Outcome determinism() {
  Outcome o;
  std::size_t compared = 0;
  for (const auto& a : algebras_up_to(4)) {
    std::vector<Decomposition> decs;
    for (const auto& c : regular_candidates(a, 8)) {
      try {
        decs.push_back(decompose_at(a, c));
      } catch (const DecompositionError&) {
      }
      if (decs.size() == 2) break;
    }
    if (decs.size() < 2) {
      o.pass = false;
      o.detail += a.name() + ": fewer than two regular candidates; ";
      continue;
    }
    ++compared;
    const Decomposition &p = decs[0], &q = decs[1];
    if (p.regular_coords() == q.regular_coords()) o.pass = false;
    bool same = p.size() == q.size();
    for (std::size_t i = 0; same && i < q.size(); ++i) {
      const auto match = p.find_dual(q.root_data()[i].dual_coords);
      if (!match) {
        same = false;
        break;
      }
      // Same plane: projection onto the matched space leaves E and F unchanged.
      same = agree(project(p, match->first, q.root_data()[i].E), q.root_data()[i].E) &&
             agree(project(p, match->first, q.root_data()[i].F), q.root_data()[i].F);
    }
    if (!same) {
      o.pass = false;
      o.detail += a.name() + ": root spaces or dual roots differ; ";
    }
  }
  o.detail += std::to_string(compared) + " algebras decomposed at two regular vectors, identical spans and dual roots";

  const std::vector<std::vector<std::string>> commands{{"table", "su", "3"},         {"roots", "so", "7", "--json"},
                                                       {"weyl", "sp", "2", "--elements"}, {"base", "so", "9"},
                                                       {"dynkin", "so", "8"},        {"verify", "su", "3"},
                                                       {"rank2"}};
  std::size_t identical = 0;
  for (const auto& args : commands) {
    std::ostringstream out1, err1, out2, err2;
    const int c1 = cli::run(args, out1, err1), c2 = cli::run(args, out2, err2);
    if (c1 == 0 && c2 == 0 && out1.str() == out2.str() && !out1.str().empty()) ++identical;
  }
  if (identical != commands.size()) o.pass = false;
  o.detail += "; CLI " + std::to_string(identical) + "/" + std::to_string(commands.size()) + " commands byte-identical";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"table reproduction", table_reproduction}, {"worked example", worked_example},
      {"dual-root formulas", dual_root_formulas}, {"Weyl orders", weyl_orders},
      {"base expansions", base_expansions},       {"Dynkin identities", dynkin_identities},
      {"root counts", root_counts},               {"property suites", property_suites},
      {"rank-2 completeness", rank2_completeness}, {"determinism", determinism}};
  std::cout << "tolerance: " << to_string(kTolerance) << " (exact arithmetic)\n";
  int unexpected = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what(), ""};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << k + 1 << ". " << criteria[k].first << ": " << o.detail;
    if (!o.pass && !o.known_failure.empty()) std::cout << " [known: " << o.known_failure << "]";
    std::cout << " (" << static_cast<int>(secs * 1000) << " ms)\n";
    if (!o.pass && o.known_failure.empty()) ++unexpected;
  }
  return unexpected == 0 ? 0 : 1;
}

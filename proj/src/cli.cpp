#include "rootspace/cli.hpp"

#include <algorithm>
#include <charconv>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "rootspace/decomposition.hpp"
#include "rootspace/dynkin.hpp"
#include "rootspace/errors.hpp"
#include "rootspace/format.hpp"
#include "rootspace/serialization.hpp"
#include "rootspace/verify.hpp"

namespace rootspace::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  bool json = false;
  std::size_t cap = 50000;
  bool elements = false;
  std::string file;
  std::vector<std::string> source;
  std::vector<std::string> compare;
};

ClassicalAlgebra parse_algebra(const std::vector<std::string>& words) {
  if (words.size() != 2) throw UsageError("expected a family and a size, e.g. \"su 3\"");
  int m = 0;
  const std::string& num = words[1];
  const auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), m);
  if (ec != std::errc() || ptr != num.data() + num.size())
    throw UsageError("size must be an integer, got \"" + num + "\"");
  const std::string& fam = words[0];
  try {
    if (fam == "su") {
      if (m < 2) throw UsageError("su(n) needs n >= 2");
      return build(Family::SU, m);
    }
    if (fam == "so") {
      if (m < 3) throw UsageError("so(m) needs m >= 3");
      return m % 2 == 0 ? build(Family::SO_even, m / 2) : build(Family::SO_odd, (m - 1) / 2);
    }
    if (fam == "sp") {
      if (m < 1) throw UsageError("sp(n) needs n >= 1");
      return build(Family::Sp, m);
    }
  } catch (const StructuralError& e) {
    throw UsageError(e.what());
  }
  throw UsageError("unknown family \"" + fam + "\" (use su, so or sp)");
}

struct Source {
  std::string name;
  RootSystem rs;
};

// A family and size, or a single word naming a JSON root-system file.
Source load_source(const std::vector<std::string>& words, const std::string& file) {
  if (!file.empty()) {
    if (!words.empty()) throw UsageError("give either a family and size or --file, not both");
    return {file, load_root_system(file)};
  }
  if (words.size() == 1) return {words[0], load_root_system(words[0])};
  const ClassicalAlgebra a = parse_algebra(words);
  return {a.name(), from_decomposition(decompose(a))};
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t k = 0; k < parts.size(); ++k) out += (k ? sep : "") + parts[k];
  return out;
}

std::string tuple(const RationalVector& v) {
  std::vector<std::string> parts;
  for (const auto& x : v) parts.push_back(to_string(x));
  return "(" + join(parts, ", ") + ")";
}

json rational_array(const RationalVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

std::string type_label(const DynkinDiagram& d) {
  const auto labels = classification_label(d);
  return labels.empty() ? "empty" : join(labels, "x");
}

// Left-aligned columns two spaces apart, no trailing blanks.
void print_grid(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (width.size() <= c) width.resize(c + 1, 0);
      width[c] = std::max(width[c], row[c].size());
    }
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
    }
    out << line << '\n';
  }
}

void emit(std::ostream& out, const json& doc) { out << doc.dump(2) << '\n'; }

int cmd_table(const Options& o, std::ostream& out) {
  const ClassicalAlgebra a = parse_algebra(o.source);
  const std::size_t d = a.dim();
  std::vector<std::string> names;
  for (std::size_t k = 0; k < d; ++k) names.push_back(a.basis_element(k).name);
  std::vector<std::vector<std::string>> cells(d, std::vector<std::string>(d));
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = r; c < d; ++c) {
      const Matrix b = bracket(a.basis_element(r).matrix, a.basis_element(c).matrix);
      cells[r][c] = render_element(a, b);
      cells[c][r] = render_element(a, -b);
    }
  if (o.json) {
    emit(out, {{"command", "table"}, {"algebra", a.name()}, {"basis", names}, {"brackets", cells}});
    return kOk;
  }
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"[.,.]"});
  for (const auto& n : names) rows[0].push_back(n);
  for (std::size_t r = 0; r < d; ++r) {
    rows.push_back({names[r]});
    for (std::size_t c = 0; c < d; ++c) rows.back().push_back(c < r ? "*" : cells[r][c]);
  }
  out << "brackets of " << a.name() << '\n';
  print_grid(out, rows);
  return kOk;
}

int cmd_roots(const Options& o, std::ostream& out) {
  const ClassicalAlgebra a = parse_algebra(o.source);
  const Decomposition dec = decompose(a);
  const RootSystem rs = from_decomposition(dec);
  const bool su = a.family() == Family::SU;
  if (o.json) {
    json doc = to_json(rs);
    doc["command"] = "roots";
    doc["algebra"] = a.name();
    doc["regular"] = rational_array(dec.regular_coords());
    json spaces = json::array();
    for (const auto& d : dec.root_data()) {
      json s = {{"label", d.label},
                {"E", render_element(a, d.E)},
                {"F", render_element(a, d.F)},
                {"dual_root", rational_array(d.dual_coords)},
                {"values", rational_array(d.root_coords)}};
      if (su) s["lambda"] = rational_array(a.diagonal_parameters(d.dual_coords));
      spaces.push_back(s);
    }
    doc["root_spaces"] = spaces;
    emit(out, doc);
    return kOk;
  }
  std::vector<std::string> torus;
  for (const auto& h : a.torus_basis()) torus.push_back(h.name);
  out << a.name() << ": rank " << a.rank() << ", " << dec.size() << " root spaces, " << root_count(dec)
      << " roots\n";
  out << "torus basis " << join(torus, ", ") << '\n';
  out << "regular X = " << render_torus(a, dec.regular_coords()) << '\n';
  std::vector<std::vector<std::string>> rows{{"root", "E", "F", "dual root", "coords"}};
  if (su) rows[0].push_back("lambda");
  rows[0].push_back("values");
  for (const auto& d : dec.root_data()) {
    rows.push_back({d.label, render_element(a, d.E), render_element(a, d.F), render_torus(a, d.dual_coords),
                    tuple(d.dual_coords)});
    if (su) rows.back().push_back(tuple(a.diagonal_parameters(d.dual_coords)));
    rows.back().push_back(tuple(d.root_coords));
  }
  print_grid(out, rows);
  out << "negatives: swap E and F, negate the dual root\n";
  return kOk;
}

int cmd_weyl(const Options& o, std::ostream& out, std::ostream& err) {
  const Source src = load_source(o.source, o.file);
  const auto labels = classification_label(diagram_of(src.rs));
  const std::optional<Integer> projected = weyl_order_from_labels(labels);
  auto refuse = [&](const std::string& order) {
    err << "refusing to enumerate the Weyl group of " << src.name << ": order " << order << " exceeds the cap "
        << o.cap << " (raise it with --cap)\n";
    return kUsage;
  };
  if (projected && *projected > Integer(std::to_string(o.cap))) return refuse(projected->get_str());
  std::vector<WeylElement> group;
  try {
    group = weyl_group(src.rs, o.cap);
  } catch (const CapExceeded&) {
    return refuse(projected ? projected->get_str() : "above " + std::to_string(o.cap));
  }
  const std::size_t generators = src.rs.roots.size() / 2;
  if (o.json) {
    json doc = {{"command", "weyl"}, {"system", src.name}, {"type", join(labels, "x")},
                {"order", group.size()}, {"generators", generators}};
    if (o.elements) {
      json els = json::array();
      for (const auto& w : group) els.push_back(w.permutation);
      doc["elements"] = els;
    }
    emit(out, doc);
  } else {
    out << "Weyl group of " << src.name << " (" << join(labels, "x") << "): order " << group.size() << ", "
        << generators << " reflection generators\n";
    if (o.elements)
      for (std::size_t k = 0; k < group.size(); ++k) {
        std::vector<std::string> p;
        for (auto x : group[k].permutation) p.push_back(std::to_string(x));
        out << k << ": " << join(p, " ") << '\n';
      }
  }
  if (projected && *projected != Integer(std::to_string(group.size()))) {
    err << "enumerated order differs from the classification (" << projected->get_str() << ")\n";
    return kVerifyFailed;
  }
  return kOk;
}

int cmd_base(const Options& o, std::ostream& out) {
  const Source src = load_source(o.source, o.file);
  const Base base = find_base(src.rs);
  std::vector<std::string> simple;
  for (auto s : base.simple) simple.push_back(src.rs.label(s));
  if (o.json) {
    json positive = json::array();
    for (std::size_t k = 0; k < src.rs.roots.size(); ++k)
      if (base.sign[k] > 0) positive.push_back({{"root", src.rs.label(k)}, {"expansion", base.expansion[k]}});
    emit(out, {{"command", "base"}, {"system", src.name}, {"simple", simple}, {"positive", positive},
               {"functional", rational_array(base.functional)}});
    return kOk;
  }
  out << "base of " << src.name << ": " << join(simple, ", ") << '\n';
  for (std::size_t k = 0; k < src.rs.roots.size(); ++k)
    if (base.sign[k] > 0) out << render_expansion(src.rs, base, k) << '\n';
  return kOk;
}

int cmd_dynkin(const Options& o, std::ostream& out) {
  const Source src = load_source(o.source, o.file);
  const DynkinDiagram d = diagram_of(src.rs);
  if (!o.compare.empty()) {
    const Source other = load_source(o.compare, "");
    const DynkinDiagram e = diagram_of(other.rs);
    const bool same = isomorphic(d, e);
    if (o.json) {
      emit(out, {{"command", "dynkin"}, {"systems", {src.name, other.name}}, {"equivalent", same},
                 {"types", {type_label(d), type_label(e)}}});
    } else if (same) {
      out << "equivalent (" << type_label(d) << ")\n";
    } else {
      out << "not equivalent (" << type_label(d) << " vs " << type_label(e) << ")\n";
    }
    return kOk;
  }
  if (o.json) {
    json doc = to_json(d);
    doc["command"] = "dynkin";
    doc["system"] = src.name;
    doc["type"] = type_label(d);
    emit(out, doc);
    return kOk;
  }
  out << src.name << ": " << type_label(d) << '\n' << render_ascii(d);
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const ClassicalAlgebra a = parse_algebra(o.source);
  const auto results = verify_algebra(a);
  const bool ok = std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.ok; });
  if (o.json) {
    json checks = json::array();
    for (const auto& r : results) checks.push_back({{"name", r.name}, {"ok", r.ok}, {"detail", r.detail}});
    emit(out, {{"command", "verify"}, {"algebra", a.name()}, {"ok", ok}, {"checks", checks}});
  } else {
    out << "verify " << a.name() << '\n';
    for (const auto& r : results) out << (r.ok ? "[ok]   " : "[FAIL] ") << r.name << ": " << r.detail << '\n';
    out << (ok ? "all checks passed" : "verification FAILED") << '\n';
  }
  return ok ? kOk : kVerifyFailed;
}

int cmd_rank2(const Options& o, std::ostream& out) {
  const auto catalog = rank2_catalog();
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t k = 0; k < catalog.size(); ++k) {
    auto it = std::find_if(classes.begin(), classes.end(),
                           [&](const auto& c) { return equivalent(catalog[c[0]].second, catalog[k].second); });
    if (it == classes.end()) classes.push_back({k});
    else it->push_back(k);
  }
  bool ok = true;
  json models = json::array();
  std::vector<std::vector<std::string>> rows{{"model", "roots", "axioms", "type", "|W|"}};
  for (const auto& [name, rs] : catalog) {
    const AxiomReport r = verify_axioms(rs);
    ok = ok && r.ok;
    const std::string type = type_label(diagram_of(rs));
    const std::size_t order = weyl_group(rs).size();
    models.push_back({{"name", name}, {"roots", rs.roots.size()}, {"axioms", r.ok}, {"type", type}, {"weyl_order", order}});
    rows.push_back({name, std::to_string(rs.roots.size()), r.ok ? "ok" : "FAIL: " + r.violation, type,
                    std::to_string(order)});
  }
  std::vector<std::string> class_text;
  json class_json = json::array();
  for (const auto& c : classes) {
    std::vector<std::string> names;
    for (auto k : c) names.push_back(catalog[k].first);
    class_text.push_back("{" + join(names, ", ") + "}");
    class_json.push_back(names);
  }
  if (o.json) {
    emit(out, {{"command", "rank2"}, {"models", models}, {"classes", class_json}});
  } else {
    print_grid(out, rows);
    out << "classes: " << join(class_text, " ") << '\n';
  }
  return ok ? kOk : kVerifyFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Root-space structure of su(n), so(m) and sp(n), in exact arithmetic.", "rootspace"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", o.json, "Emit JSON instead of text");
  app.add_option("--cap", o.cap, "Largest Weyl group to enumerate")->capture_default_str();

  const std::string src_help = "Family and size (su 3, so 8, sp 2) or a root-system JSON file";
  auto* table = app.add_subcommand("table", "Bracket table of the canonical basis");
  auto* roots = app.add_subcommand("roots", "Root spaces, dual roots and root values");
  auto* weyl = app.add_subcommand("weyl", "Weyl group order, optionally every element");
  auto* base = app.add_subcommand("base", "Simple roots and expansions of the positive roots");
  auto* dynkin = app.add_subcommand("dynkin", "Dynkin diagram and its type");
  auto* verify = app.add_subcommand("verify", "Run every invariant check");
  auto* rank2 = app.add_subcommand("rank2", "The rank-2 catalog and its equivalence classes");
  (void)rank2;
  for (auto* sub : {table, roots, weyl, base, dynkin, verify})
    sub->add_option("source", o.source, src_help)->expected(0, 2);
  for (auto* sub : {weyl, base, dynkin}) sub->add_option("--file", o.file, "Root-system JSON file");
  weyl->add_flag("--elements", o.elements, "List every element as a root permutation");
  dynkin->add_option("--compare", o.compare, "Second source to compare against")->expected(1, 2);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    CLI::App* sub = app.get_subcommands().front();
    const std::string verb = sub->get_name();
    if (verb == "table") return cmd_table(o, out);
    if (verb == "roots") return cmd_roots(o, out);
    if (verb == "weyl") return cmd_weyl(o, out, err);
    if (verb == "base") return cmd_base(o, out);
    if (verb == "dynkin") return cmd_dynkin(o, out);
    if (verb == "verify") return cmd_verify(o, out);
    return cmd_rank2(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const StructuralError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "failed: " << e.what() << '\n';
    return kVerifyFailed;
  }
}

}  // namespace rootspace::cli

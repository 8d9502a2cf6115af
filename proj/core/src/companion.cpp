#include "orbicurve/companion.hpp"

#include <nlohmann/json.hpp>

#include <utility>

#include "orbicurve/version.hpp"

namespace orbicurve {

CompanionCurve twisted_companion(const std::vector<Weight>& weights,
                                 std::string parameter) {
  if (weights.size() < 2)
    throw DomainError("companion needs at least two weighted points");
  for (Weight w : weights)
    if (w < 2) throw DomainError("companion weights must be >= 2");

  CompanionCurve c;
  c.source_weights = weights;
  c.parameter = std::move(parameter);
  Int abar = 1, product = 1;
  for (Weight w : weights) {
    abar = lcm(abar, Int(w));
    product *= w;
  }
  c.lcm = abar;
  c.degrees.reserve(weights.size());
  for (Weight w : weights) c.degrees.push_back(abar / w);
  c.group_order = product / abar;
  c.chi = Rational(c.group_order) *
          euler_characteristic(WeightedCurve(0, weights));
  c.smooth = true;
  for (std::size_t i = 0; i < c.degrees.size() && c.smooth; ++i)
    for (std::size_t j = i + 1; j < c.degrees.size(); ++j)
      if (gcd(c.degrees[i], c.degrees[j]) != 1) {
        c.smooth = false;
        break;
      }
  // Two unequal weights satisfy the coprimality test vacuously yet give a
  // fractional chi: the cover is again a football, not a curve.
  if (c.smooth &&
      !(c.chi.is_integer() && c.chi.as_integer() % 2 == 0 &&
        c.chi.as_integer() <= 2))
    c.smooth = false;
  if (c.smooth) c.genus = chi_to_genus(c.chi);
  return c;
}

Rational uniform_companion_chi(Weight a, Weight t) {
  if (a < 2) throw DomainError("uniform companion needs weight >= 2");
  if (t < 2) throw DomainError("uniform companion needs at least two points");
  Int value = -pow(Int(a), static_cast<unsigned>(t - 2)) * (Int(t - 2) * a - t);
  return Rational(std::move(value));
}

PolyhedralGroup PolyhedralGroup::cyclic(Weight n) {
  if (n < 1) throw DomainError("cyclic group needs n >= 1");
  return {PolyhedralKind::Cyclic, n};
}

PolyhedralGroup PolyhedralGroup::dihedral(Weight n) {
  if (n < 2) throw DomainError("dihedral group needs n >= 2");
  return {PolyhedralKind::Dihedral, n};
}

PolyhedralGroup PolyhedralGroup::platonic(Weight n) {
  if (n < 3 || n > 5) throw DomainError("platonic type must be 3, 4 or 5");
  return {PolyhedralKind::Platonic, n};
}

Int PolyhedralGroup::order() const {
  switch (kind_) {
    case PolyhedralKind::Cyclic: return n_;
    case PolyhedralKind::Dihedral: return 2 * n_;
    case PolyhedralKind::Platonic: return 12 * n_ / (6 - n_);
  }
  throw Error("unreachable polyhedral kind");
}

std::string PolyhedralGroup::label() const {
  switch (kind_) {
    case PolyhedralKind::Cyclic: return "C_" + std::to_string(n_);
    case PolyhedralKind::Dihedral: return "D_" + std::to_string(n_);
    case PolyhedralKind::Platonic:
      return n_ == 3 ? "A_4" : n_ == 4 ? "S_4" : "A_5";
  }
  throw Error("unreachable polyhedral kind");
}

namespace {

std::string realization_label(Weight a, Weight stable_size,
                              const PolyhedralGroup& part) {
  std::string abelian;
  if (stable_size >= 1 && a >= 2)
    abelian = "mu_" + std::to_string(a) + "^" + std::to_string(stable_size) +
              "/mu_" + std::to_string(a);
  bool trivial_part = part.order() == 1;
  if (abelian.empty()) return trivial_part ? "1" : part.label();
  if (trivial_part) return abelian;
  return abelian + " : " + part.label();
}

} // namespace

RealizationRecord polyhedral_realize(const PolyhedralGroup& part,
                                     const std::array<int, 3>& eps, Weight a,
                                     Weight r) {
  if (a < 1) throw DomainError("point weight must be a positive integer");
  if (r < 0) throw DomainError("free orbit count must be >= 0");
  for (int e : eps)
    if (e != 0 && e != 1) throw DomainError("eps entries must be 0 or 1");

  // Exceptional orbits as (size, quotient weight with eps off).
  std::vector<std::pair<Weight, Weight>> orbits;
  Weight free_size = 0;
  switch (part.kind()) {
    case PolyhedralKind::Cyclic:
      if (eps[2] != 0)
        throw DomainError("cyclic actions have only two exceptional orbits");
      orbits = {{1, part.n()}, {1, part.n()}};
      free_size = part.n();
      break;
    case PolyhedralKind::Dihedral:
      orbits = {{part.n(), 2}, {part.n(), 2}, {2, part.n()}};
      free_size = 2 * part.n();
      break;
    case PolyhedralKind::Platonic: {
      Weight p = 12 * part.n() / (6 - part.n());
      orbits = {{p / 2, 2}, {p / 3, 3}, {p / part.n(), part.n()}};
      free_size = p;
      break;
    }
  }

  Weight stable_size = r * free_size;
  std::vector<Weight> quotient;
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    if (eps[i]) {
      stable_size += orbits[i].first;
      quotient.push_back(orbits[i].second * a);
    } else {
      quotient.push_back(orbits[i].second);
    }
  }
  for (Weight i = 0; i < r; ++i) quotient.push_back(a);

  RealizationRecord rec{part};
  rec.a = a;
  rec.stable_set_size = stable_size;
  WeightedCurve line(0, std::move(quotient));
  rec.quotient_weights = line.weights();
  Int p = part.order();
  rec.group_order =
      stable_size >= 1 ? pow(Int(a), static_cast<unsigned>(stable_size - 1)) * p
                       : p;
  rec.chi_quotient = euler_characteristic(line);
  rec.chi_cover = Rational(rec.group_order) * rec.chi_quotient;
  if (rec.chi_cover.is_integer() && rec.chi_cover.as_integer() % 2 == 0 &&
      rec.chi_cover.as_integer() <= 2)
    rec.genus_cover = chi_to_genus(rec.chi_cover);
  rec.group_label = realization_label(a, stable_size, part);
  return rec;
}

namespace {

// Fills the recomputed numeric columns from the route's group order and
// checks them against the printed ones.
void finish_row(ArnoldRow& row, Int group_order) {
  Rational chi_x = euler_characteristic(WeightedCurve(0, row.weights));
  row.neg_chi_x = -chi_x;
  row.group_order = std::move(group_order);
  Rational chi_cover = Rational(row.group_order) * chi_x;
  row.neg_chi_m = (-chi_cover).as_integer();
  row.genus = chi_to_genus(chi_cover);
  row.consistent = row.printed_group_order == row.group_order &&
                   row.printed_neg_chi_x == row.neg_chi_x &&
                   row.printed_neg_chi_m == row.neg_chi_m &&
                   row.printed_genus == row.genus;
}

ArnoldRow polyhedral_row(std::vector<Weight> weights, std::string printed_group,
                         Int printed_order, Rational printed_neg_chi_x,
                         Int printed_neg_chi_m, Int printed_genus,
                         std::string curve, const PolyhedralGroup& part,
                         const std::array<int, 3>& eps, Weight a, Weight r,
                         std::string note = {}) {
  RealizationRecord rec = polyhedral_realize(part, eps, a, r);
  ArnoldRow row;
  row.weights = std::move(weights);
  if (rec.quotient_weights != row.weights)
    throw Error("realization route does not produce " +
                WeightedCurve(0, row.weights).label());
  row.printed_group = std::move(printed_group);
  row.printed_group_order = std::move(printed_order);
  row.printed_neg_chi_x = std::move(printed_neg_chi_x);
  row.printed_neg_chi_m = std::move(printed_neg_chi_m);
  row.printed_genus = std::move(printed_genus);
  row.curve_label = std::move(curve);
  row.group_label = rec.group_label;
  row.note = std::move(note);
  finish_row(row, rec.group_order);
  return row;
}

ArnoldRow direct_row(std::vector<Weight> weights, std::string group,
                     Int group_order, Rational printed_neg_chi_x,
                     Int printed_neg_chi_m, Int printed_genus,
                     std::string curve, std::string note = {}) {
  ArnoldRow row;
  row.weights = std::move(weights);
  row.printed_group = group;
  row.printed_group_order = group_order;
  row.printed_neg_chi_x = std::move(printed_neg_chi_x);
  row.printed_neg_chi_m = std::move(printed_neg_chi_m);
  row.printed_genus = std::move(printed_genus);
  row.curve_label = std::move(curve);
  row.group_label = std::move(group);
  row.note = std::move(note);
  finish_row(row, std::move(group_order));
  return row;
}

} // namespace

std::vector<ArnoldRow> arnold_table() {
  std::vector<ArnoldRow> rows;
  auto C = PolyhedralGroup::cyclic;
  auto D = PolyhedralGroup::dihedral;
  auto P = PolyhedralGroup::platonic;

  rows.push_back(direct_row({2, 3, 7}, "G_168", 168, {1, 42}, 4, 3,
                            "K_4: x^3y+y^3z+z^3x"));
  rows.push_back(polyhedral_row({2, 3, 8}, "mu_4^3/mu_4 : D_3", 96, {1, 24}, 4,
                                3, "F_4: x^4+y^4+z^4", D(3), {0, 1, 0}, 4, 0));
  rows.push_back(polyhedral_row(
      {2, 3, 9}, "mu_3^4/mu_e : A_4", 396, {2, 3}, 18, 10, "Y[3,3,3,3]", P(3),
      {0, 0, 1}, 3, 0,
      "printed |G| and -chi_X contradict the group-order formula and the "
      "row's own cover columns"));
  rows.push_back(polyhedral_row({2, 4, 5}, "mu_2^5/mu_2 : D_5", 160, {1, 20}, 8,
                                5, "Y[2,2,2,2,2]", D(5), {0, 1, 0}, 2, 0));
  {
    // Generalized polyhedral type: points of weights 3,6,6 instead of a
    // constant weight, so the cover is the companion of [3,6,6] and D_2 acts
    // on top of its deck group.
    CompanionCurve cover = twisted_companion({3, 6, 6});
    ArnoldRow row = direct_row(
        {2, 4, 6}, "(mu_3 x mu_6^2)/mu_6 : D_2",
        cover.group_order * PolyhedralGroup::dihedral(2).order(), {1, 12}, 6, 4,
        "Y[3,6,6]", "generalized polyhedral type over the companion of [3,6,6]");
    rows.push_back(std::move(row));
  }
  rows.push_back(polyhedral_row({2, 4, 6}, "mu_2^6/mu_2 : D_6", 384, {1, 12},
                                32, 17, "Y[2,2,2,2,2,2]", D(6), {0, 1, 0}, 2,
                                0));
  rows.push_back(direct_row({2, 4, 7}, "G_168", 168, {3, 28}, 18, 10,
                            "5x^2y^2z^2-(xy^5+yz^5+zx^5)"));
  rows.push_back(polyhedral_row({2, 4, 7}, "mu_2^7/mu_2 : D_7", Int(128) * 7,
                                {3, 28}, 96, 49, "Y[2,2,2,2,2,2,2]", D(7),
                                {0, 1, 0}, 2, 0));
  rows.push_back(polyhedral_row({2, 5, 5}, "mu_2^5/mu_2 : C_5", 80, {1, 10}, 8,
                                5, "Y[2,2,2,2,2]", C(5), {0, 0, 0}, 2, 1));
  rows.push_back(polyhedral_row({2, 5, 6}, "mu_3^5/mu_3 : D_5", 810, {2, 15},
                                108, 55, "Y[3,3,3,3,3]", D(5), {0, 1, 0}, 3,
                                0));
  rows.push_back(polyhedral_row({3, 3, 4}, "mu_4^3/mu_4 : C_3", 48, {1, 12}, 4,
                                3, "F_4: x^4+y^4+z^4", C(3), {0, 0, 0}, 4, 1));
  rows.push_back(polyhedral_row({3, 3, 5}, "mu_5^3/mu_5 : C_3", 75, {2, 15}, 10,
                                6, "F_5: x^5+y^5+z^z", C(3), {0, 0, 0}, 5, 1,
                                "curve equation printed with a typo (z^z)"));
  rows.push_back(polyhedral_row({3, 3, 6}, "mu_6^3/mu_6 : C_3", 108, {1, 6}, 18,
                                10, "F_6: x^6+y^6+z^6", C(3), {0, 0, 0}, 6, 1));
  rows.push_back(polyhedral_row({3, 4, 4}, "mu_3^4/mu_3 : C_4", 108, {1, 6}, 18,
                                10, "Y[3,3,3,3]", C(4), {0, 0, 0}, 3, 1));
  rows.push_back(polyhedral_row({3, 4, 5}, "mu_2^30/mu_2 : A_5",
                                pow(Int(2), 29) * 60, {13, 60},
                                Int(13) * pow(Int(2), 29),
                                Int(13) * pow(Int(2), 28) + 1, "Y[2^[30]]",
                                P(5), {1, 0, 0}, 2, 0));
  rows.push_back(polyhedral_row({4, 4, 4}, "mu_4^3/mu_4", 16, {1, 4}, 4, 3,
                                "F_4: x^4+y^4+z^4", C(1), {1, 1, 0}, 4, 1));
  return rows;
}

namespace {

std::string pad(const std::string& cell, std::size_t width, bool right) {
  std::string spaces(width - cell.size(), ' ');
  return right ? spaces + cell : cell + spaces;
}

} // namespace

std::string render_arnold_text(const std::vector<ArnoldRow>& rows, bool audit) {
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> head = {"weights", "G",   "|G|",
                                   "-chi_X",  "-chi_M", "g_M",
                                   "curve M / equations"};
  if (audit) head.push_back("flags");
  cells.push_back(std::move(head));
  for (const ArnoldRow& row : rows) {
    std::vector<std::string> line = {WeightedCurve(0, row.weights).label(),
                                     row.group_label,
                                     row.group_order.str(),
                                     row.neg_chi_x.str(),
                                     row.neg_chi_m.str(),
                                     row.genus.str(),
                                     row.curve_label};
    if (audit) line.push_back(row.consistent ? "ok" : "INCONSISTENT_PAPER_ROW");
    cells.push_back(std::move(line));
  }

  std::vector<std::size_t> width(cells[0].size(), 0);
  for (const auto& line : cells)
    for (std::size_t i = 0; i < line.size(); ++i)
      width[i] = std::max(width[i], line[i].size());

  std::string out;
  for (const auto& line : cells) {
    for (std::size_t i = 0; i < line.size(); ++i) {
      bool numeric = i >= 2 && i <= 5;
      if (i + 1 == line.size())
        out += numeric ? pad(line[i], width[i], true) : line[i];
      else
        out += pad(line[i], width[i], numeric) + "  ";
    }
    out += '\n';
  }
  if (audit) {
    for (const ArnoldRow& row : rows) {
      if (row.consistent) continue;
      out += WeightedCurve(0, row.weights).label() + ": printed |G| = " +
             row.printed_group_order.str() + ", -chi_X = " +
             row.printed_neg_chi_x.str() + "; recomputed |G| = " +
             row.group_order.str() + ", -chi_X = " + row.neg_chi_x.str();
      if (!row.note.empty()) out += " (" + row.note + ")";
      out += '\n';
    }
  }
  return out;
}

std::string arnold_to_json(const std::vector<ArnoldRow>& rows, bool audit) {
  nlohmann::json j;
  j["schema_version"] = json_schema_version;
  j["tool_version"] = version;
  j["kind"] = "arnold-table";
  j["audit"] = audit;
  auto& out = j["rows"] = nlohmann::json::array();
  for (const ArnoldRow& row : rows) {
    nlohmann::json r;
    r["weights"] = row.weights;
    r["group"] = row.group_label;
    r["group_order"] = row.group_order.str();
    r["neg_chi_x"] = row.neg_chi_x.str();
    r["neg_chi_m"] = row.neg_chi_m.str();
    r["genus"] = row.genus.str();
    r["curve"] = row.curve_label;
    r["printed"] = {{"group", row.printed_group},
                    {"group_order", row.printed_group_order.str()},
                    {"neg_chi_x", row.printed_neg_chi_x.str()},
                    {"neg_chi_m", row.printed_neg_chi_m.str()},
                    {"genus", row.printed_genus.str()}};
    r["consistent"] = row.consistent;
    if (!row.note.empty()) r["note"] = row.note;
    out.push_back(std::move(r));
  }
  return j.dump(2) + "\n";
}

} // namespace orbicurve

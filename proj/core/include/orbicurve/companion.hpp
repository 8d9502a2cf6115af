#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "orbicurve/rational.hpp"
#include "orbicurve/weighted_curve.hpp"

namespace orbicurve {

/// Twisted companion curve of P^1<a_1..a_t>: the smooth-or-weighted curve cut
/// out by the canonical Z-grading, covering the line with abelian deck group
/// of order (prod a_i)/lcm(a_i).
struct CompanionCurve {
  std::vector<Weight> source_weights; // a_1..a_t in the order given
  Int lcm;                            // abar
  std::vector<Int> degrees;           // delta_i = abar / a_i, aligned with source_weights
  Int group_order;                    // deck group order (prod a_i) / abar
  Rational chi;                       // group_order * chi(P^1<a_1..a_t>)
  bool smooth = false;                // degrees pairwise coprime and chi an even integer <= 2
  std::optional<Int> genus;           // present iff smooth
  std::string parameter;              // opaque modulus, e.g. the lambda in [2,2,2,2;lambda]
};

/// Requires t >= 2 and every weight >= 2.
CompanionCurve twisted_companion(const std::vector<Weight>& weights,
                                 std::string parameter = {});

/// chi of the companion of t points of equal weight a: -a^(t-2)((t-2)a - t).
/// Requires a >= 2, t >= 2; agrees with twisted_companion([a]*t).chi.
Rational uniform_companion_chi(Weight a, Weight t);

enum class PolyhedralKind { Cyclic, Dihedral, Platonic };

/// Finite subgroup of Aut(P^1): C_n (n >= 1), D_n (n >= 2), or the platonic
/// group with smallest vertex order n in {3,4,5} (A_4, S_4, A_5; order
/// 12n/(6-n)).
class PolyhedralGroup {
public:
  static PolyhedralGroup cyclic(Weight n);
  static PolyhedralGroup dihedral(Weight n);
  static PolyhedralGroup platonic(Weight n);

  PolyhedralKind kind() const { return kind_; }
  Weight n() const { return n_; }
  Int order() const;
  std::string label() const; // "C_5", "D_3", "A_4", "S_4", "A_5"

private:
  PolyhedralGroup(PolyhedralKind kind, Weight n) : kind_(kind), n_(n) {}
  PolyhedralKind kind_;
  Weight n_;
};

/// One realization of a weighted projective line as the quotient of a smooth
/// curve by mu_a^|A|/mu_a semidirect P, where A is the P-stable weighted set.
struct RealizationRecord {
  PolyhedralGroup part;
  Weight a = 1;
  Weight stable_set_size = 0; // |A|
  std::vector<Weight> quotient_weights;
  Int group_order;            // a^(|A|-1) * |P|  (|A| = 0: just |P|)
  Rational chi_quotient;
  Rational chi_cover;         // group_order * chi_quotient
  std::optional<Int> genus_cover;
  std::string group_label;    // e.g. "mu_2^30/mu_2 : A_5"
};

/// Realize the quotient of P^1 with a P-stable set A built from eps_i choices
/// of the exceptional orbits plus r free orbits, all points weighted a >= 1.
/// Quotient weights by kind (exceptional orbit sizes in parentheses):
///   cyclic n:    <n a^e1, n a^e2, a^[r]>          (1, 1; free n)   eps3 must be 0
///   dihedral n:  <2 a^e1, 2 a^e2, n a^e3, a^[r]>  (n, n, 2; free 2n)
///   platonic n:  <2 a^e1, 3 a^e2, n a^e3, a^[r]>  (|P|/2, |P|/3, |P|/n; free |P|)
/// |A| is the total size of the chosen orbits.
RealizationRecord polyhedral_realize(const PolyhedralGroup& part,
                                     const std::array<int, 3>& eps, Weight a,
                                     Weight r);

/// One row of the strange-duality table: the printed columns next to the same
/// quantities recomputed from the realization route.
struct ArnoldRow {
  std::vector<Weight> weights;
  std::string printed_group;
  Int printed_group_order;
  Rational printed_neg_chi_x;
  Int printed_neg_chi_m;
  Int printed_genus;
  std::string curve_label; // stored verbatim, typos included; never parsed
  std::string group_label; // recomputed route
  Int group_order;
  Rational neg_chi_x;
  Int neg_chi_m;
  Int genus;
  bool consistent = false;
  std::string note;
};

/// The 16 realization rows of the strange-duality table (14 distinct weight
/// triples; <2,4,6> and <2,4,7> each have two realizations). Every numeric
/// column is recomputed from first principles; exactly the <2,3,9> row fails
/// to match its printed |G| and -chi_X.
std::vector<ArnoldRow> arnold_table();

/// Aligned text rendering mirroring the table's columns; with audit=true a
/// flags column marks each row "ok" or "INCONSISTENT_PAPER_ROW".
std::string render_arnold_text(const std::vector<ArnoldRow>& rows, bool audit);

/// JSON rendering (versioned schema; big integers as decimal strings).
std::string arnold_to_json(const std::vector<ArnoldRow>& rows, bool audit);

} // namespace orbicurve

#pragma once

// Serre weights for GL_2 of the residue field, their equivalence classes, and
// the explicit weight sets (BDJ / Schein / GHS inertial layer / explicit) of a
// local mod-l representation given by its tame inertial characters.

#include <cstdint>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "serre/chars.hpp"

namespace serre {

// One pair (a_{sigma,1} >= a_{sigma,2}) per embedding sigma of the residue
// field; a Serre weight additionally satisfies a_{sigma,1} - a_{sigma,2} <= l-1.
struct SerreWeight {
  i64 l = 0;
  int f = 0;
  std::vector<std::pair<i64, i64>> a;

  bool in_positive_cone() const;
  bool is_serre_weight() const;
  void require_serre_weight() const;

  bool operator==(const SerreWeight&) const = default;
};

// Canonical form of the equivalence class: difference vector d in [0,l-1]^f
// plus the twist residue t = canonical residue of (a_{sigma,2})_sigma.
struct WeightClass {
  std::vector<i64> d;
  i64 t = 0;

  bool operator==(const WeightClass&) const = default;
  // lexicographic on (d, t); fixes all emitted orderings
  bool operator<(const WeightClass& o) const {
    if (d != o.d) return d < o.d;
    return t < o.t;
  }
};

bool weights_equivalent(const SerreWeight& a, const SerreWeight& b);
WeightClass weight_class(const SerreWeight& a);
// Representative with a_{sigma,2} = base-l digits of t and a_{sigma,1} added d.
SerreWeight class_representative(i64 l, int f, const WeightClass& c);
// All l^f*(l^f-1) classes, in sorted order.
std::vector<WeightClass> enumerate_weight_classes(i64 l, int f);

bool is_regular(const SerreWeight& a);
bool is_e_regular(const SerreWeight& a, i64 e);

// prod_sigma w_sigma^{a_{sigma,1}+a_{sigma,2}+e}
InertialChar det_char(const SerreWeight& a, i64 e);

// Classes of Serre weights a with det_char(a, e) == chi.
std::vector<WeightClass> det_weight_set(const InertialChar& chi, i64 e);

// Shape of rhobar restricted to inertia: an induction from the quadratic
// unramified extension (niveau-2f character psi), or two niveau-f characters
// split or as sub/quotient of a non-split extension.
enum class RepShape { Irreducible, Split, NonSplit };

class LocalModRep {
 public:
  // Irreducible: psi at niveau 2f, psi != psi^c.
  static LocalModRep irreducible(i64 l, int f, i64 e, const InertialChar& psi);
  static LocalModRep split(i64 l, int f, i64 e, const InertialChar& chi1,
                           const InertialChar& chi2);
  static LocalModRep non_split(i64 l, int f, i64 e, const InertialChar& sub,
                               const InertialChar& quotient);

  RepShape shape() const { return shape_; }
  i64 l() const { return l_; }
  int f() const { return f_; }
  i64 e() const { return e_; }
  bool semisimple() const { return shape_ != RepShape::NonSplit; }

  const InertialChar& psi() const;   // Irreducible only
  const InertialChar& chi1() const;  // Split / NonSplit
  const InertialChar& chi2() const;

  // det rhobar|_{I_K} as a niveau-f character.
  InertialChar det() const;

 private:
  LocalModRep() = default;
  RepShape shape_ = RepShape::Split;
  i64 l_ = 0;
  int f_ = 0;
  i64 e_ = 0;
  InertialChar psi_, chi1_, chi2_;
};

// Witness (J, delta) for membership of a weight in one of the explicit sets.
// Niveau 1: J is a bitmask over Hom(k, .) (bit s set <=> sigma_s in J).
// Niveau 2: bit s selects which extension of sigma_s lies in J (0 -> k'-index
// s, 1 -> k'-index s+f).  delta has one entry per sigma_s, 0 <= delta_s <= e-1.
struct WitnessJD {
  std::uint32_t j_mask = 0;
  std::vector<i64> delta;

  bool operator==(const WitnessJD&) const = default;
};

// The two diagonal characters prescribed by the niveau-1 definition for
// (a, J, delta): first entry (sub side) and second entry (quotient side).
std::pair<InertialChar, InertialChar> niveau1_pair(const SerreWeight& a, i64 e,
                                                   const WitnessJD& w);
// The niveau-2 prescribed character psi(J, delta) at niveau 2f.
InertialChar niveau2_char(const SerreWeight& a, i64 e, const WitnessJD& w);

std::optional<WitnessJD> find_witness(const LocalModRep& rep,
                                      const SerreWeight& a);
bool verify_witness(const LocalModRep& rep, const SerreWeight& a,
                    const WitnessJD& w);

struct WeightSet {
  std::vector<WeightClass> classes;  // sorted
  bool superset = false;  // set: a necessary-condition superset only

  bool contains(const WeightClass& c) const;
};

struct SetOptions {
  int jobs = 1;
};

// W^Sch: semisimple shapes only (Irreducible or Split).
WeightSet schein_set(const LocalModRep& rep, const SetOptions& opt = {});
// W^BDJ: requires e == 1.  Semisimple: same as schein_set.  NonSplit: the
// ordered inertial necessary condition, flagged superset.
WeightSet bdj_set(const LocalModRep& rep, const SetOptions& opt = {});
// Inertial layer of W^GHS for non-split reducible input: ordered matching
// (sub character = first displayed entry); always flagged superset.
WeightSet ghs_inertial_set(const LocalModRep& rep, const SetOptions& opt = {});
// W^explicit: schein_set for semisimple shapes, ghs_inertial_set otherwise.
WeightSet explicit_set(const LocalModRep& rep, const SetOptions& opt = {});

// Constructive witnesses for e >= l under the determinant condition.
WitnessJD solve_niveau1_big_e(const InertialChar& chi1, const InertialChar& chi2,
                              const SerreWeight& a, i64 e);
WitnessJD solve_niveau2_big_e(const InertialChar& psi, const SerreWeight& a,
                              i64 e);

// A lift of a: one distinguished slot (in [0, e-1]) per sigma carrying a_sigma.
struct HodgeTypeLift {
  SerreWeight weight;
  std::vector<i64> slot;
};

i64 lift_count(const SerreWeight& a, i64 e);
HodgeTypeLift lift_at(const SerreWeight& a, i64 e, i64 index);
std::vector<HodgeTypeLift> lifts_of(const SerreWeight& a, i64 e);

// Hodge-Tate tables of the diagonal crystalline lift attached to a niveau-1
// witness: reductions equal the witness pair, and per K-embedding the multiset
// {B_tau, C_tau} = {lambda_{tau,1}+1, lambda_{tau,2}}.
std::pair<CrysCharData, CrysCharData> ht_data_niveau1(const SerreWeight& a,
                                                      const WitnessJD& w,
                                                      const HodgeTypeLift& lift,
                                                      i64 e);
// Niveau-2 analogue: a single table over the 2f embeddings whose reduction is
// the witness character psi(J, delta).
CrysCharData ht_data_niveau2(const SerreWeight& a, const WitnessJD& w,
                             const HodgeTypeLift& lift, i64 e);

struct GlobalWeightSet {
  std::vector<std::vector<WeightClass>> tuples;
  bool superset = false;
};

// Cartesian product over the chosen places, one local set per place.
GlobalWeightSet global_weight_set(const std::vector<WeightSet>& locals);

}  // namespace serre

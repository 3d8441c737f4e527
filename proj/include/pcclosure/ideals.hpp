#pragma once

#include <optional>
#include <string>

#include "pcclosure/lexgroup.hpp"
#include "pcclosure/valfield.hpp"

namespace pcc {

/// A fractional ideal of the valuation ring, represented by its up-closed
/// value set in canonical form. Three shapes cover every ideal this
/// library produces:
///   Zero               value set {Infinity}
///   ClosedPrincipal(t) value set {g : g >= t}
///   OpenCoset(t, j)    value set {g : the first j coords of g - t are
///                      lex-positive}, 1 <= j <= r-1
/// An OpenCoset with j = r equals ClosedPrincipal(t + e_r) because Z^r-lex
/// has discrete last coordinate; the constructor canonicalizes it, which
/// keeps equality structural. OpenCoset offsets are stored with
/// coordinates j+1..r zeroed for the same reason.
class Cut {
 public:
  enum class Kind { zero, closed_principal, open_coset };

  static Cut zero(int rank);
  static Cut closed_principal(GroupElement theta);
  static Cut open_coset(GroupElement theta, int j);
  static Cut maximal_ideal(int rank);  // M = {g : g > 0}

  Kind kind() const { return kind_; }
  int rank() const { return rank_; }
  const GroupElement& offset() const;  // not for Zero
  int coset_index() const;             // only for open_coset

  bool contains(const GroupElement& v) const;  // Infinity always contained
  bool contains(const FieldElement& x) const { return contains(valuation(x)); }

  /// Value set shifted by v(x); x != 0.
  Cut scaled_by(const FieldElement& x) const;
  Cut shifted(const GroupElement& delta) const;  // delta finite

  std::string str() const;  // "0", ">=(a,b)", ">(a,b ; j)"

  friend bool operator==(const Cut& a, const Cut& b);

 private:
  Cut(Kind k, int rank) : kind_(k), rank_(rank) {}
  Kind kind_;
  int rank_;
  GroupElement theta_;  // unused for Zero
  int j_ = 0;           // open_coset only
};

/// Value-set inclusion, decided by case analysis over the three shapes.
bool cut_subset(const Cut& inner, const Cut& outer);

/// The prime ideals of the valuation ring: P_0 = (0) up to P_r = M, in
/// bijection with the convex subgroups Delta_j of Z^r-lex.
struct PrimeCut {
  int rank;
  int j;  // 0..rank

  Cut as_cut() const;
  bool contains(const GroupElement& v) const { return as_cut().contains(v); }
  bool contains(const FieldElement& x) const { return as_cut().contains(x); }
  std::string str() const { return "P_" + std::to_string(j); }

  friend bool operator==(const PrimeCut& a, const PrimeCut& b) = default;
};

/// The largest prime ideal contained in I, for I contained in M. By the
/// intersection characterization this is the biggest P_j below I; the
/// closed-form rule here is cross-validated against the brute-force
/// oracle below. I = M returns P_r (M is itself prime). Note that in
/// Z^r-lex the value e_r is the successor of 0, so the principal ideal at
/// e_r IS the maximal ideal.
PrimeCut largest_prime_in(const Cut& ideal);

/// The largest prime ideal strictly contained in I (one step down when I
/// is itself prime, e.g. a principal ideal tV that happens to equal M).
/// Undefined for the zero ideal.
PrimeCut largest_prime_strictly_in(const Cut& ideal);

struct PrimeOracleWitness {
  GroupElement monomial_value;  // v(t) for the witnessing monomial t
  Int power;                    // n with x not in t^n V
};

struct PrimeOracleVerdict {
  bool pass;
  std::optional<PrimeOracleWitness> witness;
};

/// Brute-force membership test for the largest prime in I: x passes iff
/// x lies in t^n V for every monomial t of V with v(t) in the box
/// [-box, box]^r, v(t) >= 0, v(t) not in I, and every 1 <= n <= max_power.
/// One-sided: a Fail is a certified non-membership witness; a Pass only
/// means no witness exists within the bounds.
PrimeOracleVerdict largest_prime_oracle(const Cut& ideal, const FieldElement& x,
                                        int box, int max_power);

/// Same check on a bare value (the valuation of a would-be element).
PrimeOracleVerdict largest_prime_oracle_value(const Cut& ideal,
                                              const GroupElement& v, int box,
                                              int max_power);

}  // namespace pcc

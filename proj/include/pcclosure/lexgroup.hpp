#pragma once

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pcclosure/numeric.hpp"

namespace pcc {

/// An element of the totally ordered group Z^r under lexicographic order,
/// extended by a single Infinity sentinel (the value of 0). The rank r is
/// fixed per computation context; mixing ranks throws.
class GroupElement {
 public:
  GroupElement() = default;  // zero of rank 0; assign before use

  static GroupElement finite(std::vector<Int> coords);
  static GroupElement zero(int rank);
  static GroupElement infinity();
  // Standard basis vector e_i (1-based position).
  static GroupElement unit(int rank, int pos);

  bool is_infinity() const { return infinite_; }
  bool is_finite() const { return !infinite_; }
  bool is_zero() const;
  int rank() const;

  const std::vector<Int>& coords() const;
  const Int& coord(int i) const;  // 1-based

  friend bool operator==(const GroupElement& a, const GroupElement& b);
  // Lexicographic order; Infinity is the unique greatest element.
  friend std::strong_ordering operator<=>(const GroupElement& a,
                                          const GroupElement& b);

  friend GroupElement operator+(const GroupElement& a, const GroupElement& b);
  // b must be finite; Infinity - finite = Infinity.
  friend GroupElement operator-(const GroupElement& a, const GroupElement& b);
  friend GroupElement operator-(const GroupElement& a);
  // k >= 0. k * Infinity = Infinity for k >= 1; 0 * Infinity is undefined.
  friend GroupElement operator*(const Int& k, const GroupElement& a);

  std::string str() const;  // "(a,b,...)" or "inf"

 private:
  bool infinite_ = false;
  std::vector<Int> coords_;
};

/// 1-based index of the first nonzero coordinate; nullopt for the zero
/// element. gamma lies in the convex subgroup Delta_j = {x : x_1 = ... =
/// x_j = 0} iff leading_index(gamma) > j or gamma = 0.
std::optional<int> leading_index(const GroupElement& g);

/// Compares the truncation of a finite element to its first j coordinates
/// against zero (lex order on Z^j). j = 0 yields EQ.
std::strong_ordering trunc_cmp_zero(const GroupElement& g, int j);

/// The sequence n -> base + n*step for n >= start. Used for the tail of a
/// gauge, where strict monotonicity forces step > 0.
struct AffineExp {
  GroupElement base;
  GroupElement step;
  Int start = 0;

  GroupElement eval(const Int& n) const;  // requires n >= start
  // The unique n >= start with base + n*step = target, if any. Requires
  // step > 0.
  std::optional<Int> solve(const GroupElement& target) const;
  // Least n >= start with base + n*step > bound, or nullopt if no n
  // satisfies it (the affine line stays below the bound forever). Requires
  // step > 0; bound may be Infinity (never exceeded).
  std::optional<Int> least_exceeding(const GroupElement& bound) const;
};

}  // namespace pcc

#pragma once

#include <map>
#include <string>
#include <vector>

#include "pcclosure/lexgroup.hpp"
#include "pcclosure/numeric.hpp"

namespace pcc {

using Exponent = std::vector<Int>;  // length r, entries >= 0

struct ExpLexLess {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

/// Sparse multivariate polynomial over Q in t1..tr. No zero coefficients
/// are stored; the zero polynomial is the empty term map. The rank is
/// carried explicitly so the zero polynomial still knows its context.
class MPoly {
 public:
  using TermMap = std::map<Exponent, Rat, ExpLexLess>;

  explicit MPoly(int rank);
  static MPoly constant(int rank, const Rat& c);
  static MPoly monomial(int rank, const Rat& c, const Exponent& e);

  int rank() const { return rank_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  const TermMap& terms() const { return terms_; }

  // Lex-min exponent over the support (the monomial valuation of a
  // nonzero polynomial). Requires a nonzero polynomial.
  GroupElement min_exp() const;

  void add_term(const Exponent& e, const Rat& c);  // merges, drops zeros

  friend MPoly operator+(const MPoly& a, const MPoly& b);
  friend MPoly operator-(const MPoly& a, const MPoly& b);
  friend MPoly operator-(const MPoly& a);
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  MPoly& operator*=(const Rat& c);
  friend bool operator==(const MPoly& a, const MPoly& b);

  // gcd of all coefficients as a nonnegative rational; 0 for the zero
  // polynomial.
  Rat content() const;
  // Componentwise min over the support; the largest monomial dividing
  // every term. Zero polynomial contributes nothing (returns nullopt).
  std::optional<Exponent> common_monomial() const;
  void divide_monomial(const Exponent& e);  // exact, e <= every exponent
  void divide_scalar(const Rat& c);         // c != 0

  std::string str() const;  // display form, terms in lex-increasing order

 private:
  int rank_;
  TermMap terms_;
};

/// An element of K = Q(t1..tr) as a fraction of polynomials. Fractions are
/// reduced by the common monomial factor and rational content only; full
/// multivariate gcd is never computed. Equality is decided by
/// cross-multiplication, so it does not depend on the normal form.
class FieldElement {
 public:
  FieldElement() : num_(1), den_(1) {}  // rank-1 zero; assign before use
  FieldElement(MPoly num, MPoly den);   // den != 0; normalizes

  static FieldElement zero(int rank);
  static FieldElement one(int rank);
  static FieldElement from_rat(int rank, const Rat& c);
  /// c * t^e with integer (possibly negative) exponents; c != 0. The
  /// valuation of the result is exactly e.
  static FieldElement mono(int rank, const Rat& c, const std::vector<Int>& e);
  /// The variable t_i (1-based).
  static FieldElement var(int rank, int i);

  int rank() const { return num_.rank(); }
  bool is_zero() const { return num_.is_zero(); }
  const MPoly& num() const { return num_; }
  const MPoly& den() const { return den_; }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a);
  FieldElement inverse() const;               // nonzero
  FieldElement pow(long long n) const;        // negative n needs nonzero base
  friend bool operator==(const FieldElement& a, const FieldElement& b);

  std::string str() const;

 private:
  void normalize();
  MPoly num_, den_;
};

/// v: K* -> Z^r, v(0) = Infinity. v(num) - v(den) with v of a nonzero
/// polynomial the lex-min exponent of its support.
GroupElement valuation(const FieldElement& x);

bool in_valuation_ring(const FieldElement& x);  // v(x) >= 0
bool in_maximal_ideal(const FieldElement& x);   // v(x) > 0
bool is_unit(const FieldElement& x);            // v(x) = 0

/// Closed form for sum_{i=n0}^{n-1} u * t^(i*b): equals
/// u * (t^(n0*b) - t^(n*b)) / (1 - t^b). Requires u != 0, b > 0, n >= n0.
FieldElement geo_sum(const FieldElement& u, const GroupElement& b,
                     const Int& n0, const Int& n);

/// t^(n*b) as a field element (Laurent exponents allowed).
FieldElement monomial_power(int rank, const GroupElement& b, const Int& n);

/// Univariate polynomial in X with coefficients in K. Trailing zero
/// coefficients are trimmed; the zero polynomial has an empty list.
class FieldPoly {
 public:
  explicit FieldPoly(int rank) : rank_(rank) {}
  FieldPoly(int rank, std::vector<FieldElement> coeffs);

  static FieldPoly zero(int rank);
  static FieldPoly constant(const FieldElement& c);
  static FieldPoly variable(int rank);  // X

  int rank() const { return rank_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for 0
  const std::vector<FieldElement>& coeffs() const { return coeffs_; }
  FieldElement coeff(int i) const;  // 0 beyond degree

  FieldElement eval(const FieldElement& x) const;  // Horner

  friend FieldPoly operator+(const FieldPoly& a, const FieldPoly& b);
  friend FieldPoly operator-(const FieldPoly& a, const FieldPoly& b);
  friend FieldPoly operator*(const FieldPoly& a, const FieldPoly& b);
  friend FieldPoly operator*(const FieldElement& c, const FieldPoly& a);
  friend bool operator==(const FieldPoly& a, const FieldPoly& b);

  std::string str() const;

 private:
  void trim();
  int rank_;
  std::vector<FieldElement> coeffs_;  // coeffs_[i] multiplies X^i
};

}  // namespace pcc

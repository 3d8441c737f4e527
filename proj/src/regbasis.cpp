#include "pcclosure/regbasis.hpp"

namespace pcc {

FieldPoly basis_poly(const PCSeq& seq, const Int& n) {
  seq.ensure_valid();
  if (n < 0) throw std::invalid_argument("basis index must be >= 0");
  int r = seq.rank();
  FieldPoly numer = FieldPoly::constant(FieldElement::one(r));
  FieldElement denom = FieldElement::one(r);
  FieldElement sn = seq.term(n);
  FieldPoly x = FieldPoly::variable(r);
  for (Int i = 0; i < n; ++i) {
    FieldElement si = seq.term(i);
    numer = numer * (x - FieldPoly::constant(si));
    denom = denom * (sn - si);
  }
  return denom.inverse() * numer;
}

BasisValueCheck basis_value_check(const PCSeq& seq, const Int& n, const Int& j) {
  seq.ensure_valid();
  if (n < 0 || j < 0) throw std::invalid_argument("indices must be >= 0");
  int r = seq.rank();
  FieldElement sj = seq.term(j);
  FieldElement sn = seq.term(n);
  FieldElement value = FieldElement::one(r);
  for (Int i = 0; i < n; ++i) {
    FieldElement si = seq.term(i);
    FieldElement factor = sj - si;
    if (factor.is_zero())
      return BasisValueCheck{j < n ? BasisValueKind::zero
                                   : BasisValueKind::violation,
                             GroupElement::infinity()};
    value = value * (factor / (sn - si));
  }
  GroupElement v = valuation(value);
  if (j < n)  // no factor vanished although one should have
    return BasisValueCheck{BasisValueKind::violation, v};
  return BasisValueCheck{v.is_finite() && v.is_zero() ? BasisValueKind::unit
                                                      : BasisValueKind::violation,
                         v};
}

ClosureOracleResult closure_oracle(const PCSeq& seq, const FieldElement& alpha,
                                   const Int& horizon) {
  seq.ensure_valid();
  if (alpha.rank() != seq.rank()) throw std::invalid_argument("rank mismatch");
  GroupElement acc = GroupElement::zero(seq.rank());
  GroupElement zero = GroupElement::zero(seq.rank());
  for (Int n = 1; n <= horizon; ++n) {
    Int i = n - 1;
    GroupElement w = valuation(alpha - seq.term(i));
    if (w.is_infinity()) break;  // alpha = s_i: all later values vanish
    acc = acc + (w - seq.gauge_at(i));
    if (acc < zero) return ClosureOracleResult{false, n, acc};
  }
  return ClosureOracleResult{true, std::nullopt, std::nullopt};
}

BasisExpansion expand_in_basis(const PCSeq& seq, const FieldPoly& f) {
  seq.ensure_valid();
  if (f.rank() != seq.rank()) throw std::invalid_argument("rank mismatch");
  int r = seq.rank();
  int d = f.degree();
  BasisExpansion out;
  if (d < 0) return out;  // zero polynomial
  // Sequential Newton interpolation on values: the basis is triangular
  // (H_i(s_n) = 0 for i > n, H_n(s_n) = 1), so peeling
  //   a_n = f(s_n) - sum_{i<n} a_i * H_i(s_n)
  // needs only the scalar basis values H_i(s_n) = p[n][i] / p[i][i] with
  // p[n][i] = prod_{m<i} (s_n - s_m), never the basis polynomials. The
  // reconstruction sum a_n H_n = f is exact: the difference has degree
  // <= d and vanishes at the d+1 distinct points s_0..s_d.
  size_t count = static_cast<size_t>(d) + 1;
  std::vector<FieldElement> terms;
  for (Int i = 0; i <= d; ++i) terms.push_back(seq.term(i));
  std::vector<std::vector<FieldElement>> partial(
      count, std::vector<FieldElement>{FieldElement::one(r)});
  for (size_t n = 0; n < count; ++n)
    for (size_t i = 0; i < n; ++i)
      partial[n].push_back(partial[n][i] * (terms[n] - terms[i]));
  for (size_t n = 0; n < count; ++n) {
    FieldElement an = f.eval(terms[n]);
    for (size_t i = 0; i < n; ++i)
      an = an - out.coeffs[i] * (partial[n][i] / partial[i][i]);
    out.coeffs.push_back(an);
  }
  return out;
}

bool is_integer_valued(const PCSeq& seq, const FieldPoly& f) {
  BasisExpansion e = expand_in_basis(seq, f);
  for (const auto& c : e.coeffs)
    if (!in_valuation_ring(c)) return false;
  return true;
}

}  // namespace pcc

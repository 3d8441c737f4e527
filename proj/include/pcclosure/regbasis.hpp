#pragma once

#include <optional>
#include <vector>

#include "pcclosure/pcvseq.hpp"
#include "pcclosure/valfield.hpp"

namespace pcc {

/// The degree-n basis polynomial of the integer-valued polynomials on the
/// sequence: the product over i < n of (X - s_i)/(s_n - s_i). Vanishes at
/// s_0..s_{n-1} and takes unit values at s_j for j >= n.
FieldPoly basis_poly(const PCSeq& seq, const Int& n);

enum class BasisValueKind { zero, unit, violation };

struct BasisValueCheck {
  BasisValueKind kind;
  GroupElement value_valuation;  // Infinity when the value is 0
};

/// Evaluates basis_poly(seq, n) at s_j (as a telescoping product, without
/// building the polynomial) and reports whether it is zero (expected for
/// j < n), a unit (expected for j >= n), or neither.
BasisValueCheck basis_value_check(const PCSeq& seq, const Int& n, const Int& j);

struct ClosureOracleResult {
  bool pass;
  std::optional<Int> witness;            // least n with the value outside V
  std::optional<GroupElement> witness_valuation;
};

/// One-sided membership test for the closure: alpha belongs to it iff
/// every basis polynomial takes alpha into V. Checks n <= horizon via the
/// exact valuation identity v(H_n(alpha)) = sum_{i<n} (v(alpha - s_i) -
/// delta_i); a Fail certifies non-membership, a Pass is only consistency
/// up to the horizon.
ClosureOracleResult closure_oracle(const PCSeq& seq, const FieldElement& alpha,
                                   const Int& horizon);

struct BasisExpansion {
  std::vector<FieldElement> coeffs;  // f = sum coeffs[n] * H_n
};

/// Newton-style expansion of f in the basis {H_n}: peel coefficients in
/// increasing degree using H_n(s_n) = 1 and H_i(s_n) = 0 for i > n. The
/// reconstruction is an exact polynomial identity.
BasisExpansion expand_in_basis(const PCSeq& seq, const FieldPoly& f);

/// f maps every term of the sequence into V iff all basis coefficients lie
/// in V.
bool is_integer_valued(const PCSeq& seq, const FieldPoly& f);

}  // namespace pcc

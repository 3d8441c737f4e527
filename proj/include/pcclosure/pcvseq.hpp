#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pcclosure/ideals.hpp"
#include "pcclosure/lexgroup.hpp"
#include "pcclosure/valfield.hpp"

namespace pcc {

/// Geometric tail of consecutive differences: c_n = scale * t^(n*step) for
/// n >= start. scale != 0 and step > 0 make v(c_n) strictly increasing.
struct GeoTail {
  FieldElement scale;  // u
  GroupElement step;   // b, > 0 lex
  Int start = 0;       // n0
};

struct ValidationIssue {
  Int index;  // gauge index of the first violation
  std::string message;
};

/// A pseudo-convergent sequence with a decidable closed form: an explicit
/// prefix s_0..s_n0 followed by geometrically spaced differences. Terms
/// beyond the prefix are s_n = s_n0 + sum_{i=n0}^{n-1} c_i, evaluated via
/// the geometric closed form. Immutable after construction.
class PCSeq {
 public:
  /// prefix holds s_0..s_n0 (nonempty); tail.start must equal n0.
  /// Structural problems (empty prefix, start mismatch, rank mixing) throw;
  /// violations of pseudo-convergence are reported by validation() instead.
  PCSeq(std::vector<FieldElement> prefix, GeoTail tail);

  int rank() const { return rank_; }
  const std::vector<FieldElement>& prefix() const { return prefix_; }
  const GeoTail& tail() const { return tail_; }
  Int tail_start() const { return tail_.start; }

  const std::optional<ValidationIssue>& validation() const { return issue_; }
  bool is_valid() const { return !issue_.has_value(); }
  void ensure_valid() const;  // throws std::invalid_argument when invalid

  FieldElement term(const Int& n) const;   // s_n
  FieldElement diff(const Int& n) const;   // c_n = s_{n+1} - s_n
  GroupElement gauge_at(const Int& n) const;  // delta_n = v(c_n)
  std::vector<GroupElement> prefix_gauges() const;  // delta_0..delta_{n0-1}
  AffineExp tail_gauge() const;  // n -> v(u) + n*step for n >= n0

  /// Same sequence re-based with a longer explicit prefix (new_start >= n0).
  PCSeq with_tail_start(const Int& new_start) const;

 private:
  void check_pseudo_convergent();
  int rank_;
  std::vector<FieldElement> prefix_;
  GeoTail tail_;
  std::optional<ValidationIssue> issue_;
};

/// Breadth ideal {x : v(x) > delta_n for all n}. With p the leading index
/// of the tail step this is Zero when p = 1 and the open coset of
/// Delta_{p-1} at v(u) otherwise.
Cut breadth(const PCSeq& seq);

/// The canonical pseudo-limit sigma = s_n0 + u*t^(n0*b)/(1 - t^b);
/// v(sigma - s_n) = delta_n for every n.
FieldElement pseudo_limit(const PCSeq& seq);

/// alpha is a pseudo-limit iff alpha - sigma lies in the breadth ideal.
bool is_pseudo_limit(const PCSeq& seq, const FieldElement& alpha);

/// Largest prime ideal inside c_k^{-1} * Br(E); constant equal to P_{p-1}
/// for k >= n0.
PrimeCut coset_prime(const PCSeq& seq, const Int& k);

struct Classification {
  enum class Kind { pseudo_limit, coset, outside };
  enum class Reason { none, gauge_undershoot, coset_prime_fail, gauge_mismatch };

  Kind kind;
  Reason reason = Reason::none;
  std::optional<Int> index;        // k for coset / undershoot / prime-fail / mismatch
  GroupElement dist;               // v(alpha - sigma)
  std::optional<GroupElement> gauge;  // delta_k when a gauge index is involved
  std::optional<GroupElement> w;      // v(alpha - s_k) when computed

  bool is_member() const { return kind != Kind::outside; }
  std::string str() const;
};

/// Membership trichotomy for the polynomial closure of the sequence:
/// pseudo-limit, member of exactly one coset s_k + c_k*P_k, or outside
/// (with the reason and witness index).
Classification classify(const PCSeq& seq, const FieldElement& alpha);

bool in_closure(const PCSeq& seq, const FieldElement& alpha);

struct CosetPart {
  Int k;
  FieldElement center;  // s_k
  FieldElement scale;   // c_k
  PrimeCut prime;       // P_k
};

/// Symbolic description of the closure as the disjoint union of the
/// pseudo-limit coset and the per-index cosets s_k + c_k*P_k.
struct ClosureDescription {
  FieldElement sigma;
  Cut breadth_ideal;
  std::vector<CosetPart> prefix_cosets;  // k < n0
  PrimeCut tail_prime;                   // P_k for all k >= n0
  GeoTail tail;

  std::string str() const;
};

ClosureDescription closure_describe(const PCSeq& seq);

struct ClosureEqualResult {
  bool equal;
  std::string certificate;  // first failing condition, or summary when equal
  std::optional<Int> fail_index;

  explicit operator bool() const { return equal; }
};

/// Decides whether two sequences have the same polynomial closure: gauges
/// must agree and every term of one must land in the matching coset of the
/// other. The tail comparison reduces to finitely many exact checks plus
/// index-independent valuation conditions.
ClosureEqualResult closure_equal(const PCSeq& a, const PCSeq& b);

}  // namespace pcc

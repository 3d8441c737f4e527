#include "pcclosure/pcvseq.hpp"

#include <sstream>

namespace pcc {

PCSeq::PCSeq(std::vector<FieldElement> prefix, GeoTail tail)
    : prefix_(std::move(prefix)), tail_(std::move(tail)) {
  if (prefix_.empty()) throw std::invalid_argument("prefix must be nonempty");
  rank_ = prefix_[0].rank();
  for (const auto& s : prefix_)
    if (s.rank() != rank_) throw std::invalid_argument("prefix rank mismatch");
  if (tail_.scale.rank() != rank_)
    throw std::invalid_argument("tail scale rank mismatch");
  if (tail_.step.is_infinity() || tail_.step.rank() != rank_)
    throw std::invalid_argument("tail step rank mismatch");
  if (tail_.start < 0) throw std::invalid_argument("tail start must be >= 0");
  if (tail_.start != Int(prefix_.size()) - 1)
    throw std::invalid_argument("tail start must equal prefix length - 1");
  check_pseudo_convergent();
}

void PCSeq::check_pseudo_convergent() {
  GroupElement zero = GroupElement::zero(rank_);
  std::optional<GroupElement> prev;
  for (size_t k = 0; k + 1 < prefix_.size(); ++k) {
    FieldElement c = prefix_[k + 1] - prefix_[k];
    if (c.is_zero()) {
      issue_ = ValidationIssue{Int(k), "gauge is infinite (repeated term) at index " +
                                           std::to_string(k)};
      return;
    }
    GroupElement d = valuation(c);
    if (prev && !(d > *prev)) {
      issue_ = ValidationIssue{Int(k), "gauge not strictly increasing at index " +
                                           std::to_string(k)};
      return;
    }
    prev = d;
  }
  if (tail_.scale.is_zero()) {
    issue_ = ValidationIssue{tail_.start, "tail scale is zero"};
    return;
  }
  if (!(tail_.step > zero)) {
    issue_ = ValidationIssue{tail_.start, "tail step is not lex-positive"};
    return;
  }
  if (prev) {
    GroupElement first_tail = valuation(tail_.scale) + tail_.start * tail_.step;
    if (!(first_tail > *prev)) {
      issue_ = ValidationIssue{tail_.start,
                               "gauge not strictly increasing at tail start"};
      return;
    }
  }
}

void PCSeq::ensure_valid() const {
  if (issue_)
    throw std::invalid_argument("sequence is not pseudo-convergent: " +
                                issue_->message);
}

FieldElement PCSeq::term(const Int& n) const {
  if (n < 0) throw std::invalid_argument("term index must be >= 0");
  if (n <= tail_.start)
    return prefix_[static_cast<size_t>(n)];
  return prefix_.back() + geo_sum(tail_.scale, tail_.step, tail_.start, n);
}

FieldElement PCSeq::diff(const Int& n) const {
  if (n < 0) throw std::invalid_argument("index must be >= 0");
  if (n < tail_.start)
    return prefix_[static_cast<size_t>(n + 1)] - prefix_[static_cast<size_t>(n)];
  return tail_.scale * monomial_power(rank_, tail_.step, n);
}

GroupElement PCSeq::gauge_at(const Int& n) const {
  if (n < 0) throw std::invalid_argument("index must be >= 0");
  if (n < tail_.start) return valuation(diff(n));
  return valuation(tail_.scale) + n * tail_.step;
}

std::vector<GroupElement> PCSeq::prefix_gauges() const {
  std::vector<GroupElement> g;
  for (size_t k = 0; k + 1 < prefix_.size(); ++k)
    g.push_back(valuation(prefix_[k + 1] - prefix_[k]));
  return g;
}

AffineExp PCSeq::tail_gauge() const {
  return AffineExp{valuation(tail_.scale), tail_.step, tail_.start};
}

PCSeq PCSeq::with_tail_start(const Int& new_start) const {
  if (new_start < tail_.start)
    throw std::invalid_argument("cannot shorten the prefix");
  std::vector<FieldElement> prefix = prefix_;
  for (Int n = tail_.start + 1; n <= new_start; ++n) prefix.push_back(term(n));
  return PCSeq(std::move(prefix), GeoTail{tail_.scale, tail_.step, new_start});
}

Cut breadth(const PCSeq& seq) {
  seq.ensure_valid();
  int p = *leading_index(seq.tail().step);
  if (p == 1) return Cut::zero(seq.rank());
  return Cut::open_coset(valuation(seq.tail().scale), p - 1);
}

FieldElement pseudo_limit(const PCSeq& seq) {
  seq.ensure_valid();
  int r = seq.rank();
  const GeoTail& t = seq.tail();
  FieldElement tb = monomial_power(r, t.step, 1);
  FieldElement head = monomial_power(r, t.step, t.start);
  return seq.prefix().back() + t.scale * head / (FieldElement::one(r) - tb);
}

bool is_pseudo_limit(const PCSeq& seq, const FieldElement& alpha) {
  return breadth(seq).contains(alpha - pseudo_limit(seq));
}

PrimeCut coset_prime(const PCSeq& seq, const Int& k) {
  seq.ensure_valid();
  return largest_prime_in(breadth(seq).shifted(-seq.gauge_at(k)));
}

std::string Classification::str() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::pseudo_limit:
      return "pseudo-limit";
    case Kind::coset:
      os << "coset(" << *index << ")";
      return os.str();
    case Kind::outside:
      switch (reason) {
        case Reason::gauge_undershoot:
          os << "outside(gauge-undershoot at " << *index << ")";
          break;
        case Reason::coset_prime_fail:
          os << "outside(coset-prime-fail at " << *index << ")";
          break;
        case Reason::gauge_mismatch:
          os << "outside(gauge-mismatch at " << *index << ")";
          break;
        default:
          os << "outside";
      }
      return os.str();
  }
  return "";
}

namespace {

// Index of the gauge value equal to target, if any; the gauge is strictly
// increasing, so it is unique.
std::optional<Int> gauge_index_of(const PCSeq& seq, const GroupElement& target) {
  if (target.is_infinity()) return std::nullopt;
  auto pg = seq.prefix_gauges();
  for (size_t k = 0; k < pg.size(); ++k)
    if (pg[k] == target) return Int(k);
  return seq.tail_gauge().solve(target);
}

// Least n with delta_n > bound; exists whenever bound is below the breadth.
Int least_gauge_above(const PCSeq& seq, const GroupElement& bound) {
  auto pg = seq.prefix_gauges();
  for (size_t k = 0; k < pg.size(); ++k)
    if (pg[k] > bound) return Int(k);
  auto n = seq.tail_gauge().least_exceeding(bound);
  if (!n) throw std::logic_error("no gauge above bound; element is in the breadth");
  return *n;
}

}  // namespace

Classification classify(const PCSeq& seq, const FieldElement& alpha) {
  seq.ensure_valid();
  FieldElement sigma = pseudo_limit(seq);
  FieldElement d = alpha - sigma;
  GroupElement vd = valuation(d);
  Cut br = breadth(seq);
  if (br.contains(vd))
    return Classification{Classification::Kind::pseudo_limit,
                          Classification::Reason::none, std::nullopt, vd,
                          std::nullopt, std::nullopt};

  if (auto k = gauge_index_of(seq, vd)) {
    GroupElement delta = seq.gauge_at(*k);
    GroupElement w = valuation(alpha - seq.term(*k));
    // v(sigma - s_k) = delta_k and v(d) = delta_k, so w >= delta_k.
    if (!(w >= delta)) throw std::logic_error("classification invariant violated");
    if (w == delta)
      return Classification{Classification::Kind::outside,
                            Classification::Reason::gauge_mismatch, k, vd, delta,
                            w};
    PrimeCut pk = coset_prime(seq, *k);
    if (pk.contains(w - delta))
      return Classification{Classification::Kind::coset,
                            Classification::Reason::none, k, vd, delta, w};
    return Classification{Classification::Kind::outside,
                          Classification::Reason::coset_prime_fail, k, vd, delta,
                          w};
  }

  Int kstar = least_gauge_above(seq, vd);
  return Classification{Classification::Kind::outside,
                        Classification::Reason::gauge_undershoot, kstar, vd,
                        seq.gauge_at(kstar), std::nullopt};
}

bool in_closure(const PCSeq& seq, const FieldElement& alpha) {
  return classify(seq, alpha).is_member();
}

std::string ClosureDescription::str() const {
  std::ostringstream os;
  os << "sigma = " << sigma.str() << "\n";
  os << "breadth = " << breadth_ideal.str() << "\n";
  os << "pseudo-limits = sigma + breadth\n";
  for (const auto& part : prefix_cosets) {
    os << "coset[" << part.k << "] = s_k + c_k*" << part.prime.str()
       << "  with s_k = " << part.center.str() << ", c_k = " << part.scale.str()
       << "\n";
  }
  os << "tail cosets (k >= " << tail.start << "): s_k + c_k*" << tail_prime.str()
     << ", c_k = u*t^(k*b) with u = " << tail.scale.str()
     << ", b = " << tail.step.str() << "\n";
  return os.str();
}

ClosureDescription closure_describe(const PCSeq& seq) {
  seq.ensure_valid();
  ClosureDescription d{pseudo_limit(seq), breadth(seq), {}, PrimeCut{}, seq.tail()};
  for (Int k = 0; k < seq.tail_start(); ++k)
    d.prefix_cosets.push_back(
        CosetPart{k, seq.term(k), seq.diff(k), coset_prime(seq, k)});
  d.tail_prime = coset_prime(seq, seq.tail_start());
  return d;
}

namespace {

ClosureEqualResult eq_fail(std::string msg, std::optional<Int> at = std::nullopt) {
  return ClosureEqualResult{false, std::move(msg), std::move(at)};
}

}  // namespace

ClosureEqualResult closure_equal(const PCSeq& a, const PCSeq& b) {
  a.ensure_valid();
  b.ensure_valid();
  if (a.rank() != b.rank()) throw std::invalid_argument("rank mismatch");
  int r = a.rank();

  Int start = a.tail_start() > b.tail_start() ? a.tail_start() : b.tail_start();
  PCSeq ea = a.with_tail_start(start);
  PCSeq eb = b.with_tail_start(start);

  // Gauges must agree pointwise; with affine tails that means the prefix
  // gauges match and the tail base and step coincide.
  auto ga = ea.prefix_gauges();
  auto gb = eb.prefix_gauges();
  for (size_t k = 0; k < ga.size(); ++k) {
    if (!(ga[k] == gb[k]))
      return eq_fail("gauge mismatch at n=" + std::to_string(k) + ": " +
                         ga[k].str() + " != " + gb[k].str(),
                     Int(k));
  }
  // Two points pin an affine line: equal gauges at start and start+1 force
  // equal base and step.
  for (Int n = start; n <= start + 1; ++n) {
    GroupElement da = ea.gauge_at(n), db = eb.gauge_at(n);
    if (!(da == db))
      return eq_fail("gauge mismatch at n=" + n.str() + ": " + da.str() +
                         " != " + db.str(),
                     n);
  }
  GroupElement va = valuation(ea.tail().scale);

  // Prefix terms: t_k - s_k must lie in c_k * P_k.
  for (Int k = 0; k < start; ++k) {
    FieldElement e = eb.term(k) - ea.term(k);
    PrimeCut pk = coset_prime(ea, k);
    GroupElement value = valuation(e) - ea.gauge_at(k);
    if (!pk.contains(value))
      return eq_fail("term " + k.str() + " differs outside its coset prime " +
                         pk.str() + " (v(t_k - s_k) - delta_k = " + value.str() +
                         ")",
                     k);
  }

  // Tail terms: t_k - s_k = A - B*t^(k*b) with A, B independent of k. The
  // valuation of the difference is v(B) + k*b below the crossing with
  // v(A), v(A) above it, and needs one exact evaluation at a possible
  // cancellation index. Membership in P_{p-1} only sees the first p-1
  // coordinates, where k*b vanishes, so each regime gives one condition.
  const GeoTail& ta = ea.tail();
  const GeoTail& tb_ = eb.tail();
  FieldElement one = FieldElement::one(r);
  FieldElement denom = one - monomial_power(r, ta.step, 1);
  FieldElement du = tb_.scale - ta.scale;
  FieldElement A0 = (eb.term(start) - ea.term(start)) +
                    du * monomial_power(r, ta.step, start) / denom;
  FieldElement B0 = du / denom;
  PrimeCut tail_prime = coset_prime(ea, start);
  GroupElement vA = valuation(A0), vB = valuation(B0), vu = va;

  bool below_crossing =
      vB.is_finite() && (vB + start * ta.step < vA || vA.is_infinity());
  if (below_crossing && !tail_prime.contains(vB - vu))
    return eq_fail("tail difference outside " + tail_prime.str() +
                       " (v(B) - v(u) = " + (vB - vu).str() + ")",
                   start);

  if (vB.is_finite() && vA.is_finite()) {
    AffineExp line{vB, ta.step, start};
    if (auto keq = line.solve(vA)) {
      FieldElement e = eb.term(*keq) - ea.term(*keq);
      GroupElement value = valuation(e) - ea.gauge_at(*keq);
      if (!tail_prime.contains(value))
        return eq_fail("term " + keq->str() +
                           " differs outside its coset prime " +
                           tail_prime.str(),
                       *keq);
    }
  }

  bool above_crossing = false;
  if (vA.is_finite()) {
    if (!vB.is_finite()) {
      above_crossing = true;  // B = 0: the difference is A for every k
    } else {
      AffineExp line{vB, ta.step, start};
      above_crossing = line.least_exceeding(vA).has_value();
    }
  }
  if (above_crossing && !tail_prime.contains(vA - vu))
    return eq_fail("tail difference outside " + tail_prime.str() +
                       " (v(A) - v(u) = " + (vA - vu).str() + ")",
                   start);

  return ClosureEqualResult{
      true, "gauges equal; every term difference lies in its coset prime",
      std::nullopt};
}

}  // namespace pcc

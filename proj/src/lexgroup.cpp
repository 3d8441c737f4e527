#include "pcclosure/lexgroup.hpp"

#include <sstream>

namespace pcc {

namespace {

void require_same_rank(const GroupElement& a, const GroupElement& b) {
  if (a.rank() != b.rank())
    throw std::invalid_argument("group elements of different rank");
}

}  // namespace

GroupElement GroupElement::finite(std::vector<Int> coords) {
  if (coords.empty()) throw std::invalid_argument("rank must be >= 1");
  GroupElement g;
  g.coords_ = std::move(coords);
  return g;
}

GroupElement GroupElement::zero(int rank) {
  if (rank < 1) throw std::invalid_argument("rank must be >= 1");
  GroupElement g;
  g.coords_.assign(static_cast<size_t>(rank), Int(0));
  return g;
}

GroupElement GroupElement::infinity() {
  GroupElement g;
  g.infinite_ = true;
  return g;
}

GroupElement GroupElement::unit(int rank, int pos) {
  GroupElement g = zero(rank);
  if (pos < 1 || pos > rank) throw std::invalid_argument("unit position out of range");
  g.coords_[static_cast<size_t>(pos - 1)] = 1;
  return g;
}

bool GroupElement::is_zero() const {
  if (infinite_) return false;
  for (const Int& c : coords_)
    if (c != 0) return false;
  return true;
}

int GroupElement::rank() const {
  if (infinite_) throw std::domain_error("Infinity has no rank");
  return static_cast<int>(coords_.size());
}

const std::vector<Int>& GroupElement::coords() const {
  if (infinite_) throw std::domain_error("Infinity has no coordinates");
  return coords_;
}

const Int& GroupElement::coord(int i) const {
  const auto& c = coords();
  if (i < 1 || i > static_cast<int>(c.size()))
    throw std::out_of_range("coordinate index");
  return c[static_cast<size_t>(i - 1)];
}

bool operator==(const GroupElement& a, const GroupElement& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ && b.infinite_;
  require_same_rank(a, b);
  return a.coords_ == b.coords_;
}

std::strong_ordering operator<=>(const GroupElement& a, const GroupElement& b) {
  if (a.infinite_ && b.infinite_) return std::strong_ordering::equal;
  if (a.infinite_) return std::strong_ordering::greater;
  if (b.infinite_) return std::strong_ordering::less;
  require_same_rank(a, b);
  for (size_t i = 0; i < a.coords_.size(); ++i) {
    if (a.coords_[i] < b.coords_[i]) return std::strong_ordering::less;
    if (a.coords_[i] > b.coords_[i]) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

GroupElement operator+(const GroupElement& a, const GroupElement& b) {
  if (a.infinite_ || b.infinite_) return GroupElement::infinity();
  require_same_rank(a, b);
  GroupElement r = a;
  for (size_t i = 0; i < r.coords_.size(); ++i) r.coords_[i] += b.coords_[i];
  return r;
}

GroupElement operator-(const GroupElement& a, const GroupElement& b) {
  if (b.infinite_) throw std::domain_error("cannot subtract Infinity");
  if (a.infinite_) return GroupElement::infinity();
  require_same_rank(a, b);
  GroupElement r = a;
  for (size_t i = 0; i < r.coords_.size(); ++i) r.coords_[i] -= b.coords_[i];
  return r;
}

GroupElement operator-(const GroupElement& a) {
  if (a.infinite_) throw std::domain_error("cannot negate Infinity");
  GroupElement r = a;
  for (Int& c : r.coords_) c = -c;
  return r;
}

GroupElement operator*(const Int& k, const GroupElement& a) {
  if (k < 0) throw std::invalid_argument("scalar must be nonnegative");
  if (a.infinite_) {
    if (k == 0) throw std::domain_error("0 * Infinity is undefined");
    return GroupElement::infinity();
  }
  GroupElement r = a;
  for (Int& c : r.coords_) c *= k;
  return r;
}

std::string GroupElement::str() const {
  if (infinite_) return "inf";
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < coords_.size(); ++i) {
    if (i) os << ',';
    os << coords_[i];
  }
  os << ')';
  return os.str();
}

std::optional<int> leading_index(const GroupElement& g) {
  const auto& c = g.coords();
  for (size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0) return static_cast<int>(i + 1);
  return std::nullopt;
}

std::strong_ordering trunc_cmp_zero(const GroupElement& g, int j) {
  const auto& c = g.coords();
  if (j < 0 || j > static_cast<int>(c.size()))
    throw std::out_of_range("truncation length");
  for (int i = 0; i < j; ++i) {
    if (c[static_cast<size_t>(i)] < 0) return std::strong_ordering::less;
    if (c[static_cast<size_t>(i)] > 0) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

GroupElement AffineExp::eval(const Int& n) const {
  if (n < start) throw std::invalid_argument("affine sequence index below start");
  return base + n * step;
}

std::optional<Int> AffineExp::solve(const GroupElement& target) const {
  if (!(step > GroupElement::zero(step.rank())))
    throw std::invalid_argument("affine step must be positive");
  if (target.is_infinity()) return std::nullopt;
  GroupElement d = target - base;
  int p = *leading_index(step);
  // n is forced by the leading coordinate of the step.
  Int num = d.coord(p), den = step.coord(p);
  if (num % den != 0) return std::nullopt;
  Int n = num / den;
  if (n < start) return std::nullopt;
  return (n * step == d) ? std::optional<Int>(n) : std::nullopt;
}

std::optional<Int> AffineExp::least_exceeding(const GroupElement& bound) const {
  GroupElement z = GroupElement::zero(step.rank());
  if (!(step > z)) throw std::invalid_argument("affine step must be positive");
  if (bound.is_infinity()) return std::nullopt;
  GroupElement d = bound - base;  // want least n >= start with n*step > d
  int p = *leading_index(step);
  if (trunc_cmp_zero(d, p - 1) > 0) return std::nullopt;  // d dominates forever
  if (trunc_cmp_zero(d, p - 1) < 0) return start;
  // First p-1 coordinates of d vanish; the crossing happens at coordinate p.
  Int num = d.coord(p), den = step.coord(p);
  Int q = num / den;               // truncates toward zero
  if (q * den > num) --q;          // true floor
  // n*step is strictly increasing in n, so the unconstrained crossing is at
  // q or q+1 (q itself only when den divides num and later coords decide).
  Int lo = q < start ? start : q;
  for (Int n = lo; n <= lo + 2; ++n)
    if (n * step > d) return n;
  throw std::logic_error("least_exceeding: bracket failed");
}

}  // namespace pcc

#include "pcclosure/ideals.hpp"

#include <sstream>

namespace pcc {

namespace {

void require_same_rank(const Cut& a, const Cut& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("cuts of different rank");
}

// Compare the first j coordinates of g - t against zero in Z^j lex.
std::strong_ordering trunc_diff_cmp(const GroupElement& g,
                                    const GroupElement& t, int j) {
  for (int i = 1; i <= j; ++i) {
    Int d = g.coord(i) - t.coord(i);
    if (d < 0) return std::strong_ordering::less;
    if (d > 0) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

}  // namespace

Cut Cut::zero(int rank) {
  if (rank < 1) throw std::invalid_argument("rank must be >= 1");
  return Cut(Kind::zero, rank);
}

Cut Cut::closed_principal(GroupElement theta) {
  Cut c(Kind::closed_principal, theta.rank());
  c.theta_ = std::move(theta);
  return c;
}

Cut Cut::open_coset(GroupElement theta, int j) {
  int r = theta.rank();
  if (j < 1 || j > r) throw std::invalid_argument("coset index out of range");
  if (j == r) {
    // {g : g - t > 0} = {g : g >= t + e_r}: the last coordinate is discrete.
    return closed_principal(theta + GroupElement::unit(r, r));
  }
  std::vector<Int> coords = theta.coords();
  for (int i = j; i < r; ++i) coords[static_cast<size_t>(i)] = 0;
  Cut c(Kind::open_coset, r);
  c.theta_ = GroupElement::finite(std::move(coords));
  c.j_ = j;
  return c;
}

Cut Cut::maximal_ideal(int rank) {
  return closed_principal(GroupElement::unit(rank, rank));
}

const GroupElement& Cut::offset() const {
  if (kind_ == Kind::zero) throw std::domain_error("zero cut has no offset");
  return theta_;
}

int Cut::coset_index() const {
  if (kind_ != Kind::open_coset)
    throw std::domain_error("not an open-coset cut");
  return j_;
}

bool Cut::contains(const GroupElement& v) const {
  if (v.is_infinity()) return true;
  if (v.rank() != rank_) throw std::invalid_argument("rank mismatch");
  switch (kind_) {
    case Kind::zero:
      return false;
    case Kind::closed_principal:
      return v >= theta_;
    case Kind::open_coset:
      return trunc_diff_cmp(v, theta_, j_) > 0;
  }
  return false;
}

Cut Cut::scaled_by(const FieldElement& x) const {
  if (x.is_zero()) throw std::invalid_argument("cannot scale by zero");
  return shifted(valuation(x));
}

Cut Cut::shifted(const GroupElement& delta) const {
  if (delta.is_infinity()) throw std::invalid_argument("shift must be finite");
  switch (kind_) {
    case Kind::zero:
      return *this;
    case Kind::closed_principal:
      return closed_principal(theta_ + delta);
    case Kind::open_coset:
      return open_coset(theta_ + delta, j_);
  }
  return *this;
}

std::string Cut::str() const {
  switch (kind_) {
    case Kind::zero:
      return "0";
    case Kind::closed_principal: {
      std::string s = theta_.str();
      return ">=" + s;
    }
    case Kind::open_coset: {
      std::ostringstream os;
      std::string s = theta_.str();
      os << ">(" << s.substr(1, s.size() - 2) << " ; " << j_ << ")";
      return os.str();
    }
  }
  return "";
}

bool operator==(const Cut& a, const Cut& b) {
  require_same_rank(a, b);
  if (a.kind_ != b.kind_) return false;
  switch (a.kind_) {
    case Cut::Kind::zero:
      return true;
    case Cut::Kind::closed_principal:
      return a.theta_ == b.theta_;
    case Cut::Kind::open_coset:
      return a.j_ == b.j_ && a.theta_ == b.theta_;
  }
  return false;
}

bool cut_subset(const Cut& inner, const Cut& outer) {
  require_same_rank(inner, outer);
  using K = Cut::Kind;
  if (inner.kind() == K::zero) return true;
  if (outer.kind() == K::zero) return false;
  const GroupElement& ti = inner.offset();
  const GroupElement& to = outer.offset();
  if (inner.kind() == K::closed_principal) {
    if (outer.kind() == K::closed_principal) return ti >= to;
    // {g >= ti} inside an open coset: the minimum ti must already clear it.
    return trunc_diff_cmp(ti, to, outer.coset_index()) > 0;
  }
  // inner is an open coset; its value set has elements with arbitrarily
  // negative coordinates past index j, so membership in the outer set must
  // be decided within the first j coordinates.
  int j = inner.coset_index();
  if (outer.kind() == K::closed_principal)
    return trunc_diff_cmp(ti, to, j) >= 0;
  int jo = outer.coset_index();
  if (jo >= j) return trunc_diff_cmp(ti, to, j) >= 0;
  return trunc_diff_cmp(ti, to, jo) > 0;
}

Cut PrimeCut::as_cut() const {
  if (j == 0) return Cut::zero(rank);
  if (j == rank) return Cut::maximal_ideal(rank);
  return Cut::open_coset(GroupElement::zero(rank), j);
}

PrimeCut largest_prime_in(const Cut& ideal) {
  int r = ideal.rank();
  Cut m = Cut::maximal_ideal(r);
  if (!cut_subset(ideal, m))
    throw std::invalid_argument("largest_prime_in requires an ideal inside M");
  if (ideal == m) return PrimeCut{r, r};
  switch (ideal.kind()) {
    case Cut::Kind::zero:
      return PrimeCut{r, 0};
    case Cut::Kind::closed_principal: {
      // theta > 0 here, so it has a leading index.
      int l = *leading_index(ideal.offset());
      return PrimeCut{r, l - 1};
    }
    case Cut::Kind::open_coset: {
      int j = ideal.coset_index();
      auto l = leading_index(ideal.offset());
      if (!l) return PrimeCut{r, j};  // the cut is P_j itself
      return PrimeCut{r, std::min(j, *l - 1)};
    }
  }
  throw std::logic_error("unreachable");
}

PrimeCut largest_prime_strictly_in(const Cut& ideal) {
  PrimeCut p = largest_prime_in(ideal);
  if (p.as_cut() == ideal) {
    if (p.j == 0)
      throw std::invalid_argument("no prime lies strictly inside the zero ideal");
    return PrimeCut{p.rank, p.j - 1};
  }
  return p;
}

namespace {

// Enumerate v(t) over the box, keeping monomials of V outside the ideal.
template <typename F>
void for_each_box_value(int rank, int box, const Cut& ideal, F&& f) {
  std::vector<Int> coords(static_cast<size_t>(rank), Int(-box));
  for (;;) {
    GroupElement g = GroupElement::finite(coords);
    if (g >= GroupElement::zero(rank) && !ideal.contains(g)) {
      if (!f(g)) return;
    }
    int i = rank - 1;
    while (i >= 0) {
      coords[static_cast<size_t>(i)] += 1;
      if (coords[static_cast<size_t>(i)] <= box) break;
      coords[static_cast<size_t>(i)] = -box;
      --i;
    }
    if (i < 0) break;
  }
}

}  // namespace

PrimeOracleVerdict largest_prime_oracle_value(const Cut& ideal,
                                              const GroupElement& v, int box,
                                              int max_power) {
  int r = ideal.rank();
  if (!cut_subset(ideal, Cut::maximal_ideal(r)))
    throw std::invalid_argument("oracle requires an ideal inside M");
  PrimeOracleVerdict verdict{true, std::nullopt};
  if (v.is_infinity()) return verdict;  // 0 lies in every ideal
  for_each_box_value(r, box, ideal, [&](const GroupElement& t) {
    // t >= 0, so n*t grows with n; checking the top power covers them all.
    if (v >= Int(max_power) * t) return true;
    for (Int n = 1; n <= max_power; ++n) {
      if (!(v >= n * t)) {
        verdict = PrimeOracleVerdict{false, PrimeOracleWitness{t, n}};
        return false;
      }
    }
    return false;  // unreachable
  });
  return verdict;
}

PrimeOracleVerdict largest_prime_oracle(const Cut& ideal, const FieldElement& x,
                                        int box, int max_power) {
  return largest_prime_oracle_value(ideal, valuation(x), box, max_power);
}

}  // namespace pcc

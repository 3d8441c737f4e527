#include "pcclosure/valfield.hpp"

#include <sstream>

namespace pcc {

bool ExpLexLess::operator()(const Exponent& a, const Exponent& b) const {
  for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] < b[i]) return true;
    if (a[i] > b[i]) return false;
  }
  return a.size() < b.size();
}

namespace {

void require_same_rank(const MPoly& a, const MPoly& b) {
  if (a.rank() != b.rank())
    throw std::invalid_argument("polynomials of different rank");
}

void require_same_rank(const FieldElement& a, const FieldElement& b) {
  if (a.rank() != b.rank())
    throw std::invalid_argument("field elements of different rank");
}

}  // namespace

MPoly::MPoly(int rank) : rank_(rank) {
  if (rank < 1) throw std::invalid_argument("rank must be >= 1");
}

MPoly MPoly::constant(int rank, const Rat& c) {
  MPoly p(rank);
  if (c != 0) p.terms_.emplace(Exponent(static_cast<size_t>(rank), Int(0)), c);
  return p;
}

MPoly MPoly::monomial(int rank, const Rat& c, const Exponent& e) {
  if (static_cast<int>(e.size()) != rank)
    throw std::invalid_argument("exponent length != rank");
  for (const Int& x : e)
    if (x < 0) throw std::invalid_argument("polynomial exponents must be >= 0");
  MPoly p(rank);
  if (c != 0) p.terms_.emplace(e, c);
  return p;
}

bool MPoly::is_one() const {
  if (terms_.size() != 1) return false;
  const auto& [e, c] = *terms_.begin();
  if (c != 1) return false;
  for (const Int& x : e)
    if (x != 0) return false;
  return true;
}

GroupElement MPoly::min_exp() const {
  if (terms_.empty()) throw std::domain_error("min_exp of zero polynomial");
  return GroupElement::finite(terms_.begin()->first);
}

void MPoly::add_term(const Exponent& e, const Rat& c) {
  if (static_cast<int>(e.size()) != rank_)
    throw std::invalid_argument("exponent length != rank");
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MPoly operator+(const MPoly& a, const MPoly& b) {
  require_same_rank(a, b);
  MPoly r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, c);
  return r;
}

MPoly operator-(const MPoly& a, const MPoly& b) {
  require_same_rank(a, b);
  MPoly r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
  return r;
}

MPoly operator-(const MPoly& a) {
  MPoly r(a.rank());
  for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
  return r;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  require_same_rank(a, b);
  MPoly r(a.rank());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponent e = ea;
      for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

MPoly& MPoly::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coef] : terms_) coef *= c;
  return *this;
}

bool operator==(const MPoly& a, const MPoly& b) {
  require_same_rank(a, b);
  return a.terms_ == b.terms_;
}

Rat MPoly::content() const {
  Int gn = 0, gd = 0;
  for (const auto& [e, c] : terms_) {
    Int n = rat_num(c);
    if (n < 0) n = -n;
    gn = boost::multiprecision::gcd(gn, n);
    gd = boost::multiprecision::gcd(gd, rat_den(c));
  }
  if (gn == 0) return 0;
  return Rat(gn, gd);
}

std::optional<Exponent> MPoly::common_monomial() const {
  if (terms_.empty()) return std::nullopt;
  Exponent m = terms_.begin()->first;
  for (const auto& [e, c] : terms_)
    for (size_t i = 0; i < m.size(); ++i)
      if (e[i] < m[i]) m[i] = e[i];
  return m;
}

void MPoly::divide_monomial(const Exponent& e) {
  TermMap out;
  for (const auto& [ex, c] : terms_) {
    Exponent q = ex;
    for (size_t i = 0; i < q.size(); ++i) {
      q[i] -= e[i];
      if (q[i] < 0) throw std::invalid_argument("monomial does not divide");
    }
    out.emplace(std::move(q), c);
  }
  terms_ = std::move(out);
}

void MPoly::divide_scalar(const Rat& c) {
  if (c == 0) throw std::invalid_argument("division by zero");
  for (auto& [e, coef] : terms_) coef /= c;
}

std::string MPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rat a = c;
    if (first) {
      if (a < 0) {
        os << '-';
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    bool any_var = false;
    for (const Int& x : e)
      if (x != 0) any_var = true;
    if (!any_var) {
      os << rat_str(a);
      continue;
    }
    bool coef_shown = false;
    if (a != 1) {
      os << rat_str(a);
      coef_shown = true;
    }
    bool first_var = true;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (coef_shown || !first_var) os << '*';
      first_var = false;
      os << 't' << (i + 1);
      if (e[i] != 1) os << '^' << e[i];
      coef_shown = true;
    }
  }
  return os.str();
}

FieldElement::FieldElement(MPoly num, MPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  require_same_rank(num_, den_);
  if (den_.is_zero()) throw std::invalid_argument("denominator is zero");
  normalize();
}

void FieldElement::normalize() {
  if (num_.is_zero()) {
    den_ = MPoly::constant(den_.rank(), 1);
    return;
  }
  // Cancel the largest monomial dividing both parts, then the shared
  // integer content. Both steps only ever shrink coefficients; full
  // polynomial gcd stays out and equality never relies on normal forms.
  Exponent mn = *num_.common_monomial();
  Exponent md = *den_.common_monomial();
  Exponent m(mn.size());
  for (size_t i = 0; i < m.size(); ++i) m[i] = mn[i] < md[i] ? mn[i] : md[i];
  bool nontrivial = false;
  for (const Int& x : m)
    if (x != 0) nontrivial = true;
  if (nontrivial) {
    num_.divide_monomial(m);
    den_.divide_monomial(m);
  }
  // Shared shrink-only content: gcd of coefficient numerators over gcd of
  // coefficient denominators, across both polynomials. Dividing by it
  // keeps every coefficient an exact rational with smaller parts.
  Int gn = 0, gd = 0;
  auto scan = [&](const MPoly& p) {
    for (const auto& [e, c] : p.terms()) {
      Int n = rat_num(c);
      if (n < 0) n = -n;
      gn = boost::multiprecision::gcd(gn, n);
      gd = boost::multiprecision::gcd(gd, rat_den(c));
    }
  };
  scan(num_);
  scan(den_);
  Rat g(gn, gd);
  // Keep the lex-min coefficient of the denominator positive.
  if (den_.terms().begin()->second < 0) g = -g;
  if (g != 1) {
    num_.divide_scalar(g);
    den_.divide_scalar(g);
  }
}

FieldElement FieldElement::zero(int rank) {
  return FieldElement(MPoly(rank), MPoly::constant(rank, 1));
}

FieldElement FieldElement::one(int rank) {
  return from_rat(rank, 1);
}

FieldElement FieldElement::from_rat(int rank, const Rat& c) {
  return FieldElement(MPoly::constant(rank, c), MPoly::constant(rank, 1));
}

FieldElement FieldElement::mono(int rank, const Rat& c,
                                const std::vector<Int>& e) {
  if (c == 0) throw std::invalid_argument("mono requires a nonzero coefficient");
  if (static_cast<int>(e.size()) != rank)
    throw std::invalid_argument("exponent length != rank");
  Exponent pos(e.size()), neg(e.size());
  for (size_t i = 0; i < e.size(); ++i) {
    if (e[i] >= 0)
      pos[i] = e[i];
    else
      neg[i] = -e[i];
  }
  return FieldElement(MPoly::monomial(rank, c, pos),
                      MPoly::monomial(rank, 1, neg));
}

FieldElement FieldElement::var(int rank, int i) {
  if (i < 1 || i > rank) throw std::invalid_argument("variable index out of rank");
  std::vector<Int> e(static_cast<size_t>(rank), Int(0));
  e[static_cast<size_t>(i - 1)] = 1;
  return mono(rank, 1, e);
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  require_same_rank(a, b);
  // Equal denominators add without squaring them; fractions over 1 keep
  // the other denominator. These structural cases dominate in practice
  // (partial sums, Horner chains) and full polynomial gcd stays off.
  if (a.den_ == b.den_) return FieldElement(a.num_ + b.num_, a.den_);
  if (a.den_.is_one()) return FieldElement(a.num_ * b.den_ + b.num_, b.den_);
  if (b.den_.is_one()) return FieldElement(a.num_ + b.num_ * a.den_, a.den_);
  return FieldElement(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  require_same_rank(a, b);
  if (a.den_ == b.den_) return FieldElement(a.num_ - b.num_, a.den_);
  if (a.den_.is_one()) return FieldElement(a.num_ * b.den_ - b.num_, b.den_);
  if (b.den_.is_one()) return FieldElement(a.num_ - b.num_ * a.den_, a.den_);
  return FieldElement(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  require_same_rank(a, b);
  return FieldElement(a.num_ * b.num_, a.den_ * b.den_);
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  require_same_rank(a, b);
  if (b.is_zero()) throw std::domain_error("division by zero");
  return FieldElement(a.num_ * b.den_, a.den_ * b.num_);
}

FieldElement operator-(const FieldElement& a) {
  return FieldElement(-a.num_, a.den_);
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  return FieldElement(den_, num_);
}

FieldElement FieldElement::pow(long long n) const {
  if (n < 0) return inverse().pow(-n);
  FieldElement r = one(rank());
  FieldElement base = *this;
  while (n > 0) {
    if (n & 1) r = r * base;
    base = base * base;
    n >>= 1;
  }
  return r;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  require_same_rank(a, b);
  return a.num_ * b.den_ == b.num_ * a.den_;
}

std::string FieldElement::str() const {
  if (num_.is_zero()) return "0";
  bool den_is_one = den_ == MPoly::constant(den_.rank(), 1);
  if (den_is_one) return num_.str();
  bool num_single = num_.terms().size() == 1;
  bool den_single = den_.terms().size() == 1;
  std::string n = num_single ? num_.str() : "(" + num_.str() + ")";
  std::string d = den_single ? den_.str() : "(" + den_.str() + ")";
  // A single-term denominator with coefficient or multiple variables still
  // needs parentheses to parse back with the right precedence.
  if (den_single) {
    const auto& [e, c] = *den_.terms().begin();
    int nvars = 0;
    for (const Int& x : e)
      if (x != 0) ++nvars;
    if (c != 1 || nvars > 1) d = "(" + d + ")";
  }
  if (num_single) {
    const auto& [e, c] = *num_.terms().begin();
    int nvars = 0;
    for (const Int& x : e)
      if (x != 0) ++nvars;
    if ((c != 1 && nvars > 0) || nvars > 1 || c < 0) n = "(" + n + ")";
  }
  return n + "/" + d;
}

GroupElement valuation(const FieldElement& x) {
  if (x.is_zero()) return GroupElement::infinity();
  return x.num().min_exp() - x.den().min_exp();
}

bool in_valuation_ring(const FieldElement& x) {
  GroupElement v = valuation(x);
  return v.is_infinity() || v >= GroupElement::zero(x.rank());
}

bool in_maximal_ideal(const FieldElement& x) {
  GroupElement v = valuation(x);
  return v.is_infinity() || v > GroupElement::zero(x.rank());
}

bool is_unit(const FieldElement& x) {
  GroupElement v = valuation(x);
  return v.is_finite() && v.is_zero();
}

FieldElement monomial_power(int rank, const GroupElement& b, const Int& n) {
  std::vector<Int> e = b.coords();
  for (Int& x : e) x *= n;
  return FieldElement::mono(rank, 1, e);
}

FieldElement geo_sum(const FieldElement& u, const GroupElement& b,
                     const Int& n0, const Int& n) {
  int rank = u.rank();
  if (u.is_zero()) throw std::invalid_argument("geo_sum requires u != 0");
  if (!(b > GroupElement::zero(rank)))
    throw std::invalid_argument("geo_sum requires b > 0");
  if (n < n0) throw std::invalid_argument("geo_sum requires n >= n0");
  FieldElement tb = monomial_power(rank, b, 1);
  FieldElement numer = monomial_power(rank, b, n0) - monomial_power(rank, b, n);
  return u * numer / (FieldElement::one(rank) - tb);
}

FieldPoly::FieldPoly(int rank, std::vector<FieldElement> coeffs)
    : rank_(rank), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_)
    if (c.rank() != rank_)
      throw std::invalid_argument("coefficient rank mismatch");
  trim();
}

void FieldPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

FieldPoly FieldPoly::zero(int rank) { return FieldPoly(rank); }

FieldPoly FieldPoly::constant(const FieldElement& c) {
  return FieldPoly(c.rank(), {c});
}

FieldPoly FieldPoly::variable(int rank) {
  return FieldPoly(rank, {FieldElement::zero(rank), FieldElement::one(rank)});
}

FieldElement FieldPoly::coeff(int i) const {
  if (i < 0) throw std::out_of_range("coefficient index");
  if (i >= static_cast<int>(coeffs_.size())) return FieldElement::zero(rank_);
  return coeffs_[static_cast<size_t>(i)];
}

FieldElement FieldPoly::eval(const FieldElement& x) const {
  FieldElement acc = FieldElement::zero(rank_);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

FieldPoly operator+(const FieldPoly& a, const FieldPoly& b) {
  if (a.rank_ != b.rank_) throw std::invalid_argument("rank mismatch");
  std::vector<FieldElement> c(std::max(a.coeffs_.size(), b.coeffs_.size()),
                              FieldElement::zero(a.rank_));
  for (size_t i = 0; i < c.size(); ++i) {
    if (i < a.coeffs_.size()) c[i] = c[i] + a.coeffs_[i];
    if (i < b.coeffs_.size()) c[i] = c[i] + b.coeffs_[i];
  }
  return FieldPoly(a.rank_, std::move(c));
}

FieldPoly operator-(const FieldPoly& a, const FieldPoly& b) {
  if (a.rank_ != b.rank_) throw std::invalid_argument("rank mismatch");
  std::vector<FieldElement> c(std::max(a.coeffs_.size(), b.coeffs_.size()),
                              FieldElement::zero(a.rank_));
  for (size_t i = 0; i < c.size(); ++i) {
    if (i < a.coeffs_.size()) c[i] = c[i] + a.coeffs_[i];
    if (i < b.coeffs_.size()) c[i] = c[i] - b.coeffs_[i];
  }
  return FieldPoly(a.rank_, std::move(c));
}

FieldPoly operator*(const FieldPoly& a, const FieldPoly& b) {
  if (a.rank_ != b.rank_) throw std::invalid_argument("rank mismatch");
  if (a.is_zero() || b.is_zero()) return FieldPoly::zero(a.rank_);
  std::vector<FieldElement> c(a.coeffs_.size() + b.coeffs_.size() - 1,
                              FieldElement::zero(a.rank_));
  for (size_t i = 0; i < a.coeffs_.size(); ++i)
    for (size_t j = 0; j < b.coeffs_.size(); ++j)
      c[i + j] = c[i + j] + a.coeffs_[i] * b.coeffs_[j];
  return FieldPoly(a.rank_, std::move(c));
}

FieldPoly operator*(const FieldElement& c, const FieldPoly& a) {
  std::vector<FieldElement> r = a.coeffs_;
  for (auto& x : r) x = c * x;
  return FieldPoly(a.rank_, std::move(r));
}

bool operator==(const FieldPoly& a, const FieldPoly& b) {
  if (a.rank_ != b.rank_) throw std::invalid_argument("rank mismatch");
  if (a.coeffs_.size() != b.coeffs_.size()) return false;
  for (size_t i = 0; i < a.coeffs_.size(); ++i)
    if (!(a.coeffs_[i] == b.coeffs_[i])) return false;
  return true;
}

std::string FieldPoly::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    std::string c = coeffs_[i].str();
    bool atomic = c.find_first_of("+-*/^ ") == std::string::npos;
    if (i == 0) {
      os << c;
      continue;
    }
    if (c == "1") {
      os << 'X';
    } else {
      os << (atomic ? c : "(" + c + ")") << "*X";
    }
    if (i > 1) os << '^' << i;
  }
  if (first) return "0";
  return os.str();
}

}  // namespace pcc

#include "halfspin/tower.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace halfspin {

Rational rational_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  mpq_class q;
  try {
    q = mpq_class(s, 10);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed rational literal: " + s);
  }
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator in rational literal: " + s);
  q.canonicalize();
  return q;
}

std::string rational_to_string(const Rational& q) { return q.get_str(); }

bool rational_is_square(const Rational& q, Rational* root) {
  if (sgn(q) < 0) return false;
  if (sgn(q) == 0) {
    if (root) *root = 0;
    return true;
  }
  const mpz_class& num = q.get_num();
  const mpz_class& den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return false;
  if (root) {
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    *root = Rational(rn) / Rational(rd);
  }
  return true;
}

namespace {

// Sign of p + eps*q*sqrt(m1) with eps = +1 for embedding 1, -1 for embedding 2.
// No floating point: magnitudes are compared through p^2 vs q^2*m1.
int e0_pair_sign(const Rational& p, const Rational& q, const Rational& m1, int embedding) {
  const int eps = embedding == 1 ? 1 : -1;
  const int sp = sgn(p);
  const int sq = eps * sgn(q);
  if (sq == 0) return sp;
  if (sp == 0) return sq;
  if (sp == sq) return sp;
  const Rational lhs = p * p;
  const Rational rhs = q * q * m1;
  if (lhs > rhs) return sp;
  if (lhs < rhs) return sq;
  return 0;
}

}  // namespace

TowerSpec::TowerSpec(std::optional<Rational> m1, Rational m2_0, Rational m2_1)
    : m1_(std::move(m1)), m2_0_(std::move(m2_0)), m2_1_(std::move(m2_1)) {
  if (m1_) {
    if (sgn(*m1_) <= 0) throw std::invalid_argument("m1 must be positive");
    if (rational_is_square(*m1_)) throw std::invalid_argument("m1 must not be a rational square");
  } else if (sgn(m2_1_) != 0) {
    throw std::invalid_argument("m2 has a sqrt(m1) component but the tower has no m1");
  }
  const Rational one_m1 = m1_ ? *m1_ : Rational(0);
  for (int i = 1; i <= embeddings(); ++i) {
    if (e0_pair_sign(m2_0_, m2_1_, one_m1, i) >= 0)
      throw std::invalid_argument("m2 must be totally negative");
  }
}

const Rational& TowerSpec::m1() const {
  if (!m1_) throw std::logic_error("tower has no m1");
  return *m1_;
}

FieldElement TowerSpec::zero() const { return FieldElement(this, {Rational(0), 0, 0, 0}); }
FieldElement TowerSpec::one() const { return FieldElement(this, {Rational(1), 0, 0, 0}); }
FieldElement TowerSpec::from_rational(const Rational& c) const {
  return FieldElement(this, {c, 0, 0, 0});
}
FieldElement TowerSpec::from_int(long c) const { return from_rational(Rational(c)); }
FieldElement TowerSpec::sqrt_m1() const {
  if (!m1_) throw std::logic_error("tower has no m1");
  return FieldElement(this, {Rational(0), 1, 0, 0});
}
FieldElement TowerSpec::sqrt_m2() const { return FieldElement(this, {Rational(0), 0, 1, 0}); }
FieldElement TowerSpec::m2() const { return FieldElement(this, {m2_0_, m2_1_, 0, 0}); }

FieldElement TowerSpec::element(std::array<Rational, 4> coords) const {
  if (!m1_ && (sgn(coords[1]) != 0 || sgn(coords[3]) != 0))
    throw std::invalid_argument("sqrt(m1) coordinates in a tower without m1");
  return FieldElement(this, std::move(coords));
}

FieldElement TowerSpec::base_element(Rational c0, Rational c1) const {
  return element({std::move(c0), std::move(c1), 0, 0});
}

bool TowerSpec::operator==(const TowerSpec& other) const {
  if (m1_.has_value() != other.m1_.has_value()) return false;
  if (m1_ && *m1_ != *other.m1_) return false;
  return m2_0_ == other.m2_0_ && m2_1_ == other.m2_1_;
}

const TowerSpec& FieldElement::tower() const {
  if (!tower_) throw std::logic_error("unbound field element");
  return *tower_;
}

bool FieldElement::is_zero() const {
  return sgn(c_[0]) == 0 && sgn(c_[1]) == 0 && sgn(c_[2]) == 0 && sgn(c_[3]) == 0;
}

bool FieldElement::in_base() const { return sgn(c_[2]) == 0 && sgn(c_[3]) == 0; }

bool FieldElement::is_rational() const {
  return sgn(c_[1]) == 0 && sgn(c_[2]) == 0 && sgn(c_[3]) == 0;
}

const Rational& FieldElement::rational_value() const {
  if (!is_rational()) throw std::logic_error("element is not rational");
  return c_[0];
}

namespace {

const TowerSpec* common_tower(const FieldElement& x, const FieldElement& y) {
  const TowerSpec* tx = &x.tower();
  const TowerSpec* ty = &y.tower();
  if (tx != ty && !(*tx == *ty)) throw std::invalid_argument("field elements from different towers");
  return tx;
}

}  // namespace

FieldElement FieldElement::operator-() const {
  FieldElement r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

FieldElement operator+(const FieldElement& x, const FieldElement& y) {
  const TowerSpec* t = common_tower(x, y);
  std::array<Rational, 4> c;
  for (int i = 0; i < 4; ++i) c[i] = x.c_[i] + y.c_[i];
  return FieldElement(t, std::move(c));
}

FieldElement operator-(const FieldElement& x, const FieldElement& y) {
  const TowerSpec* t = common_tower(x, y);
  std::array<Rational, 4> c;
  for (int i = 0; i < 4; ++i) c[i] = x.c_[i] - y.c_[i];
  return FieldElement(t, std::move(c));
}

namespace {

// E0 pairs (p0 + p1*sqrt(m1)).
using E0 = std::pair<Rational, Rational>;

E0 e0_mul(const E0& p, const E0& q, const Rational& m1) {
  return {p.first * q.first + p.second * q.second * m1,
          p.first * q.second + p.second * q.first};
}

E0 e0_add(const E0& p, const E0& q) { return {p.first + q.first, p.second + q.second}; }

E0 e0_sub(const E0& p, const E0& q) { return {p.first - q.first, p.second - q.second}; }

}  // namespace

FieldElement operator*(const FieldElement& x, const FieldElement& y) {
  const TowerSpec* t = common_tower(x, y);
  const Rational m1 = t->has_m1() ? t->m1() : Rational(0);
  const E0 a{x.c_[0], x.c_[1]}, b{x.c_[2], x.c_[3]};
  const E0 c{y.c_[0], y.c_[1]}, d{y.c_[2], y.c_[3]};
  const E0 m2{t->m2_coeff0(), t->m2_coeff1()};
  // (a + b*r2)(c + d*r2) = (ac + bd*m2) + (ad + bc)*r2
  E0 base = e0_add(e0_mul(a, c, m1), e0_mul(e0_mul(b, d, m1), m2, m1));
  E0 top = e0_add(e0_mul(a, d, m1), e0_mul(b, c, m1));
  return FieldElement(t, {std::move(base.first), std::move(base.second),
                          std::move(top.first), std::move(top.second)});
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero field element");
  const TowerSpec* t = &tower();
  const Rational m1 = t->has_m1() ? t->m1() : Rational(0);
  const E0 a{c_[0], c_[1]}, b{c_[2], c_[3]};
  const E0 m2{t->m2_coeff0(), t->m2_coeff1()};
  // norm to E0: (a + b*r2)(a - b*r2) = a^2 - b^2*m2
  E0 nm = e0_sub(e0_mul(a, a, m1), e0_mul(e0_mul(b, b, m1), m2, m1));
  // invert in E0: (p + q*sqrt(m1))^{-1} = (p - q*sqrt(m1)) / (p^2 - q^2*m1)
  Rational den = nm.first * nm.first - nm.second * nm.second * m1;
  if (sgn(den) == 0) throw std::domain_error("division by zero field element");
  E0 nm_inv{nm.first / den, -nm.second / den};
  E0 ia = e0_mul(a, nm_inv, m1);
  E0 ib = e0_mul(E0{-b.first, -b.second}, nm_inv, m1);
  return FieldElement(t, {std::move(ia.first), std::move(ia.second),
                          std::move(ib.first), std::move(ib.second)});
}

FieldElement operator/(const FieldElement& x, const FieldElement& y) { return x * y.inverse(); }

FieldElement& FieldElement::operator+=(const FieldElement& y) { return *this = *this + y; }
FieldElement& FieldElement::operator-=(const FieldElement& y) { return *this = *this - y; }
FieldElement& FieldElement::operator*=(const FieldElement& y) { return *this = *this * y; }

bool FieldElement::operator==(const FieldElement& y) const {
  common_tower(*this, y);
  return c_ == y.c_;
}

std::string FieldElement::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const FieldElement& x) {
  const auto& c = x.coords();
  os << "[" << c[0].get_str() << ", " << c[1].get_str() << ", " << c[2].get_str() << ", "
     << c[3].get_str() << "]";
  return os;
}

FieldElement conj(const FieldElement& x) {
  auto c = x.coords();
  c[2] = -c[2];
  c[3] = -c[3];
  return x.tower().element(std::move(c));
}

FieldElement norm_to_base(const FieldElement& x) { return x * conj(x); }

int embed_sign(const FieldElement& x, int embedding) {
  const TowerSpec& t = x.tower();
  if (!x.in_base()) throw std::invalid_argument("embed_sign on an element outside E0");
  if (embedding < 1 || embedding > t.embeddings())
    throw std::invalid_argument("embedding index out of range");
  const Rational m1 = t.has_m1() ? t.m1() : Rational(0);
  return e0_pair_sign(x.coords()[0], x.coords()[1], m1, embedding);
}

std::optional<FieldElement> base_sqrt(const FieldElement& x) {
  const TowerSpec& t = x.tower();
  if (!x.in_base()) throw std::invalid_argument("base_sqrt on an element outside E0");
  const Rational& u = x.coords()[0];
  const Rational& v = x.coords()[1];
  if (sgn(v) == 0) {
    Rational root;
    if (rational_is_square(u, &root)) return t.from_rational(root);
    if (t.has_m1() && rational_is_square(u / t.m1(), &root)) return t.base_element(0, root);
    return std::nullopt;
  }
  // (p + q*sqrt(m1))^2 = u + v*sqrt(m1): 2pq = v and p^2 + q^2*m1 = u,
  // so p^2 solves 4X^2 - 4uX + v^2*m1 = 0.
  const Rational& m1 = t.m1();
  Rational disc = u * u - v * v * m1;
  Rational droot;
  if (!rational_is_square(disc, &droot)) return std::nullopt;
  for (int s : {1, -1}) {
    Rational p2 = (u + s * droot) / 2;
    Rational p;
    if (rational_is_square(p2, &p) && sgn(p) != 0) {
      Rational q = v / (2 * p);
      return t.base_element(p, q);
    }
  }
  return std::nullopt;
}

}  // namespace halfspin

#include "halfspin/linop.hpp"

#include <stdexcept>

namespace halfspin {

LinOp::LinOp(int dim, Linearity lin, const TowerSpec& t) : dim_(dim), lin_(lin) {
  if (dim <= 0) throw std::invalid_argument("operator dimension must be positive");
  m_.assign(static_cast<size_t>(dim) * dim, t.zero());
}

LinOp LinOp::identity(int dim, const TowerSpec& t) {
  LinOp r(dim, Linearity::Linear, t);
  for (int i = 0; i < dim; ++i) r.set(i, i, t.one());
  return r;
}

LinOp LinOp::scalar_op(int dim, const FieldElement& c, Linearity lin) {
  LinOp r(dim, lin, c.tower());
  for (int i = 0; i < dim; ++i) r.set(i, i, c);
  return r;
}

const TowerSpec& LinOp::tower() const {
  if (m_.empty()) throw std::logic_error("empty operator");
  return m_[0].tower();
}

std::vector<FieldElement> LinOp::apply(const std::vector<FieldElement>& v) const {
  if (static_cast<int>(v.size()) != dim_) throw std::invalid_argument("vector dimension mismatch");
  std::vector<FieldElement> w(v.size(), tower().zero());
  for (int j = 0; j < dim_; ++j) {
    FieldElement vj = is_conjugate() ? conj(v[j]) : v[j];
    if (vj.is_zero()) continue;
    for (int i = 0; i < dim_; ++i) {
      const FieldElement& a = at(i, j);
      if (!a.is_zero()) w[i] += a * vj;
    }
  }
  return w;
}

LinOp LinOp::operator+(const LinOp& o) const {
  if (dim_ != o.dim_ || lin_ != o.lin_) throw std::invalid_argument("operator shape/tag mismatch");
  LinOp r = *this;
  for (size_t i = 0; i < m_.size(); ++i) r.m_[i] += o.m_[i];
  return r;
}

LinOp LinOp::operator-(const LinOp& o) const {
  if (dim_ != o.dim_ || lin_ != o.lin_) throw std::invalid_argument("operator shape/tag mismatch");
  LinOp r = *this;
  for (size_t i = 0; i < m_.size(); ++i) r.m_[i] -= o.m_[i];
  return r;
}

LinOp LinOp::operator-() const {
  LinOp r = *this;
  for (auto& e : r.m_) e = -e;
  return r;
}

LinOp operator*(const FieldElement& c, const LinOp& a) {
  LinOp r = a;
  for (auto& e : r.m_) e = c * e;
  return r;
}

LinOp LinOp::conj_entries() const {
  LinOp r = *this;
  for (auto& e : r.m_) e = conj(e);
  return r;
}

bool LinOp::operator==(const LinOp& o) const {
  return dim_ == o.dim_ && lin_ == o.lin_ && m_ == o.m_;
}

bool LinOp::is_zero() const {
  for (const auto& e : m_)
    if (!e.is_zero()) return false;
  return true;
}

bool LinOp::is_scalar_multiple_of_identity(const FieldElement& c) const {
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) {
      if (i == j ? at(i, j) != c : !at(i, j).is_zero()) return false;
    }
  return true;
}

LinOp compose(const LinOp& a, const LinOp& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("operator dimension mismatch");
  const int n = a.dim();
  const TowerSpec& t = a.tower();
  const bool conj_b = a.is_conjugate();
  const Linearity out =
      a.is_conjugate() == b.is_conjugate() ? Linearity::Linear : Linearity::Conjugate;
  LinOp r(n, out, t);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const FieldElement& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < n; ++j) {
        const FieldElement& bkj = b.at(k, j);
        if (bkj.is_zero()) continue;
        r.set(i, j, r.at(i, j) + aik * (conj_b ? conj(bkj) : bkj));
      }
    }
  return r;
}

LinOp commutator(const LinOp& a, const LinOp& b) { return compose(a, b) - compose(b, a); }

LinOp LinOp::inverse() const {
  const int n = dim_;
  const TowerSpec& t = tower();
  // Gauss-Jordan on [M | I].
  std::vector<std::vector<FieldElement>> aug(n);
  for (int i = 0; i < n; ++i) {
    aug[i].reserve(2 * n);
    for (int j = 0; j < n; ++j) aug[i].push_back(at(i, j));
    for (int j = 0; j < n; ++j) aug[i].push_back(i == j ? t.one() : t.zero());
  }
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int row = col; row < n; ++row)
      if (!aug[row][col].is_zero()) {
        pivot = row;
        break;
      }
    if (pivot < 0) throw std::domain_error("singular operator");
    std::swap(aug[col], aug[pivot]);
    FieldElement inv = aug[col][col].inverse();
    for (int j = 0; j < 2 * n; ++j) aug[col][j] = inv * aug[col][j];
    for (int row = 0; row < n; ++row) {
      if (row == col || aug[row][col].is_zero()) continue;
      FieldElement f = aug[row][col];
      for (int j = 0; j < 2 * n; ++j) aug[row][j] -= f * aug[col][j];
    }
  }
  LinOp r(n, lin_, t);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      r.set(i, j, is_conjugate() ? conj(aug[i][n + j]) : aug[i][n + j]);
  return r;
}

LinOp res_matrix(const LinOp& a) {
  const int n = a.dim();
  const TowerSpec& t = a.tower();
  const FieldElement m2 = t.m2();
  const bool cj = a.is_conjugate();
  // With M = P + sqrt(m2)*Q (P, Q over E0), the operator acts on the basis
  // {e_i, sqrt(m2)*e_i} as [[P, m2*Q], [Q, P]] when linear and
  // [[P, -m2*Q], [Q, -P]] when conjugate-linear.
  LinOp r(2 * n, Linearity::Linear, t);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const auto& c = a.at(i, j).coords();
      FieldElement p = t.base_element(c[0], c[1]);
      FieldElement q = t.base_element(c[2], c[3]);
      if (!p.is_zero()) {
        r.set(i, j, p);
        r.set(n + i, n + j, cj ? -p : p);
      }
      if (!q.is_zero()) {
        r.set(n + i, j, q);
        FieldElement mq = m2 * q;
        r.set(i, n + j, cj ? -mq : mq);
      }
    }
  return r;
}

}  // namespace halfspin

#include "halfspin/norms.hpp"

#include <stdexcept>
#include <vector>

namespace halfspin {

NormVerdict NormVerdict::norm(FieldElement w, std::string cert) {
  NormVerdict v;
  v.status = NormStatus::Norm;
  v.witness = std::move(w);
  v.certificate = std::move(cert);
  return v;
}

NormVerdict NormVerdict::not_norm(std::string cert) {
  NormVerdict v;
  v.status = NormStatus::NotNorm;
  v.certificate = std::move(cert);
  return v;
}

NormVerdict NormVerdict::unknown(std::string note) {
  NormVerdict v;
  v.status = NormStatus::Unknown;
  v.certificate = std::move(note);
  return v;
}

namespace {

struct Factor {
  mpz_class prime;
  unsigned long exponent;
};

// Trial division up to `bound`; returns false (leaving `rest` > 1) when a
// composite cofactor beyond the bound survives. A surviving probable prime
// below 2^64 is accepted as prime (BPSW is exact in that range).
bool factorize(mpz_class n, unsigned long bound, std::vector<Factor>& out, mpz_class& rest) {
  auto push = [&out](const mpz_class& p) {
    if (!out.empty() && out.back().prime == p) {
      ++out.back().exponent;
    } else {
      out.push_back({p, 1});
    }
  };
  while (mpz_even_p(n.get_mpz_t()) && n > 1) {
    push(2);
    n /= 2;
  }
  mpz_class d = 3;
  while (d * d <= n && d <= bound) {
    while (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) {
      push(d);
      n /= d;
    }
    d += 2;
  }
  if (n == 1) {
    rest = 1;
    return true;
  }
  if (d * d > n) {  // what remains is prime
    push(n);
    rest = 1;
    return true;
  }
  if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 64 && mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) {
    push(n);
    rest = 1;
    return true;
  }
  rest = n;
  return false;
}

// x^2 + y^2 = p for a prime p = 2 or p = 1 mod 4, by scanning x.
bool two_square_decomposition(const mpz_class& p, mpz_class& x, mpz_class& y) {
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), p.get_mpz_t());
  for (mpz_class a = 1; a <= root; ++a) {
    mpz_class rem = p - a * a;
    if (mpz_perfect_square_p(rem.get_mpz_t())) {
      x = a;
      mpz_sqrt(y.get_mpz_t(), rem.get_mpz_t());
      return true;
    }
  }
  return false;
}

// Norm test over Q(i): positive rational P/Q is a norm iff every prime
// 3 mod 4 divides P*Q to an even power; a Gaussian-integer witness is
// assembled from the factorization.
NormVerdict gaussian_norm(const TowerSpec& t, const Rational& q, const NormSearchLimits& limits) {
  mpz_class pq = q.get_num() * q.get_den();
  std::vector<Factor> factors;
  mpz_class rest;
  if (!factorize(pq, limits.trial_division_bound, factors, rest))
    return NormVerdict::unknown("unfactored cofactor " + rest.get_str() +
                                " beyond trial-division bound");
  // Gaussian integer (gx + gy*i) accumulating a root of P*Q.
  mpz_class gx = 1, gy = 0;
  auto gmul = [&gx, &gy](const mpz_class& x, const mpz_class& y) {
    mpz_class nx = gx * x - gy * y;
    mpz_class ny = gx * y + gy * x;
    gx = nx;
    gy = ny;
  };
  for (const auto& f : factors) {
    if (f.prime % 4 == 3) {
      if (f.exponent % 2 != 0)
        return NormVerdict::not_norm("prime " + f.prime.get_str() +
                                     " = 3 mod 4 divides the norm to an odd power");
      for (unsigned long i = 0; i < f.exponent / 2; ++i) gmul(f.prime, 0);
    } else {
      mpz_class x, y;
      if (!two_square_decomposition(f.prime, x, y))
        return NormVerdict::unknown("no two-square split found for prime " + f.prime.get_str());
      for (unsigned long i = 0; i < f.exponent; ++i) gmul(x, y);
    }
  }
  // Nm(g) = P*Q, so Nm(g / Q) = P/Q.
  Rational den(q.get_den());
  FieldElement witness = t.element({Rational(gx) / den, 0, Rational(gy) / den, 0});
  return NormVerdict::norm(std::move(witness), "two-squares factorization");
}

std::vector<Rational> height_ladder(int height) {
  std::vector<Rational> vals;
  vals.emplace_back(0);
  for (int d = 1; d <= height; ++d)
    for (int n = 1; n <= height; ++n) {
      Rational v(n, d);
      v.canonicalize();
      vals.push_back(v);
      vals.push_back(-v);
    }
  return vals;
}

NormVerdict bounded_witness_search(const FieldElement& x, const NormSearchLimits& limits) {
  const TowerSpec& t = x.tower();
  const auto vals = height_ladder(limits.witness_height);
  std::vector<FieldElement> base_vals;
  for (const auto& p : vals) {
    base_vals.push_back(t.base_element(p));
    if (t.has_m1())
      for (const auto& r : vals)
        if (sgn(r) != 0) base_vals.push_back(t.base_element(p, r));
  }
  const FieldElement m2 = t.m2();
  // Nm(a + b*sqrt(m2)) = a^2 - m2*b^2: scan a, solve for b exactly.
  for (const auto& a : base_vals) {
    const FieldElement b_sq = (a * a - x) / m2;
    if (auto b = base_sqrt(b_sq)) {
      auto c = a.coords();
      auto d = b->coords();
      return NormVerdict::norm(t.element({c[0], c[1], d[0], d[1]}), "bounded search");
    }
  }
  return NormVerdict::unknown("no witness within height " + std::to_string(limits.witness_height));
}

}  // namespace

NormVerdict is_norm(const FieldElement& x, const NormSearchLimits& limits) {
  const TowerSpec& t = x.tower();
  if (!x.in_base()) throw std::invalid_argument("is_norm argument must lie in E0");
  if (x.is_zero()) throw std::invalid_argument("is_norm argument must be nonzero");

  NormVerdict v = [&]() {
    // Norms from the imaginary extension are totally positive.
    for (int i = 1; i <= t.embeddings(); ++i) {
      if (embed_sign(x, i) < 0)
        return NormVerdict::not_norm("negative under real embedding " + std::to_string(i));
    }

    // Squares in E0 are norms of their roots, which conjugation fixes.
    if (auto root = base_sqrt(x)) return NormVerdict::norm(*root, "square in E0");
    // So are (-m2)-multiples of squares: Nm(c*sqrt(m2)) = -m2*c^2.
    if (auto root = base_sqrt(x / (-t.m2()))) {
      auto c = root->coords();
      return NormVerdict::norm(t.element({0, 0, c[0], c[1]}), "m2-multiple of a square in E0");
    }

    if (!t.has_m1() && t.m2_coeff0() == Rational(-1))
      return gaussian_norm(t, x.rational_value(), limits);

    return bounded_witness_search(x, limits);
  }();

  if (v.status == NormStatus::Norm && norm_to_base(*v.witness) != x)
    throw std::logic_error("norm witness failed re-verification");
  return v;
}

NormOracle exact_norm_oracle(const NormSearchLimits& limits) {
  return [limits](const FieldElement& x) { return is_norm(x, limits); };
}

NormOracle embedding_sign_oracle(int embedding) {
  return [embedding](const FieldElement& x) {
    const int s = embed_sign(x, embedding);
    if (s == 0) throw std::invalid_argument("sign oracle on zero");
    if (s < 0)
      return NormVerdict::not_norm("negative under real embedding " + std::to_string(embedding));
    if (auto root = base_sqrt(x)) return NormVerdict::norm(*root, "square in E0");
    NormVerdict v;
    v.status = NormStatus::Norm;
    v.certificate = "positive under real embedding " + std::to_string(embedding);
    return v;
  };
}

}  // namespace halfspin

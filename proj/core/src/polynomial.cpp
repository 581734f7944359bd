#include "mapcount/polynomial.hpp"

#include <algorithm>
#include <ostream>

#include "mapcount/errors.hpp"

namespace mapcount {

void Polynomial::normalize() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  return a + (-b);
}

Polynomial Polynomial::operator-() const {
  std::vector<Rational> c;
  c.reserve(c_.size());
  for (const auto& v : c_) c.push_back(-v);
  return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return Polynomial(std::move(c));
}

Polynomial operator*(const Rational& s, const Polynomial& a) {
  std::vector<Rational> c;
  c.reserve(a.c_.size());
  for (const auto& v : a.c_) c.push_back(s * v);
  return Polynomial(std::move(c));
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return Polynomial();
  std::vector<Rational> c(c_.size() - 1);
  for (size_t k = 1; k < c_.size(); ++k) c[k - 1] = Rational(static_cast<long>(k)) * c_[k];
  return Polynomial(std::move(c));
}

Rational Polynomial::evaluate(const Rational& x) const {
  Rational r(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

BigFloat Polynomial::evaluate(const BigFloat& x) const {
  BigFloat r(0L, x.precision_digits());
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    r = r * x + BigFloat(*it, x.precision_digits());
  return r;
}

Polynomial Polynomial::remainder(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw DomainError("polynomial remainder by zero");
  Polynomial r = a;
  const Rational lb = b.c_.back();
  while (!r.is_zero() && r.degree() >= b.degree()) {
    const Rational q = r.c_.back() / lb;
    const int shift = r.degree() - b.degree();
    for (int i = 0; i <= b.degree(); ++i)
      r.c_[i + shift] -= q * b.c_[i];
    r.normalize();
  }
  return r;
}

Polynomial Polynomial::gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    Polynomial r = remainder(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  if (x.is_zero()) return x;
  return x.c_.back().inverse() * x;  // monic
}

Polynomial Polynomial::divide_exact(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  if (a.is_zero()) return Polynomial();
  if (a.degree() < b.degree()) throw DomainError("inexact polynomial division");
  Polynomial r = a;
  std::vector<Rational> q(a.c_.size() - b.c_.size() + 1, Rational(0));
  const Rational lb = b.c_.back();
  while (!r.is_zero() && r.degree() >= b.degree()) {
    const Rational t = r.c_.back() / lb;
    const int shift = r.degree() - b.degree();
    q[shift] = t;
    for (int i = 0; i <= b.degree(); ++i) r.c_[i + shift] -= t * b.c_[i];
    r.normalize();
  }
  if (!r.is_zero()) throw DomainError("inexact polynomial division");
  return Polynomial(std::move(q));
}

Polynomial Polynomial::squarefree_part() const {
  if (degree() <= 0) return *this;
  const Polynomial g = gcd(*this, derivative());
  if (g.degree() == 0) return *this;
  return divide_exact(*this, g);
}

bool Polynomial::is_squarefree() const {
  if (degree() <= 0) return true;
  return gcd(*this, derivative()).degree() == 0;
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = c_[k];
    if (c.is_zero()) continue;
    const Rational a = c.abs();
    if (s.empty()) {
      if (c.sign() < 0) s += "-";
    } else {
      s += c.sign() < 0 ? " - " : " + ";
    }
    if (!(a == Rational(1)) || k == 0) {
      s += a.to_string();
      if (k > 0) s += "*";
    }
    if (k > 0) {
      s += "x";
      if (k > 1) s += "^" + std::to_string(k);
    }
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
  return os << p.to_string();
}

namespace {

std::vector<Polynomial> sturm_chain(const Polynomial& p) {
  std::vector<Polynomial> chain{p, p.derivative()};
  while (!chain.back().is_zero()) {
    Polynomial r = -Polynomial::remainder(chain[chain.size() - 2], chain.back());
    chain.push_back(std::move(r));
  }
  chain.pop_back();
  return chain;
}

int sign_changes_at(const std::vector<Polynomial>& chain, const Rational& x) {
  int changes = 0, prev = 0;
  for (const auto& q : chain) {
    const int s = q.evaluate(x).sign();
    if (s != 0) {
      if (prev != 0 && s != prev) ++changes;
      prev = s;
    }
  }
  return changes;
}

int sign_changes_at_infinity(const std::vector<Polynomial>& chain, int dir) {
  int changes = 0, prev = 0;
  for (const auto& q : chain) {
    if (q.is_zero()) continue;
    int s = q.coefficients().back().sign();
    if (dir < 0 && q.degree() % 2 == 1) s = -s;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

Rational cauchy_bound(const Polynomial& p) {
  const Rational lead = p.coefficients().back().abs();
  Rational m(0);
  for (const auto& c : p.coefficients()) m = std::max(m, c.abs());
  return Rational(1) + m / lead;
}

}  // namespace

int sturm_count(const Polynomial& p, const Rational& lo, const Rational& hi) {
  if (p.degree() <= 0) return 0;
  const auto chain = sturm_chain(p);
  return sign_changes_at(chain, lo) - sign_changes_at(chain, hi);
}

int count_real_roots(const Polynomial& p) {
  if (p.degree() <= 0) return 0;
  const auto chain = sturm_chain(p);
  return sign_changes_at_infinity(chain, -1) -
         sign_changes_at_infinity(chain, +1);
}

std::vector<RootInterval> isolate_real_roots(const Polynomial& p,
                                             const Rational& width) {
  std::vector<RootInterval> out;
  if (p.degree() <= 0) return out;
  const Polynomial sf = p.squarefree_part();
  const auto chain = sturm_chain(sf);
  const Rational b = cauchy_bound(sf);
  const auto count = [&](const Rational& lo, const Rational& hi) {
    return sign_changes_at(chain, lo) - sign_changes_at(chain, hi);
  };

  struct Item {
    Rational lo, hi;
    int n;
  };
  std::vector<Item> stack{{-b, b, count(-b, b)}};
  while (!stack.empty()) {
    Item it = stack.back();
    stack.pop_back();
    if (it.n == 0) continue;
    if (it.n == 1 && it.hi - it.lo <= width) {
      out.push_back({it.lo, it.hi});
      continue;
    }
    const Rational mid = (it.lo + it.hi) / Rational(2);
    // keep a root exactly at mid in the left half-open interval
    const int left = count(it.lo, mid);
    stack.push_back({it.lo, mid, left});
    stack.push_back({mid, it.hi, it.n - left});
  }
  std::sort(out.begin(), out.end(),
            [](const RootInterval& a, const RootInterval& b2) {
              return a.lo < b2.lo;
            });
  return out;
}

BigFloat refine_root(const Polynomial& p, const RootInterval& iv, int digits) {
  const Polynomial sf = p.squarefree_part();
  // bisect exactly until the interval is narrow enough, then evaluate
  Rational lo = iv.lo, hi = iv.hi;
  // sign at hi (root is in (lo, hi]); if p(hi) == 0 the root is hi
  Rational phi = sf.evaluate(hi);
  if (phi.is_zero()) return BigFloat(hi, digits);
  const Rational tol = Rational(1, 10).pow(digits + 5);
  while (hi - lo > tol) {
    const Rational mid = (lo + hi) / Rational(2);
    const Rational pm = sf.evaluate(mid);
    if (pm.is_zero()) return BigFloat(mid, digits);
    if ((pm.sign() > 0) == (phi.sign() > 0)) {
      hi = mid;
      phi = pm;
    } else {
      lo = mid;
    }
  }
  return BigFloat((lo + hi) / Rational(2), digits);
}

std::vector<Polynomial> squarefree_decomposition(const Polynomial& p) {
  std::vector<Polynomial> out;
  if (p.degree() <= 0) return out;
  const Polynomial g = Polynomial::gcd(p, p.derivative());
  if (g.degree() == 0) {
    out.push_back(p.coefficients().back().inverse() * p);
    return out;
  }
  Polynomial w = Polynomial::divide_exact(p, g);
  Polynomial z = Polynomial::divide_exact(p.derivative(), g) - w.derivative();
  while (w.degree() > 0) {
    const Polynomial a = Polynomial::gcd(w, z);
    out.push_back(a);
    w = Polynomial::divide_exact(w, a);
    z = Polynomial::divide_exact(z, a) - w.derivative();
  }
  return out;
}

Polynomial characteristic_polynomial(
    const std::vector<std::vector<Rational>>& m) {
  const size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw DomainError("characteristic polynomial needs a square matrix");
  // Faddeev-LeVerrier: M_1 = A, c_{n-1} = -tr(M_1);
  // M_k = A (M_{k-1} + c_{n-k+1} I), c_{n-k} = -tr(M_k)/k.
  std::vector<Rational> c(n + 1, Rational(0));
  c[n] = Rational(1);
  std::vector<std::vector<Rational>> mk = m;
  const auto trace = [&](const std::vector<std::vector<Rational>>& a) {
    Rational t(0);
    for (size_t i = 0; i < n; ++i) t += a[i][i];
    return t;
  };
  c[n - 1] = -trace(mk);
  for (size_t k = 2; k <= n; ++k) {
    for (size_t i = 0; i < n; ++i) mk[i][i] += c[n - k + 1];
    std::vector<std::vector<Rational>> am(n, std::vector<Rational>(n, Rational(0)));
    for (size_t i = 0; i < n; ++i)
      for (size_t l = 0; l < n; ++l) {
        if (m[i][l].is_zero()) continue;
        for (size_t j = 0; j < n; ++j) am[i][j] += m[i][l] * mk[l][j];
      }
    mk = std::move(am);
    c[n - k] = -(trace(mk) / Rational(static_cast<long>(k)));
  }
  return Polynomial(std::move(c));
}

}  // namespace mapcount

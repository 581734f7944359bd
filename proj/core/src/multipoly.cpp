#include "mapcount/multipoly.hpp"

#include <cctype>
#include <ostream>
#include <vector>

#include "mapcount/errors.hpp"

namespace mapcount {

const std::array<const char*, ParamPoly::kVars> ParamPoly::kNames = {
    "gamma", "zeta", "eta"};

ParamPoly ParamPoly::variable(int idx) {
  if (idx < 0 || idx >= kVars) throw DomainError("bad parameter index");
  ParamPoly p;
  Monomial m{0, 0, 0};
  m[idx] = 1;
  p.set_term(m, Rational(1));
  return p;
}

void ParamPoly::set_term(const Monomial& m, const Rational& c) {
  if (c.is_zero())
    t_.erase(m);
  else
    t_[m] = c;
}

bool ParamPoly::is_constant() const {
  if (t_.empty()) return true;
  return t_.size() == 1 && t_.begin()->first == Monomial{0, 0, 0};
}

Rational ParamPoly::constant_value() const {
  auto it = t_.find(Monomial{0, 0, 0});
  return it == t_.end() ? Rational(0) : it->second;
}

int ParamPoly::degree(int var) const {
  int d = 0;
  for (const auto& [m, c] : t_) d = std::max(d, m[var]);
  return d;
}

ParamPoly operator+(const ParamPoly& a, const ParamPoly& b) {
  ParamPoly r = a;
  for (const auto& [m, c] : b.t_) {
    auto it = r.t_.find(m);
    if (it == r.t_.end()) {
      r.t_.emplace(m, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) r.t_.erase(it);
    }
  }
  return r;
}

ParamPoly operator-(const ParamPoly& a, const ParamPoly& b) { return a + (-b); }

ParamPoly ParamPoly::operator-() const {
  ParamPoly r;
  for (const auto& [m, c] : t_) r.t_.emplace(m, -c);
  return r;
}

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
  ParamPoly r;
  for (const auto& [ma, ca] : a.t_) {
    for (const auto& [mb, cb] : b.t_) {
      ParamPoly::Monomial m{ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2]};
      auto it = r.t_.find(m);
      if (it == r.t_.end()) {
        r.t_.emplace(m, ca * cb);
      } else {
        it->second += ca * cb;
        if (it->second.is_zero()) r.t_.erase(it);
      }
    }
  }
  return r;
}

ParamPoly operator*(const Rational& s, const ParamPoly& a) {
  ParamPoly r;
  if (s.is_zero()) return r;
  for (const auto& [m, c] : a.t_) r.t_.emplace(m, s * c);
  return r;
}

ParamPoly ParamPoly::pow(int e) const {
  if (e < 0) throw DomainError("negative polynomial power");
  ParamPoly r(1);
  ParamPoly base = *this;
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

ParamPoly ParamPoly::divexact(const ParamPoly& g) const {
  if (g.is_zero()) throw DomainError("polynomial division by zero");
  ParamPoly q;
  ParamPoly r = *this;
  const auto& ltg = *g.t_.rbegin();
  while (!r.is_zero()) {
    const auto& ltr = *r.t_.rbegin();
    Monomial m;
    for (int i = 0; i < kVars; ++i) {
      m[i] = ltr.first[i] - ltg.first[i];
      if (m[i] < 0) throw DomainError("inexact polynomial division");
    }
    ParamPoly t;
    t.t_.emplace(m, ltr.second / ltg.second);
    q = q + t;
    r = r - t * g;
  }
  return q;
}

namespace {

// Univariate view of p in variable `var`: degree -> coefficient polynomial
// (the coefficients do not contain `var`).
std::map<int, ParamPoly> univariate(const ParamPoly& p, int var) {
  std::map<int, ParamPoly> u;
  for (const auto& [m, c] : p.terms()) {
    ParamPoly::Monomial rest = m;
    int d = rest[var];
    rest[var] = 0;
    ParamPoly t;
    t.set_term(rest, c);
    u[d] = u[d] + t;
    if (u[d].is_zero()) u.erase(d);
  }
  return u;
}

ParamPoly from_univariate(const std::map<int, ParamPoly>& u, int var) {
  ParamPoly p;
  for (const auto& [d, coeff] : u) {
    ParamPoly xk;
    ParamPoly::Monomial m{0, 0, 0};
    m[var] = d;
    xk.set_term(m, Rational(1));
    p = p + coeff * xk;
  }
  return p;
}

int highest_variable(const ParamPoly& a, const ParamPoly& b) {
  for (int v = ParamPoly::kVars - 1; v >= 0; --v)
    if (a.degree(v) > 0 || b.degree(v) > 0) return v;
  return -1;
}

ParamPoly content(const std::map<int, ParamPoly>& u) {
  ParamPoly g;
  for (const auto& [d, coeff] : u) g = ParamPoly::gcd(g, coeff);
  return g;
}

}  // namespace

ParamPoly ParamPoly::gcd(const ParamPoly& a, const ParamPoly& b) {
  if (a.is_zero()) return b.is_zero() ? ParamPoly() : b.primitive_scaled();
  if (b.is_zero()) return a.primitive_scaled();
  const int var = highest_variable(a, b);
  if (var < 0) return ParamPoly(1);  // both nonzero constants

  auto ua = univariate(a, var);
  auto ub = univariate(b, var);
  const ParamPoly ca = content(ua);
  const ParamPoly cb = content(ub);
  const ParamPoly cg = gcd(ca, cb);

  // primitive PRS on the primitive parts
  ParamPoly pa = a.divexact(ca);
  ParamPoly pb = b.divexact(cb);
  auto xa = univariate(pa, var);
  auto xb = univariate(pb, var);
  if (xa.rbegin()->first < xb.rbegin()->first) std::swap(xa, xb);
  while (true) {
    // pseudo-remainder of xa by xb in `var`
    std::map<int, ParamPoly> r = xa;
    const int db = xb.rbegin()->first;
    const ParamPoly lb = xb.rbegin()->second;
    while (!r.empty() && r.rbegin()->first >= db) {
      const int dr = r.rbegin()->first;
      const ParamPoly lr = r.rbegin()->second;
      std::map<int, ParamPoly> nr;
      for (const auto& [d, c] : r) {
        if (d == dr) continue;
        nr[d] = lb * c;
      }
      for (const auto& [d, c] : xb) {
        if (d == db) continue;
        const int nd = d + dr - db;
        nr[nd] = (nr.count(nd) ? nr[nd] : ParamPoly()) - lr * c;
        if (nr[nd].is_zero()) nr.erase(nd);
      }
      r = std::move(nr);
    }
    if (r.empty()) {
      ParamPoly g = from_univariate(xb, var);
      g = g.divexact(content(xb));
      return (cg * g).primitive_scaled();
    }
    xa = std::move(xb);
    ParamPoly rp = from_univariate(r, var);
    xb = univariate(rp.divexact(content(r)), var);
  }
}

ParamPoly ParamPoly::primitive_scaled() const {
  if (is_zero()) return ParamPoly();
  Integer den_lcm(1);
  for (const auto& [m, c] : t_) den_lcm = Integer::lcm(den_lcm, c.denominator());
  Integer num_gcd(0);
  for (const auto& [m, c] : t_)
    num_gcd = Integer::gcd(num_gcd, (c * Rational(den_lcm)).numerator());
  Rational scale = Rational(den_lcm, num_gcd);
  if (t_.rbegin()->second.sign() < 0) scale = -scale;
  return scale.abs() * (t_.rbegin()->second.sign() < 0 ? -*this : *this);
}

const Rational& ParamPoly::leading_coefficient() const {
  if (is_zero()) throw DomainError("leading coefficient of zero polynomial");
  return t_.rbegin()->second;
}

Rational ParamPoly::evaluate(const Rational& gamma, const Rational& zeta,
                             const Rational& eta) const {
  Rational r(0);
  for (const auto& [m, c] : t_)
    r += c * gamma.pow(m[0]) * zeta.pow(m[1]) * eta.pow(m[2]);
  return r;
}

std::string ParamPoly::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  // highest monomial first
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational a = c.abs();
    if (s.empty()) {
      if (c.sign() < 0) s += "-";
    } else {
      s += c.sign() < 0 ? " - " : " + ";
    }
    const bool is_const_term = (m == Monomial{0, 0, 0});
    if (!(a == Rational(1)) || is_const_term) {
      s += a.to_string();
      if (!is_const_term) s += "*";
    }
    bool first = true;
    for (int v = 0; v < kVars; ++v) {
      if (m[v] == 0) continue;
      if (!first) s += "*";
      first = false;
      s += kNames[v];
      if (m[v] > 1) s += "^" + std::to_string(m[v]);
    }
  }
  return s;
}

namespace {

struct Parser {
  const std::string& s;
  size_t i = 0;

  explicit Parser(const std::string& str) : s(str) {}
  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char c) {
    skip();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) {
    throw ValidationError("parse error in '" + s + "' at position " +
                          std::to_string(i) + ": " + what);
  }

  Rational number() {
    skip();
    size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) fail("expected number");
    std::string num = s.substr(start, i - start);
    if (eat('/')) {
      skip();
      size_t ds = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      if (i == ds) fail("expected denominator");
      num += "/" + s.substr(ds, i - ds);
    }
    return Rational(num);
  }

  int variable_index() {
    skip();
    for (int v = 0; v < ParamPoly::kVars; ++v) {
      const std::string name = ParamPoly::kNames[v];
      if (s.compare(i, name.size(), name) == 0) {
        i += name.size();
        return v;
      }
    }
    return -1;
  }

  // factor := number | var [^int]
  // term   := factor (* factor)*
  // poly   := [+-] term ((+|-) term)*
  ParamPoly poly() {
    ParamPoly total;
    bool first = true;
    while (true) {
      skip();
      int sign = 1;
      if (eat('-'))
        sign = -1;
      else if (eat('+'))
        sign = 1;
      else if (!first)
        break;
      skip();
      if (i >= s.size()) fail("expected term");
      Rational coeff(sign);
      ParamPoly::Monomial mono{0, 0, 0};
      bool want_factor = true;
      while (want_factor) {
        skip();
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
          coeff *= number();
        } else {
          int v = variable_index();
          if (v < 0) fail("expected factor");
          int e = 1;
          if (eat('^')) e = static_cast<int>(number().numerator().to_long());
          mono[v] += e;
        }
        want_factor = eat('*');
      }
      ParamPoly t;
      t.set_term(mono, coeff);
      total = total + t;
      first = false;
    }
    return total;
  }
};

}  // namespace

ParamPoly ParamPoly::from_string(const std::string& s) {
  std::string trimmed = s;
  Parser p(trimmed);
  p.skip();
  if (p.i < s.size() && s[p.i] == '0' && p.i + 1 == s.size()) return ParamPoly();
  ParamPoly r = p.poly();
  p.skip();
  if (p.i != s.size()) p.fail("trailing input");
  return r;
}

ParamRational::ParamRational(ParamPoly num, ParamPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DomainError("rational function with zero denominator");
  reduce();
}

void ParamRational::reduce() {
  if (num_.is_zero()) {
    den_ = ParamPoly(1);
    return;
  }
  if (!den_.is_constant()) {
    const ParamPoly g = ParamPoly::gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = num_.divexact(g);
      den_ = den_.divexact(g);
    }
  }
  // canonical scaling: denominator integer-primitive, positive leading
  const ParamPoly scaled = den_.primitive_scaled();
  const Rational factor =
      den_.leading_coefficient() / scaled.leading_coefficient();
  den_ = scaled;
  num_ = factor.inverse() * num_;
}

ParamRational operator+(const ParamRational& a, const ParamRational& b) {
  if (a.is_polynomial() && b.is_polynomial()) {
    ParamRational r;
    r.num_ = a.num_ + b.num_;
    return r;
  }
  return ParamRational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

ParamRational operator-(const ParamRational& a, const ParamRational& b) {
  return a + (-b);
}

ParamRational ParamRational::operator-() const {
  ParamRational r = *this;
  r.num_ = -r.num_;
  return r;
}

ParamRational operator*(const ParamRational& a, const ParamRational& b) {
  if (a.is_polynomial() && b.is_polynomial()) {
    ParamRational r;
    r.num_ = a.num_ * b.num_;
    return r;
  }
  return ParamRational(a.num_ * b.num_, a.den_ * b.den_);
}

ParamRational operator/(const ParamRational& a, const ParamRational& b) {
  if (b.is_zero()) throw DomainError("rational function division by zero");
  return ParamRational(a.num_ * b.den_, a.den_ * b.num_);
}

Rational ParamRational::evaluate(const Rational& gamma, const Rational& zeta,
                                 const Rational& eta) const {
  const Rational d = den_.evaluate(gamma, zeta, eta);
  if (d.is_zero()) throw DomainError("rational function pole at evaluation point");
  return num_.evaluate(gamma, zeta, eta) / d;
}

std::string ParamRational::to_string() const {
  if (is_polynomial() && den_ == ParamPoly(1)) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

ParamRational ParamRational::from_string(const std::string& s) {
  const auto split = s.find(")/(");
  if (s.size() > 1 && s.front() == '(' && split != std::string::npos &&
      s.back() == ')') {
    const std::string num = s.substr(1, split - 1);
    const std::string den = s.substr(split + 3, s.size() - split - 4);
    return ParamRational(ParamPoly::from_string(num),
                         ParamPoly::from_string(den));
  }
  return ParamRational(ParamPoly::from_string(s));
}

std::ostream& operator<<(std::ostream& os, const ParamPoly& p) {
  return os << p.to_string();
}

std::ostream& operator<<(std::ostream& os, const ParamRational& r) {
  return os << r.to_string();
}

}  // namespace mapcount

#include "mapcount/conjectures/checks.hpp"

#include <chrono>
#include <future>
#include <sstream>

#include "json.hpp"
#include "mapcount/combinatorics.hpp"
#include "mapcount/errors.hpp"
#include "mapcount/hypergeometric.hpp"

namespace mapcount::conj {

namespace {

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

}  // namespace

VerificationReport conjecture1_check(int l_max, int g_max, int j_max) {
  if (l_max < 0 || g_max < 1 || j_max < 1)
    throw DomainError("conjecture1_check needs l_max >= 0, g_max, j_max >= 1");
  const auto t0 = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.name = "conjecture1";
  rep.ranges = "l<=" + std::to_string(l_max) + ", g<=" + std::to_string(g_max) +
               ", j<=" + std::to_string(j_max);

  struct Slice {
    std::uint64_t cases = 0, passed = 0;
    std::optional<std::string> first_failure;
  };
  const auto run_g = [&](int g) {
    Slice s;
    for (int l = 0; l <= l_max; ++l) {
      for (int j = 1; j <= j_max; ++j) {
        ++s.cases;
        std::optional<std::string> bad;
        try {
          const Rational lhs =
              Rational(Integer::factorial(j)) * Rational(2).pow(l + 2 * g - 1) *
              Rational(binomial(2 * g - 2 + l + j, j)) *
              hypergeom_2f1_terminating(-j, Rational(-2L * j),
                                        Rational(2 - 2 * g - (l + j)),
                                        Rational(-1));
          Rational rhs(0);
          for (int k = 1; k <= l + 2 * g; ++k) {
            Rational prod(1);
            for (int m = 0; m <= j - 1; ++m) prod *= Rational(2L * (2 * m + k));
            rhs += Rational(binomial(l + 2 * g - 1, k - 1)) * prod;
          }
          if (!(lhs == rhs))
            bad = "lhs=" + lhs.to_string() + " rhs=" + rhs.to_string();
        } catch (const DomainError& e) {
          bad = std::string("hypergeometric domain error: ") + e.what();
        }
        if (!bad) {
          ++s.passed;
        } else if (!s.first_failure) {
          s.first_failure = "g=" + std::to_string(g) + " l=" +
                            std::to_string(l) + " j=" + std::to_string(j) +
                            ": " + *bad;
        }
      }
    }
    return s;
  };

  // the grid is embarrassingly parallel across g; merge in g order
  std::vector<std::future<Slice>> parts;
  parts.reserve(g_max);
  for (int g = 1; g <= g_max; ++g)
    parts.push_back(std::async(std::launch::async, run_g, g));
  for (auto& fut : parts) {
    const Slice s = fut.get();
    rep.cases += s.cases;
    rep.passed += s.passed;
    if (!rep.first_failure && s.first_failure) rep.first_failure = s.first_failure;
  }
  rep.wall_ms = elapsed_ms(t0);
  return rep;
}

std::vector<Rational> cg_values(int g_max) {
  if (g_max < 2) throw DomainError("cg_values needs g_max >= 2");
  std::vector<Rational> c(g_max + 1, Rational(0));
  c[2] = Rational(1, 240);
  for (int g = 3; g <= g_max; ++g) {
    Rational sum(0);
    for (int k = 2; k <= g - 1; ++k) {
      // falling factorial (2-2k)(1-2k)...(2-2k - (2g-2k+1))
      const Rational fall = falling_factorial(Rational(2 - 2 * k), 2 * g - 2 * k + 2);
      sum += fall / Rational(Integer::factorial(2 * g - 2 * k + 2)) * c[k];
    }
    Rational rhs = Rational(1) / Rational(Integer::factorial(2 * g + 2)) -
                   Rational(1) / (Rational(Integer::factorial(2 * g)) * Rational(12)) +
                   sum / Rational(Integer::factorial(2 * g - 1));
    c[g] = Rational(-2) * Rational(Integer::factorial(2 * g - 3)) * rhs;
  }
  return std::vector<Rational>(c.begin() + 2, c.end());
}

VerificationReport cg_bernoulli_check(int g_max) {
  if (g_max < 2) throw DomainError("cg_bernoulli_check needs g_max >= 2");
  const auto t0 = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.name = "bernoulli";
  rep.ranges = "2<=g<=" + std::to_string(g_max);
  const auto c = cg_values(g_max);
  const auto b = bernoulli_numbers(2 * g_max);
  for (int g = 2; g <= g_max; ++g) {
    ++rep.cases;
    const Rational lhs = -c[g - 2];
    const Rational rhs = b[2 * g] / Rational(4L * g * (g - 1));
    if (lhs == rhs) {
      ++rep.passed;
    } else if (!rep.first_failure) {
      rep.first_failure = "g=" + std::to_string(g) + ": -C=" + lhs.to_string() +
                          " vs B_2g/(4g(g-1))=" + rhs.to_string();
    }
  }
  rep.wall_ms = elapsed_ms(t0);
  return rep;
}

VerificationReport interlacing_check(const std::vector<Polynomial>& polys) {
  const auto t0 = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.name = "interlacing";
  rep.ranges = std::to_string(polys.size()) + " polynomials";
  if (polys.size() <= 1) {  // nothing to interlace
    rep.wall_ms = elapsed_ms(t0);
    return rep;
  }
  for (size_t i = 0; i + 1 < polys.size(); ++i)
    if (polys[i + 1].degree() != polys[i].degree() + 1)
      throw DomainError("consecutive polynomials must differ in degree by 1");

  // realness and simplicity of every polynomial
  std::vector<std::vector<RootInterval>> roots;
  for (size_t i = 0; i < polys.size(); ++i) {
    ++rep.cases;
    const Polynomial& p = polys[i];
    if (!p.is_squarefree()) {
      if (!rep.first_failure)
        rep.first_failure = "polynomial " + std::to_string(i) + " has repeated zeros";
      roots.emplace_back();
      continue;
    }
    if (count_real_roots(p) != p.degree()) {
      if (!rep.first_failure)
        rep.first_failure = "polynomial " + std::to_string(i) + " has non-real zeros";
      roots.emplace_back();
      continue;
    }
    ++rep.passed;
    roots.push_back(isolate_real_roots(p, Rational(1, 1024)));
  }
  if (rep.first_failure) {
    rep.wall_ms = elapsed_ms(t0);
    return rep;
  }

  // strict interlacing of consecutive root sets: refine until the isolating
  // intervals of the pair are pairwise disjoint, then check alternation
  for (size_t i = 0; i + 1 < polys.size(); ++i) {
    ++rep.cases;
    auto a = roots[i];        // degree d
    auto b = roots[i + 1];    // degree d+1
    const Polynomial& pa = polys[i];
    const Polynomial& pb = polys[i + 1];
    const auto disjoint = [&]() {
      for (const auto& ia : a)
        for (const auto& ib : b)
          if (!(ia.hi < ib.lo || ib.hi < ia.lo)) return false;
      return true;
    };
    const auto refine_all = [](const Polynomial& p, std::vector<RootInterval>& v) {
      for (auto& iv : v) {
        const Rational mid = (iv.lo + iv.hi) / Rational(2);
        const int change = sturm_count(p, iv.lo, mid);
        if (change == 1)
          iv.hi = mid;
        else
          iv.lo = mid;
      }
    };
    bool ok = true;
    int rounds = 0;
    while (!disjoint()) {
      refine_all(pa, a);
      refine_all(pb, b);
      if (++rounds > 20000) {  // cannot happen for simple disjoint roots
        ok = false;
        break;
      }
    }
    if (ok) {
      // merged order must alternate b a b a ... b
      size_t ia = 0, ib = 0;
      bool expect_b = true;
      while (ok && (ia < a.size() || ib < b.size())) {
        const bool take_b =
            ib < b.size() && (ia == a.size() || b[ib].hi < a[ia].lo);
        if (take_b != expect_b) ok = false;
        if (take_b) ++ib;
        else ++ia;
        expect_b = !expect_b;
      }
    }
    if (ok) {
      ++rep.passed;
    } else if (!rep.first_failure) {
      rep.first_failure =
          "pair (" + std::to_string(i) + ", " + std::to_string(i + 1) + ") does not interlace";
    }
  }
  rep.wall_ms = elapsed_ms(t0);
  return rep;
}

std::vector<Polynomial> polynomials_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("polynomial file is not valid JSON: ") + e.what());
  }
  std::vector<Polynomial> out;
  try {
    for (const auto& arr : j) {
      std::vector<Rational> coeffs;
      for (const auto& s : arr) coeffs.emplace_back(s.get<std::string>());
      out.emplace_back(std::move(coeffs));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed polynomial file: ") + e.what());
  }
  return out;
}

}  // namespace mapcount::conj

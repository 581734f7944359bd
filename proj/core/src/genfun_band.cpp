#include "mapcount/genfun/band.hpp"

#include <chrono>
#include <sstream>

#include "mapcount/combinatorics.hpp"
#include "mapcount/errors.hpp"

namespace mapcount::genfun {

namespace {

constexpr long kC2 = 12;

int band_offset(int g, int j) { return j - 2 * g + 2; }

using Matrix = std::vector<std::vector<Rational>>;

Matrix multiply(const Matrix& a, const Matrix& b) {
  const size_t n = a.size();
  Matrix r(n, std::vector<Rational>(n, Rational(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k) {
      if (a[i][k].is_zero()) continue;
      for (size_t l = 0; l < n; ++l) r[i][l] += a[i][k] * b[k][l];
    }
  return r;
}

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

}  // namespace

void BandVector::validate() const {
  if (g < 2 || j < 1) throw DomainError("BandVector needs g >= 2, j >= 1");
  if (static_cast<int>(entries.size()) != length())
    throw DomainError("BandVector length must be 5g - 5");
}

Rational BandVector::sum() const {
  Rational s(0);
  for (const auto& e : entries) s += e;
  return s;
}

std::vector<std::vector<Rational>> band_matrix(int j, int g) {
  if (g < 2 || j < 1) throw DomainError("band_matrix needs g >= 2, j >= 1");
  const int n = 5 * g - 5;
  Matrix a(n, std::vector<Rational>(n, Rational(0)));
  for (int k = 1; k <= n; ++k) {
    a[k - 1][k - 1] = Rational(2L * (2 * j + k));
    if (k < n) a[k - 1][k] = Rational(-static_cast<long>(k));
  }
  return a;
}

BandVector band_reduce(const QVector& q) {
  q.validate();
  if (q.nu != 2) throw DomainError("the band reduction is specific to nu = 2");
  const int offset = band_offset(q.g, q.j);
  BandVector out;
  out.g = q.g;
  out.j = q.j;
  out.entries.assign(static_cast<size_t>(out.length()), Rational(0));
  const Rational scale = Rational(kC2).pow(q.j);
  for (int l = 0; l < static_cast<int>(q.entries.size()); ++l) {
    if (q.entries[l].is_zero()) continue;
    const int k = l - offset + 1;  // band slot, 1-based
    if (k < 1 || k > out.length()) {
      std::ostringstream os;
      os << "support escapes the 5g-5 band: nonzero q_" << l
         << " outside window [" << offset << ", " << offset + out.length() - 1
         << "] at j = " << q.j;
      throw DomainError(os.str());
    }
    out.entries[k - 1] = scale * q.entries[l];
  }
  return out;
}

BandVector band_step(const BandVector& v) {
  v.validate();
  const int n = v.length();
  BandVector out;
  out.g = v.g;
  out.j = v.j + 1;
  out.entries.assign(static_cast<size_t>(n), Rational(0));
  for (int k = 1; k <= n; ++k) {
    Rational s = Rational(2L * (2 * v.j + k)) * v.entries[k - 1];
    if (k < n) s -= Rational(static_cast<long>(k)) * v.entries[k];
    out.entries[k - 1] = Rational(kC2) * s;
  }
  return out;
}

std::vector<Rational> r_vector(int j, int g) {
  if (g < 2 || j < 1) throw DomainError("r_vector needs g >= 2, j >= 1");
  const int len = 5 * g - 5;
  std::vector<Rational> r;
  r.reserve(len);
  for (int n = 1; n <= len; ++n) {
    Rational s(0);
    for (int k = 1; k <= n; ++k) {
      Rational prod(1);
      for (int l = 1; l <= j - 1; ++l) prod *= Rational(2L * (2 * l + k));
      s += Rational(binomial(n - 1, k - 1)) * prod;
    }
    r.push_back(s / Rational(2).pow(n - 1));
  }
  return r;
}

Rational count_contraction(const BandVector& seed, int j) {
  seed.validate();
  if (seed.j != 1) throw DomainError("count_contraction needs the j = 1 seed");
  if (j < 1) throw DomainError("count_contraction needs j >= 1");
  const std::vector<Rational> r = r_vector(j, seed.g);
  Rational dot(0);
  for (size_t i = 0; i < r.size(); ++i) dot += r[i] * seed.entries[i];
  return Rational(kC2).pow(j - 1) * dot;
}

std::vector<Rational> band_product_column_sums(int j, int g) {
  const int n = 5 * g - 5;
  Matrix m(n, std::vector<Rational>(n, Rational(0)));
  for (int i = 0; i < n; ++i) m[i][i] = Rational(1);
  for (int k = 1; k <= j - 1; ++k) m = multiply(m, band_matrix(k, g));
  std::vector<Rational> sums(n, Rational(0));
  for (int col = 0; col < n; ++col)
    for (int row = 0; row < n; ++row) sums[col] += m[row][col];
  return sums;
}

VerificationReport verify_commutation(int g_min, int g_max, int max_index) {
  const auto t0 = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.name = "commutation";
  rep.ranges = "g=" + std::to_string(g_min) + ".." + std::to_string(g_max) +
               ", m,n<=" + std::to_string(max_index);
  for (int g = g_min; g <= g_max; ++g) {
    for (int m = 1; m <= max_index; ++m) {
      for (int n = m + 1; n <= max_index; ++n) {
        ++rep.cases;
        const Matrix am = band_matrix(m, g), an = band_matrix(n, g);
        if (multiply(am, an) == multiply(an, am)) {
          ++rep.passed;
        } else if (!rep.first_failure) {
          rep.first_failure = "g=" + std::to_string(g) + " m=" +
                              std::to_string(m) + " n=" + std::to_string(n);
        }
      }
    }
  }
  rep.wall_ms = elapsed_ms(t0);
  return rep;
}

VerificationReport verify_r_vector(int g_min, int g_max, int max_j) {
  const auto t0 = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.name = "r-vector";
  rep.ranges = "g=" + std::to_string(g_min) + ".." + std::to_string(g_max) +
               ", j<=" + std::to_string(max_j);
  for (int g = g_min; g <= g_max; ++g) {
    for (int j = 1; j <= max_j; ++j) {
      ++rep.cases;
      if (r_vector(j, g) == band_product_column_sums(j, g)) {
        ++rep.passed;
      } else if (!rep.first_failure) {
        rep.first_failure = "g=" + std::to_string(g) + " j=" + std::to_string(j);
      }
    }
  }
  rep.wall_ms = elapsed_ms(t0);
  return rep;
}

}  // namespace mapcount::genfun

#include "mapcount/genfun/counts.hpp"

#include <chrono>
#include <random>

#include "mapcount/combinatorics.hpp"
#include "mapcount/errors.hpp"
#include "mapcount/genfun/band.hpp"
#include "mapcount/genfun/string_equation.hpp"
#include "mapcount/hypergeometric.hpp"

namespace mapcount::genfun {

Rational hypergeom_count(const GeneratingFunctionData& data, int j) {
  data.validate();
  if (j < 1) throw DomainError("hypergeom_count needs j >= 1");
  const int g = data.g, nu = data.nu;
  const Rational z(Rational(1) / Rational(1 - nu));
  Rational sum(0);
  for (int l = 0; l < static_cast<int>(data.q0.size()); ++l) {
    if (data.q0[l].is_zero()) continue;
    const Rational f = hypergeom_2f1_terminating(
        -j, Rational(1 - static_cast<long>(nu) * j),
        Rational(4 - 2 * g - (l + j)), z);
    sum += data.q0[l] * Rational(binomial(2 * g - 4 + l + j, j)) * f;
  }
  return Rational(Integer::factorial(j)) * c_nu(nu).pow(j) *
         Rational(nu - 1).pow(j) * sum;
}

Rational recurrence_count(const GeneratingFunctionData& data, int j) {
  if (j < 1) throw DomainError("recurrence_count needs j >= 1");
  QVector q = q1_from_data(data);
  for (int jj = 2; jj <= j; ++jj) q = q_step(q);
  return count_from_q(q);
}

Rational band_count(const GeneratingFunctionData& data, int j) {
  data.validate();
  if (data.nu != 2) throw DomainError("band_count is specific to nu = 2");
  BandVector seed;
  if (!data.v1_band.empty()) {
    seed.g = data.g;
    seed.j = 1;
    seed.entries = data.v1_band;
  } else {
    seed = band_reduce(q1_from_data(data));
  }
  return count_contraction(seed, j);
}

Rational closed_form_g5(int j) {
  if (j < 1) throw DomainError("closed_form_g5 needs j >= 1");
  Rational prod(1);
  for (int k = 1; k <= 7; ++k) prod *= Rational(j - k);
  if (prod.is_zero()) return Rational(0);
  const Rational jq(j);
  const Rational a = Rational(4).pow(j - 1) * Rational(Integer::factorial(j)) *
                     (Rational(38213, 1146617856) * jq * jq +
                      Rational(915313, 2293235712) * jq -
                      Rational(1940327, 53508833280));
  const Rational b =
      Rational(Integer::factorial(2 * j), Integer::factorial(j)) *
      (Rational(211033, 2319969600) * jq * jq +
       Rational(8139013, 71455063680) * jq + Rational(1, 887040));
  return Rational(12).pow(j - 1) * prod * (a - b);
}

VerificationReport verify_route_equivalence(int g_min, int g_max, int j_max,
                                            int seeds_per_g,
                                            std::uint64_t rng_seed) {
  const auto t0 = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.name = "route-equivalence";
  rep.ranges = "g=" + std::to_string(g_min) + ".." + std::to_string(g_max) +
               ", j<=" + std::to_string(j_max) + ", " +
               std::to_string(seeds_per_g) + " seeds/g";
  std::mt19937_64 rng(rng_seed);
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 9);
  for (int g = g_min; g <= g_max; ++g) {
    for (int s = 0; s < seeds_per_g; ++s) {
      GeneratingFunctionData data;
      data.g = g;
      data.nu = 2;
      data.C = Rational(0);
      for (int l = 0; l < 3 * g - 2; ++l)
        data.q0.emplace_back(num(rng), den(rng));
      for (int j = 1; j <= j_max; ++j) {
        ++rep.cases;
        const Rational a = hypergeom_count(data, j);
        const Rational b = recurrence_count(data, j);
        const Rational c = band_count(data, j);
        if (a == b && b == c) {
          ++rep.passed;
        } else if (!rep.first_failure) {
          rep.first_failure = "g=" + std::to_string(g) + " seed=" +
                              std::to_string(s) + " j=" + std::to_string(j) +
                              " hyper=" + a.to_string() + " rec=" +
                              b.to_string() + " band=" + c.to_string();
        }
      }
    }
  }
  rep.wall_ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
  return rep;
}

}  // namespace mapcount::genfun

#pragma once

#include <cstdint>
#include <vector>

#include "mapcount/genfun/eg.hpp"
#include "mapcount/rational.hpp"
#include "mapcount/verification.hpp"

namespace mapcount::genfun {

/// Closed-form count via the terminating Gauss hypergeometric sum:
///   N_{2nu,e}(g,j) = j! c_nu^j (nu-1)^j sum_l q0[l] binom((2g-4)+(l+j), j)
///                    2F1(-j, 1 - nu j; 4 - 2g - (l+j); 1/(1-nu)).
Rational hypergeom_count(const GeneratingFunctionData& data, int j);

/// Count via j-fold application of the q-recurrence from q^(1).
Rational recurrence_count(const GeneratingFunctionData& data, int j);

/// Count via the 4-valent band contraction (needs nu = 2); uses the band
/// seed when present, otherwise reduces q^(1).
Rational band_count(const GeneratingFunctionData& data, int j);

/// The explicit genus-5 4-valent count N_{4,e}(5, j): vanishing product for
/// j <= 7 and closed polynomial-factorial form beyond.
Rational closed_form_g5(int j);

/// Exact three-route agreement (hypergeometric / q-recurrence / band
/// contraction) on pseudorandom rational seeds.
VerificationReport verify_route_equivalence(int g_min, int g_max, int j_max,
                                            int seeds_per_g,
                                            std::uint64_t rng_seed = 20240803);

}  // namespace mapcount::genfun

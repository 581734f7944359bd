#pragma once

#include <vector>

#include "mapcount/rational.hpp"

namespace mapcount::genfun {

/// The partial-fraction coefficient vector q^(j): entries q_0 .. q_{3g-4+j};
/// entries beyond the stored range are implicitly zero.
struct QVector {
  int g = 2;
  int j = 1;
  int nu = 2;
  std::vector<Rational> entries;

  int expected_length() const { return 3 * g - 3 + j; }
  void validate() const;
  Rational sum() const;
};

/// One application of the two-step coefficient recurrence:
///   q_l^(j) = beta_{j,l} q_{l-1}^(j-1) - alpha_{j,l} q_l^(j-1),
///   beta_{j,l} = nu (2g + l + j - 3),
///   alpha_{j,l} = 2g + l - 2 - (nu-1)(j-1),  q_{-1} = 0.
/// Input holds q^(j-1); output holds q^(j).  Throws DomainError on a
/// dimension mismatch.
QVector q_step(const QVector& q_prev);

/// c_nu^j * sum_l q_l^(j)  (the map count once q^(j) is the true vector).
Rational count_from_q(const QVector& q);

}  // namespace mapcount::genfun

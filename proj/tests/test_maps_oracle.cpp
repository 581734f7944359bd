#include "doctest.h"
#include "mapcount/errors.hpp"
#include "mapcount/maps/enumerate.hpp"
#include "mapcount/maps/rotation_map.hpp"

using namespace mapcount;
using namespace mapcount::maps;

TEST_CASE("genus of single-vertex 4-valent maps") {
  // pairing {0<->2, 1<->3}: one face, genus 1 (the torus map)
  RotationMap torus{{4}, {2, 3, 0, 1}};
  CHECK(genus_of_map(torus) == 1);
  // pairing {0<->1, 2<->3}: planar
  RotationMap sphere{{4}, {1, 0, 3, 2}};
  CHECK(genus_of_map(sphere) == 0);
  // and the third pairing {0<->3, 1<->2} is planar as well
  RotationMap sphere2{{4}, {3, 2, 1, 0}};
  CHECK(genus_of_map(sphere2) == 0);
}

TEST_CASE("two 2-valent vertices joined by a doubled edge are planar") {
  RotationMap m{{2, 2}, {2, 3, 0, 1}};
  CHECK(m.is_connected());
  CHECK(genus_of_map(m) == 0);
}

TEST_CASE("invalid pairings are rejected") {
  CHECK_THROWS_AS(genus_of_map(RotationMap{{4}, {1, 0, 2, 3}}), DomainError);
  CHECK_THROWS_AS(genus_of_map(RotationMap{{3}, {1, 0, 2}}), DomainError);
  CHECK_THROWS_AS(genus_of_map(RotationMap{{4}, {1, 0, 3}}), DomainError);
}

TEST_CASE("one 4-valent vertex: histogram {g0: 2, g1: 1}") {
  const auto h = enumerate_matchings_by_genus({4});
  CHECK(h.at(0) == 2);
  CHECK(h.at(1) == 1);
  CHECK(h.total == 3);

  EnumerationOptions all;
  all.connected_only = false;
  const auto hu = enumerate_matchings_by_genus({4}, all);
  CHECK(hu.total == 3);  // 3!! involutions on 4 darts
}

TEST_CASE("unrestricted totals are (D-1)!!") {
  EnumerationOptions all;
  all.connected_only = false;
  CHECK(enumerate_matchings_by_genus({3, 3}, all).total == 15);
  CHECK(enumerate_matchings_by_genus({4, 4}, all).total == 105);
  CHECK(enumerate_matchings_by_genus({3, 3, 3, 3}, all).total == 10395);
  std::uint64_t sum = 0;
  for (const auto& [g, n] : enumerate_matchings_by_genus({4, 4}, all).counts)
    sum += n;
  CHECK(sum == 105);
}

TEST_CASE("connected trivalent histograms") {
  const auto h2 = enumerate_matchings_by_genus({3, 3});
  CHECK(h2.at(0) == 12);
  CHECK(h2.at(1) == 3);
  CHECK(h2.total == 15);

  const auto h4 = enumerate_matchings_by_genus({3, 3, 3, 3});
  CHECK(h4.at(0) == 5184);
  CHECK(h4.at(1) == 4536);
  CHECK(h4.total == 5184 + 4536);
}

TEST_CASE("euler bound holds on connected 4-valent enumerations") {
  for (int j = 1; j <= 3; ++j) {
    const auto h = enumerate_matchings_by_genus(std::vector<int>(j, 4));
    for (const auto& [g, n] : h.counts) {
      CHECK(g >= 0);
      CHECK(j >= min_vertices(g, 2));
    }
  }
}

TEST_CASE("deterministic across thread counts") {
  EnumerationOptions serial;
  serial.threads = 1;
  EnumerationOptions wide;
  wide.threads = 8;
  const auto a = enumerate_matchings_by_genus({4, 4, 4}, serial);
  const auto b = enumerate_matchings_by_genus({4, 4, 4}, wide);
  CHECK(a.counts == b.counts);
  CHECK(a.total == b.total);
}

TEST_CASE("enumeration cap refuses oversized inputs") {
  EnumerationOptions opt;
  opt.max_darts = 12;
  CHECK_THROWS_AS(enumerate_matchings_by_genus({4, 4, 4, 4}, opt),
                  CapExceededError);
}

TEST_CASE("labeled to unlabeled and the vertex bound") {
  CHECK(labeled_to_unlabeled(Rational(2), 1, 2) == Rational(1, 2));
  CHECK(labeled_to_unlabeled(Rational(0), 3, 2) == Rational(0));
  CHECK(labeled_to_unlabeled(Rational(105), 2, 2) == Rational(105, 128));

  CHECK(min_vertices(5, 2) == 9);
  CHECK(min_vertices(0, 2) == 1);
  CHECK(min_vertices(2, 3) == 2);
  CHECK(min_vertices(1, 2) == 1);
}

TEST_CASE("histogram export") {
  const auto h = enumerate_matchings_by_genus({4});
  const std::string csv = h.to_csv();
  CHECK(csv.find("genus,labeled_count,unlabeled_count") != std::string::npos);
  CHECK(csv.find("0,2,1/2") != std::string::npos);
  CHECK(csv.find("1,1,1/4") != std::string::npos);
  const std::string js = h.to_json();
  CHECK(js.find("\"total\": 3") != std::string::npos);
}

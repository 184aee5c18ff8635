#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "hbn/strata.hpp"

using namespace hbn;

TEST_CASE("enumeration at g=3,k=2,d=2") {
  CurveParams p{3, 2, 2};
  auto t = enumerate_types(p, p.g);
  REQUIRE(t.types.size() == 3);
  CHECK(t.types[0].entries() == std::vector<Int>({-3, 1}));
  CHECK(t.types[1].entries() == std::vector<Int>({-2, 0}));
  CHECK(t.types[2].entries() == std::vector<Int>({-1, -1}));
}

TEST_CASE("enumeration contains the g=50 component types") {
  CurveParams p{50, 6, 45};
  auto t = enumerate_types(p, p.g);
  auto find = [&](std::vector<Int> v) -> std::optional<size_t> {
    for (size_t i = 0; i < t.types.size(); ++i)
      if (t.types[i].entries() == v) return i;
    return std::nullopt;
  };
  auto a = find({-4, -3, -3, -3, 1, 2});
  auto b = find({-4, -4, -4, 0, 1, 1});
  REQUIRE(a);
  REQUIRE(b);
  CHECK(t.dims[*a] == 20);
  CHECK(t.dims[*b] == 17);
}

TEST_CASE("u_max=0 gives exactly the balanced type") {
  for (Int d = 4; d <= 9; ++d) {
    auto t = enumerate_types({9, 4, d}, 0);
    REQUIRE(t.types.size() == 1);
    CHECK(u_invariant(t.types[0]) == 0);
  }
}

TEST_CASE("enumeration is exhaustive, sorted, duplicate-free") {
  CurveParams p{8, 4, 7};
  auto t = enumerate_types(p, p.g);
  CHECK(std::is_sorted(t.types.begin(), t.types.end()));
  CHECK(std::adjacent_find(t.types.begin(), t.types.end()) == t.types.end());
  for (size_t i = 0; i < t.types.size(); ++i) {
    CHECK(t.u[i] <= p.g);
    CHECK(t.dims[i].has_value());
    Int s = 0;
    for (Int x : t.types[i].entries()) s += x;
    CHECK(s == p.target_sum());
  }
  // brute-force cross-check within a generous window
  size_t count = 0;
  Int S = p.target_sum();
  for (Int a = S - 20; a <= S + 20; ++a)
    for (Int b = a; b <= a + 20; ++b)
      for (Int c = b; c <= b + 20; ++c) {
        Int e4 = S - a - b - c;
        if (e4 < c) continue;
        std::vector<Int> v{a, b, c, e4};
        Int u = 0;
        for (int i = 0; i < 4; ++i)
          for (int j = i + 1; j < 4; ++j) u += std::max<Int>(0, v[j] - v[i] - 1);
        if (u <= p.g) ++count;
      }
  CHECK(count == t.types.size());
}

TEST_CASE("threaded enumeration matches serial") {
  CurveParams p{10, 5, 9};
  auto serial = enumerate_types(p, p.g, 1);
  auto par = enumerate_types(p, p.g, 4);
  CHECK(serial.types == par.types);
  CHECK(serial.u == par.u);
}

TEST_CASE("in_closure frozen values") {
  CurveParams pl{50, 6, 45};
  CHECK(in_closure(make_sequence({-4, -4, -4, -1, 1, 2}, pl),
                   make_sequence({-4, -3, -3, -3, 1, 2}, pl)));
  auto e = make_sequence({-4, -3, -3, -3, 1, 2}, pl);
  CHECK(in_closure(e, e));
  CurveParams p3{4, 3, 1};  // sum -5
  CHECK_FALSE(in_closure(make_sequence({-3, -3, 1}, p3), make_sequence({-4, -2, 1}, p3)));
}

TEST_CASE("hasse diagram: chain at g=3,k=2,d=2") {
  auto t = enumerate_types({3, 2, 2}, 3);
  auto h = hasse_diagram(t);
  REQUIRE(h.node_count == 3);
  REQUIRE(h.edges.size() == 2);
  // (-3,1) < (-2,0) < (-1,-1) with indices 0 < 1 < 2
  CHECK(h.edges[0].lower == 0);
  CHECK(h.edges[0].upper == 1);
  CHECK(h.edges[1].lower == 1);
  CHECK(h.edges[1].upper == 2);
}

TEST_CASE("hasse reachability equals dominance") {
  CurveParams p{8, 4, 7};
  auto t = enumerate_types(p, p.g);
  auto h = hasse_diagram(t);
  size_t n = t.types.size();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n));
  for (size_t i = 0; i < n; ++i) reach[i][i] = true;
  // edges go lower -> upper; propagate downward reachability from each node
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& e : h.edges)
      for (size_t s = 0; s < n; ++s)
        if (reach[s][e.upper] && !reach[s][e.lower]) {
          reach[s][e.lower] = true;
          changed = true;
        }
  }
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b)
      CHECK(reach[b][a] == dominates(t.types[a], t.types[b]));
}

TEST_CASE("specializations and the down-set property") {
  CurveParams p{3, 2, 2};
  auto balanced = make_sequence({-1, -1}, p);
  auto sp = specializations(balanced, 3);
  REQUIRE(sp.size() == 3);
  CHECK(sp[0].entries() == std::vector<Int>({-3, 1}));
  CHECK(sp[1].entries() == std::vector<Int>({-2, 0}));
  CHECK(sp[2].entries() == std::vector<Int>({-1, -1}));
  CHECK(specializations(balanced, 0) == std::vector<SplittingSequence>{balanced});

  CurveParams p4{8, 4, 7};
  auto t = enumerate_types(p4, p4.g);
  for (const auto& e : t.types) {
    auto s = specializations(e, p4.g);
    // consistency with in_closure filtering
    std::vector<SplittingSequence> filt;
    for (const auto& q : t.types)
      if (in_closure(q, e)) filt.push_back(q);
    CHECK(s == filt);
    for (const auto& a : s)
      for (const auto& q : t.types)
        if (dominates(q, a)) CHECK(std::find(s.begin(), s.end(), q) != s.end());
  }
}

TEST_CASE("specializations of the g=50 example contain the smooth point") {
  CurveParams pl{50, 6, 45};
  auto e = make_sequence({-4, -3, -3, -3, 1, 2}, pl);
  auto sp = specializations(e, 50);
  auto w = make_sequence({-4, -4, -3, -2, 1, 2}, pl);
  CHECK(std::find(sp.begin(), sp.end(), w) != sp.end());
}

TEST_CASE("serializers are deterministic") {
  auto t = enumerate_types({8, 4, 7}, 8);
  auto h = hasse_diagram(t);
  CHECK(table_to_json(t) == table_to_json(t));
  CHECK(hasse_to_dot(t, h) == hasse_to_dot(t, h));
  CHECK(hasse_to_dot(t, h).rfind("digraph", 0) == 0);
}

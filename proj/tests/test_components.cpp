#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hbn/completion.hpp"
#include "hbn/components.hpp"
#include "hbn/strata.hpp"

using namespace hbn;

namespace {
const CurveParams PL{50, 6, 45};
}

TEST_CASE("balanced_plus_balanced frozen values") {
  auto b = balanced_plus_balanced(make_sequence({-4, -3, -3, -3, 1, 2}, PL));
  REQUIRE(b);
  CHECK(b->a == 1);
  CHECK(b->b == 3);
  CHECK(b->x == 1);
  CHECK(b->y == 3);
  CHECK(b->m1 == 1);
  CHECK(b->m2 == 1);

  auto b2 = balanced_plus_balanced(make_sequence({-2, -2, -1, -1, 0, 0}, {11, 6, 10}));
  REQUIRE(b2);
  CHECK(b2->a == 0);
  CHECK(b2->b == 1);
  CHECK(b2->x == 2);
  CHECK(b2->y == 2);
  CHECK(b2->m1 == 2);
  CHECK(b2->m2 == 0);

  CHECK_FALSE(balanced_plus_balanced(make_sequence({-4, -3, -1, -1, 1, 3}, {20, 6, 20})));
}

TEST_CASE("components_of_W frozen lists") {
  auto cs = components_of_W(PL, 4);
  const Component *a = nullptr, *b = nullptr;
  for (auto& c : cs) {
    if (c.sequence.entries() == std::vector<Int>({-4, -3, -3, -3, 1, 2})) a = &c;
    if (c.sequence.entries() == std::vector<Int>({-4, -4, -4, 0, 1, 1})) b = &c;
  }
  REQUIRE(a);
  REQUIRE(b);
  CHECK(a->dim == 20);
  CHECK(b->dim == 17);
  CHECK(a->cls == ComponentClass::III);
  CHECK(a->l == 3);
  CHECK(b->l == 2);

  for (Int k = 4; k <= 8; ++k) {
    CurveParams p{20, k, 19};
    auto one = components_of_W(p, 1);
    REQUIRE(one.size() == 1);
    std::vector<Int> want{-2, -2};
    for (Int i = 0; i < k - 4; ++i) want.push_back(-1);
    want.push_back(0);
    want.push_back(0);
    CHECK(one[0].sequence.entries() == want);
    CHECK(one[0].dim == p.g - 4);
    CHECK(one[0].dim == rho(p.g, 1, p.d));
    CHECK(one[0].cls == ComponentClass::I);
  }

  auto ex3 = components_of_W({12, 7, 10}, 2);
  bool found = false;
  for (auto& c : ex3)
    if (c.sequence.entries() == std::vector<Int>({-2, -2, -2, -2, 0, 0, 0})) {
      found = true;
      CHECK(c.dim == 0);
    }
  CHECK(found);
}

TEST_CASE("component invariants over a sweep") {
  for (Int k = 3; k <= 5; ++k)
    for (Int g = 6; g <= 10; ++g)
      for (Int d = g - 2; d <= g + 1; ++d)
        for (Int r = 0; r <= 2; ++r) {
          CurveParams p{g, k, d};
          auto cs = components_of_W(p, r);
          for (const auto& c : cs) {
            auto bt = balanced_plus_balanced(c.sequence);
            REQUIRE(bt);
            CHECK(*bt == c.btype);
            CHECK(c.btype.m1 * (c.btype.a + 1) + c.btype.m2 * (c.btype.a + 2) == r + 1);
            CHECK(u_invariant(c.sequence) <= g);
            CHECK((c.btype.b >= 2 ||
                   (c.btype.a == 0 && c.btype.b == 1 && c.btype.m2 == 0)));
            if (c.cls == ComponentClass::I) CHECK(c.dim == rho(g, r, d));
            if (c.btype.b >= 2) CHECK(h0(c.sequence, 1) == 2 * r + 2 - c.l);
          }
          // pairwise incomparability
          for (size_t i = 0; i < cs.size(); ++i)
            for (size_t j = 0; j < cs.size(); ++j)
              if (i != j) CHECK_FALSE(dominates(cs[i].sequence, cs[j].sequence));
        }
}

TEST_CASE("components_containing") {
  auto p = make_sequence({-4, -4, -4, -1, 1, 2}, PL);
  auto both = components_containing(p, 4);
  REQUIRE(both.size() == 2);
  CHECK(both[0].sequence.entries() == std::vector<Int>({-4, -4, -4, 0, 1, 1}));
  CHECK(both[1].sequence.entries() == std::vector<Int>({-4, -3, -3, -3, 1, 2}));

  auto own = components_containing(both[1].sequence, 4);
  bool self = false;
  for (auto& c : own)
    if (c.sequence == both[1].sequence) self = true;
  CHECK(self);
}

TEST_CASE("v_parameters") {
  auto cs = components_of_W(PL, 4);
  for (auto& c : cs) {
    auto vp = v_parameters(c);
    CHECK(vp.r == 4);
    CHECK(vp.d == 45);
    CHECK(vp.l == c.btype.a * c.btype.m1 + (c.btype.a + 1) * c.btype.m2);
    if (c.sequence.entries() == std::vector<Int>({-4, -3, -3, -3, 1, 2})) CHECK(vp.l == 3);
    if (c.sequence.entries() == std::vector<Int>({-4, -4, -4, 0, 1, 1})) CHECK(vp.l == 2);
  }
  auto theta = components_of_W({11, 6, 10}, 1);
  REQUIRE(theta.size() == 1);
  CHECK(v_parameters(theta[0]).l == 0);
}

TEST_CASE("in_V frozen values and equivalence") {
  auto cs = components_of_W(PL, 4);
  const Component* z = nullptr;
  for (auto& c : cs)
    if (c.sequence.entries() == std::vector<Int>({-4, -3, -3, -3, 1, 2})) z = &c;
  REQUIRE(z);
  CHECK(in_V(make_sequence({-4, -4, -3, -2, 1, 2}, PL), *z));
  CHECK(in_V(z->sequence, *z));
  CHECK_FALSE(in_V(make_sequence({-4, -4, -4, 0, 1, 1}, PL), *z));

  CurveParams p{9, 4, 8};
  auto table = enumerate_types(p, p.g);
  for (Int r = 0; r <= 2; ++r)
    for (const auto& c : components_of_W(p, r))
      for (const auto& q : table.types)
        CHECK(in_V(q, c) == in_open_stratum(c.sequence, 0, q));
}

TEST_CASE("w_membership") {
  CHECK(w_membership(make_sequence({-4, -4, -4, -1, 1, 2}, PL), 4));
  CHECK_FALSE(w_membership(make_sequence({-4, -4, -4, -1, 1, 2}, PL), 5));
  CHECK(w_membership(make_sequence({-2, -2, -1, -1, 0, 0}, {11, 6, 10}), 0));
  CHECK_FALSE(w_membership(make_sequence({-2, -2, -1, -1, 0, 0}, {11, 6, 10}), 2));
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hbn/completion.hpp"
#include "hbn/strata.hpp"

using namespace hbn;

namespace {
const CurveParams P316{20, 6, 20};
SplittingSequence ex31() { return make_sequence({-4, -3, -1, -1, 1, 3}, P316); }
}

TEST_CASE("threshold_index ladder") {
  auto e = ex31();
  CHECK(threshold_index(e, 4) == 7);
  CHECK(threshold_index(e, 3) == 6);
  CHECK(threshold_index(e, 2) == 6);
  CHECK(threshold_index(e, 1) == 5);
  CHECK(threshold_index(e, 0) == 5);
  CHECK(threshold_index(e, -1) == 3);
  CHECK(threshold_index(e, -2) == 3);
  CHECK(threshold_index(e, -3) == 2);
  CHECK(threshold_index(e, -4) == 1);
  CHECK(threshold_index(e, -100) == 1);
}

TEST_CASE("balanced_fill") {
  CHECK(balanced_fill(-9, 4) == std::vector<Int>({-3, -2, -2, -2}));
  CHECK(balanced_fill(-5, 6) == std::vector<Int>({-1, -1, -1, -1, -1, 0}));
  CHECK(balanced_fill(0, 3) == std::vector<Int>({0, 0, 0}));
  CHECK(balanced_fill(7, 3) == std::vector<Int>({2, 2, 3}));
}

TEST_CASE("complete ladder") {
  auto e = ex31();
  auto want = [&](Int lvl, std::vector<Int> w) {
    CHECK(complete(e, lvl).completed.entries() == w);
  };
  want(4, {-1, -1, -1, -1, -1, 0});
  want(3, {-2, -2, -2, -1, -1, 3});
  want(2, {-2, -2, -2, -1, -1, 3});
  want(1, {-3, -2, -2, -2, 1, 3});
  want(0, {-3, -2, -2, -2, 1, 3});
  want(-1, {-4, -3, -1, -1, 1, 3});
  want(-2, {-4, -3, -1, -1, 1, 3});

  auto el = make_sequence({-4, -3, -3, -3, 1, 2}, {50, 6, 45});
  CHECK(complete(el, 0).completed == el);
}

TEST_CASE("completion_threshold_E") {
  CHECK(completion_threshold_E(ex31()) == -1);
  CHECK(completion_threshold_E(make_sequence({-4, -3, -3, -3, 1, 2}, {50, 6, 45})) == 1);
  CHECK_FALSE(completion_threshold_E(make_sequence({-1, -1, 0, 0}, {7, 4, 8})).has_value());
}

TEST_CASE("in_open_stratum frozen memberships") {
  auto e = ex31();
  auto mk = [](std::vector<Int> v) { return make_sequence(std::move(v), P316); };
  CHECK(in_open_stratum(e, 1, mk({-4, -2, -2, -1, 1, 3})));
  CHECK(in_open_stratum(e, 1, mk({-3, -3, -3, 0, 1, 3})));
  CHECK_FALSE(in_open_stratum(e, 1, mk({-3, -2, -2, -2, 0, 4})));
  CHECK_FALSE(in_open_stratum(e, 1, mk({-4, -2, -2, -2, 2, 3})));
  CHECK_FALSE(in_open_stratum(e, 1, mk({-4, -3, -3, 1, 1, 3})));
}

TEST_CASE("level sensitivity witness") {
  auto e = ex31();
  auto p = make_sequence({-3, -3, -3, 0, 1, 3}, P316);
  CHECK(complete(e, 1).completed == complete(e, 0).completed);
  CHECK(in_open_stratum(e, 1, p));
  CHECK_FALSE(in_open_stratum(e, 0, p));
}

TEST_CASE("completion properties over a full enumeration") {
  CurveParams p{8, 4, 7};
  auto table = enumerate_types(p, p.g);
  for (const auto& e : table.types) {
    for (Int lvl = e.front() - 2; lvl <= e.back() + 2; ++lvl) {
      auto res = complete(e, lvl);
      CHECK(dominates(e, res.completed));
      // idempotence at the same level
      CHECK(complete(res.completed, lvl).completed == res.completed);
      // fixpoint iff lvl <= E
      auto E = completion_threshold_E(e);
      bool fix = res.completed == e;
      bool expect_fix = !E.has_value() || lvl <= *E;
      CHECK(fix == expect_fix);
      // shape of the result
      Int i = res.threshold_index;
      const auto& v = res.completed.entries();
      for (size_t j = static_cast<size_t>(i - 1); j < v.size(); ++j)
        CHECK(v[j] == e.entries()[j]);
      if (i >= 3) CHECK(v[static_cast<size_t>(i - 2)] - v[0] <= 1);
    }
  }
}

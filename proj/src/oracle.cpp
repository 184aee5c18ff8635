#include "hbn/oracle.hpp"

#include <algorithm>
#include <sstream>

#include "hbn/completion.hpp"
#include "hbn/components.hpp"
#include "hbn/smoothness.hpp"
#include "hbn/strata.hpp"
#include "json.hpp"

namespace hbn {

std::string report_to_json(const VerificationReport& r) {
  nlohmann::json j;
  j["suite"] = r.suite;
  j["cases"] = r.cases;
  j["failures"] = nlohmann::json::array();
  for (const auto& f : r.failures)
    j["failures"].push_back({{"input", f.input}, {"expected", f.expected}, {"got", f.got}});
  j["passed"] = r.passed();
  return j.dump(2);
}

namespace oracle {

Int naive_u(const std::vector<Int>& v) {
  Int u = 0;
  for (size_t i = 0; i < v.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j)
      if (i < j && v[j] - v[i] > 1) u += v[j] - v[i] - 1;
  return u;
}

Int naive_h0(const std::vector<Int>& v, Int n) {
  Int s = 0;
  for (Int e : v)
    if (e + n >= 0) s += e + n + 1;
  return s;
}

bool naive_dominates(const std::vector<Int>& p, const std::vector<Int>& e) {
  Int sp = 0, se = 0;
  for (size_t l = 0; l < p.size(); ++l) {
    sp += p[l];
    se += e[l];
    if (sp > se) return false;
  }
  return true;
}

std::vector<Int> naive_complete(const std::vector<Int>& v, Int lvl) {
  // first index with lvl <= v[i]; everything before it gets rebuilt by unit
  // redistribution until the prefix is balanced
  size_t i = 0;
  while (i < v.size() && v[i] < lvl) ++i;
  if (i < 2) return v;
  Int prefix_sum = 0;
  for (size_t j = 0; j < i; ++j) prefix_sum += v[j];
  std::vector<Int> prefix(i, 0);
  Int diff = prefix_sum;
  while (diff > 0) {
    *std::min_element(prefix.begin(), prefix.end()) += 1;
    --diff;
  }
  while (diff < 0) {
    *std::max_element(prefix.begin(), prefix.end()) -= 1;
    ++diff;
  }
  std::sort(prefix.begin(), prefix.end());
  std::vector<Int> out = prefix;
  out.insert(out.end(), v.begin() + static_cast<long>(i), v.end());
  return out;
}

}  // namespace oracle

namespace {

void fail(VerificationReport& r, const std::string& input, const std::string& expected,
          const std::string& got) {
  r.failures.push_back({input, expected, got});
}

template <typename T>
std::string str(const T& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

std::string str(const std::vector<Int>& v) {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  os << ')';
  return os.str();
}

}  // namespace

VerificationReport verify_lemma2(CurveParams params, Int u_max) {
  VerificationReport r;
  r.suite = "lemma2";
  auto table = enumerate_types(params, u_max);
  for (const auto& e : table.types) {
    for (Int lvl = e.front() + 2; lvl <= e.back(); ++lvl) {
      ++r.cases;
      Int lhs = oracle::naive_u(oracle::naive_complete(e.entries(), lvl - 1)) -
                oracle::naive_u(oracle::naive_complete(e.entries(), lvl));
      Int rhs = lemma2_rhs(e, lvl);
      if (lhs != rhs)
        fail(r, to_string(e) + " lvl=" + str(lvl), str(lhs), str(rhs));
    }
  }
  return r;
}

VerificationReport verify_v_equivalence(CurveParams params, Int r_rank) {
  VerificationReport r;
  r.suite = "v_equivalence";
  auto comps = components_of_W(params, r_rank);
  auto table = enumerate_types(params, params.g);
  for (const auto& c : comps) {
    const BalancedType& b = c.btype;
    for (const auto& p : table.types) {
      ++r.cases;
      bool via_h0 = oracle::naive_h0(p.entries(), 0) == r_rank + 1 &&
                    oracle::naive_h0(p.entries(), -(b.a + 1)) == b.m2 &&
                    oracle::naive_h0(p.entries(), -b.a) == b.m1 + 2 * b.m2;
      bool via_stratum = in_open_stratum(c.sequence, 0, p);
      if (via_h0 != via_stratum)
        fail(r, to_string(p) + " vs " + to_string(c.sequence), str(via_h0), str(via_stratum));
    }
  }
  return r;
}

VerificationReport verify_dominance_axioms(CurveParams params, Int u_max) {
  VerificationReport r;
  r.suite = "dominance_axioms";
  auto table = enumerate_types(params, u_max);
  const auto& ts = table.types;
  size_t n = ts.size();
  size_t words = (n + 63) / 64;
  // le[i] is the bitset of j with ts[i] <= ts[j]
  std::vector<std::vector<uint64_t>> le(n, std::vector<uint64_t>(words, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      bool naive = oracle::naive_dominates(ts[i].entries(), ts[j].entries());
      ++r.cases;
      if (dominates(ts[i], ts[j]) != naive)
        fail(r, to_string(ts[i]) + "<=" + to_string(ts[j]), str(naive), "impl disagrees");
      if (naive) le[i][j / 64] |= uint64_t(1) << (j % 64);
    }
  auto test = [&](const std::vector<uint64_t>& row, size_t j) {
    return (row[j / 64] >> (j % 64)) & 1;
  };
  for (size_t i = 0; i < n; ++i) {
    ++r.cases;
    if (!test(le[i], i)) fail(r, to_string(ts[i]), "reflexive", "not");
  }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      ++r.cases;
      if (test(le[i], j) && test(le[j], i))
        fail(r, to_string(ts[i]) + "~" + to_string(ts[j]), "antisymmetric", "violated");
    }
  // transitivity: i <= j implies le[j] (up-set of j) is contained in le[i]
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (test(le[i], j)) {
        ++r.cases;
        for (size_t w = 0; w < words; ++w)
          if (le[j][w] & ~le[i][w]) {
            fail(r, to_string(ts[i]) + "<=" + to_string(ts[j]), "transitive", "violated");
            break;
          }
      }
  // specializations = the down-set of e, and down-sets are closed downwards
  std::vector<std::vector<uint64_t>> down(n, std::vector<uint64_t>(words, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (test(le[j], i)) down[i][j / 64] |= uint64_t(1) << (j % 64);
  for (size_t i = 0; i < n; ++i) {
    auto spec = specializations(ts[i], u_max);
    std::vector<SplittingSequence> filt;
    for (size_t j = 0; j < n; ++j)
      if (test(le[j], i)) filt.push_back(ts[j]);
    ++r.cases;
    if (spec != filt)
      fail(r, "specializations of " + to_string(ts[i]), "down-set filter", "differs");
    for (size_t j = 0; j < n; ++j)
      if (test(down[i], j)) {
        ++r.cases;
        for (size_t w = 0; w < words; ++w)
          if (down[j][w] & ~down[i][w]) {
            fail(r, "down-set of " + to_string(ts[j]) + " inside " + to_string(ts[i]),
                 "closed downwards", "violated");
            break;
          }
      }
  }
  return r;
}

VerificationReport verify_pencil_inequality(CurveParams params, Int u_max, Int m_max) {
  VerificationReport r;
  r.suite = "pencil_inequality";
  if (m_max < 1) throw error(errc::precondition_fail, "m_max >= 1 required");
  auto table = enumerate_types(params, u_max);
  for (const auto& e : table.types) {
    for (Int m = 1; m <= m_max; ++m) {
      ++r.cases;
      Int lhs = pencil_trick_image_dim(e, m);
      Int rhs = oracle::naive_h0(e.entries(), m);
      if (lhs > rhs) fail(r, to_string(e) + " m=" + str(m), "<= " + str(rhs), str(lhs));
      // equality exactly when no entry falls in the dead window [-m, -1]
      bool window_free = std::none_of(e.entries().begin(), e.entries().end(),
                                      [m](Int x) { return -m <= x && x <= -1; });
      if ((lhs == rhs) != window_free)
        fail(r, to_string(e) + " m=" + str(m), window_free ? "equality" : "strict",
             str(lhs) + " vs " + str(rhs));
    }
  }
  return r;
}

VerificationReport replay_worked_examples() {
  VerificationReport r;
  r.suite = "example_replay";
  auto check = [&r](const std::string& what, bool ok, const std::string& expected,
                    const std::string& got) {
    ++r.cases;
    if (!ok) fail(r, what, expected, got);
  };
  auto check_eq = [&](const std::string& what, Int got, Int expected) {
    check(what, got == expected, str(expected), str(got));
  };
  auto check_bool = [&](const std::string& what, bool got, bool expected) {
    check(what, got == expected, str(expected), str(got));
  };

  // ---- Example 3.1 ladder: g=20, k=6, d=20 ----
  CurveParams p316{20, 6, 20};
  auto e31 = make_sequence({-4, -3, -1, -1, 1, 3}, p316);
  check_eq("3.1 i(e,4)", threshold_index(e31, 4), 7);
  check_eq("3.1 i(e,3)", threshold_index(e31, 3), 6);
  check_eq("3.1 i(e,2)", threshold_index(e31, 2), 6);
  check_eq("3.1 i(e,1)", threshold_index(e31, 1), 5);
  check_eq("3.1 i(e,0)", threshold_index(e31, 0), 5);
  check_eq("3.1 i(e,-1)", threshold_index(e31, -1), 3);
  check_eq("3.1 i(e,-2)", threshold_index(e31, -2), 3);
  check_eq("3.1 i(e,-3)", threshold_index(e31, -3), 2);
  check_eq("3.1 i(e,-4)", threshold_index(e31, -4), 1);
  auto cmp = [&](Int lvl, std::vector<Int> want) {
    auto got = complete(e31, lvl).completed.entries();
    check("3.1 e[" + str(lvl) + "]", got == want, str(want), str(got));
  };
  cmp(4, {-1, -1, -1, -1, -1, 0});
  cmp(3, {-2, -2, -2, -1, -1, 3});
  cmp(2, {-2, -2, -2, -1, -1, 3});
  cmp(1, {-3, -2, -2, -2, 1, 3});
  cmp(0, {-3, -2, -2, -2, 1, 3});
  cmp(-1, {-4, -3, -1, -1, 1, 3});
  cmp(-2, {-4, -3, -1, -1, 1, 3});
  cmp(-3, {-4, -3, -1, -1, 1, 3});
  cmp(-4, {-4, -3, -1, -1, 1, 3});

  {
    auto bf = balanced_fill(-9, 4);
    check("balanced_fill(-9,4)", bf == std::vector<Int>({-3, -2, -2, -2}),
          "(-3,-2,-2,-2)", str(bf));
    auto bf2 = balanced_fill(-5, 6);
    check("balanced_fill(-5,6)", bf2 == std::vector<Int>({-1, -1, -1, -1, -1, 0}),
          "(-1,-1,-1,-1,-1,0)", str(bf2));
  }

  // ---- Example 3.2: five membership booleans at level 1 ----
  {
    std::vector<std::pair<std::vector<Int>, bool>> cases = {
        {{-4, -2, -2, -1, 1, 3}, true},  {{-3, -3, -3, 0, 1, 3}, true},
        {{-3, -2, -2, -2, 0, 4}, false}, {{-4, -2, -2, -2, 2, 3}, false},
        {{-4, -3, -3, 1, 1, 3}, false}};
    for (auto& [seq, want] : cases) {
      auto pp = make_sequence(seq, p316);
      check_bool("3.2 membership " + str(seq), in_open_stratum(e31, 1, pp), want);
    }
  }

  // ---- Remark after Example 3.2: level sensitivity witness ----
  {
    auto w = make_sequence({-3, -3, -3, 0, 1, 3}, p316);
    check_bool("level witness in Sigma^o(e[1])", in_open_stratum(e31, 1, w), true);
    check_bool("level witness in Sigma^o(e[0])", in_open_stratum(e31, 0, w), false);
  }

  // ---- Example 3.3: smooth / unknown in the closure ----
  {
    auto ps = make_sequence({-5, -2, -1, -1, 1, 3}, p316);
    auto vs = certified_smooth_in_closure(e31, -1, ps);
    check("3.3 smooth along (-5,-2,-1,-1,1,3)",
          vs.status == VerdictStatus::CertifiedSmooth, "CertifiedSmooth",
          status_name(vs.status));
    auto pu = make_sequence({-4, -3, -3, 1, 1, 3}, p316);
    auto vu = certified_smooth_in_closure(e31, 1, pu);
    check("3.3 unknown along (-4,-3,-3,1,1,3)", vu.status == VerdictStatus::Unknown,
          "Unknown", status_name(vu.status));
  }

  // ---- Theta divisor (g=11, k=6, d=g-1, r=1) ----
  {
    CurveParams pt{11, 6, 10};
    auto comps = components_of_W(pt, 1);
    check_eq("theta: one component", static_cast<Int>(comps.size()), 1);
    if (comps.size() == 1) {
      check("theta component type", comps[0].sequence.entries() ==
                                        std::vector<Int>({-2, -2, -1, -1, 0, 0}),
            "(-2,-2,-1,-1,0,0)", to_string(comps[0].sequence));
      check_eq("theta dim g-4", comps[0].dim, pt.g - 4);
      check("theta class I", comps[0].cls == ComponentClass::I, "I",
            class_name(comps[0].cls));
      check_eq("rho(g,1,g-1)", rho(pt.g, 1, pt.d), pt.g - 4);

      auto wit = typeI_singular_unique_witness(comps[0]);
      check("theta witness exists (g=2k-1)", wit.has_value(), "value", "nullopt");
      if (wit) {
        check("theta witness sequence",
              wit->entries() == std::vector<Int>({-3, -1, -1, -1, -1, 1}),
              "(-3,-1,-1,-1,-1,1)", to_string(*wit));
        check_eq("theta witness u = 2k-1", u_invariant(*wit), 2 * pt.k - 1);
        check_bool("theta witness petri", petri_injective(*wit), false);
        auto verdict = classify_in_W(*wit, 1);
        check("theta witness singular",
              verdict.status == VerdictStatus::CertifiedSingular &&
                  verdict.reason == SingularReason::PetriKernel,
              "CertifiedSingular/PetriKernel",
              std::string(status_name(verdict.status)) + "/" + reason_name(verdict.reason));
      }
      auto generic = classify_in_W(comps[0].sequence, 1);
      check("theta generic smooth", generic.status == VerdictStatus::CertifiedSmooth,
            "CertifiedSmooth", status_name(generic.status));
      auto tI = typeI_smooth_locus(comps[0], comps[0].sequence);
      check("theta type I smooth locus", tI.status == VerdictStatus::CertifiedSmooth,
            "CertifiedSmooth", status_name(tI.status));
      check_bool("petri (-2,-2,-1,-1,0,0)", petri_injective(comps[0].sequence), true);
    }
  }

  // ---- Example with three -2 entries (k=6, d=g-2) ----
  {
    CurveParams pe{11, 6, 9};
    auto bt = balanced_plus_balanced(make_sequence({-2, -2, -2, -1, 0, 0}, pe));
    check("ex2 balanced plus balanced", bt.has_value(), "value", "nullopt");
    auto comps = components_containing(make_sequence({-2, -2, -2, -1, 0, 0}, pe), 1);
    check_eq("ex2 own component found", static_cast<Int>(comps.size()), 1);
    if (comps.size() == 1) {
      auto wit = typeI_singular_unique_witness(comps[0]);
      check("ex2 witness", wit.has_value() && wit->entries() ==
                               std::vector<Int>({-3, -2, -1, -1, -1, 1}),
            "(-3,-2,-1,-1,-1,1)", wit ? to_string(*wit) : "nullopt");
    }
  }

  // ---- Example k=7, W^2_{g-2} (g=15) ----
  {
    CurveParams pe{15, 7, 13};
    auto comps = components_of_W(pe, 2);
    const Component* z = nullptr;
    for (auto& c : comps)
      if (c.sequence.entries() == std::vector<Int>({-2, -2, -2, -2, 0, 0, 0})) z = &c;
    check("ex3 component present", z != nullptr, "found", "missing");
    if (z) {
      check_eq("ex3 dim g-12", z->dim, pe.g - 12);
      auto wit = typeI_singular_unique_witness(*z);
      check("ex3 witness", wit.has_value() && wit->entries() ==
                               std::vector<Int>({-3, -2, -2, -1, -1, 0, 1}),
            "(-3,-2,-2,-1,-1,0,1)", wit ? to_string(*wit) : "nullopt");
      if (wit) {
        check_eq("ex3 witness unique component",
                 static_cast<Int>(components_containing(*wit, 2).size()), 1);
        check_eq("ex3 witness u", u_invariant(*wit), 15);
      }
    }
    // g = 14 < 15: stratum of the witness is empty
    CurveParams pe14{14, 7, 12};
    auto comps14 = components_of_W(pe14, 2);
    for (auto& c : comps14)
      if (c.sequence.entries() == std::vector<Int>({-2, -2, -2, -2, 0, 0, 0})) {
        auto wit = typeI_singular_unique_witness(c);
        check("ex3 witness empty below g=15", !wit.has_value(), "nullopt", "value");
      }
  }

  // ---- Final example: g=50, k=6, d=45, r=4 ----
  {
    CurveParams pl{50, 6, 45};
    auto e = make_sequence({-4, -3, -3, -3, 1, 2}, pl);
    check_eq("lastEx u", u_invariant(e), 30);
    check_eq("lastEx dim", dim_sigma(e).value_or(-1), 20);
    check_eq("lastEx h0(L)", h0(e, 0), 5);
    check_eq("lastEx h0(L+M)", h0(e, 1), 7);
    check_eq("lastEx h0(L-M)", h0(e, -1), 3);
    check_eq("lastEx h0(L-2M)", h0(e, -2), 1);
    check_eq("lastEx h0(L-3M)", h0(e, -3), 0);
    check_eq("lastEx h0(L+2M)", h0(e, 2), 9);
    check_eq("lastEx r(0)", r_of_n(e, 0), 4);
    check_eq("lastEx r(-1)", r_of_n(e, -1), 2);
    check_eq("lastEx pencil m=1", pencil_trick_image_dim(e, 1), 7);

    auto g6 = make_sequence({-4, -4, -4, 0, 1, 1}, pl);
    check_eq("lastEx u of second component", u_invariant(g6), 33);
    check_eq("lastEx dim of second component", dim_sigma(g6).value_or(-1), 17);

    auto comps = components_of_W(pl, 4);
    const Component *cz = nullptr, *cg = nullptr;
    for (auto& c : comps) {
      if (c.sequence == e) cz = &c;
      if (c.sequence == g6) cg = &c;
    }
    check("lastEx both components listed", cz && cg, "both", "missing");
    if (cz && cg) {
      check_eq("lastEx B.a", cz->btype.a, 1);
      check_eq("lastEx B.b", cz->btype.b, 3);
      check_eq("lastEx B.y", cz->btype.y, 3);
      check_eq("lastEx B.m1", cz->btype.m1, 1);
      check_eq("lastEx B.m2", cz->btype.m2, 1);
      check("lastEx class III", cz->cls == ComponentClass::III, "III",
            class_name(cz->cls));
      auto vp = v_parameters(*cz);
      check("lastEx V params", vp.r == 4 && vp.d == 45 && vp.l == 3, "(4,45,3)",
            "(" + str(vp.r) + "," + str(vp.d) + "," + str(vp.l) + ")");
      check_eq("lastEx l of second component", cg->l, 2);

      auto sing = make_sequence({-4, -4, -4, -1, 1, 2}, pl);
      auto smoo = make_sequence({-4, -4, -3, -2, 1, 2}, pl);
      check_bool("lastEx e' <= g-component", dominates(sing, g6), true);
      check_eq("lastEx dim Sigma(e')", dim_sigma(sing).value_or(-1), 14);
      check_eq("lastEx dim Sigma(e'')", dim_sigma(smoo).value_or(-1), 18);
      check_eq("lastEx h0(e'+M)", h0(sing, 1), 8);
      check_eq("lastEx h0(e''+M)", h0(smoo, 1), 7);

      check_bool("lastEx in_V(e'')", in_V(smoo, *cz), true);
      check_bool("lastEx in_V second comp type not in V of Z", in_V(g6, *cz), false);
      check_bool("lastEx w_membership r=4", w_membership(sing, 4), true);
      check_bool("lastEx w_membership r=5", w_membership(sing, 5), false);

      auto both = components_containing(sing, 4);
      check_eq("lastEx e' on two components", static_cast<Int>(both.size()), 2);

      auto vb = theoremB_classify(*cz, smoo);
      check("lastEx Theorem B smooth", vb.status == VerdictStatus::CertifiedSmooth,
            "CertifiedSmooth", status_name(vb.status));
      auto vsing = theoremB_classify(*cz, sing);
      check("lastEx Theorem B singular",
            vsing.status == VerdictStatus::CertifiedSingular &&
                vsing.reason == SingularReason::MultipleComponents,
            "CertifiedSingular/MultipleComponents",
            std::string(status_name(vsing.status)) + "/" + reason_name(vsing.reason));
      bool witness_listed = false;
      for (auto& w : vsing.witnesses)
        if (w == g6) witness_listed = true;
      check("lastEx singular witness component", witness_listed, "(-4,-4,-4,0,1,1)",
            "missing");

      auto closure = certified_smooth_in_closure(e, 0, sing);
      check("lastEx smooth in closure along V",
            closure.status == VerdictStatus::CertifiedSmooth, "CertifiedSmooth",
            status_name(closure.status));
      check_bool("lastEx specialization into closure", in_closure(sing, e), true);
      auto spec = specializations(e, pl.g);
      check_bool("lastEx specializations contain e''",
                 std::find(spec.begin(), spec.end(), smoo) != spec.end(), true);
    }
  }

  // ---- Translate of a point with a -1 entry is a higher-rank point ----
  {
    CurveParams pp{8, 4, 3};  // sum = 3-8+1-4 = -8
    auto q = make_sequence({-4, -3, -1, 0}, pp);
    auto res = translate_smoothness(q, 0);
    bool ok = std::holds_alternative<Verdict>(res) &&
              std::get<Verdict>(res).status == VerdictStatus::CertifiedSingular &&
              std::get<Verdict>(res).reason == SingularReason::HigherRank;
    check("translate with -1 entry singular", ok, "CertifiedSingular/HigherRank", "other");
  }

  return r;
}

}  // namespace hbn

#include "hbn/smoothness.hpp"

#include <algorithm>

#include "hbn/completion.hpp"
#include "json.hpp"

namespace hbn {

const char* status_name(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::CertifiedSmooth: return "CertifiedSmooth";
    case VerdictStatus::CertifiedSingular: return "CertifiedSingular";
    case VerdictStatus::Unknown: return "Unknown";
  }
  return "?";
}

const char* reason_name(SingularReason r) {
  switch (r) {
    case SingularReason::None: return "None";
    case SingularReason::MultipleComponents: return "MultipleComponents";
    case SingularReason::HigherRank: return "HigherRank";
    case SingularReason::PetriKernel: return "PetriKernel";
  }
  return "?";
}

const char* statement_name(Statement s) {
  switch (s) {
    case Statement::None: return "None";
    case Statement::TheoremA: return "TheoremA";
    case Statement::TheoremB: return "TheoremB";
    case Statement::TheoremC: return "TheoremC";
    case Statement::Cor3_1: return "Cor3_1";
    case Statement::Prop3: return "Prop3";
    case Statement::Prop4: return "Prop4";
    case Statement::Prop5: return "Prop5";
    case Statement::Prop5_1: return "Prop5_1";
    case Statement::PropE1: return "PropE1";
    case Statement::Prop5_2: return "Prop5_2";
    case Statement::Cor2: return "Cor2";
  }
  return "?";
}

Ambient degeneracy_ambient(SplittingSequence e) {
  Ambient a{Ambient::Kind::DegeneracyScheme, std::move(e), 0, 0};
  return a;
}

Ambient brill_noether_ambient(Int r, Int d) {
  return Ambient{Ambient::Kind::BrillNoetherScheme, std::nullopt, r, d};
}

std::string verdict_to_json(const SplittingSequence& point, const Verdict& v) {
  nlohmann::json j;
  j["point"] = point.entries();
  if (v.ambient.kind == Ambient::Kind::DegeneracyScheme) {
    j["ambient"] = {{"kind", "DegeneracyScheme"},
                    {"sequence", v.ambient.sequence->entries()}};
  } else {
    j["ambient"] = {{"kind", "BrillNoetherScheme"}, {"r", v.ambient.r}, {"d", v.ambient.d}};
  }
  j["status"] = status_name(v.status);
  j["justification"] = statement_name(v.justification);
  if (v.status == VerdictStatus::CertifiedSingular) j["reason"] = reason_name(v.reason);
  j["witnesses"] = nlohmann::json::array();
  for (const auto& w : v.witnesses) j["witnesses"].push_back(w.entries());
  return j.dump(2);
}

FittingLevels local_fitting_levels(const SplittingSequence& e) {
  auto E = completion_threshold_E(e);
  if (!E)
    throw error(errc::degenerate_sequence,
                "no entry e_i >= e_1+2: Fitting-level reduction does not apply");
  std::vector<Int> levels;
  for (Int i = 2; i <= e.k(); ++i) {
    Int n = -e.at(i);
    if (n <= -*E) levels.push_back(n);
  }
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  return {std::move(levels)};
}

Int local_equation_count(const SplittingSequence& e, Int lvl_lo, Int lvl_hi) {
  if (!(e.front() + 2 <= lvl_lo && lvl_lo < lvl_hi && lvl_hi <= e.back()))
    throw error(errc::range_error, "levels must satisfy e_1+2 <= lo < hi <= e_k");
  return u_invariant(complete(e, lvl_lo).completed) -
         u_invariant(complete(e, lvl_hi).completed);
}

Int lemma2_rhs(const SplittingSequence& e, Int lvl) {
  Int t = static_cast<Int>(
      std::count(e.entries().begin(), e.entries().end(), lvl - 1));
  Int s = 0;
  for (Int ej : e.entries())
    if (ej >= lvl) s = checked_add(s, ej - lvl + 2);
  const CurveParams& p = e.params();
  return checked_mul(t, s + t - p.d + checked_mul(p.k, lvl - 1) + p.g - 1);
}

std::vector<std::pair<SplittingSequence, Int>> run_smoothing_pairs(const SplittingSequence& e) {
  std::vector<std::pair<SplittingSequence, Int>> out;
  const auto& v = e.entries();
  size_t n = v.size();
  size_t i = 0;
  while (i < n) {
    size_t j = i;
    while (j + 1 < n && v[j + 1] == v[i]) ++j;
    size_t len = j - i + 1;
    bool isolated_left = (i == 0) || (v[i - 1] < v[i] - 1);
    bool isolated_right = (j + 1 == n) || (v[j + 1] > v[i] + 1);
    if (len >= 2 && isolated_left && isolated_right) {
      for (Int l = 1; l <= static_cast<Int>(len) / 2; ++l) {
        std::vector<Int> w = v;
        for (Int t = 0; t < l; ++t) {
          w[i + static_cast<size_t>(t)] -= 1;
          w[j - static_cast<size_t>(t)] += 1;
        }
        out.emplace_back(SplittingSequence(std::move(w), e.params()), l);
      }
    }
    i = j + 1;
  }
  return out;
}

Verdict certified_smooth_in_closure(const SplittingSequence& e, Int lvl,
                                    const SplittingSequence& p) {
  CompletionResult c = complete(e, lvl);
  if (!dominates(p, c.completed))
    throw error(errc::precondition_fail, "p must specialize e[lvl]");
  Verdict v;
  v.ambient = degeneracy_ambient(c.completed);
  if (lvl >= e.front() + 2 && in_open_stratum(e, lvl, p)) {
    v.status = VerdictStatus::CertifiedSmooth;
    v.justification = Statement::Cor3_1;
    return v;
  }
  if (u_invariant(p) <= p.params().g) {
    for (const auto& [q, l] : run_smoothing_pairs(c.completed)) {
      if (q == p) {
        v.status = VerdictStatus::CertifiedSmooth;
        v.justification = Statement::Prop5_1;
        return v;
      }
    }
  }
  v.status = VerdictStatus::Unknown;
  return v;
}

Verdict classify_in_W(const SplittingSequence& p, Int r) {
  Int h = h0(p, 0);
  if (h <= r)
    throw error(errc::rank_too_low, "h0 = " + std::to_string(h) +
                                        " < r+1 = " + std::to_string(r + 1));
  Verdict v;
  v.ambient = brill_noether_ambient(r, p.params().d);
  if (h >= r + 2) {
    v.status = VerdictStatus::CertifiedSingular;
    v.reason = SingularReason::HigherRank;
    v.justification = Statement::Prop3;
    return v;
  }
  if (petri_injective(p)) {
    v.status = VerdictStatus::CertifiedSmooth;
    v.justification = Statement::TheoremA;
    return v;
  }
  auto comps = components_containing(p, r);
  if (comps.size() >= 2) {
    v.status = VerdictStatus::CertifiedSingular;
    v.reason = SingularReason::MultipleComponents;
    v.justification = Statement::Prop4;
    for (const auto& c : comps) v.witnesses.push_back(c.sequence);
    return v;
  }
  if (comps.size() == 1) {
    const Component& c = comps.front();
    if (c.cls == ComponentClass::I && c.sequence.at(1) == -2 && c.sequence.at(2) == -2 &&
        c.r >= 1) {
      auto w = typeI_singular_unique_witness(c);
      if (w && *w == p) {
        v.status = VerdictStatus::CertifiedSingular;
        v.reason = SingularReason::PetriKernel;
        v.justification = Statement::Prop5;
        v.witnesses.push_back(c.sequence);
        return v;
      }
    }
  }
  v.status = VerdictStatus::Unknown;
  return v;
}

Verdict theoremB_classify(const Component& c, const SplittingSequence& p) {
  if (c.btype.b < 2)
    throw error(errc::wrong_class,
                "Theorem B threshold applies to components with b >= 2 only");
  if (c.cls == ComponentClass::I)
    throw error(errc::wrong_class,
                "type I components are free from M; use the Petri criterion instead");
  if (!in_V(p, c)) throw error(errc::not_in_v, to_string(p) + " is not in V");
  Int threshold = 2 * (c.r + 1) - c.l;
  Int h = h0(p, 1);
  Verdict v;
  v.ambient = brill_noether_ambient(c.r, c.params.d);
  if (h < threshold)
    throw error(errc::internal_threshold_violation,
                "h0(p,1) below the generic value at " + to_string(p));
  if (h == threshold) {
    v.status = VerdictStatus::CertifiedSmooth;
    v.justification = Statement::TheoremB;
    return v;
  }
  v.status = VerdictStatus::CertifiedSingular;
  v.reason = SingularReason::MultipleComponents;
  v.justification = Statement::TheoremB;
  for (const auto& z : components_containing(p, c.r))
    if (!(z.sequence == c.sequence)) v.witnesses.push_back(z.sequence);
  return v;
}

Verdict typeI_smooth_locus(const Component& c, const SplittingSequence& p) {
  if (c.cls != ComponentClass::I)
    throw error(errc::wrong_class, "expected a type I component");
  if (!dominates(p, c.sequence))
    throw error(errc::precondition_fail, "p must specialize the component type");
  Verdict v;
  v.ambient = brill_noether_ambient(c.r, c.params.d);
  Int h = h0(p, 0);
  if (h >= c.r + 2) {
    v.status = VerdictStatus::CertifiedSingular;
    v.reason = SingularReason::HigherRank;
    v.justification = Statement::Cor2;
    return v;
  }
  if (p.back() <= 0 || p.front() >= -2) {
    v.status = VerdictStatus::CertifiedSmooth;
    v.justification = Statement::Cor2;
    return v;
  }
  v.status = VerdictStatus::CertifiedSingular;
  v.reason = SingularReason::PetriKernel;
  v.justification = Statement::Cor2;
  return v;
}

std::optional<Component> typeI_second_component(const Component& c) {
  if (c.cls != ComponentClass::I)
    throw error(errc::wrong_class, "expected a type I component");
  const auto& e = c.sequence;
  if (e.front() >= -2) return std::nullopt;
  if (c.r < 1) return std::nullopt;  // the construction needs a positive top entry
  Int k = c.params.k;
  Int r = c.r;
  // e'' = (e_1, ..., e_{k-r-1}, -1, 0^{r-1}, 1)
  std::vector<Int> epp;
  for (Int i = 1; i <= k - r - 1; ++i) epp.push_back(e.at(i));
  epp.push_back(-1);
  epp.insert(epp.end(), static_cast<size_t>(r - 1), 0);
  epp.push_back(1);
  SplittingSequence second(epp, c.params);
  // rebalance positions 1..k-r, keep the non-negative tail
  Int head_sum = 0;
  for (Int i = 0; i < k - r; ++i) head_sum += epp[static_cast<size_t>(i)];
  std::vector<Int> eppp = balanced_fill(head_sum, k - r);
  for (Int i = k - r; i < k; ++i) eppp.push_back(epp[static_cast<size_t>(i)]);
  SplittingSequence third(eppp, c.params);
  if (!dominates(second, third) || third.at(k - r) >= -1)
    throw error(errc::internal_equivalence_violation,
                "second-component construction violated its postconditions");
  auto bt = balanced_plus_balanced(third);
  if (!bt)
    throw error(errc::internal_equivalence_violation,
                "rebalanced sequence is not balanced plus balanced");
  Component out{*bt, r, c.params, third, c.params.g - u_invariant(third),
                ComponentClass::I, checked_mul(bt->a, bt->m1) + checked_mul(bt->a + 1, bt->m2)};
  out.cls = component_class(out);
  return out;
}

std::optional<SplittingSequence> typeI_singular_unique_witness(const Component& c) {
  if (c.cls != ComponentClass::I)
    throw error(errc::wrong_class, "expected a type I component");
  const auto& e = c.sequence;
  if (e.at(1) != -2 || e.at(2) != -2)
    throw error(errc::precondition_fail, "construction needs e_1 = e_2 = -2");
  if (c.r < 1) throw error(errc::precondition_fail, "construction needs r >= 1");
  Int k = c.params.k;
  Int r = c.r;
  Int l = 0;
  for (Int i = 1; i <= k; ++i)
    if (e.at(i) == -2) l = i;
  std::vector<Int> w;
  w.push_back(-3);
  for (Int i = 2; i <= l - 1; ++i) w.push_back(-2);
  for (Int i = l; i <= k - r; ++i) w.push_back(-1);
  for (Int i = k - r + 1; i <= k - 1; ++i) w.push_back(0);
  w.push_back(1);
  SplittingSequence witness(std::move(w), c.params);
  if (u_invariant(witness) > c.params.g) return std::nullopt;  // empty stratum
  if (!dominates(witness, e) || petri_injective(witness) ||
      components_containing(witness, r).size() != 1)
    throw error(errc::internal_equivalence_violation,
                "unique-witness construction violated its postconditions");
  return witness;
}

std::variant<Verdict, TranslateDichotomy> translate_smoothness(const SplittingSequence& p, Int r) {
  const CurveParams& pr = p.params();
  if (r <= pr.d - pr.g)
    throw error(errc::precondition_fail, "translation requires r > d - g");
  if (h0(p, 0) != r + 1)
    throw error(errc::precondition_fail, "point must have h0 = r + 1");
  const auto& v = p.entries();
  bool has_minus_one = std::count(v.begin(), v.end(), -1) > 0;
  bool has_minus_two = std::count(v.begin(), v.end(), -2) > 0;
  Int nonneg = static_cast<Int>(std::count_if(v.begin(), v.end(), [](Int x) { return x >= 0; }));

  if (has_minus_one) {
    // h0(L+M) jumps past r+1+a, so the translate is a higher-rank point.
    Verdict out;
    out.status = VerdictStatus::CertifiedSingular;
    out.reason = SingularReason::HigherRank;
    out.justification = Statement::Prop5_2;
    out.ambient = brill_noether_ambient(r + nonneg, pr.d + pr.k);
    out.witnesses.push_back(shift(p, 1));
    return out;
  }
  if (has_minus_two) {
    size_t i0 = 0;
    for (size_t i = 0; i < v.size(); ++i)
      if (v[i] == -2) i0 = i;  // max index with entry -2
    size_t j0 = static_cast<size_t>(std::find(v.begin(), v.end(), v.back()) - v.begin());
    std::vector<Int> alt = v;
    alt[i0] = -1;
    alt[j0] = v.back() - 1;
    TranslateDichotomy d{SplittingSequence(std::move(alt), pr),
                         "the translated component is not an irreducible component "
                         "of W^s_{d+k}",
                         "the translate lies on at least two irreducible components "
                         "of W^s_{d+k}"};
    return d;
  }
  Verdict out;
  out.status = VerdictStatus::CertifiedSmooth;
  out.justification = Statement::Prop5_2;
  out.ambient = brill_noether_ambient(h0(p, 1) - 1, pr.d + pr.k);
  out.witnesses.push_back(shift(p, 1));
  return out;
}

Verdict typeII_smooth(const Component& c, const SplittingSequence& p) {
  if (c.cls != ComponentClass::II)
    throw error(errc::wrong_class, "expected a type II component");
  auto E = completion_threshold_E(c.sequence);
  if (!E || !in_open_stratum(c.sequence, *E, p))
    throw error(errc::precondition_fail, "p must lie in the open stratum of the component");
  Verdict v;
  v.ambient = brill_noether_ambient(c.r, c.params.d);
  Int idx = c.params.k - c.btype.m1 - c.btype.m2;
  if (p.at(idx) <= -2) {
    v.status = VerdictStatus::CertifiedSmooth;
    v.justification = Statement::PropE1;
    return v;
  }
  v.status = VerdictStatus::Unknown;
  return v;
}

}  // namespace hbn

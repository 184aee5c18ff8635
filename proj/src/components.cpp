#include "hbn/components.hpp"

#include <algorithm>

#include "hbn/completion.hpp"
#include "json.hpp"

namespace hbn {

const char* class_name(ComponentClass c) {
  switch (c) {
    case ComponentClass::I: return "I";
    case ComponentClass::II: return "II";
    case ComponentClass::III: return "III";
  }
  return "?";
}

SplittingSequence expand(const BalancedType& b, CurveParams params) {
  std::vector<Int> v;
  v.reserve(static_cast<size_t>(params.k));
  v.insert(v.end(), static_cast<size_t>(b.x), -b.b - 1);
  v.insert(v.end(), static_cast<size_t>(b.y), -b.b);
  v.insert(v.end(), static_cast<size_t>(b.m1), b.a);
  v.insert(v.end(), static_cast<size_t>(b.m2), b.a + 1);
  return SplittingSequence(std::move(v), params);
}

std::optional<BalancedType> balanced_plus_balanced(const SplittingSequence& e) {
  const auto& v = e.entries();
  // c = least index with e_c >= 0; both parts must be non-empty.
  size_t c = 0;
  while (c < v.size() && v[c] < 0) ++c;
  if (c == 0 || c == v.size()) return std::nullopt;
  if (v[c - 1] - v[0] > 1) return std::nullopt;  // negative part not balanced
  if (v.back() - v[c] > 1) return std::nullopt;  // non-negative part not balanced

  BalancedType b;
  b.a = v[c];
  b.b = -v[c - 1];
  b.m2 = static_cast<Int>(std::count(v.begin() + static_cast<long>(c), v.end(), b.a + 1));
  b.m1 = static_cast<Int>(v.size() - c) - b.m2;
  b.x = static_cast<Int>(std::count(v.begin(), v.begin() + static_cast<long>(c), -b.b - 1));
  b.y = static_cast<Int>(c) - b.x;
  return b;
}

ComponentClass component_class(const Component& c) {
  if (c.btype.a == 0 && c.btype.m2 == 0) return ComponentClass::I;
  if (c.btype.a == 0) return ComponentClass::II;
  return ComponentClass::III;
}

std::vector<Component> components_of_W(CurveParams params, Int r) {
  if (r < 0) throw error(errc::precondition_fail, "components_of_W requires r >= 0");
  std::vector<Component> out;
  Int S = params.target_sum();
  for (Int a = 0; a + 1 <= r + 1; ++a) {
    for (Int m2 = 0; checked_mul(m2, a + 2) <= r + 1; ++m2) {
      Int rem = r + 1 - m2 * (a + 2);
      if (rem <= 0 || rem % (a + 1) != 0) continue;
      Int m1 = rem / (a + 1);
      Int negcount = params.k - m1 - m2;
      if (negcount < 1) continue;
      // The negative part is forced: balanced with the residual sum.
      Int T = S - (checked_mul(a, m1) + checked_mul(a + 1, m2));
      std::vector<Int> neg(static_cast<size_t>(negcount));
      {
        Int q = T / negcount;
        if (T % negcount != 0 && T < 0) --q;
        Int remf = T - q * negcount;
        for (size_t i = 0; i < neg.size(); ++i)
          neg[i] = (static_cast<Int>(i) < negcount - remf) ? q : q + 1;
      }
      if (neg.back() > -1) continue;  // must stay negative
      BalancedType b;
      b.a = a;
      b.m1 = m1;
      b.m2 = m2;
      b.b = -neg.back();
      b.y = static_cast<Int>(std::count(neg.begin(), neg.end(), neg.back()));
      b.x = negcount - b.y;
      if (!(b.b >= 2 || (b.a == 0 && b.b == 1 && b.m2 == 0))) continue;
      SplittingSequence seq = expand(b, params);
      Int u = u_invariant(seq);
      if (u > params.g) continue;
      Component comp{b, r, params, seq, params.g - u, ComponentClass::I,
                     checked_mul(a, m1) + checked_mul(a + 1, m2)};
      comp.cls = component_class(comp);
      out.push_back(std::move(comp));
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Component& lhs, const Component& rhs) { return lhs.sequence < rhs.sequence; });
  return out;
}

std::vector<Component> components_containing(const SplittingSequence& p, Int r) {
  std::vector<Component> out;
  for (auto& c : components_of_W(p.params(), r))
    if (dominates(p, c.sequence)) out.push_back(std::move(c));
  return out;
}

VParams v_parameters(const Component& c) { return {c.r, c.params.d, c.l}; }

bool in_V(const SplittingSequence& p, const Component& c) {
  if (!(p.params() == c.params))
    throw error(errc::param_mismatch, "sequences over different (g,k,d)");
  const BalancedType& b = c.btype;
  bool via_h0 = h0(p, 0) == c.r + 1 && h0(p, -(b.a + 1)) == b.m2 &&
                h0(p, -b.a) == b.m1 + 2 * b.m2;
  bool via_stratum = in_open_stratum(c.sequence, 0, p);
  if (via_h0 != via_stratum)
    throw error(errc::internal_equivalence_violation,
                "V-membership routes disagree at " + to_string(p));
  return via_h0;
}

bool w_membership(const SplittingSequence& p, Int r) {
  if (r < 0) throw error(errc::precondition_fail, "w_membership requires r >= 0");
  return h0(p, 0) >= r + 1;
}

std::string components_to_json(CurveParams params, Int r,
                               const std::vector<Component>& comps) {
  nlohmann::json j;
  j["params"] = {{"g", params.g}, {"k", params.k}, {"d", params.d}};
  j["r"] = r;
  j["components"] = nlohmann::json::array();
  for (const auto& c : comps) {
    nlohmann::json cj;
    cj["sequence"] = c.sequence.entries();
    cj["B"] = {{"a", c.btype.a}, {"b", c.btype.b}, {"x", c.btype.x},
               {"y", c.btype.y}, {"m1", c.btype.m1}, {"m2", c.btype.m2}};
    cj["dim"] = c.dim;
    cj["class"] = class_name(c.cls);
    cj["l"] = c.l;
    j["components"].push_back(std::move(cj));
  }
  return j.dump(2);
}

}  // namespace hbn

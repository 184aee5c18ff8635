#include "hbn/strata.hpp"

#include <algorithm>
#include <future>
#include <sstream>

#include "json.hpp"

namespace hbn {

namespace {

Int floor_div(Int a, Int b) {
  Int q = a / b;
  if (a % b != 0 && (a < 0) != (b < 0)) --q;
  return q;
}

Int ceil_div(Int a, Int b) { return -floor_div(-a, b); }

// Depth-first enumeration of nondecreasing tuples with fixed sum and partial-u
// pruning. `partial_u` counts pairs among the already-chosen prefix; it can
// only grow, so exceeding u_max prunes the whole branch.
void enumerate_rec(std::vector<Int>& cur, Int k, Int remaining, Int hi, Int u_max,
                   Int partial_u, const CurveParams& params,
                   std::vector<SplittingSequence>& out) {
  Int filled = static_cast<Int>(cur.size());
  if (filled == k) {
    if (remaining == 0) out.emplace_back(cur, params);
    return;
  }
  Int slots = k - filled;
  // Feasibility window for the next entry: nondecreasing, slots * next <=
  // remaining, and the remaining slots capped at hi must still reach the sum.
  Int lo_feas = remaining - checked_mul(hi, slots - 1);
  Int hi_feas = floor_div(remaining, slots);
  Int from = cur.empty() ? lo_feas : std::max(cur.back(), lo_feas);
  for (Int v = from; v <= hi_feas; ++v) {
    Int pu = partial_u;
    for (Int prev : cur) pu = checked_add(pu, std::max<Int>(0, v - prev - 1));
    if (pu > u_max) break;  // larger v only increases every gap
    cur.push_back(v);
    enumerate_rec(cur, k, remaining - v, hi, u_max, pu, params, out);
    cur.pop_back();
  }
}

std::vector<SplittingSequence> enumerate_with_first(CurveParams params, Int u_max,
                                                    Int first, Int hi) {
  std::vector<SplittingSequence> out;
  std::vector<Int> cur{first};
  enumerate_rec(cur, params.k, params.target_sum() - first, hi, u_max, 0, params, out);
  return out;
}

}  // namespace

StratificationTable enumerate_types(CurveParams params, std::optional<Int> u_max_opt,
                                    int threads) {
  if (params.k < 2) throw error(errc::precondition_fail, "enumeration requires k >= 2");
  Int u_max = u_max_opt.value_or(params.g);
  StratificationTable table;
  table.params = params;
  if (u_max < 0) return table;

  // Any single pair bounds the gap: e_k - e_1 <= u_max + 1, which combined
  // with the fixed sum pins every entry inside a window around S/k.
  Int S = params.target_sum();
  Int lo = ceil_div(S, params.k) - u_max - 1;
  Int hi = floor_div(S, params.k) + u_max + 1;

  std::vector<SplittingSequence> types;
  if (threads <= 1) {
    for (Int first = lo; first <= floor_div(S, params.k); ++first) {
      auto part = enumerate_with_first(params, u_max, first, hi);
      types.insert(types.end(), part.begin(), part.end());
    }
  } else {
    std::vector<std::future<std::vector<SplittingSequence>>> futs;
    for (Int first = lo; first <= floor_div(S, params.k); ++first)
      futs.push_back(std::async(std::launch::async, enumerate_with_first, params,
                                u_max, first, hi));
    for (auto& f : futs) {
      auto part = f.get();
      types.insert(types.end(), part.begin(), part.end());
    }
    std::sort(types.begin(), types.end());
  }

  for (auto& e : types) {
    Int u = u_invariant(e);
    table.u.push_back(u);
    table.dims.push_back(u <= params.g ? std::optional<Int>(params.g - u) : std::nullopt);
  }
  table.types = std::move(types);
  return table;
}

bool in_closure(const SplittingSequence& p, const SplittingSequence& e) {
  return dominates(p, e);
}

HasseDiagram hasse_diagram(const StratificationTable& table) {
  size_t n = table.types.size();
  // strictly-below matrix of the dominance order
  std::vector<std::vector<bool>> lt(n, std::vector<bool>(n, false));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (i != j && dominates(table.types[i], table.types[j])) lt[i][j] = true;

  HasseDiagram h;
  h.node_count = n;
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      if (!lt[i][j]) continue;
      bool covering = true;
      for (size_t q = 0; q < n && covering; ++q)
        if (lt[i][q] && lt[q][j]) covering = false;
      if (covering) h.edges.push_back({i, j});
    }
  }
  return h;
}

std::vector<SplittingSequence> specializations(const SplittingSequence& e, Int u_max) {
  StratificationTable all = enumerate_types(e.params(), u_max);
  std::vector<SplittingSequence> out;
  for (auto& p : all.types)
    if (dominates(p, e)) out.push_back(p);
  return out;
}

std::string table_to_json(const StratificationTable& table) {
  nlohmann::json j;
  j["params"] = {{"g", table.params.g}, {"k", table.params.k}, {"d", table.params.d}};
  j["types"] = nlohmann::json::array();
  j["u"] = nlohmann::json::array();
  j["dim"] = nlohmann::json::array();
  for (size_t i = 0; i < table.types.size(); ++i) {
    j["types"].push_back(table.types[i].entries());
    j["u"].push_back(table.u[i]);
    if (table.dims[i])
      j["dim"].push_back(*table.dims[i]);
    else
      j["dim"].push_back(nullptr);
  }
  return j.dump(2);
}

std::string hasse_to_dot(const StratificationTable& table, const HasseDiagram& h) {
  std::ostringstream os;
  os << "digraph hasse {\n";
  for (size_t i = 0; i < table.types.size(); ++i) {
    os << "  n" << i << " [label=\"" << to_string(table.types[i]);
    if (table.dims[i]) os << " dim " << *table.dims[i];
    os << "\"];\n";
  }
  // arrows point from the generic type down to its specializations
  for (const auto& e : h.edges) os << "  n" << e.upper << " -> n" << e.lower << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace hbn

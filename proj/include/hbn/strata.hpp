#ifndef HBN_STRATA_HPP
#define HBN_STRATA_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hbn/core.hpp"

namespace hbn {

// All splitting types for (g,k,d) with u <= u_max, in lexicographic order on
// entries. dims[i] is g - u only when the stratum is non-empty (u <= g).
struct StratificationTable {
  CurveParams params;
  std::vector<SplittingSequence> types;
  std::vector<Int> u;
  std::vector<std::optional<Int>> dims;
};

// Covering relations of the dominance order on a table. An edge stores
// (lower, upper) node indices with types[lower] < types[upper] and nothing in
// between.
struct HasseDiagram {
  struct Edge {
    size_t lower;
    size_t upper;
  };
  size_t node_count = 0;
  std::vector<Edge> edges;
};

// Branch-and-prune enumeration; u_max defaults to g. threads > 1 splits the
// work over the first entry and re-sorts, so output order is unchanged.
StratificationTable enumerate_types(CurveParams params,
                                    std::optional<Int> u_max = std::nullopt,
                                    int threads = 1);

// Equals dominates(p,e): the closure of the stratum of e is the union of the
// strata of the dominated types.
bool in_closure(const SplittingSequence& p, const SplittingSequence& e);

HasseDiagram hasse_diagram(const StratificationTable& table);

// All p <= e with u(p) <= u_max, lexicographic order.
std::vector<SplittingSequence> specializations(const SplittingSequence& e, Int u_max);

std::string table_to_json(const StratificationTable& table);
std::string hasse_to_dot(const StratificationTable& table, const HasseDiagram& h);

}  // namespace hbn

#endif

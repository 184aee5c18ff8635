#ifndef HBN_COMPLETION_HPP
#define HBN_COMPLETION_HPP

#include <optional>
#include <vector>

#include "hbn/core.hpp"

namespace hbn {

// Balanced completion e[lvl]: entries at and above the threshold index are
// kept, the rest are redistributed as evenly as possible.
struct CompletionResult {
  Int level;
  Int threshold_index;  // i(e, lvl), in 1..k+1
  SplittingSequence completed;
};

// i(e, lvl): k+1 if e_k < lvl, otherwise the least i with lvl <= e_i.
Int threshold_index(const SplittingSequence& e, Int lvl);

// Nondecreasing tuple of length `slots` summing to `total` with max-min <= 1.
std::vector<Int> balanced_fill(Int total, Int slots);

CompletionResult complete(const SplittingSequence& e, Int lvl);

// E = min{ e_i : e_i >= e_1+2 }, or nullopt when that set is empty (then
// e[lvl] = e for every lvl).
std::optional<Int> completion_threshold_E(const SplittingSequence& e);

// Membership of p in the open set Sigma^o_{e[lvl]}: p <= e[lvl], p agrees
// with e at and above the threshold index, and stays strictly below lvl
// underneath it.
bool in_open_stratum(const SplittingSequence& e, Int lvl, const SplittingSequence& p);

}  // namespace hbn

#endif

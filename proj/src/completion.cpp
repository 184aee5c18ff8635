#include "hbn/completion.hpp"

namespace hbn {

Int threshold_index(const SplittingSequence& e, Int lvl) {
  if (e.back() < lvl) return e.k() + 1;
  for (Int i = 1; i <= e.k(); ++i)
    if (lvl <= e.at(i)) return i;
  return e.k() + 1;  // unreachable
}

std::vector<Int> balanced_fill(Int total, Int slots) {
  if (slots < 1) throw error(errc::precondition_fail, "balanced_fill requires slots >= 1");
  // Floor division so that negative totals fill correctly.
  Int q = total / slots;
  if (total % slots != 0 && (total < 0) != (slots < 0)) --q;
  Int rem = total - q * slots;  // 0 <= rem < slots
  std::vector<Int> out(static_cast<size_t>(slots), q);
  for (Int i = slots - rem; i < slots; ++i) out[static_cast<size_t>(i)] = q + 1;
  return out;
}

CompletionResult complete(const SplittingSequence& e, Int lvl) {
  Int i = threshold_index(e, lvl);
  if (i <= 2) return {lvl, i, e};  // prefix of length <= 1 cannot change
  Int prefix_sum = 0;
  for (Int j = 1; j < i; ++j) prefix_sum += e.at(j);
  std::vector<Int> v = balanced_fill(prefix_sum, i - 1);
  for (Int j = i; j <= e.k(); ++j) v.push_back(e.at(j));
  return {lvl, i, SplittingSequence(std::move(v), e.params())};
}

std::optional<Int> completion_threshold_E(const SplittingSequence& e) {
  std::optional<Int> best;
  for (Int ei : e.entries())
    if (ei >= e.front() + 2 && (!best || ei < *best)) best = ei;
  return best;
}

bool in_open_stratum(const SplittingSequence& e, Int lvl, const SplittingSequence& p) {
  if (!(p.params() == e.params()))
    throw error(errc::param_mismatch, "sequences over different (g,k,d)");
  CompletionResult c = complete(e, lvl);
  if (!dominates(p, c.completed)) return false;
  for (Int j = 1; j <= e.k(); ++j) {
    if (j >= c.threshold_index) {
      if (p.at(j) != e.at(j)) return false;
    } else {
      if (p.at(j) >= lvl) return false;
    }
  }
  return true;
}

}  // namespace hbn

#include "hbn/core.hpp"

#include <algorithm>
#include <sstream>

namespace hbn {

const char* errc_name(errc c) {
  switch (c) {
    case errc::sum_mismatch: return "SumMismatch";
    case errc::length_mismatch: return "LengthMismatch";
    case errc::param_mismatch: return "ParamMismatch";
    case errc::range_error: return "RangeError";
    case errc::degenerate_sequence: return "DegenerateSequence";
    case errc::rank_too_low: return "RankTooLow";
    case errc::not_in_v: return "NotInV";
    case errc::wrong_class: return "WrongClass";
    case errc::precondition_fail: return "PreconditionFail";
    case errc::overflow: return "Overflow";
    case errc::internal_equivalence_violation: return "InternalEquivalenceViolation";
    case errc::internal_threshold_violation: return "InternalThresholdViolation";
  }
  return "UnknownError";
}

Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r))
    throw error(errc::overflow, "integer overflow in addition");
  return r;
}

Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r))
    throw error(errc::overflow, "integer overflow in multiplication");
  return r;
}

SplittingSequence::SplittingSequence(std::vector<Int> entries, CurveParams params)
    : entries_(std::move(entries)), params_(params) {
  if (static_cast<Int>(entries_.size()) != params_.k)
    throw error(errc::length_mismatch,
                "expected " + std::to_string(params_.k) + " entries, got " +
                    std::to_string(entries_.size()));
  std::sort(entries_.begin(), entries_.end());
  Int sum = 0;
  for (Int e : entries_) sum = checked_add(sum, e);
  if (sum != params_.target_sum())
    throw error(errc::sum_mismatch,
                "entries sum to " + std::to_string(sum) + ", expected d-g+1-k = " +
                    std::to_string(params_.target_sum()));
}

SplittingSequence make_sequence(std::vector<Int> entries, CurveParams params) {
  return SplittingSequence(std::move(entries), params);
}

std::string to_string(const SplittingSequence& e) {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < e.entries().size(); ++i) {
    if (i) os << ',';
    os << e.entries()[i];
  }
  os << ')';
  return os.str();
}

Int u_invariant(const SplittingSequence& e) {
  const auto& v = e.entries();
  Int u = 0;
  for (size_t i = 0; i < v.size(); ++i)
    for (size_t j = i + 1; j < v.size(); ++j)
      u = checked_add(u, std::max<Int>(0, v[j] - v[i] - 1));
  return u;
}

Int h0(const SplittingSequence& e, Int n) {
  Int s = 0;
  for (Int ej : e.entries()) s = checked_add(s, std::max<Int>(0, ej + n + 1));
  return s;
}

Int h1(const SplittingSequence& e, Int n) {
  Int s = 0;
  for (Int ej : e.entries()) s = checked_add(s, std::max<Int>(0, -(ej + n + 1)));
  return s;
}

Int r_of_n(const SplittingSequence& e, Int n) { return h0(e, n) - 1; }

bool dominates(const SplittingSequence& p, const SplittingSequence& e) {
  if (!(p.params() == e.params()))
    throw error(errc::param_mismatch, "sequences over different (g,k,d)");
  Int sp = 0, se = 0;
  for (Int l = 0; l < p.k(); ++l) {
    sp += p.entries()[static_cast<size_t>(l)];
    se += e.entries()[static_cast<size_t>(l)];
    if (sp > se) return false;
  }
  return true;
}

Int rho(Int g, Int r, Int d) {
  if (r < 0) throw error(errc::precondition_fail, "rho requires r >= 0");
  return g - checked_mul(r + 1, g - d + r);
}

std::optional<Int> dim_sigma(const SplittingSequence& e) {
  Int u = u_invariant(e);
  if (u > e.params().g) return std::nullopt;
  return e.params().g - u;
}

bool petri_injective(const SplittingSequence& e) {
  return e.back() <= 0 || e.front() >= -2;
}

Int pencil_trick_image_dim(const SplittingSequence& e, Int m) {
  if (m < 1) throw error(errc::precondition_fail, "pencil trick requires m >= 1");
  return checked_mul(m + 1, h0(e, 0)) - checked_mul(m, h0(e, -1));
}

SplittingSequence shift(const SplittingSequence& e, Int c) {
  std::vector<Int> v = e.entries();
  for (Int& x : v) x = checked_add(x, c);
  CurveParams p = e.params();
  p.d = checked_add(p.d, checked_mul(c, p.k));
  return SplittingSequence(std::move(v), p);
}

}  // namespace hbn

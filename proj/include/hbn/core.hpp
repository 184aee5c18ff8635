#ifndef HBN_CORE_HPP
#define HBN_CORE_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hbn {

using Int = long long;

enum class errc {
  sum_mismatch,
  length_mismatch,
  param_mismatch,
  range_error,
  degenerate_sequence,
  rank_too_low,
  not_in_v,
  wrong_class,
  precondition_fail,
  overflow,
  internal_equivalence_violation,
  internal_threshold_violation,
};

class error : public std::runtime_error {
public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const { return code_; }

private:
  errc code_;
};

const char* errc_name(errc c);

// Overflow-checked arithmetic. Wraparound is never acceptable here.
Int checked_add(Int a, Int b);
Int checked_mul(Int a, Int b);

// The triple (g, k, d): genus, degree of the covering of P^1, degree of the
// line bundles under consideration.
struct CurveParams {
  Int g = 0;
  Int k = 2;
  Int d = 0;

  // d - g + 1 - k, the forced sum of every splitting sequence.
  Int target_sum() const { return d - g + 1 - k; }

  // The general-gonality results assume k < floor((g+3)/2). Outside that
  // range the combinatorics still make sense, so this is a warning, not an
  // error.
  bool outside_generic_range() const { return k >= (g + 3) / 2; }

  friend bool operator==(const CurveParams&, const CurveParams&) = default;
};

// A nondecreasing integer k-tuple with entries summing to d-g+1-k. Input is
// treated as a multiset; construction sorts.
class SplittingSequence {
public:
  SplittingSequence(std::vector<Int> entries, CurveParams params);

  const std::vector<Int>& entries() const { return entries_; }
  const CurveParams& params() const { return params_; }
  Int k() const { return static_cast<Int>(entries_.size()); }

  // 1-based access matching the usual e_1 <= ... <= e_k indexing.
  Int at(Int i) const { return entries_.at(static_cast<size_t>(i - 1)); }
  Int front() const { return entries_.front(); }
  Int back() const { return entries_.back(); }

  friend bool operator==(const SplittingSequence& a, const SplittingSequence& b) {
    return a.params_ == b.params_ && a.entries_ == b.entries_;
  }
  // Lexicographic order on entries; used for deterministic output only.
  friend std::strong_ordering operator<=>(const SplittingSequence& a,
                                          const SplittingSequence& b) {
    return a.entries_ <=> b.entries_;
  }

private:
  std::vector<Int> entries_;
  CurveParams params_;
};

SplittingSequence make_sequence(std::vector<Int> entries, CurveParams params);

std::string to_string(const SplittingSequence& e);

// u(e) = sum over i<j of max(0, e_j - e_i - 1); the codimension of the
// stratum of e in Pic^d.
Int u_invariant(const SplittingSequence& e);

// Sum of max(0, e_j + n + 1); equals h^0(C, L+nM) at a general point of the
// stratum of e on a general k-gonal curve.
Int h0(const SplittingSequence& e, Int n);

// Sum of max(0, -(e_j + n + 1)); satisfies h0 - h1 = d + nk - g + 1.
Int h1(const SplittingSequence& e, Int n);

Int r_of_n(const SplittingSequence& e, Int n);

// Prefix-sum dominance: p <= e. Throws param_mismatch if the two sequences
// live over different (g, k, d).
bool dominates(const SplittingSequence& p, const SplittingSequence& e);

// Brill-Noether number g - (r+1)(g-d+r).
Int rho(Int g, Int r, Int d);

// g - u(e) when the stratum is non-empty (u <= g), otherwise nullopt.
std::optional<Int> dim_sigma(const SplittingSequence& e);

// Injectivity of the Petri map at a general point of the stratum:
// e_k <= 0 or e_1 >= -2.
bool petri_injective(const SplittingSequence& e);

// Rank of the multiplication H^0(L) (x) S^m H^0(M) -> H^0(L+mM) at a general
// point: (m+1) h0(e,0) - m h0(e,-1).
Int pencil_trick_image_dim(const SplittingSequence& e, Int m);

// All entries shifted by c, degree shifted by c*k.
SplittingSequence shift(const SplittingSequence& e, Int c);

}  // namespace hbn

#endif

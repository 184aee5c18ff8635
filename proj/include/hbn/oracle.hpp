#ifndef HBN_ORACLE_HPP
#define HBN_ORACLE_HPP

#include <string>
#include <vector>

#include "hbn/core.hpp"

namespace hbn {

struct VerificationFailure {
  std::string input;
  std::string expected;
  std::string got;
};

struct VerificationReport {
  std::string suite;
  long long cases = 0;
  std::vector<VerificationFailure> failures;

  bool passed() const { return failures.empty(); }
};

std::string report_to_json(const VerificationReport& r);

// First-principles recomputations used as differential oracles. These stay
// deliberately naive and share no code with the modules they check.
namespace oracle {
Int naive_u(const std::vector<Int>& v);
Int naive_h0(const std::vector<Int>& v, Int n);
bool naive_dominates(const std::vector<Int>& p, const std::vector<Int>& e);
// Balanced completion built by unit redistribution instead of division.
std::vector<Int> naive_complete(const std::vector<Int>& v, Int lvl);
}  // namespace oracle

VerificationReport verify_lemma2(CurveParams params, Int u_max);
VerificationReport verify_v_equivalence(CurveParams params, Int r);
VerificationReport verify_dominance_axioms(CurveParams params, Int u_max);
VerificationReport verify_pencil_inequality(CurveParams params, Int u_max, Int m_max);
VerificationReport replay_worked_examples();

}  // namespace hbn

#endif

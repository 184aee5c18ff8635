#ifndef HBN_SMOOTHNESS_HPP
#define HBN_SMOOTHNESS_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hbn/components.hpp"
#include "hbn/core.hpp"

namespace hbn {

enum class VerdictStatus { CertifiedSmooth, CertifiedSingular, Unknown };
enum class SingularReason { None, MultipleComponents, HigherRank, PetriKernel };
enum class Statement {
  None,
  TheoremA,
  TheoremB,
  TheoremC,
  Cor3_1,
  Prop3,
  Prop4,
  Prop5,
  Prop5_1,
  PropE1,
  Prop5_2,
  Cor2,
};

const char* status_name(VerdictStatus s);
const char* reason_name(SingularReason r);
const char* statement_name(Statement s);

// The scheme the verdict speaks about. The same point can be smooth in a
// degeneracy scheme and singular in the Brill-Noether scheme, so this is
// always explicit.
struct Ambient {
  enum class Kind { DegeneracyScheme, BrillNoetherScheme } kind;
  std::optional<SplittingSequence> sequence;  // for DegeneracyScheme
  Int r = 0, d = 0;                           // for BrillNoetherScheme
};

Ambient degeneracy_ambient(SplittingSequence e);
Ambient brill_noether_ambient(Int r, Int d);

struct Verdict {
  VerdictStatus status = VerdictStatus::Unknown;
  Ambient ambient;
  Statement justification = Statement::None;
  SingularReason reason = SingularReason::None;
  std::vector<SplittingSequence> witnesses;  // e.g. a second component
};

std::string verdict_to_json(const SplittingSequence& point, const Verdict& v);

// The set of twist levels n whose Fitting ideals cut out the degeneracy
// scheme locally near the balanced-bottom open set: n <= -E, -n an entry of
// (e_2, ..., e_k).
struct FittingLevels {
  std::vector<Int> levels;  // sorted ascending, distinct
};

FittingLevels local_fitting_levels(const SplittingSequence& e);

// u(e[lvl_lo]) - u(e[lvl_hi]): number of local equations cutting the deeper
// completion out of the shallower one.
Int local_equation_count(const SplittingSequence& e, Int lvl_lo, Int lvl_hi);

// t * (sum_{e_j >= lvl}(e_j - lvl + 2) + t - d + k(lvl-1) + g - 1) with
// t = #{ i : e_i = lvl - 1 }; equals u(e[lvl-1]) - u(e[lvl]).
Int lemma2_rhs(const SplittingSequence& e, Int lvl);

Verdict certified_smooth_in_closure(const SplittingSequence& e, Int lvl,
                                    const SplittingSequence& p);

// Isolated-run perturbations: for each maximal run of >= 2 equal entries with
// strict gaps on both sides and each 1 <= l <= run/2, lower l entries by one
// and raise l by one. u grows by exactly l^2 and the result is a certified
// smooth point of the closure when its stratum is non-empty.
std::vector<std::pair<SplittingSequence, Int>> run_smoothing_pairs(const SplittingSequence& e);

Verdict classify_in_W(const SplittingSequence& p, Int r);

// Theorem B trichotomy on a component with b >= 2: smooth iff the generic
// section count h0(p,1) = 2r+2-l is attained.
Verdict theoremB_classify(const Component& c, const SplittingSequence& p);

Verdict typeI_smooth_locus(const Component& c, const SplittingSequence& p);

std::optional<Component> typeI_second_component(const Component& c);

std::optional<SplittingSequence> typeI_singular_unique_witness(const Component& c);

// Outcome of pushing a smooth point of W^r_d forward by M when some entry
// equals -2 but none equals -1: either the translated component is not a
// component, or the translate sits on two components.
struct TranslateDichotomy {
  SplittingSequence alternative;  // the constructed competing sequence e'
  std::string option_one;
  std::string option_two;
};

std::variant<Verdict, TranslateDichotomy> translate_smoothness(const SplittingSequence& p, Int r);

Verdict typeII_smooth(const Component& c, const SplittingSequence& p);

}  // namespace hbn

#endif

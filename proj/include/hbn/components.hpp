#ifndef HBN_COMPONENTS_HPP
#define HBN_COMPONENTS_HPP

#include <optional>
#include <string>
#include <vector>

#include "hbn/core.hpp"

namespace hbn {

// Parametrization of a balanced-plus-balanced sequence:
// ((-b-1)^x, (-b)^y, a^m1, (a+1)^m2).  The two multiplicities of the
// non-negative part are named m1, m2 so they cannot collide with u(e).
struct BalancedType {
  Int a = 0;   // >= 0
  Int b = 1;   // >= 1
  Int x = 0;
  Int y = 0;   // > 0
  Int m1 = 0;  // > 0
  Int m2 = 0;  // >= 0

  friend bool operator==(const BalancedType&, const BalancedType&) = default;
};

enum class ComponentClass { I, II, III };

const char* class_name(ComponentClass c);

// An irreducible component of W^r_d(C).
struct Component {
  BalancedType btype;
  Int r = 0;
  CurveParams params;
  SplittingSequence sequence;  // the expansion of btype
  Int dim = 0;                 // g - u(sequence); 0 means isolated points when u = g
  ComponentClass cls = ComponentClass::I;
  Int l = 0;                   // V-parameter: a*m1 + (a+1)*m2
};

SplittingSequence expand(const BalancedType& b, CurveParams params);

// The B-parametrization of e when e is balanced plus balanced, else nullopt.
std::optional<BalancedType> balanced_plus_balanced(const SplittingSequence& e);

// All irreducible components of W^r_d for these parameters, in lexicographic
// order of their sequences.
std::vector<Component> components_of_W(CurveParams params, Int r);

ComponentClass component_class(const Component& c);

std::vector<Component> components_containing(const SplittingSequence& p, Int r);

struct VParams {
  Int r, d, l;
};
VParams v_parameters(const Component& c);

// Membership in V^r_{d,l} via the h^0 equalities; cross-checked against
// Sigma^o_{e[0]} membership, a mismatch being an internal error.
bool in_V(const SplittingSequence& p, const Component& c);

bool w_membership(const SplittingSequence& p, Int r);

std::string components_to_json(CurveParams params, Int r,
                               const std::vector<Component>& comps);

}  // namespace hbn

#endif

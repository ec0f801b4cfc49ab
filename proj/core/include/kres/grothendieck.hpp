#ifndef KRES_GROTHENDIECK_HPP
#define KRES_GROTHENDIECK_HPP

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kres/pairdata.hpp"

namespace kres {

enum class GroupSide { Complex, Real };

std::string group_side_label(GroupSide side);

// Which continuous parameter the restriction map assigns to the image of a
// complex principal-series class.  HalfSum is the default; Nu is the variant
// convention kept behind a flag for experimentation.
enum class ContinuousConvention { HalfSum, Nu };

ContinuousConvention parse_convention(const std::string& label);  // UsageError
std::string convention_label(ContinuousConvention c);

// Principal-series parameter of the complex group: a lattice character and a
// continuous parameter.
struct ComplexPSParam {
  Weight lambda;
  RationalWeight nu;
  auto operator<=>(const ComplexPSParam&) const = default;
};

// Principal-series parameter of the split real form: a character of M (as
// lambda mod 2 in fundamental-weight coordinates) and a continuous parameter.
struct RealPSParam {
  std::vector<int> lambda_bar;  // entries in {0,1}
  RationalWeight nu;
  auto operator<=>(const RealPSParam&) const = default;
};

// Canonical form: the lexicographically-greatest element of the simultaneous
// W-orbit {(w lambda, w nu)}, so a rank-one spherical image is labelled by
// the non-negative continuous parameter.
ComplexPSParam canonicalize(const SymmetricPairData& pair, const ComplexPSParam& p);
RealPSParam canonicalize(const SymmetricPairData& pair, const RealPSParam& p);

// Element of the Grothendieck group in the principal-series basis; parameters
// are stored in canonical form with nonzero integer coefficients.
class StandardClass {
public:
  StandardClass() = default;
  explicit StandardClass(GroupSide side) : side_(side) {}

  GroupSide side() const { return side_; }
  bool is_zero() const { return complex_terms_.empty() && real_terms_.empty(); }

  const std::map<ComplexPSParam, i64>& complex_terms() const { return complex_terms_; }
  const std::map<RealPSParam, i64>& real_terms() const { return real_terms_; }

  // Accumulate one basis class; canonicalizes first.
  void add(const SymmetricPairData& pair, const ComplexPSParam& p, i64 mult);
  void add(const SymmetricPairData& pair, const RealPSParam& p, i64 mult);

  StandardClass& operator+=(const StandardClass& o);
  bool operator==(const StandardClass& o) const;

private:
  GroupSide side_ = GroupSide::Complex;
  std::map<ComplexPSParam, i64> complex_terms_;
  std::map<RealPSParam, i64> real_terms_;
};

// Infinitesimal character, stored as dominant orbit representatives (a pair
// of them on the complex side).
struct InfinitesimalCharacter {
  GroupSide side = GroupSide::Complex;
  RationalWeight left;
  RationalWeight right;  // complex side only
  bool operator==(const InfinitesimalCharacter&) const = default;
};

InfinitesimalCharacter inf_char_complex(const SymmetricPairData& pair, const ComplexPSParam& p);
InfinitesimalCharacter inf_char_real(const SymmetricPairData& pair, const RealPSParam& p);

// Image of one complex basis parameter under the restriction map.
RealPSParam restrict_basis_param(const SymmetricPairData& pair, const ComplexPSParam& p,
                                 ContinuousConvention convention);

// The restriction homomorphism on the principal-series basis.
// WrongSide unless x is a complex-side class; NotSplit for compact pairs.
StandardClass restriction_hom(const SymmetricPairData& pair, const StandardClass& x,
                              ContinuousConvention convention = ContinuousConvention::HalfSum);

// Tensor with the finite-dimensional class attached to a dominant eps:
// sum over the weight multiset of V(eps).
StandardClass tensor_with_finite_complex(const SymmetricPairData& pair, const StandardClass& x,
                                         const Weight& eps);
StandardClass tensor_with_finite_real(const SymmetricPairData& pair, const StandardClass& x,
                                      const Weight& eps);

// K-multiplicities in principal series (independent of nu on both sides).
i64 ktype_mult_complex(const SymmetricPairData& pair, const Weight& lambda, const Weight& tau);
i64 ktype_mult_real(const SymmetricPairData& pair, const RealPSParam& p, const Weight& tau);

// ---- verification harness ----

struct TranslationMismatch {
  ComplexPSParam base;
  Weight eps;
  bool operator==(const TranslationMismatch&) const = default;
};

struct TranslationReport {
  std::string pair_name;
  i64 lambda_bound = 0, eps_bound = 0;
  std::size_t checked = 0;
  std::vector<TranslationMismatch> mismatches;
  bool pass() const { return mismatches.empty(); }
};

std::vector<RationalWeight> standard_nu_values(const SymmetricPairData& pair);

// Commutation of restriction with translation:
//   restrict(x (x) F_C(eps)) = restrict(x) (x) F_R(eps)
// over the exhaustive grid |lambda|, |eps| <= bound.
TranslationReport verify_translation_commutes(
    const SymmetricPairData& pair, i64 lambda_bound, i64 eps_bound,
    const std::vector<RationalWeight>& nus,
    ContinuousConvention convention = ContinuousConvention::HalfSum);

struct InfCharMismatch {
  ComplexPSParam base;
  RationalWeight expected_left;
  RationalWeight got;
  bool operator==(const InfCharMismatch&) const = default;
};

struct InfCharReport {
  std::string pair_name;
  i64 lambda_bound = 0;
  std::size_t checked = 0;
  std::vector<InfCharMismatch> mismatches;
  bool pass() const { return mismatches.empty(); }
};

// The infinitesimal character of the image equals the left component of the
// input's infinitesimal character, as W-orbits.  The grid is augmented with
// seeded random rational nu.
InfCharReport verify_infchar_compat(const SymmetricPairData& pair, i64 lambda_bound,
                                    const std::vector<RationalWeight>& nus,
                                    std::size_t random_count, unsigned seed,
                                    ContinuousConvention convention = ContinuousConvention::HalfSum);

struct SphericalMismatch {
  Weight tau;
  i64 frobenius = 0;     // (a) Frobenius over M for the spherical parameter
  i64 theta_sheaf = 0;   // (b) q->1 totals of the theta-cone structure sheaf
  i64 restricted = 0;    // (c) q->1 totals of the restricted complex-cone sheaf
  bool operator==(const SphericalMismatch&) const = default;
};

struct SphericalReport {
  std::string pair_name;
  i64 bound = 0, truncation = 0;
  std::size_t checked = 0;
  std::vector<SphericalMismatch> mismatches;
  bool pass() const { return mismatches.empty(); }
};

// Three independent pipelines for the K-types of the spherical class must
// agree for every K-type label within the bound.
SphericalReport spherical_ktype_crosscheck(const SymmetricPairData& pair, i64 bound,
                                           i64 truncation);

}  // namespace kres

#endif

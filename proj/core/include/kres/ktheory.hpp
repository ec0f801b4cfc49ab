#ifndef KRES_KTHEORY_HPP
#define KRES_KTHEORY_HPP

#include <map>
#include <vector>

#include "kres/characters.hpp"
#include "kres/pairdata.hpp"

namespace kres {

enum class ConeSide {
  ComplexCone,  // the anti-diagonal cone inside (g x g / g_Delta)^*
  RealCone      // the theta-stable cone inside (g/k)^*
};

std::string cone_side_label(ConeSide side);

// Class in graded equivariant K-theory, recorded through its graded
// K-character.  Degrees up to exact_through are exact; beyond that the stored
// coefficients are conservative bookkeeping only and must not be compared.
struct GradedKClass {
  ConeSide side = ConeSide::ComplexCone;
  GradedVirtualCharacter series;
  i64 exact_through = 0;

  i64 truncation() const { return series.truncation(); }
};

// Alternating sum of exterior powers of k, with k in degree 1.  Multiplying
// by this class computes the restriction map on graded K-theory.
struct KoszulClass {
  GradedVirtualCharacter series;
};

// TruncationTooSmall unless truncation >= dim k.
KoszulClass koszul_class(const SymmetricPairData& pair, i64 truncation);

// Structure sheaf of the anti-diagonal nilpotent cone: graded character of
// S(g)|_K times prod_i (1 - q^{d_i})  (complete intersection on the basic
// invariants).
GradedKClass nilcone_complex_structure_sheaf(const SymmetricPairData& pair, i64 truncation);

// Structure sheaf of the theta-stable nilpotent cone: graded character of
// S(p) times the same invariant factor.  NotSplit for compact pairs.
GradedKClass nilcone_theta_structure_sheaf(const SymmetricPairData& pair, i64 truncation);

// Multiplication by the Koszul class; WrongSide unless the input lives on the
// complex cone.  The output is exact through (exact_through - dim k).
GradedKClass restrict_R(const GradedKClass& cls, const SymmetricPairData& pair);

// Per-K-type totals at q -> 1.  Requires each requested K-type's coefficient
// polynomial to have stabilized (identically zero above the exact window);
// otherwise TruncationTooSmall naming the offending K-type.
std::map<Weight, i64> qone_ktype_totals(const GradedKClass& cls,
                                        const SymmetricPairData& pair, i64 bound);

struct KTheoryMismatch {
  Weight tau;
  i64 degree = 0;
  i64 lhs = 0, rhs = 0;
};

struct SplitIdentityReport {
  std::string pair_name;
  i64 truncation = 0, bound = 0;
  i64 window = 0;  // degrees 0..window were compared
  std::vector<KTheoryMismatch> mismatches;

  bool pass() const { return mismatches.empty(); }
};

// Compares restrict_R of the complex-cone structure sheaf with the
// theta-cone structure sheaf on the guaranteed-exact window.
SplitIdentityReport verify_split_proposition(const SymmetricPairData& pair, i64 truncation,
                                             i64 bound);

// Internal consistency: graded character of S(g)|_K times the Koszul class
// equals the graded character of S(p), through the exact window.
SplitIdentityReport verify_free_module_identity(const SymmetricPairData& pair,
                                                i64 truncation, i64 bound);

}  // namespace kres

#endif

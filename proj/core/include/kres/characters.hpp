#ifndef KRES_CHARACTERS_HPP
#define KRES_CHARACTERS_HPP

#include <map>
#include <memory>
#include <vector>

#include "kres/rootdata.hpp"

namespace kres {

// Integer polynomial in q, dense coefficients, trailing zeros trimmed.
using Poly = std::vector<i64>;

Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b, i64 truncation);
Poly poly_monomial(i64 coeff, i64 degree);
void poly_trim(Poly& p);
i64 poly_coeff(const Poly& p, i64 degree);
i64 poly_eval_at_one(const Poly& p);
i64 poly_degree(const Poly& p);  // -1 for the zero polynomial

// Virtual character of the group behind a RootDatum, stored in the
// irreducible basis: dominant highest weight -> integer multiplicity.
class VirtualKCharacter {
public:
  VirtualKCharacter() = default;
  explicit VirtualKCharacter(std::shared_ptr<const RootDatum> rd) : rd_(std::move(rd)) {}

  static VirtualKCharacter trivial(std::shared_ptr<const RootDatum> rd);
  static VirtualKCharacter irreducible(std::shared_ptr<const RootDatum> rd,
                                       const Weight& highest, i64 mult = 1);

  const std::shared_ptr<const RootDatum>& datum() const { return rd_; }
  const std::map<Weight, i64>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  i64 mult(const Weight& highest) const;

  void add_term(const Weight& highest, i64 mult);  // drops zeros, checks dominance

  VirtualKCharacter& operator+=(const VirtualKCharacter& o);
  VirtualKCharacter& operator-=(const VirtualKCharacter& o);
  VirtualKCharacter operator+(const VirtualKCharacter& o) const;
  VirtualKCharacter operator-(const VirtualKCharacter& o) const;
  VirtualKCharacter operator*(i64 k) const;
  bool operator==(const VirtualKCharacter& o) const;

  i64 dimension() const;

private:
  std::shared_ptr<const RootDatum> rd_;
  std::map<Weight, i64> terms_;
};

// Graded virtual character: dominant weight -> integer polynomial in q,
// truncated at a fixed degree.
class GradedVirtualCharacter {
public:
  GradedVirtualCharacter() = default;
  GradedVirtualCharacter(std::shared_ptr<const RootDatum> rd, i64 truncation)
      : rd_(std::move(rd)), truncation_(truncation) {}

  const std::shared_ptr<const RootDatum>& datum() const { return rd_; }
  i64 truncation() const { return truncation_; }
  const std::map<Weight, Poly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Weight& highest, const Poly& p);
  void add_term(const Weight& highest, i64 coeff, i64 degree);
  i64 coefficient(const Weight& highest, i64 degree) const;

  // Character of the degree-n piece.
  VirtualKCharacter coefficient_char(i64 degree) const;
  // dim of the degree-n piece (virtual dimension).
  i64 dimension_at(i64 degree) const;

  GradedVirtualCharacter& operator+=(const GradedVirtualCharacter& o);
  GradedVirtualCharacter operator+(const GradedVirtualCharacter& o) const;
  GradedVirtualCharacter operator-(const GradedVirtualCharacter& o) const;
  bool operator==(const GradedVirtualCharacter& o) const;

  // Product truncated at this->truncation(); irreducibles are multiplied with
  // tensor_decompose.
  GradedVirtualCharacter times(const GradedVirtualCharacter& o) const;
  GradedVirtualCharacter times_scalar_poly(const Poly& p) const;

private:
  std::shared_ptr<const RootDatum> rd_;
  i64 truncation_ = 0;
  std::map<Weight, Poly> terms_;
};

// Class function on an elementary abelian 2-group, indexed by bitmask over
// the chosen generators.
struct TwoGroupCharacter {
  int rank = 0;
  std::vector<i64> values;  // size 1 << rank

  static TwoGroupCharacter trivial(int rank);

  i64 at_identity() const { return values.at(0); }
  bool operator==(const TwoGroupCharacter&) const = default;

  TwoGroupCharacter operator+(const TwoGroupCharacter& o) const;
  TwoGroupCharacter operator*(const TwoGroupCharacter& o) const;

  // Fourier coefficients: multiplicity of each sign character (indexed by
  // bitmask c with chi_c(m_S) = (-1)^popcount(c & S)).
  std::vector<i64> irreducible_multiplicities() const;
  bool is_character() const;  // all multiplicities non-negative integers
};

// ---- operations ----

// Weyl dimension formula.  NotDominant if the weight is not dominant.
i64 irr_dimension(const RootDatum& rd, const Weight& highest);

// dim V(highest)[mu] by the Freudenthal recursion; 0 off the weight polytope.
i64 weight_multiplicity(const RootDatum& rd, const Weight& highest, const Weight& mu);

// Same contract as weight_multiplicity, by the alternating-sum formula over
// the Weyl group with the partition function.  Kept algorithmically
// independent so the two can be cross-checked.
i64 kostant_multiplicity(const RootDatum& rd, const Weight& highest, const Weight& mu);

// Number of ways to write v as a non-negative integer combination of the
// positive roots.
i64 kostant_partition(const RootDatum& rd, const Weight& v);

// Full weight multiset of the irreducible with the given highest weight.
const std::map<Weight, i64>& weight_multiset(const RootDatum& rd, const Weight& highest);

// Weight multiset of a virtual character.
std::map<Weight, i64> weight_multiset(const VirtualKCharacter& ch);

// Inverse conversion: W-invariant weight multiset -> irreducible basis.
VirtualKCharacter character_from_weights(std::shared_ptr<const RootDatum> rd,
                                         const std::map<Weight, i64>& weights);

VirtualKCharacter tensor_decompose(const VirtualKCharacter& a, const VirtualKCharacter& b);

// Adams operation psi^k: scales the weight multiset by k.
VirtualKCharacter adams(const VirtualKCharacter& ch, i64 k);

// Newton's identity over the Adams operations.
VirtualKCharacter exterior_power(const VirtualKCharacter& ch, i64 k);
VirtualKCharacter symmetric_power(const VirtualKCharacter& ch, i64 k);

// Graded character of S(V) through degree D (coefficient of q^n is ch S^n V).
GradedVirtualCharacter symmetric_algebra_series(const VirtualKCharacter& ch, i64 truncation);

}  // namespace kres

#endif

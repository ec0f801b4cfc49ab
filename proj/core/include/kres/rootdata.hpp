#ifndef KRES_ROOTDATA_HPP
#define KRES_ROOTDATA_HPP

#include <compare>
#include <memory>
#include <string>
#include <vector>

#include "kres/numeric.hpp"

namespace kres {

// Integral weight, written in the coordinate system fixed by its root datum
// (fundamental-weight coordinates for the group data; a documented per-datum
// chart for the maximal-compact data).
struct Weight {
  std::vector<i64> c;

  Weight() = default;
  explicit Weight(std::vector<i64> coords) : c(std::move(coords)) {}

  std::size_t rank() const { return c.size(); }
  auto operator<=>(const Weight&) const = default;

  Weight operator+(const Weight& o) const;
  Weight operator-(const Weight& o) const;
  Weight operator-() const;
  Weight operator*(i64 k) const;
  bool is_zero() const;
  std::string str() const;
};

// Point of the rational span of the weight lattice; exact rationals only.
struct RationalWeight {
  std::vector<Rat> c;

  RationalWeight() = default;
  explicit RationalWeight(std::vector<Rat> coords) : c(std::move(coords)) {}
  static RationalWeight of(const Weight& w);

  std::size_t rank() const { return c.size(); }
  bool operator==(const RationalWeight&) const = default;
  std::strong_ordering operator<=>(const RationalWeight& o) const;

  RationalWeight operator+(const RationalWeight& o) const;
  RationalWeight operator-(const RationalWeight& o) const;
  RationalWeight operator*(const Rat& k) const;
  bool is_integral() const;
  Weight to_weight() const;  // internal_check: integral
  std::string str() const;
};

// Square integer matrix acting on weight coordinates.
struct IntMatrix {
  std::vector<std::vector<i64>> m;

  IntMatrix() = default;
  static IntMatrix identity(std::size_t n);

  std::size_t size() const { return m.size(); }
  bool operator==(const IntMatrix&) const = default;
  auto operator<=>(const IntMatrix&) const = default;

  IntMatrix operator*(const IntMatrix& o) const;
  Weight apply(const Weight& w) const;
  RationalWeight apply(const RationalWeight& w) const;
};

// Element of the Weyl group: a shortest word in simple reflections (indices
// are 1-based) together with its action on weight coordinates.
struct WeylElement {
  std::vector<int> word;
  IntMatrix matrix;

  std::size_t length() const { return word.size(); }
  int sign() const { return word.size() % 2 == 0 ? 1 : -1; }
};

enum class LieType {
  A1,   // SL(2): rank 1, fundamental-weight coordinates
  A2,   // SL(3): rank 2, fundamental-weight coordinates
  C2,   // Sp(4): rank 2, fundamental-weight coordinates
  SO2,  // rank-1 torus; K-types labelled up to sign
  SO3,  // rank 1, even-weight normalization: the 3-dim representation is V(2)
  U2    // rank 2, weights (a,b) with a >= b dominant
};

std::string lie_type_label(LieType t);
LieType parse_lie_type(const std::string& label);  // UnsupportedType

// Root system, weight lattice, and Weyl group for one of the supported types.
// Immutable after construction; every operation is a pure function.
class RootDatum {
public:
  static std::shared_ptr<const RootDatum> build(LieType t);
  static std::shared_ptr<const RootDatum> build(const std::string& label);

  LieType type() const { return type_; }
  std::string label() const { return lie_type_label(type_); }
  std::size_t rank() const { return rank_; }
  std::size_t semisimple_rank() const { return simple_roots_.size(); }

  const IntMatrix& cartan_matrix() const { return cartan_; }
  const std::vector<Weight>& simple_roots() const { return simple_roots_; }
  const std::vector<Weight>& simple_coroots() const { return simple_coroots_; }
  const std::vector<Weight>& positive_roots() const { return positive_roots_; }
  const std::vector<Weight>& positive_coroots() const { return positive_coroots_; }
  const std::vector<Weight>& fundamental_weights() const { return fundamental_weights_; }
  const RationalWeight& rho() const { return rho_; }
  const std::vector<i64>& invariant_degrees() const { return invariant_degrees_; }

  // dim of the corresponding group: rank + number of roots.
  i64 group_dimension() const {
    return static_cast<i64>(rank_ + 2 * positive_roots_.size());
  }

  // Index into the weight lattice: some charts (SO3) only fill a sublattice.
  bool in_lattice(const Weight& w) const;
  i64 lattice_stride() const { return stride_; }

  // K-type labels are folded through w ~ -w (rank-1 torus inside a larger
  // group whose normalizer swaps the two characters).
  bool ktype_fold() const { return ktype_fold_; }

  // <w, alpha_i^vee> for the i-th simple coroot, i 1-based.
  i64 pairing(const Weight& w, int i) const;
  Rat pairing(const RationalWeight& w, int i) const;

  // Invariant symmetric form on the rational weight space.
  Rat form(const RationalWeight& a, const RationalWeight& b) const;

  Weight reflect(int i, const Weight& w) const;            // BadIndex
  RationalWeight reflect(int i, const RationalWeight& w) const;

  bool is_dominant(const Weight& w) const;
  bool is_dominant(const RationalWeight& w) const;

  // Full Weyl group, sorted by (length, word); begins with the identity.
  const std::vector<WeylElement>& weyl_group() const { return weyl_; }
  const WeylElement& longest_element() const;

  // Unique dominant element of W.w plus a witness g with g(w) = result.
  std::pair<Weight, WeylElement> dominant_representative(const Weight& w) const;
  std::pair<RationalWeight, WeylElement> dominant_representative(const RationalWeight& w) const;

  bool same_w_orbit(const RationalWeight& u, const RationalWeight& v) const;

  // All lattice points with every |coordinate| <= bound.
  std::vector<Weight> lattice_box(i64 bound) const;
  // The dominant ones among lattice_box, sorted.
  std::vector<Weight> dominant_weights_up_to(i64 bound) const;

private:
  RootDatum() = default;
  void finalize();  // derives positive roots' coroots, rho, Weyl group

  LieType type_ = LieType::A1;
  std::size_t rank_ = 0;
  IntMatrix cartan_;
  std::vector<Weight> simple_roots_, simple_coroots_;
  std::vector<Weight> positive_roots_, positive_coroots_;
  std::vector<Weight> fundamental_weights_;
  RationalWeight rho_;
  std::vector<i64> invariant_degrees_;
  i64 stride_ = 1;
  bool ktype_fold_ = false;
  std::vector<std::vector<Rat>> gram_;
  std::vector<WeylElement> weyl_;
};

}  // namespace kres

#endif

#ifndef KRES_KOSZUL_HPP
#define KRES_KOSZUL_HPP

#include <array>
#include <vector>

#include "kres/linalg.hpp"
#include "kres/pairdata.hpp"

namespace kres {

// Chevalley generators of one sl2 factor.
enum class Sl2Gen { E = 0, H = 1, F = 2 };

// Finite-dimensional module F(a) (x) F(b) over g x g (g of type A1), with the
// Cartan involution normalized so that k is spanned by Chevalley generators
// and the torus of K_Delta acts diagonally on the chosen basis.
struct MatrixRep {
  PairPtr pair;
  Weight a, b;
  i64 dim = 0;
  // action[side][gen]: side 0 = left factor, 1 = right factor
  std::array<std::array<QMatrix, 3>, 2> action;
  std::vector<i64> k_weights;  // K_Delta torus weight of each basis vector

  const QMatrix& act(int side, Sl2Gen g) const {
    return action[static_cast<std::size_t>(side)][static_cast<std::size_t>(g)];
  }
};

// UnsupportedPair unless the pair is sl2-based ("sl2r" or "su2").
MatrixRep build_module(const PairPtr& pair, const Weight& a, const Weight& b);

// Exhaustive check of the bracket relations [x,y] = xy - yx on the module.
bool bracket_relations_hold(const MatrixRep& m);

// ch X restricted to K, assembled from the K_Delta weights of the basis.
VirtualKCharacter module_k_character(const MatrixRep& m);

struct KoszulComplexData {
  PairPtr pair;
  i64 koszul_length = 0;          // dim k
  std::vector<i64> chain_dims;    // sizes of wedge^i(k_R) (x) X, i = 0..d
  std::vector<QMatrix> boundary;  // boundary[i]: C_i -> C_{i-1}, i = 1..d
  std::vector<std::vector<i64>> chain_k_weights;  // per chain space, per basis vector
};

KoszulComplexData build_koszul_complex(const MatrixRep& m);

// true iff every composite of consecutive boundaries vanishes.
bool boundary_squares_to_zero(const KoszulComplexData& c);

// true iff every boundary is block-diagonal for the K-weight labels.
bool boundaries_preserve_k_weights(const KoszulComplexData& c);

// Homology H_i = ker/im as K-characters, indexed i = 0..dim k; computed by
// exact rank per K-weight block.
std::vector<VirtualKCharacter> homology(const KoszulComplexData& c);

// Alternating sum of the homology characters.
VirtualKCharacter euler_characteristic(const MatrixRep& m);

// Alternating sum of the chain characters wedge^i(k) (x) X|_K; equals the
// Euler characteristic of the complex.
VirtualKCharacter chain_euler_characteristic(const MatrixRep& m);

struct KoszulGridMismatch {
  Weight a, b;
  std::string what;
  bool operator==(const KoszulGridMismatch&) const = default;
};

struct KoszulGridReport {
  std::string pair_name;
  i64 bound_a = 0, bound_b = 0;
  std::size_t checked = 0;
  std::vector<KoszulGridMismatch> mismatches;
  bool pass() const { return mismatches.empty(); }
};

// Structural checks over the whole grid a <= bound_a, b <= bound_b: bracket
// relations, boundary squares to zero, K-equivariance of the boundaries,
// Euler characteristic against the chain-level computation, and the
// rank-one homology anchors for the trivial module.
KoszulGridReport verify_koszul_grid(const PairPtr& pair, i64 bound_a, i64 bound_b);

}  // namespace kres

#endif

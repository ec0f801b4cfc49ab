#ifndef KRES_PAIRDATA_HPP
#define KRES_PAIRDATA_HPP

#include <memory>
#include <string>
#include <vector>

#include "kres/characters.hpp"
#include "kres/rootdata.hpp"

namespace kres {

// One catalog entry: the complex group, its maximal-compact datum, the
// Cartan-decomposition branching data, and the finite two-group M.
// Everything here is validated on load and immutable afterwards.
struct SymmetricPairData {
  std::string name;
  std::shared_ptr<const RootDatum> g;  // split torus chart, fundamental weights
  std::shared_ptr<const RootDatum> k;  // per-entry chart, documented in the catalog

  VirtualKCharacter g_as_k_rep;  // the adjoint representation restricted to K
  VirtualKCharacter k_adjoint;
  VirtualKCharacter p_as_k_rep;

  std::vector<i64> invariant_degrees;  // degrees of the basic invariants

  // M = (Z/2)^m_rank.  Element with generator bitmask S is K-conjugate to the
  // torus point determined by m_cocharacters[S]: it acts on a K-weight w with
  // trace contribution (-1)^{<w, x_S>}.
  int m_rank = 0;
  std::vector<RationalWeight> m_cocharacters;  // size 1 << m_rank; entry 0 is zero

  // Rows pair against X*(H) in fundamental-weight coordinates: the character
  // of M attached to lambda takes the value (-1)^{<lambda, row_j>} on the
  // j-th generator.
  std::vector<Weight> weight_reduction;

  bool split = false;

  i64 dim_g() const { return g_as_k_rep.dimension(); }
  i64 dim_k() const { return k_adjoint.dimension(); }
  i64 dim_p() const { return p_as_k_rep.dimension(); }
};

using PairPtr = std::shared_ptr<const SymmetricPairData>;

// Compiled-in default location of the catalog file; overridable per call and
// via the CLI.
std::string default_catalog_path();

// Loads one pair and validates every re-derivable invariant.
// Errors: UnknownPair, CorruptCatalog.
PairPtr load_pair(const std::string& name,
                  const std::string& catalog_path = default_catalog_path());

struct CatalogRow {
  std::string name;
  std::string g_label, k_label;
  i64 dim_g = 0, dim_k = 0, dim_p = 0;
  std::vector<i64> degrees;
  int m_rank = 0;
  bool split = false;
};

std::vector<CatalogRow> catalog_list(const std::string& catalog_path = default_catalog_path());

// lambda mod 2X*(H) as a 0/1 vector in fundamental-weight coordinates.
std::vector<int> lambda_bar(const SymmetricPairData& pair, const Weight& lambda);

// The character of M attached to lambda (reduction of lambda mod 2X*(H)).
TwoGroupCharacter reduce_mod_2(const SymmetricPairData& pair, const Weight& lambda);
TwoGroupCharacter m_character_of(const SymmetricPairData& pair,
                                 const std::vector<int>& lambda_bar);

// Trace function of V_tau on M, evaluated through the class cocharacters.
TwoGroupCharacter restrict_to_M(const SymmetricPairData& pair, const Weight& tau);

// Dominant K-type labels with every |coordinate| <= bound.  For a folded
// torus datum this lists the canonical labels (non-negative weights); the
// signed variant lists every lattice point of the box.
std::vector<Weight> ktype_labels(const SymmetricPairData& pair, i64 bound);
std::vector<Weight> signed_ktypes(const SymmetricPairData& pair, i64 bound);

}  // namespace kres

#endif

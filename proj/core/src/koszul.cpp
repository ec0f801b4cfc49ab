#include "kres/koszul.hpp"

#include <algorithm>
#include <map>

namespace kres {

namespace {

// Irreducible sl2-module with basis v_0..v_n: h v_i = (n-2i) v_i,
// f v_i = (i+1) v_{i+1}, e v_i = (n-i+1) v_{i-1}.
std::array<QMatrix, 3> sl2_symmetric_power(i64 n) {
  const std::size_t dim = static_cast<std::size_t>(n) + 1;
  QMatrix e(dim, dim), h(dim, dim), f(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    h.at(i, i) = Rat(n - 2 * static_cast<i64>(i));
    if (i + 1 < dim) {
      f.at(i + 1, i) = Rat(static_cast<i64>(i) + 1);
      e.at(i, i + 1) = Rat(n - static_cast<i64>(i));
    }
  }
  return {e, h, f};
}

QMatrix kronecker(const QMatrix& a, const QMatrix& b) {
  QMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a.at(i, j) == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          r.at(i * b.rows() + k, j * b.cols() + l) = a.at(i, j) * b.at(k, l);
    }
  return r;
}

// Basis of k inside the right g-factor, with torus weights and structure
// constants in that basis.
struct KBasis {
  std::vector<Sl2Gen> gens;
  std::vector<i64> weights;
  // bracket[j][k] = list of (basis index, coefficient), for j < k
  std::map<std::pair<int, int>, std::vector<std::pair<int, i64>>> bracket;
};

KBasis k_basis_for(const SymmetricPairData& pair) {
  KBasis kb;
  if (pair.k->type() == LieType::SO2) {
    kb.gens = {Sl2Gen::H};
    kb.weights = {0};
  } else if (pair.k->type() == LieType::A1) {
    kb.gens = {Sl2Gen::E, Sl2Gen::H, Sl2Gen::F};
    kb.weights = {2, 0, -2};
    // [e,h] = -2e, [e,f] = h, [h,f] = -2f
    kb.bracket[{0, 1}] = {{0, -2}};
    kb.bracket[{0, 2}] = {{1, 1}};
    kb.bracket[{1, 2}] = {{2, -2}};
  } else {
    fail(ErrorCode::UnsupportedPair,
         "no matrix model for the maximal compact of '" + pair.name + "'");
  }
  return kb;
}

std::vector<std::vector<int>> sorted_subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace

MatrixRep build_module(const PairPtr& pair, const Weight& a, const Weight& b) {
  if (pair->g->type() != LieType::A1)
    fail(ErrorCode::UnsupportedPair,
         "matrix models exist only for sl2-based pairs, got '" + pair->name + "'");
  if (!pair->g->is_dominant(a) || !pair->g->is_dominant(b))
    fail(ErrorCode::NotDominant, "module labels must be dominant");

  const i64 na = a.c[0], nb = b.c[0];
  MatrixRep m;
  m.pair = pair;
  m.a = a;
  m.b = b;
  m.dim = (na + 1) * (nb + 1);

  auto left = sl2_symmetric_power(na);
  auto right = sl2_symmetric_power(nb);
  QMatrix id_a = QMatrix::identity(static_cast<std::size_t>(na) + 1);
  QMatrix id_b = QMatrix::identity(static_cast<std::size_t>(nb) + 1);
  for (std::size_t g = 0; g < 3; ++g) {
    m.action[0][g] = kronecker(left[g], id_b);
    m.action[1][g] = kronecker(id_a, right[g]);
  }

  m.k_weights.reserve(static_cast<std::size_t>(m.dim));
  for (i64 i = 0; i <= na; ++i)
    for (i64 j = 0; j <= nb; ++j) m.k_weights.push_back((na - 2 * i) + (nb - 2 * j));
  return m;
}

bool bracket_relations_hold(const MatrixRep& m) {
  // Structure constants of sl2 in the (e,h,f) basis.
  const i64 c[3][3][3] = {
      // [e,e]=0, [e,h]=-2e, [e,f]=h
      {{0, 0, 0}, {-2, 0, 0}, {0, 1, 0}},
      // [h,e]=2e, [h,h]=0, [h,f]=-2f
      {{2, 0, 0}, {0, 0, 0}, {0, 0, -2}},
      // [f,e]=-h, [f,h]=2f, [f,f]=0
      {{0, -1, 0}, {0, 0, 2}, {0, 0, 0}},
  };
  const std::size_t dim = static_cast<std::size_t>(m.dim);
  for (int side = 0; side < 2; ++side) {
    for (int x = 0; x < 3; ++x)
      for (int y = 0; y < 3; ++y) {
        const QMatrix& mx = m.action[static_cast<std::size_t>(side)][static_cast<std::size_t>(x)];
        const QMatrix& my = m.action[static_cast<std::size_t>(side)][static_cast<std::size_t>(y)];
        QMatrix commutator = mx * my - my * mx;
        QMatrix expected(dim, dim);
        for (int z = 0; z < 3; ++z) {
          if (c[x][y][z] == 0) continue;
          const QMatrix& mz =
              m.action[static_cast<std::size_t>(side)][static_cast<std::size_t>(z)];
          for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j)
              expected.at(i, j) += Rat(c[x][y][z]) * mz.at(i, j);
        }
        if (!(commutator == expected)) return false;
      }
    // Opposite factors commute.
    for (int x = 0; x < 3; ++x)
      for (int y = 0; y < 3; ++y) {
        const QMatrix& mx = m.action[0][static_cast<std::size_t>(x)];
        const QMatrix& my = m.action[1][static_cast<std::size_t>(y)];
        if (!(mx * my - my * mx).is_zero()) return false;
      }
  }
  return true;
}

VirtualKCharacter module_k_character(const MatrixRep& m) {
  std::map<Weight, i64> weights;
  for (i64 w : m.k_weights) weights[Weight({w})] += 1;
  return character_from_weights(m.pair->k, weights);
}

KoszulComplexData build_koszul_complex(const MatrixRep& m) {
  const KBasis kb = k_basis_for(*m.pair);
  const int d = static_cast<int>(kb.gens.size());
  const std::size_t dim_x = static_cast<std::size_t>(m.dim);

  KoszulComplexData c;
  c.pair = m.pair;
  c.koszul_length = d;

  // Chain bases: (sorted wedge subset, module basis vector), subset-major.
  std::vector<std::vector<std::vector<int>>> subsets;
  for (int n = 0; n <= d; ++n) subsets.push_back(sorted_subsets(d, n));
  std::vector<std::map<std::vector<int>, std::size_t>> subset_pos(subsets.size());
  for (std::size_t n = 0; n < subsets.size(); ++n)
    for (std::size_t s = 0; s < subsets[n].size(); ++s)
      subset_pos[n].emplace(subsets[n][s], s);

  for (int n = 0; n <= d; ++n) {
    c.chain_dims.push_back(static_cast<i64>(subsets[static_cast<std::size_t>(n)].size()) *
                           m.dim);
    std::vector<i64> labels;
    for (const auto& s : subsets[static_cast<std::size_t>(n)]) {
      i64 wedge_weight = 0;
      for (int idx : s) wedge_weight += kb.weights[static_cast<std::size_t>(idx)];
      for (std::size_t v = 0; v < dim_x; ++v) labels.push_back(wedge_weight + m.k_weights[v]);
    }
    c.chain_k_weights.push_back(std::move(labels));
  }

  c.boundary.resize(static_cast<std::size_t>(d) + 1);  // index 1..d used
  for (int n = 1; n <= d; ++n) {
    const auto& src = subsets[static_cast<std::size_t>(n)];
    const auto& dst_pos = subset_pos[static_cast<std::size_t>(n - 1)];
    QMatrix bnd(static_cast<std::size_t>(c.chain_dims[static_cast<std::size_t>(n - 1)]),
                static_cast<std::size_t>(c.chain_dims[static_cast<std::size_t>(n)]));

    for (std::size_t s = 0; s < src.size(); ++s) {
      const std::vector<int>& wedge = src[s];

      // Action terms: (-1)^i X_i v, removing the i-th wedge factor (1-based i).
      for (int i = 1; i <= n; ++i) {
        std::vector<int> rest = wedge;
        rest.erase(rest.begin() + (i - 1));
        const std::size_t target = dst_pos.at(rest);
        const int sign = (i % 2 == 0) ? 1 : -1;
        const QMatrix& act =
            m.act(1, kb.gens[static_cast<std::size_t>(wedge[static_cast<std::size_t>(i - 1)])]);
        for (std::size_t col = 0; col < dim_x; ++col)
          for (std::size_t row = 0; row < dim_x; ++row) {
            const Rat& a = act.at(row, col);
            if (a == 0) continue;
            bnd.at(target * dim_x + row, s * dim_x + col) += Rat(sign) * a;
          }
      }

      // Bracket terms: (-1)^{j+k} [X_j, X_k] wedged in front of the rest.
      for (int j = 1; j <= n; ++j) {
        for (int k = j + 1; k <= n; ++k) {
          auto it = kb.bracket.find({wedge[static_cast<std::size_t>(j - 1)],
                                     wedge[static_cast<std::size_t>(k - 1)]});
          if (it == kb.bracket.end()) continue;
          std::vector<int> rest = wedge;
          rest.erase(rest.begin() + (k - 1));
          rest.erase(rest.begin() + (j - 1));
          const int jk_sign = ((j + k) % 2 == 0) ? 1 : -1;
          for (const auto& [basis_idx, coeff] : it->second) {
            if (std::find(rest.begin(), rest.end(), basis_idx) != rest.end()) continue;
            // Sort basis_idx into the front of rest; count transpositions.
            std::vector<int> merged = rest;
            auto pos = std::lower_bound(merged.begin(), merged.end(), basis_idx);
            const int shifts = static_cast<int>(pos - merged.begin());
            merged.insert(pos, basis_idx);
            const int sort_sign = (shifts % 2 == 0) ? 1 : -1;
            const std::size_t target = dst_pos.at(merged);
            const Rat total = Rat(jk_sign * sort_sign * coeff);
            for (std::size_t v = 0; v < dim_x; ++v)
              bnd.at(target * dim_x + v, s * dim_x + v) += total;
          }
        }
      }
    }
    c.boundary[static_cast<std::size_t>(n)] = std::move(bnd);
  }
  return c;
}

bool boundary_squares_to_zero(const KoszulComplexData& c) {
  for (std::size_t n = 2; n < c.boundary.size(); ++n)
    if (!(c.boundary[n - 1] * c.boundary[n]).is_zero()) return false;
  return true;
}

bool boundaries_preserve_k_weights(const KoszulComplexData& c) {
  for (std::size_t n = 1; n < c.boundary.size(); ++n) {
    const QMatrix& b = c.boundary[n];
    for (std::size_t row = 0; row < b.rows(); ++row)
      for (std::size_t col = 0; col < b.cols(); ++col)
        if (b.at(row, col) != 0 &&
            c.chain_k_weights[n - 1][row] != c.chain_k_weights[n][col])
          return false;
  }
  return true;
}

namespace {

// Restriction of boundary[n] to the weight-w block.
QMatrix weight_block(const KoszulComplexData& c, std::size_t n, i64 w) {
  std::vector<std::size_t> rows, cols;
  for (std::size_t i = 0; i < c.chain_k_weights[n - 1].size(); ++i)
    if (c.chain_k_weights[n - 1][i] == w) rows.push_back(i);
  for (std::size_t j = 0; j < c.chain_k_weights[n].size(); ++j)
    if (c.chain_k_weights[n][j] == w) cols.push_back(j);
  QMatrix b(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j)
      b.at(i, j) = c.boundary[n].at(rows[i], cols[j]);
  return b;
}

}  // namespace

std::vector<VirtualKCharacter> homology(const KoszulComplexData& c) {
  const int d = static_cast<int>(c.koszul_length);
  std::vector<VirtualKCharacter> out;

  std::map<i64, i64> all_weights;  // weight -> occurrences anywhere
  for (const auto& labels : c.chain_k_weights)
    for (i64 w : labels) all_weights[w] += 1;

  for (int n = 0; n <= d; ++n) {
    std::map<Weight, i64> h_weights;
    for (const auto& [w, unused] : all_weights) {
      i64 space_dim = 0;
      for (i64 label : c.chain_k_weights[static_cast<std::size_t>(n)])
        if (label == w) ++space_dim;
      if (space_dim == 0) continue;

      i64 rank_out = 0;
      if (n >= 1) rank_out = static_cast<i64>(rank_exact(weight_block(c, static_cast<std::size_t>(n), w)));
      i64 rank_in = 0;
      if (n < d) rank_in = static_cast<i64>(rank_exact(weight_block(c, static_cast<std::size_t>(n) + 1, w)));

      i64 h = space_dim - rank_out - rank_in;
      internal_check(h >= 0, "negative homology dimension");
      if (h > 0) h_weights[Weight({w})] += h;
    }
    out.push_back(character_from_weights(c.pair->k, h_weights));
  }
  return out;
}

VirtualKCharacter euler_characteristic(const MatrixRep& m) {
  KoszulComplexData c = build_koszul_complex(m);
  std::vector<VirtualKCharacter> h = homology(c);
  VirtualKCharacter out(m.pair->k);
  for (std::size_t i = 0; i < h.size(); ++i) out += h[i] * (i % 2 == 0 ? 1 : -1);
  return out;
}

VirtualKCharacter chain_euler_characteristic(const MatrixRep& m) {
  VirtualKCharacter x = module_k_character(m);
  VirtualKCharacter out(m.pair->k);
  const i64 d = m.pair->dim_k();
  for (i64 i = 0; i <= d; ++i) {
    VirtualKCharacter wedge = exterior_power(m.pair->k_adjoint, i);
    out += tensor_decompose(wedge, x) * (i % 2 == 0 ? 1 : -1);
  }
  return out;
}

namespace {

i64 binomial(i64 n, i64 k) {
  if (k < 0 || k > n) return 0;
  i64 r = 1;
  for (i64 i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

}  // namespace

KoszulGridReport verify_koszul_grid(const PairPtr& pair, i64 bound_a, i64 bound_b) {
  KoszulGridReport report;
  report.pair_name = pair->name;
  report.bound_a = bound_a;
  report.bound_b = bound_b;
  const i64 d = pair->dim_k();

  for (i64 a = 0; a <= bound_a; ++a) {
    for (i64 b = 0; b <= bound_b; ++b) {
      const Weight wa({a}), wb({b});
      auto flag = [&](const std::string& what) {
        report.mismatches.push_back({wa, wb, what});
      };
      MatrixRep m = build_module(pair, wa, wb);
      ++report.checked;

      if (!bracket_relations_hold(m)) flag("bracket relations fail");
      KoszulComplexData c = build_koszul_complex(m);
      if (!boundary_squares_to_zero(c)) flag("boundary does not square to zero");
      if (!boundaries_preserve_k_weights(c)) flag("boundary mixes K-weights");

      for (std::size_t i = 0; i < c.chain_dims.size(); ++i)
        if (c.chain_dims[i] != binomial(d, static_cast<i64>(i)) * m.dim)
          flag("chain dimension is not binomial(d,i)*dim X");

      std::vector<VirtualKCharacter> h = homology(c);
      if (static_cast<i64>(h.size()) != d + 1) flag("homology indices exceed dim k");

      i64 alt_h = 0, alt_chain = 0;
      for (std::size_t i = 0; i < h.size(); ++i) {
        i64 sign = (i % 2 == 0) ? 1 : -1;
        alt_h += sign * h[i].dimension();
        alt_chain += sign * binomial(d, static_cast<i64>(i)) * m.dim;
      }
      if (alt_h != alt_chain) flag("alternating homology dims disagree with chains");

      if (!(euler_characteristic(m) == chain_euler_characteristic(m)))
        flag("Euler characteristic disagrees with the chain-level sum");

      if (a == 0 && b == 0) {
        // Anchors: rank-one homology of the trivial module.
        std::vector<i64> dims;
        for (const auto& ch : h) dims.push_back(ch.dimension());
        if (d == 3 && dims != std::vector<i64>{1, 0, 0, 1})
          flag("trivial-module homology is not (1,0,0,1)");
        if (d == 1 && dims != std::vector<i64>{1, 1})
          flag("trivial-module homology is not (1,1)");
      }
    }
  }
  return report;
}

}  // namespace kres

#include "kres/characters.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <optional>

namespace kres {

// ---- polynomials ----

void poly_trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_add(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  poly_trim(r);
  return r;
}

Poly poly_sub(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  poly_trim(r);
  return r;
}

Poly poly_mul(const Poly& a, const Poly& b, i64 truncation) {
  if (a.empty() || b.empty()) return {};
  std::size_t cap = static_cast<std::size_t>(truncation) + 1;
  Poly r(std::min(a.size() + b.size() - 1, cap), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size() && i + j < r.size(); ++j)
      r[i + j] += a[i] * b[j];
  }
  poly_trim(r);
  return r;
}

Poly poly_monomial(i64 coeff, i64 degree) {
  if (coeff == 0) return {};
  Poly r(static_cast<std::size_t>(degree) + 1, 0);
  r.back() = coeff;
  return r;
}

i64 poly_coeff(const Poly& p, i64 degree) {
  if (degree < 0 || static_cast<std::size_t>(degree) >= p.size()) return 0;
  return p[static_cast<std::size_t>(degree)];
}

i64 poly_eval_at_one(const Poly& p) {
  i64 s = 0;
  for (i64 c : p) s += c;
  return s;
}

i64 poly_degree(const Poly& p) { return static_cast<i64>(p.size()) - 1; }

// ---- VirtualKCharacter ----

VirtualKCharacter VirtualKCharacter::trivial(std::shared_ptr<const RootDatum> rd) {
  VirtualKCharacter ch(std::move(rd));
  ch.add_term(Weight(std::vector<i64>(ch.rd_->rank(), 0)), 1);
  return ch;
}

VirtualKCharacter VirtualKCharacter::irreducible(std::shared_ptr<const RootDatum> rd,
                                                 const Weight& highest, i64 mult) {
  VirtualKCharacter ch(std::move(rd));
  ch.add_term(highest, mult);
  return ch;
}

i64 VirtualKCharacter::mult(const Weight& highest) const {
  auto it = terms_.find(highest);
  return it == terms_.end() ? 0 : it->second;
}

void VirtualKCharacter::add_term(const Weight& highest, i64 mult) {
  if (mult == 0) return;
  internal_check(rd_ != nullptr, "character without a root datum");
  internal_check(rd_->is_dominant(highest) && rd_->in_lattice(highest),
                 "character key must be a dominant lattice weight");
  auto [it, inserted] = terms_.emplace(highest, mult);
  if (!inserted) {
    it->second += mult;
    if (it->second == 0) terms_.erase(it);
  }
}

VirtualKCharacter& VirtualKCharacter::operator+=(const VirtualKCharacter& o) {
  if (rd_ == nullptr) rd_ = o.rd_;
  for (const auto& [w, m] : o.terms_) add_term(w, m);
  return *this;
}

VirtualKCharacter& VirtualKCharacter::operator-=(const VirtualKCharacter& o) {
  if (rd_ == nullptr) rd_ = o.rd_;
  for (const auto& [w, m] : o.terms_) add_term(w, -m);
  return *this;
}

VirtualKCharacter VirtualKCharacter::operator+(const VirtualKCharacter& o) const {
  VirtualKCharacter r = *this;
  r += o;
  return r;
}

VirtualKCharacter VirtualKCharacter::operator-(const VirtualKCharacter& o) const {
  VirtualKCharacter r = *this;
  r -= o;
  return r;
}

VirtualKCharacter VirtualKCharacter::operator*(i64 k) const {
  VirtualKCharacter r(rd_);
  if (k != 0)
    for (const auto& [w, m] : terms_) r.terms_.emplace(w, m * k);
  return r;
}

bool VirtualKCharacter::operator==(const VirtualKCharacter& o) const {
  return terms_ == o.terms_;
}

i64 VirtualKCharacter::dimension() const {
  i64 d = 0;
  for (const auto& [w, m] : terms_) d += m * irr_dimension(*rd_, w);
  return d;
}

// ---- GradedVirtualCharacter ----

void GradedVirtualCharacter::add_term(const Weight& highest, const Poly& p) {
  if (p.empty()) return;
  internal_check(rd_->is_dominant(highest) && rd_->in_lattice(highest),
                 "graded character key must be a dominant lattice weight");
  internal_check(poly_degree(p) <= truncation_, "polynomial exceeds truncation");
  auto [it, inserted] = terms_.emplace(highest, p);
  if (!inserted) {
    it->second = poly_add(it->second, p);
    if (it->second.empty()) terms_.erase(it);
  }
}

void GradedVirtualCharacter::add_term(const Weight& highest, i64 coeff, i64 degree) {
  if (degree > truncation_) return;
  add_term(highest, poly_monomial(coeff, degree));
}

i64 GradedVirtualCharacter::coefficient(const Weight& highest, i64 degree) const {
  auto it = terms_.find(highest);
  return it == terms_.end() ? 0 : poly_coeff(it->second, degree);
}

VirtualKCharacter GradedVirtualCharacter::coefficient_char(i64 degree) const {
  VirtualKCharacter ch(rd_);
  for (const auto& [w, p] : terms_) ch.add_term(w, poly_coeff(p, degree));
  return ch;
}

i64 GradedVirtualCharacter::dimension_at(i64 degree) const {
  i64 d = 0;
  for (const auto& [w, p] : terms_) {
    i64 c = poly_coeff(p, degree);
    if (c != 0) d += c * irr_dimension(*rd_, w);
  }
  return d;
}

GradedVirtualCharacter& GradedVirtualCharacter::operator+=(const GradedVirtualCharacter& o) {
  internal_check(truncation_ == o.truncation_, "mixed truncation degrees");
  for (const auto& [w, p] : o.terms_) add_term(w, p);
  return *this;
}

GradedVirtualCharacter GradedVirtualCharacter::operator+(const GradedVirtualCharacter& o) const {
  GradedVirtualCharacter r = *this;
  r += o;
  return r;
}

GradedVirtualCharacter GradedVirtualCharacter::operator-(const GradedVirtualCharacter& o) const {
  internal_check(truncation_ == o.truncation_, "mixed truncation degrees");
  GradedVirtualCharacter r = *this;
  for (const auto& [w, p] : o.terms_) r.add_term(w, poly_sub({}, p));
  return r;
}

bool GradedVirtualCharacter::operator==(const GradedVirtualCharacter& o) const {
  return truncation_ == o.truncation_ && terms_ == o.terms_;
}

GradedVirtualCharacter GradedVirtualCharacter::times(const GradedVirtualCharacter& o) const {
  internal_check(rd_->type() == o.rd_->type(), "mixed root data in graded product");
  internal_check(truncation_ == o.truncation_, "mixed truncation degrees");
  GradedVirtualCharacter out(rd_, truncation_);
  for (const auto& [tau, f] : terms_) {
    for (const auto& [sigma, g] : o.terms_) {
      Poly fg = poly_mul(f, g, truncation_);
      if (fg.empty()) continue;
      VirtualKCharacter prod = tensor_decompose(VirtualKCharacter::irreducible(rd_, tau),
                                                VirtualKCharacter::irreducible(rd_, sigma));
      for (const auto& [kappa, m] : prod.terms()) {
        Poly scaled = fg;
        for (i64& c : scaled) c *= m;
        out.add_term(kappa, scaled);
      }
    }
  }
  return out;
}

GradedVirtualCharacter GradedVirtualCharacter::times_scalar_poly(const Poly& p) const {
  GradedVirtualCharacter out(rd_, truncation_);
  for (const auto& [w, f] : terms_) out.add_term(w, poly_mul(f, p, truncation_));
  return out;
}

// ---- TwoGroupCharacter ----

TwoGroupCharacter TwoGroupCharacter::trivial(int rank) {
  return TwoGroupCharacter{rank, std::vector<i64>(std::size_t(1) << rank, 1)};
}

TwoGroupCharacter TwoGroupCharacter::operator+(const TwoGroupCharacter& o) const {
  internal_check(rank == o.rank, "two-group rank mismatch");
  TwoGroupCharacter r = *this;
  for (std::size_t i = 0; i < values.size(); ++i) r.values[i] += o.values[i];
  return r;
}

TwoGroupCharacter TwoGroupCharacter::operator*(const TwoGroupCharacter& o) const {
  internal_check(rank == o.rank, "two-group rank mismatch");
  TwoGroupCharacter r = *this;
  for (std::size_t i = 0; i < values.size(); ++i) r.values[i] *= o.values[i];
  return r;
}

std::vector<i64> TwoGroupCharacter::irreducible_multiplicities() const {
  const std::size_t n = values.size();
  std::vector<i64> mults(n, 0);
  for (std::size_t c = 0; c < n; ++c) {
    i64 acc = 0;
    for (std::size_t s = 0; s < n; ++s)
      acc += (std::popcount(c & s) % 2 == 0 ? values[s] : -values[s]);
    mults[c] = exact_div(acc, static_cast<i64>(n));
  }
  return mults;
}

bool TwoGroupCharacter::is_character() const {
  auto mults = irreducible_multiplicities();
  return std::all_of(mults.begin(), mults.end(), [](i64 m) { return m >= 0; });
}

// ---- weight combinatorics ----

namespace {

// Coordinates of v in the basis of simple roots, if v lies in their span.
std::optional<std::vector<Rat>> root_coords(const RootDatum& rd, const RationalWeight& v) {
  const std::size_t ss = rd.semisimple_rank();
  const std::size_t n = rd.rank();
  if (ss == 0) {
    for (const Rat& x : v.c)
      if (x != 0) return std::nullopt;
    return std::vector<Rat>{};
  }
  if (ss == 1) {
    const Weight& a = rd.simple_roots()[0];
    std::size_t piv = 0;
    while (a.c[piv] == 0) ++piv;
    Rat c = v.c[piv] / Rat(a.c[piv]);
    for (std::size_t i = 0; i < n; ++i)
      if (v.c[i] != Rat(a.c[i]) * c) return std::nullopt;
    return std::vector<Rat>{c};
  }
  internal_check(ss == 2 && n == 2, "unexpected rank");
  const Weight& a = rd.simple_roots()[0];
  const Weight& b = rd.simple_roots()[1];
  Rat det = Rat(a.c[0]) * Rat(b.c[1]) - Rat(b.c[0]) * Rat(a.c[1]);
  internal_check(det != 0, "degenerate simple roots");
  Rat c0 = (v.c[0] * Rat(b.c[1]) - v.c[1] * Rat(b.c[0])) / det;
  Rat c1 = (Rat(a.c[0]) * v.c[1] - Rat(a.c[1]) * v.c[0]) / det;
  return std::vector<Rat>{c0, c1};
}

std::optional<std::vector<i64>> nonneg_int_root_coords(const RootDatum& rd, const Weight& v) {
  auto c = root_coords(rd, RationalWeight::of(v));
  if (!c) return std::nullopt;
  std::vector<i64> out;
  out.reserve(c->size());
  for (const Rat& x : *c) {
    if (!is_integral(x) || x < 0) return std::nullopt;
    out.push_back(to_i64(Int(x.get_num())));
  }
  return out;
}

bool in_w_orbit(const RootDatum& rd, const Weight& u, const Weight& v) {
  for (const WeylElement& g : rd.weyl_group())
    if (g.matrix.apply(u) == v) return true;
  return false;
}

// Freudenthal's recursion on the full box of candidates below the highest
// weight; returns only the nonzero multiplicities.
std::map<Weight, i64> freudenthal_table(const RootDatum& rd, const Weight& highest) {
  if (!rd.is_dominant(highest))
    fail(ErrorCode::NotDominant, "highest weight must be dominant: " + highest.str());
  internal_check(rd.in_lattice(highest), "highest weight off the lattice");

  std::map<Weight, i64> out;
  if (rd.semisimple_rank() == 0) {
    out.emplace(highest, 1);
    return out;
  }

  // Box bound: componentwise max of root-coordinates of highest - w(highest).
  std::vector<i64> cap(rd.semisimple_rank(), 0);
  for (const WeylElement& g : rd.weyl_group()) {
    auto c = nonneg_int_root_coords(rd, highest - g.matrix.apply(highest));
    internal_check(c.has_value(), "orbit point outside the root cone");
    for (std::size_t i = 0; i < cap.size(); ++i) cap[i] = std::max(cap[i], (*c)[i]);
  }

  const RationalWeight rho = rd.rho();
  const RationalWeight top = RationalWeight::of(highest) + rho;
  const Rat top_norm = rd.form(top, top);

  struct Cand {
    Weight mu;
    i64 depth;
  };
  std::vector<Cand> cands;
  std::map<Weight, i64> mult;  // includes zero entries; doubles as the candidate set
  std::vector<i64> c(cap.size(), 0);
  auto emit = [&](auto&& self, std::size_t pos) -> void {
    if (pos == c.size()) {
      Weight mu = highest;
      i64 depth = 0;
      for (std::size_t j = 0; j < c.size(); ++j) {
        mu = mu - rd.simple_roots()[j] * c[j];
        depth += c[j];
      }
      RationalWeight shifted = RationalWeight::of(mu) + rho;
      if (rd.form(shifted, shifted) > top_norm) return;
      cands.push_back({mu, depth});
      mult.emplace(mu, 0);
      return;
    }
    for (i64 x = 0; x <= cap[pos]; ++x) {
      c[pos] = x;
      self(self, pos + 1);
    }
  };
  emit(emit, 0);

  std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
    return std::pair(a.depth, a.mu) < std::pair(b.depth, b.mu);
  });

  for (const Cand& cand : cands) {
    const Weight& mu = cand.mu;
    if (mu == highest) {
      mult[mu] = 1;
      continue;
    }
    RationalWeight shifted = RationalWeight::of(mu) + rho;
    Rat denom = top_norm - rd.form(shifted, shifted);
    if (denom == 0) {
      mult[mu] = in_w_orbit(rd, highest, mu) ? 1 : 0;
      continue;
    }
    Rat acc(0);
    for (const Weight& alpha : rd.positive_roots()) {
      for (i64 k = 1;; ++k) {
        Weight nu = mu + alpha * k;
        auto it = mult.find(nu);
        if (it == mult.end()) break;
        if (it->second != 0)
          acc += Rat(it->second) * rd.form(RationalWeight::of(nu), RationalWeight::of(alpha));
      }
    }
    Rat m = Rat(2) * acc / denom;
    m.canonicalize();
    internal_check(is_integral(m) && m >= 0, "Freudenthal recursion left a fraction");
    mult[mu] = to_i64(Int(m.get_num()));
  }

  for (const auto& [w, m] : mult)
    if (m != 0) out.emplace(w, m);
  return out;
}

struct MultisetCacheKey {
  LieType type;
  Weight w;
  auto operator<=>(const MultisetCacheKey&) const = default;
};

std::mutex g_multiset_mutex;
std::map<MultisetCacheKey, std::map<Weight, i64>> g_multiset_cache;

}  // namespace

const std::map<Weight, i64>& weight_multiset(const RootDatum& rd, const Weight& highest) {
  MultisetCacheKey key{rd.type(), highest};
  std::lock_guard<std::mutex> lock(g_multiset_mutex);
  auto it = g_multiset_cache.find(key);
  if (it == g_multiset_cache.end())
    it = g_multiset_cache.emplace(key, freudenthal_table(rd, highest)).first;
  return it->second;
}

std::map<Weight, i64> weight_multiset(const VirtualKCharacter& ch) {
  std::map<Weight, i64> out;
  for (const auto& [w, m] : ch.terms())
    for (const auto& [mu, k] : weight_multiset(*ch.datum(), w)) {
      auto [it, inserted] = out.emplace(mu, m * k);
      if (!inserted) {
        it->second += m * k;
        if (it->second == 0) out.erase(it);
      }
    }
  return out;
}

i64 irr_dimension(const RootDatum& rd, const Weight& highest) {
  if (!rd.is_dominant(highest))
    fail(ErrorCode::NotDominant, "dimension of a non-dominant weight " + highest.str());
  if (rd.semisimple_rank() == 0) return 1;
  RationalWeight shifted = RationalWeight::of(highest) + rd.rho();
  Rat num(1), den(1);
  for (const Weight& beta : rd.positive_coroots()) {
    Rat a(0), b(0);
    for (std::size_t i = 0; i < rd.rank(); ++i) {
      a += shifted.c[i] * Rat(beta.c[i]);
      b += rd.rho().c[i] * Rat(beta.c[i]);
    }
    num *= a;
    den *= b;
  }
  Rat d = num / den;
  d.canonicalize();
  internal_check(is_integral(d) && d > 0, "Weyl dimension is not a positive integer");
  return to_i64(Int(d.get_num()));
}

i64 weight_multiplicity(const RootDatum& rd, const Weight& highest, const Weight& mu) {
  const auto& table = weight_multiset(rd, highest);
  auto it = table.find(mu);
  return it == table.end() ? 0 : it->second;
}

i64 kostant_partition(const RootDatum& rd, const Weight& v) {
  if (rd.semisimple_rank() == 0) return v.is_zero() ? 1 : 0;
  const auto& roots = rd.positive_roots();
  auto feasible = [&](const Weight& u) {
    return nonneg_int_root_coords(rd, u).has_value();
  };
  auto rec = [&](auto&& self, const Weight& rest, std::size_t idx) -> i64 {
    if (rest.is_zero()) return 1;
    if (idx == roots.size()) return 0;
    i64 total = 0;
    Weight cur = rest;
    for (;;) {
      total += self(self, cur, idx + 1);
      cur = cur - roots[idx];
      if (!feasible(cur)) break;
    }
    return total;
  };
  if (!feasible(v)) return 0;
  return rec(rec, v, 0);
}

i64 kostant_multiplicity(const RootDatum& rd, const Weight& highest, const Weight& mu) {
  if (!rd.is_dominant(highest))
    fail(ErrorCode::NotDominant, "highest weight must be dominant: " + highest.str());
  if (rd.semisimple_rank() == 0) return highest == mu ? 1 : 0;
  const RationalWeight rho = rd.rho();
  const RationalWeight top = RationalWeight::of(highest) + rho;
  const RationalWeight target = RationalWeight::of(mu) + rho;
  i64 acc = 0;
  for (const WeylElement& g : rd.weyl_group()) {
    RationalWeight v = g.matrix.apply(top) - target;
    if (!v.is_integral()) continue;
    acc += g.sign() * kostant_partition(rd, v.to_weight());
  }
  internal_check(acc >= 0, "Kostant multiplicity negative");
  return acc;
}

VirtualKCharacter character_from_weights(std::shared_ptr<const RootDatum> rd,
                                         const std::map<Weight, i64>& weights) {
  VirtualKCharacter out(rd);
  if (rd->semisimple_rank() == 0) {
    for (const auto& [w, m] : weights) out.add_term(w, m);
    return out;
  }

  // Height functional: pairing against the sum of positive coroots, which is
  // strictly positive on the dominant chamber walls' interior directions.
  std::vector<i64> height(rd->rank(), 0);
  for (const Weight& cv : rd->positive_coroots())
    for (std::size_t i = 0; i < rd->rank(); ++i) height[i] += cv.c[i];
  auto h = [&](const Weight& w) {
    i64 s = 0;
    for (std::size_t i = 0; i < rd->rank(); ++i) s += height[i] * w.c[i];
    return s;
  };

  std::map<Weight, i64> work = weights;
  for (auto it = work.begin(); it != work.end();)
    it = (it->second == 0) ? work.erase(it) : std::next(it);

  while (!work.empty()) {
    auto best = work.begin();
    for (auto it = std::next(work.begin()); it != work.end(); ++it) {
      if (std::pair(h(it->first), it->first) > std::pair(h(best->first), best->first))
        best = it;
    }
    Weight top = best->first;
    i64 m = best->second;
    internal_check(rd->is_dominant(top),
                   "weight multiset is not W-invariant (leading term not dominant)");
    out.add_term(top, m);
    for (const auto& [mu, k] : weight_multiset(*rd, top)) {
      auto [it, inserted] = work.emplace(mu, -m * k);
      if (!inserted) {
        it->second -= m * k;
        if (it->second == 0) work.erase(it);
      }
    }
  }
  return out;
}

VirtualKCharacter tensor_decompose(const VirtualKCharacter& a, const VirtualKCharacter& b) {
  internal_check(a.datum() && b.datum() && a.datum()->type() == b.datum()->type(),
                 "tensor product over mixed root data");
  const auto& rd = a.datum();
  VirtualKCharacter out(rd);
  if (a.is_zero() || b.is_zero()) return out;

  if (rd->semisimple_rank() == 0) {
    for (const auto& [x, mx] : a.terms())
      for (const auto& [y, my] : b.terms()) out.add_term(x + y, mx * my);
    return out;
  }

  const RationalWeight& rho = rd->rho();
  for (const auto& [la, ma] : a.terms()) {
    for (const auto& [lb, mb] : b.terms()) {
      bool a_smaller = irr_dimension(*rd, la) <= irr_dimension(*rd, lb);
      const Weight& small = a_smaller ? la : lb;
      const Weight& big = a_smaller ? lb : la;
      for (const auto& [w, mw] : weight_multiset(*rd, small)) {
        RationalWeight t = RationalWeight::of(big + w) + rho;
        auto [dom, g] = rd->dominant_representative(t);
        bool singular = false;
        for (std::size_t i = 1; i <= rd->semisimple_rank(); ++i)
          if (rd->pairing(dom, static_cast<int>(i)) == 0) {
            singular = true;
            break;
          }
        if (singular) continue;
        out.add_term((dom - rho).to_weight(), g.sign() * ma * mb * mw);
      }
    }
  }
  return out;
}

VirtualKCharacter adams(const VirtualKCharacter& ch, i64 k) {
  if (k < 1) fail(ErrorCode::UsageError, "Adams operation needs k >= 1");
  if (k == 1) return ch;
  std::map<Weight, i64> scaled;
  for (const auto& [w, m] : weight_multiset(ch)) {
    auto [it, inserted] = scaled.emplace(w * k, m);
    if (!inserted) it->second += m;
  }
  return character_from_weights(ch.datum(), scaled);
}

namespace {

VirtualKCharacter divide_exact(const VirtualKCharacter& ch, i64 k) {
  VirtualKCharacter out(ch.datum());
  for (const auto& [w, m] : ch.terms()) out.add_term(w, exact_div(m, k));
  return out;
}

// Shared Newton recursion: sign=-1 gives exterior powers, sign=+1 symmetric.
std::vector<VirtualKCharacter> newton_powers(const VirtualKCharacter& ch, i64 k, int sign) {
  std::vector<VirtualKCharacter> psi(static_cast<std::size_t>(k) + 1);
  for (i64 j = 1; j <= k; ++j) psi[static_cast<std::size_t>(j)] = adams(ch, j);

  std::vector<VirtualKCharacter> pow;
  pow.push_back(VirtualKCharacter::trivial(ch.datum()));
  for (i64 n = 1; n <= k; ++n) {
    VirtualKCharacter acc(ch.datum());
    i64 outer = 1;  // sign^(j-1)
    for (i64 j = 1; j <= n; ++j) {
      acc += tensor_decompose(psi[static_cast<std::size_t>(j)],
                              pow[static_cast<std::size_t>(n - j)]) *
             outer;
      outer *= sign;
    }
    pow.push_back(divide_exact(acc, n));
  }
  return pow;
}

}  // namespace

VirtualKCharacter exterior_power(const VirtualKCharacter& ch, i64 k) {
  if (k < 0) fail(ErrorCode::UsageError, "exterior power needs k >= 0");
  return newton_powers(ch, k, -1).back();
}

VirtualKCharacter symmetric_power(const VirtualKCharacter& ch, i64 k) {
  if (k < 0) fail(ErrorCode::UsageError, "symmetric power needs k >= 0");
  return newton_powers(ch, k, +1).back();
}

GradedVirtualCharacter symmetric_algebra_series(const VirtualKCharacter& ch, i64 truncation) {
  if (truncation < 0) fail(ErrorCode::UsageError, "negative truncation degree");
  auto powers = newton_powers(ch, truncation, +1);
  GradedVirtualCharacter out(ch.datum(), truncation);
  for (i64 n = 0; n <= truncation; ++n)
    for (const auto& [w, m] : powers[static_cast<std::size_t>(n)].terms())
      out.add_term(w, m, n);
  return out;
}

}  // namespace kres

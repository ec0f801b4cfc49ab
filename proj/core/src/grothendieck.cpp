#include "kres/grothendieck.hpp"

#include <random>
#include <set>

#include "kres/ktheory.hpp"

namespace kres {

std::string group_side_label(GroupSide side) {
  return side == GroupSide::Complex ? "complex" : "real";
}

ContinuousConvention parse_convention(const std::string& label) {
  if (label == "half-sum") return ContinuousConvention::HalfSum;
  if (label == "nu") return ContinuousConvention::Nu;
  fail(ErrorCode::UsageError, "unknown convention '" + label + "' (half-sum|nu)");
}

std::string convention_label(ContinuousConvention c) {
  return c == ContinuousConvention::HalfSum ? "half-sum" : "nu";
}

namespace {

std::vector<int> reduce_mod2_vector(const Weight& w) {
  std::vector<int> out(w.c.size());
  for (std::size_t i = 0; i < w.c.size(); ++i)
    out[i] = static_cast<int>(((w.c[i] % 2) + 2) % 2);
  return out;
}

Weight lift_mod2(const std::vector<int>& bar) {
  std::vector<i64> c(bar.begin(), bar.end());
  return Weight(std::move(c));
}

std::vector<int> add_mod2(const std::vector<int>& bar, const Weight& mu) {
  internal_check(bar.size() == mu.c.size(), "mod-2 vector rank mismatch");
  std::vector<int> out(bar.size());
  for (std::size_t i = 0; i < bar.size(); ++i)
    out[i] = static_cast<int>(((bar[i] + mu.c[i]) % 2 + 2) % 2);
  return out;
}

void check_split(const SymmetricPairData& pair, const char* op) {
  if (!pair.split)
    fail(ErrorCode::NotSplit, std::string(op) + " needs a split pair, got '" + pair.name + "'");
}

}  // namespace

ComplexPSParam canonicalize(const SymmetricPairData& pair, const ComplexPSParam& p) {
  internal_check(p.lambda.rank() == pair.g->rank() && p.nu.rank() == pair.g->rank(),
                 "parameter rank mismatch");
  std::optional<ComplexPSParam> result;
  ComplexPSParam cur;
  for (const WeylElement& g : pair.g->weyl_group()) {
    cur.lambda = g.matrix.apply(p.lambda);
    cur.nu = g.matrix.apply(p.nu);
    if (!result || *result < cur) result = cur;
  }
  return *result;
}

RealPSParam canonicalize(const SymmetricPairData& pair, const RealPSParam& p) {
  internal_check(p.lambda_bar.size() == pair.g->rank() && p.nu.rank() == pair.g->rank(),
                 "parameter rank mismatch");
  std::optional<RealPSParam> result;
  RealPSParam cur;
  Weight lift = lift_mod2(p.lambda_bar);
  for (const WeylElement& g : pair.g->weyl_group()) {
    cur.lambda_bar = reduce_mod2_vector(g.matrix.apply(lift));
    cur.nu = g.matrix.apply(p.nu);
    if (!result || *result < cur) result = cur;
  }
  return *result;
}

void StandardClass::add(const SymmetricPairData& pair, const ComplexPSParam& p, i64 mult) {
  internal_check(side_ == GroupSide::Complex, "complex term added to a real class");
  if (mult == 0) return;
  ComplexPSParam c = canonicalize(pair, p);
  auto [it, inserted] = complex_terms_.emplace(std::move(c), mult);
  if (!inserted) {
    it->second += mult;
    if (it->second == 0) complex_terms_.erase(it);
  }
}

void StandardClass::add(const SymmetricPairData& pair, const RealPSParam& p, i64 mult) {
  internal_check(side_ == GroupSide::Real, "real term added to a complex class");
  if (mult == 0) return;
  RealPSParam c = canonicalize(pair, p);
  auto [it, inserted] = real_terms_.emplace(std::move(c), mult);
  if (!inserted) {
    it->second += mult;
    if (it->second == 0) real_terms_.erase(it);
  }
}

StandardClass& StandardClass::operator+=(const StandardClass& o) {
  internal_check(side_ == o.side_, "mixed sides in class sum");
  for (const auto& [p, m] : o.complex_terms_) {
    auto [it, inserted] = complex_terms_.emplace(p, m);
    if (!inserted) {
      it->second += m;
      if (it->second == 0) complex_terms_.erase(it);
    }
  }
  for (const auto& [p, m] : o.real_terms_) {
    auto [it, inserted] = real_terms_.emplace(p, m);
    if (!inserted) {
      it->second += m;
      if (it->second == 0) real_terms_.erase(it);
    }
  }
  return *this;
}

bool StandardClass::operator==(const StandardClass& o) const {
  return side_ == o.side_ && complex_terms_ == o.complex_terms_ &&
         real_terms_ == o.real_terms_;
}

InfinitesimalCharacter inf_char_complex(const SymmetricPairData& pair,
                                        const ComplexPSParam& p) {
  RationalWeight lam = RationalWeight::of(p.lambda);
  RationalWeight left = (p.nu + lam) * Rat(1, 2);
  RationalWeight right = (p.nu - lam) * Rat(1, 2);
  InfinitesimalCharacter out;
  out.side = GroupSide::Complex;
  out.left = pair.g->dominant_representative(left).first;
  out.right = pair.g->dominant_representative(right).first;
  return out;
}

InfinitesimalCharacter inf_char_real(const SymmetricPairData& pair, const RealPSParam& p) {
  InfinitesimalCharacter out;
  out.side = GroupSide::Real;
  out.left = pair.g->dominant_representative(p.nu).first;
  return out;
}

RealPSParam restrict_basis_param(const SymmetricPairData& pair, const ComplexPSParam& p,
                                 ContinuousConvention convention) {
  RealPSParam img;
  img.lambda_bar = reduce_mod2_vector(p.lambda);
  if (convention == ContinuousConvention::HalfSum)
    img.nu = (RationalWeight::of(p.lambda) + p.nu) * Rat(1, 2);
  else
    img.nu = p.nu;
  return img;
}

StandardClass restriction_hom(const SymmetricPairData& pair, const StandardClass& x,
                              ContinuousConvention convention) {
  check_split(pair, "restriction");
  if (x.side() != GroupSide::Complex)
    fail(ErrorCode::WrongSide, "restriction applies to complex-side classes");
  StandardClass out(GroupSide::Real);
  for (const auto& [p, m] : x.complex_terms())
    out.add(pair, restrict_basis_param(pair, p, convention), m);
  return out;
}

StandardClass tensor_with_finite_complex(const SymmetricPairData& pair, const StandardClass& x,
                                         const Weight& eps) {
  if (x.side() != GroupSide::Complex)
    fail(ErrorCode::WrongSide, "complex-side tensor applied to a real class");
  if (!pair.g->is_dominant(eps))
    fail(ErrorCode::NotDominant, "extremal weight must be dominant: " + eps.str());
  const auto& delta = weight_multiset(*pair.g, eps);
  StandardClass out(GroupSide::Complex);
  for (const auto& [p, m] : x.complex_terms())
    for (const auto& [mu, k] : delta) {
      ComplexPSParam shifted{p.lambda + mu, p.nu + RationalWeight::of(mu)};
      out.add(pair, shifted, m * k);
    }
  return out;
}

StandardClass tensor_with_finite_real(const SymmetricPairData& pair, const StandardClass& x,
                                      const Weight& eps) {
  if (x.side() != GroupSide::Real)
    fail(ErrorCode::WrongSide, "real-side tensor applied to a complex class");
  if (!pair.g->is_dominant(eps))
    fail(ErrorCode::NotDominant, "extremal weight must be dominant: " + eps.str());
  const auto& delta = weight_multiset(*pair.g, eps);
  StandardClass out(GroupSide::Real);
  for (const auto& [p, m] : x.real_terms())
    for (const auto& [mu, k] : delta) {
      RealPSParam shifted{add_mod2(p.lambda_bar, mu), p.nu + RationalWeight::of(mu)};
      out.add(pair, shifted, m * k);
    }
  return out;
}

i64 ktype_mult_complex(const SymmetricPairData& pair, const Weight& lambda,
                       const Weight& tau) {
  return weight_multiplicity(*pair.g, tau, lambda);
}

i64 ktype_mult_real(const SymmetricPairData& pair, const RealPSParam& p, const Weight& tau) {
  check_split(pair, "real principal-series K-multiplicity");
  TwoGroupCharacter chi = m_character_of(pair, p.lambda_bar);
  TwoGroupCharacter trace = restrict_to_M(pair, tau);
  i64 acc = 0;
  for (std::size_t s = 0; s < chi.values.size(); ++s) acc += chi.values[s] * trace.values[s];
  i64 mult = exact_div(acc, static_cast<i64>(chi.values.size()));
  internal_check(mult >= 0, "negative Frobenius multiplicity");
  return mult;
}

std::vector<RationalWeight> standard_nu_values(const SymmetricPairData& pair) {
  const std::size_t n = pair.g->rank();
  std::set<RationalWeight> values;
  values.insert(RationalWeight(std::vector<Rat>(n, Rat(0))));
  values.insert(RationalWeight(std::vector<Rat>(n, Rat(1, 2))));
  values.insert(RationalWeight(std::vector<Rat>(n, Rat(1))));
  values.insert(pair.g->rho());
  values.insert(pair.g->rho() * Rat(1, 3));
  return {values.begin(), values.end()};
}

TranslationReport verify_translation_commutes(const SymmetricPairData& pair, i64 lambda_bound,
                                              i64 eps_bound,
                                              const std::vector<RationalWeight>& nus,
                                              ContinuousConvention convention) {
  check_split(pair, "translation check");
  TranslationReport report;
  report.pair_name = pair.name;
  report.lambda_bound = lambda_bound;
  report.eps_bound = eps_bound;

  for (const Weight& lambda : pair.g->lattice_box(lambda_bound)) {
    for (const Weight& eps : pair.g->dominant_weights_up_to(eps_bound)) {
      for (const RationalWeight& nu : nus) {
        ComplexPSParam base{lambda, nu};
        StandardClass x(GroupSide::Complex);
        x.add(pair, base, 1);
        StandardClass lhs =
            restriction_hom(pair, tensor_with_finite_complex(pair, x, eps), convention);
        StandardClass rhs =
            tensor_with_finite_real(pair, restriction_hom(pair, x, convention), eps);
        ++report.checked;
        if (!(lhs == rhs)) report.mismatches.push_back({base, eps});
      }
    }
  }
  return report;
}

InfCharReport verify_infchar_compat(const SymmetricPairData& pair, i64 lambda_bound,
                                    const std::vector<RationalWeight>& nus,
                                    std::size_t random_count, unsigned seed,
                                    ContinuousConvention convention) {
  check_split(pair, "infinitesimal-character check");
  InfCharReport report;
  report.pair_name = pair.name;
  report.lambda_bound = lambda_bound;

  std::vector<RationalWeight> all_nus = nus;
  std::mt19937 rng(seed);
  std::uniform_int_distribution<i64> num(-12, 12);
  std::uniform_int_distribution<int> den_pick(0, 4);
  const i64 dens[5] = {1, 2, 3, 4, 6};
  for (std::size_t i = 0; i < random_count; ++i) {
    std::vector<Rat> c;
    for (std::size_t j = 0; j < pair.g->rank(); ++j) {
      Rat r(num(rng), dens[den_pick(rng)]);
      r.canonicalize();
      c.push_back(r);
    }
    all_nus.push_back(RationalWeight(std::move(c)));
  }

  for (const Weight& lambda : pair.g->lattice_box(lambda_bound)) {
    for (const RationalWeight& nu : all_nus) {
      ComplexPSParam base{lambda, nu};
      RealPSParam img = restrict_basis_param(pair, base, convention);
      RationalWeight got = inf_char_real(pair, img).left;
      RationalWeight expected =
          (nu + RationalWeight::of(lambda)) * Rat(1, 2);
      ++report.checked;
      if (!pair.g->same_w_orbit(got, expected)) {
        report.mismatches.push_back(
            {base, pair.g->dominant_representative(expected).first, got});
      }
    }
  }
  return report;
}

SphericalReport spherical_ktype_crosscheck(const SymmetricPairData& pair, i64 bound,
                                           i64 truncation) {
  check_split(pair, "spherical K-type crosscheck");
  SphericalReport report;
  report.pair_name = pair.name;
  report.bound = bound;
  report.truncation = truncation;

  GradedKClass theta = nilcone_theta_structure_sheaf(pair, truncation);
  GradedKClass restricted = restrict_R(nilcone_complex_structure_sheaf(pair, truncation), pair);
  std::map<Weight, i64> theta_totals = qone_ktype_totals(theta, pair, bound);
  std::map<Weight, i64> restricted_totals = qone_ktype_totals(restricted, pair, bound);

  RealPSParam spherical{std::vector<int>(pair.g->rank(), 0),
                        RationalWeight(std::vector<Rat>(pair.g->rank(), Rat(0)))};

  auto lookup = [](const std::map<Weight, i64>& m, const Weight& tau) {
    auto it = m.find(tau);
    return it == m.end() ? i64(0) : it->second;
  };

  for (const Weight& tau : signed_ktypes(pair, bound)) {
    i64 a = ktype_mult_real(pair, spherical, tau);
    i64 b = lookup(theta_totals, tau);
    i64 c = lookup(restricted_totals, tau);
    ++report.checked;
    if (!(a == b && b == c)) report.mismatches.push_back({tau, a, b, c});
  }
  return report;
}

}  // namespace kres

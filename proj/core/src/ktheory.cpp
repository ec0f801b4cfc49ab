#include "kres/ktheory.hpp"

namespace kres {

std::string cone_side_label(ConeSide side) {
  return side == ConeSide::ComplexCone ? "complex_cone" : "real_cone";
}

KoszulClass koszul_class(const SymmetricPairData& pair, i64 truncation) {
  const i64 d = pair.dim_k();
  if (truncation < d)
    fail(ErrorCode::TruncationTooSmall,
         "Koszul class needs truncation >= dim k = " + std::to_string(d));
  GradedVirtualCharacter series(pair.k, truncation);
  for (i64 i = 0; i <= d; ++i) {
    VirtualKCharacter wedge = exterior_power(pair.k_adjoint, i);
    for (const auto& [w, m] : wedge.terms())
      series.add_term(w, (i % 2 == 0 ? m : -m), i);
  }
  return KoszulClass{std::move(series)};
}

namespace {

Poly invariant_factor(const SymmetricPairData& pair, i64 truncation) {
  Poly f{1};
  for (i64 d : pair.invariant_degrees) {
    Poly g(static_cast<std::size_t>(d) + 1, 0);
    g[0] = 1;
    g[static_cast<std::size_t>(d)] = -1;
    f = poly_mul(f, g, truncation);
  }
  return f;
}

}  // namespace

GradedKClass nilcone_complex_structure_sheaf(const SymmetricPairData& pair, i64 truncation) {
  if (truncation < 0) fail(ErrorCode::UsageError, "negative truncation degree");
  GradedVirtualCharacter s = symmetric_algebra_series(pair.g_as_k_rep, truncation);
  return GradedKClass{ConeSide::ComplexCone,
                      s.times_scalar_poly(invariant_factor(pair, truncation)), truncation};
}

GradedKClass nilcone_theta_structure_sheaf(const SymmetricPairData& pair, i64 truncation) {
  if (!pair.split)
    fail(ErrorCode::NotSplit, "theta-cone structure sheaf needs a split pair, got '" +
                                  pair.name + "'");
  if (truncation < 0) fail(ErrorCode::UsageError, "negative truncation degree");
  GradedVirtualCharacter s = symmetric_algebra_series(pair.p_as_k_rep, truncation);
  return GradedKClass{ConeSide::RealCone,
                      s.times_scalar_poly(invariant_factor(pair, truncation)), truncation};
}

GradedKClass restrict_R(const GradedKClass& cls, const SymmetricPairData& pair) {
  if (cls.side != ConeSide::ComplexCone)
    fail(ErrorCode::WrongSide, "restriction applies to complex-cone classes");
  KoszulClass c = koszul_class(pair, cls.truncation());
  GradedKClass out;
  out.side = ConeSide::RealCone;
  out.series = cls.series.times(c.series);
  out.exact_through = cls.exact_through - pair.dim_k();
  return out;
}

std::map<Weight, i64> qone_ktype_totals(const GradedKClass& cls,
                                        const SymmetricPairData& pair, i64 bound) {
  const i64 truncation = cls.truncation();
  const i64 window = std::min(cls.exact_through, truncation - pair.dim_k());

  // Stabilization: nothing may appear above the exact window, otherwise the
  // q->1 value could still change at higher truncation.
  for (const Weight& tau : signed_ktypes(pair, bound)) {
    auto it = cls.series.terms().find(tau);
    if (it == cls.series.terms().end()) continue;
    for (i64 d = window + 1; d <= truncation; ++d)
      if (poly_coeff(it->second, d) != 0)
        fail(ErrorCode::TruncationTooSmall,
             "K-type " + tau.str() + " has not stabilized below the truncation");
  }

  std::map<Weight, i64> out;
  for (const Weight& tau : signed_ktypes(pair, bound)) {
    auto it = cls.series.terms().find(tau);
    if (it == cls.series.terms().end()) continue;
    i64 total = poly_eval_at_one(it->second);
    if (total != 0) out.emplace(tau, total);
  }
  return out;
}

namespace {

SplitIdentityReport compare_on_window(const SymmetricPairData& pair,
                                      const GradedVirtualCharacter& lhs,
                                      const GradedVirtualCharacter& rhs, i64 truncation,
                                      i64 bound, i64 window) {
  SplitIdentityReport report;
  report.pair_name = pair.name;
  report.truncation = truncation;
  report.bound = bound;
  report.window = window;
  for (const Weight& tau : signed_ktypes(pair, bound)) {
    for (i64 d = 0; d <= window; ++d) {
      i64 a = lhs.coefficient(tau, d);
      i64 b = rhs.coefficient(tau, d);
      if (a != b) report.mismatches.push_back({tau, d, a, b});
    }
  }
  return report;
}

}  // namespace

SplitIdentityReport verify_split_proposition(const SymmetricPairData& pair, i64 truncation,
                                             i64 bound) {
  GradedKClass complex_sheaf = nilcone_complex_structure_sheaf(pair, truncation);
  GradedKClass restricted = restrict_R(complex_sheaf, pair);
  GradedKClass theta_sheaf = nilcone_theta_structure_sheaf(pair, truncation);
  return compare_on_window(pair, restricted.series, theta_sheaf.series, truncation, bound,
                           restricted.exact_through);
}

SplitIdentityReport verify_free_module_identity(const SymmetricPairData& pair,
                                                i64 truncation, i64 bound) {
  if (!pair.split)
    fail(ErrorCode::NotSplit, "free-module identity needs a split pair");
  KoszulClass c = koszul_class(pair, truncation);
  GradedVirtualCharacter lhs =
      symmetric_algebra_series(pair.g_as_k_rep, truncation).times(c.series);
  GradedVirtualCharacter rhs = symmetric_algebra_series(pair.p_as_k_rep, truncation);
  return compare_on_window(pair, lhs, rhs, truncation, bound,
                           truncation - pair.dim_k());
}

}  // namespace kres

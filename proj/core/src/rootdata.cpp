#include "kres/rootdata.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

namespace kres {

namespace {

std::vector<i64> zip_i64(const std::vector<i64>& a, const std::vector<i64>& b,
                         i64 sign) {
  internal_check(a.size() == b.size(), "weight rank mismatch");
  std::vector<i64> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + sign * b[i];
  return r;
}

}  // namespace

Weight Weight::operator+(const Weight& o) const { return Weight(zip_i64(c, o.c, 1)); }
Weight Weight::operator-(const Weight& o) const { return Weight(zip_i64(c, o.c, -1)); }

Weight Weight::operator-() const {
  Weight r = *this;
  for (auto& x : r.c) x = -x;
  return r;
}

Weight Weight::operator*(i64 k) const {
  Weight r = *this;
  for (auto& x : r.c) x *= k;
  return r;
}

bool Weight::is_zero() const {
  return std::all_of(c.begin(), c.end(), [](i64 x) { return x == 0; });
}

std::string Weight::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
  os << ')';
  return os.str();
}

RationalWeight RationalWeight::of(const Weight& w) {
  RationalWeight r;
  r.c.reserve(w.c.size());
  for (i64 x : w.c) r.c.emplace_back(x);
  return r;
}

std::strong_ordering RationalWeight::operator<=>(const RationalWeight& o) const {
  internal_check(c.size() == o.c.size(), "weight rank mismatch");
  for (std::size_t i = 0; i < c.size(); ++i) {
    int cmp = mpq_cmp(c[i].get_mpq_t(), o.c[i].get_mpq_t());
    if (cmp < 0) return std::strong_ordering::less;
    if (cmp > 0) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

RationalWeight RationalWeight::operator+(const RationalWeight& o) const {
  internal_check(c.size() == o.c.size(), "weight rank mismatch");
  RationalWeight r = *this;
  for (std::size_t i = 0; i < c.size(); ++i) r.c[i] += o.c[i];
  return r;
}

RationalWeight RationalWeight::operator-(const RationalWeight& o) const {
  internal_check(c.size() == o.c.size(), "weight rank mismatch");
  RationalWeight r = *this;
  for (std::size_t i = 0; i < c.size(); ++i) r.c[i] -= o.c[i];
  return r;
}

RationalWeight RationalWeight::operator*(const Rat& k) const {
  RationalWeight r = *this;
  for (auto& x : r.c) x *= k;
  return r;
}

bool RationalWeight::is_integral() const {
  return std::all_of(c.begin(), c.end(), [](const Rat& x) { return kres::is_integral(x); });
}

Weight RationalWeight::to_weight() const {
  internal_check(is_integral(), "non-integral weight coerced to lattice");
  Weight w;
  w.c.reserve(c.size());
  for (const Rat& x : c) w.c.push_back(to_i64(Int(x.get_num())));
  return w;
}

std::string RationalWeight::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << rat_to_string(c[i]);
  os << ')';
  return os.str();
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix r;
  r.m.assign(n, std::vector<i64>(n, 0));
  for (std::size_t i = 0; i < n; ++i) r.m[i][i] = 1;
  return r;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  const std::size_t n = m.size();
  internal_check(n == o.m.size(), "matrix size mismatch");
  IntMatrix r;
  r.m.assign(n, std::vector<i64>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) r.m[i][j] += m[i][k] * o.m[k][j];
  return r;
}

Weight IntMatrix::apply(const Weight& w) const {
  const std::size_t n = m.size();
  internal_check(w.c.size() == n, "matrix/weight rank mismatch");
  Weight r;
  r.c.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r.c[i] += m[i][j] * w.c[j];
  return r;
}

RationalWeight IntMatrix::apply(const RationalWeight& w) const {
  const std::size_t n = m.size();
  internal_check(w.c.size() == n, "matrix/weight rank mismatch");
  RationalWeight r;
  r.c.assign(n, Rat(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r.c[i] += Rat(m[i][j]) * w.c[j];
  return r;
}

std::string lie_type_label(LieType t) {
  switch (t) {
    case LieType::A1: return "A1";
    case LieType::A2: return "A2";
    case LieType::C2: return "C2";
    case LieType::SO2: return "SO2";
    case LieType::SO3: return "SO3";
    case LieType::U2: return "U2";
  }
  fail(ErrorCode::Internal, "bad LieType");
}

LieType parse_lie_type(const std::string& label) {
  if (label == "A1") return LieType::A1;
  if (label == "A2") return LieType::A2;
  if (label == "C2") return LieType::C2;
  if (label == "SO2") return LieType::SO2;
  if (label == "SO3") return LieType::SO3;
  if (label == "U2") return LieType::U2;
  fail(ErrorCode::UnsupportedType, "unsupported root datum type '" + label + "'");
}

namespace {

Weight wt(std::vector<i64> c) { return Weight(std::move(c)); }

RationalWeight rwt(std::vector<Rat> c) { return RationalWeight(std::move(c)); }

std::vector<std::vector<Rat>> gram1(Rat a) { return {{a}}; }

std::vector<std::vector<Rat>> gram2(Rat a, Rat b, Rat d) {
  return {{a, b}, {b, d}};
}

}  // namespace

std::shared_ptr<const RootDatum> RootDatum::build(LieType t) {
  auto rd = std::shared_ptr<RootDatum>(new RootDatum());
  rd->type_ = t;
  switch (t) {
    case LieType::A1:
      rd->rank_ = 1;
      rd->cartan_.m = {{2}};
      rd->simple_roots_ = {wt({2})};
      rd->simple_coroots_ = {wt({1})};
      rd->positive_roots_ = {wt({2})};
      rd->positive_coroots_ = {wt({1})};
      rd->fundamental_weights_ = {wt({1})};
      rd->invariant_degrees_ = {2};
      rd->gram_ = gram1(Rat(1, 2));
      break;
    case LieType::A2:
      rd->rank_ = 2;
      rd->cartan_.m = {{2, -1}, {-1, 2}};
      rd->simple_roots_ = {wt({2, -1}), wt({-1, 2})};
      rd->simple_coroots_ = {wt({1, 0}), wt({0, 1})};
      rd->positive_roots_ = {wt({2, -1}), wt({-1, 2}), wt({1, 1})};
      rd->positive_coroots_ = {wt({1, 0}), wt({0, 1}), wt({1, 1})};
      rd->fundamental_weights_ = {wt({1, 0}), wt({0, 1})};
      rd->invariant_degrees_ = {2, 3};
      rd->gram_ = gram2(Rat(2, 3), Rat(1, 3), Rat(2, 3));
      break;
    case LieType::C2:
      // alpha_1 short, alpha_2 long; cartan[i][j] = <alpha_j, alpha_i^vee>.
      rd->rank_ = 2;
      rd->cartan_.m = {{2, -2}, {-1, 2}};
      rd->simple_roots_ = {wt({2, -1}), wt({-2, 2})};
      rd->simple_coroots_ = {wt({1, 0}), wt({0, 1})};
      rd->positive_roots_ = {wt({2, -1}), wt({-2, 2}), wt({0, 1}), wt({2, 0})};
      rd->positive_coroots_ = {wt({1, 0}), wt({0, 1}), wt({1, 2}), wt({1, 1})};
      rd->fundamental_weights_ = {wt({1, 0}), wt({0, 1})};
      rd->invariant_degrees_ = {2, 4};
      rd->gram_ = gram2(Rat(1), Rat(1), Rat(2));
      break;
    case LieType::SO2:
      rd->rank_ = 1;
      rd->cartan_.m = {};
      rd->fundamental_weights_ = {wt({1})};
      rd->gram_ = gram1(Rat(1));
      rd->ktype_fold_ = true;
      break;
    case LieType::SO3:
      // Even-weight chart: the 3-dimensional representation is V(2), so the
      // weight lattice is 2Z and rho sits at 1.
      rd->rank_ = 1;
      rd->cartan_.m = {{2}};
      rd->simple_roots_ = {wt({2})};
      rd->simple_coroots_ = {wt({1})};
      rd->positive_roots_ = {wt({2})};
      rd->positive_coroots_ = {wt({1})};
      rd->fundamental_weights_ = {wt({2})};
      rd->gram_ = gram1(Rat(1, 2));
      rd->stride_ = 2;
      break;
    case LieType::U2:
      // Weights (a,b) in the standard chart; dominant means a >= b.
      rd->rank_ = 2;
      rd->cartan_.m = {{2}};
      rd->simple_roots_ = {wt({1, -1})};
      rd->simple_coroots_ = {wt({1, -1})};
      rd->positive_roots_ = {wt({1, -1})};
      rd->positive_coroots_ = {wt({1, -1})};
      rd->fundamental_weights_ = {wt({1, 0}), wt({0, 1})};
      rd->gram_ = gram2(Rat(1), Rat(0), Rat(1));
      break;
  }
  rd->finalize();
  return rd;
}

std::shared_ptr<const RootDatum> RootDatum::build(const std::string& label) {
  return build(parse_lie_type(label));
}

void RootDatum::finalize() {
  // rho = half the sum of positive roots.
  rho_.c.assign(rank_, Rat(0));
  for (const Weight& r : positive_roots_)
    for (std::size_t i = 0; i < rank_; ++i) rho_.c[i] += Rat(r.c[i], 2);

  // Simple-reflection matrices s_i = 1 - alpha_i (x) alpha_i^vee.
  std::vector<IntMatrix> refl;
  for (std::size_t i = 0; i < simple_roots_.size(); ++i) {
    IntMatrix s = IntMatrix::identity(rank_);
    for (std::size_t k = 0; k < rank_; ++k)
      for (std::size_t l = 0; l < rank_; ++l)
        s.m[k][l] -= simple_roots_[i].c[k] * simple_coroots_[i].c[l];
    refl.push_back(std::move(s));
  }

  // Materialize W by breadth-first closure; keeps shortest words.
  std::map<IntMatrix, std::vector<int>> seen;
  std::deque<WeylElement> queue;
  WeylElement id{{}, IntMatrix::identity(rank_)};
  seen.emplace(id.matrix, id.word);
  queue.push_back(id);
  while (!queue.empty()) {
    WeylElement cur = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < refl.size(); ++i) {
      WeylElement next;
      next.matrix = cur.matrix * refl[i];
      if (seen.count(next.matrix)) continue;
      next.word = cur.word;
      next.word.push_back(static_cast<int>(i) + 1);
      seen.emplace(next.matrix, next.word);
      queue.push_back(next);
    }
  }
  weyl_.clear();
  for (auto& [matrix, word] : seen) weyl_.push_back(WeylElement{word, matrix});
  std::sort(weyl_.begin(), weyl_.end(), [](const WeylElement& a, const WeylElement& b) {
    return std::pair(a.length(), a.word) < std::pair(b.length(), b.word);
  });
}

bool RootDatum::in_lattice(const Weight& w) const {
  internal_check(w.rank() == rank_, "weight rank mismatch");
  return std::all_of(w.c.begin(), w.c.end(),
                     [this](i64 x) { return x % stride_ == 0; });
}

i64 RootDatum::pairing(const Weight& w, int i) const {
  if (i < 1 || static_cast<std::size_t>(i) > semisimple_rank())
    fail(ErrorCode::BadIndex, "simple-reflection index out of range");
  const Weight& cv = simple_coroots_[static_cast<std::size_t>(i) - 1];
  i64 s = 0;
  for (std::size_t k = 0; k < rank_; ++k) s += w.c[k] * cv.c[k];
  return s;
}

Rat RootDatum::pairing(const RationalWeight& w, int i) const {
  if (i < 1 || static_cast<std::size_t>(i) > semisimple_rank())
    fail(ErrorCode::BadIndex, "simple-reflection index out of range");
  const Weight& cv = simple_coroots_[static_cast<std::size_t>(i) - 1];
  Rat s(0);
  for (std::size_t k = 0; k < rank_; ++k) s += w.c[k] * Rat(cv.c[k]);
  return s;
}

Rat RootDatum::form(const RationalWeight& a, const RationalWeight& b) const {
  internal_check(a.rank() == rank_ && b.rank() == rank_, "weight rank mismatch");
  Rat s(0);
  for (std::size_t i = 0; i < rank_; ++i)
    for (std::size_t j = 0; j < rank_; ++j) s += a.c[i] * gram_[i][j] * b.c[j];
  return s;
}

Weight RootDatum::reflect(int i, const Weight& w) const {
  i64 p = pairing(w, i);
  return w - simple_roots_[static_cast<std::size_t>(i) - 1] * p;
}

RationalWeight RootDatum::reflect(int i, const RationalWeight& w) const {
  Rat p = pairing(w, i);
  return w - RationalWeight::of(simple_roots_[static_cast<std::size_t>(i) - 1]) * p;
}

bool RootDatum::is_dominant(const Weight& w) const {
  for (std::size_t i = 1; i <= semisimple_rank(); ++i)
    if (pairing(w, static_cast<int>(i)) < 0) return false;
  return true;
}

bool RootDatum::is_dominant(const RationalWeight& w) const {
  for (std::size_t i = 1; i <= semisimple_rank(); ++i)
    if (pairing(w, static_cast<int>(i)) < 0) return false;
  return true;
}

const WeylElement& RootDatum::longest_element() const {
  return weyl_.back();  // sorted by length; the top length is unique
}

std::pair<Weight, WeylElement> RootDatum::dominant_representative(const Weight& w) const {
  for (const WeylElement& g : weyl_) {
    Weight img = g.matrix.apply(w);
    if (is_dominant(img)) return {img, g};
  }
  fail(ErrorCode::Internal, "no dominant representative found");
}

std::pair<RationalWeight, WeylElement> RootDatum::dominant_representative(
    const RationalWeight& w) const {
  for (const WeylElement& g : weyl_) {
    RationalWeight img = g.matrix.apply(w);
    if (is_dominant(img)) return {img, g};
  }
  fail(ErrorCode::Internal, "no dominant representative found");
}

bool RootDatum::same_w_orbit(const RationalWeight& u, const RationalWeight& v) const {
  for (const WeylElement& g : weyl_)
    if (g.matrix.apply(u) == v) return true;
  return false;
}

std::vector<Weight> RootDatum::lattice_box(i64 bound) const {
  internal_check(bound >= 0, "negative bound");
  std::vector<Weight> out;
  std::vector<i64> cur(rank_, 0);
  auto rec = [&](auto&& self, std::size_t pos) -> void {
    if (pos == rank_) {
      Weight w(cur);
      if (in_lattice(w)) out.push_back(std::move(w));
      return;
    }
    for (i64 x = -bound; x <= bound; ++x) {
      cur[pos] = x;
      self(self, pos + 1);
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<Weight> RootDatum::dominant_weights_up_to(i64 bound) const {
  std::vector<Weight> out;
  for (Weight& w : lattice_box(bound))
    if (is_dominant(w)) out.push_back(std::move(w));
  return out;
}

}  // namespace kres

#include "kres/pairdata.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace kres {

namespace {

using nlohmann::json;

[[noreturn]] void corrupt(const std::string& name, const std::string& what) {
  fail(ErrorCode::CorruptCatalog, "catalog entry '" + name + "': " + what);
}

void require(bool ok, const std::string& name, const std::string& what) {
  if (!ok) corrupt(name, what);
}

Weight parse_weight(const json& j, std::size_t rank, const std::string& name) {
  require(j.is_array() && j.size() == rank, name, "weight of wrong rank");
  std::vector<i64> c;
  for (const auto& x : j) {
    require(x.is_number_integer(), name, "weight coordinate must be an integer");
    c.push_back(x.get<i64>());
  }
  return Weight(std::move(c));
}

VirtualKCharacter parse_character(const json& j, std::shared_ptr<const RootDatum> rd,
                                  const std::string& name) {
  VirtualKCharacter ch(rd);
  require(j.is_array(), name, "character must be an array of terms");
  for (const auto& term : j) {
    require(term.is_object() && term.size() == 2 && term.contains("weight") &&
                term.contains("mult"),
            name, "character term must be {weight, mult}");
    Weight w = parse_weight(term["weight"], rd->rank(), name);
    require(term["mult"].is_number_integer(), name, "mult must be an integer");
    try {
      ch.add_term(w, term["mult"].get<i64>());
    } catch (const Error&) {
      corrupt(name, "character key " + w.str() + " is not a dominant lattice weight");
    }
  }
  return ch;
}

RationalWeight parse_rational_vector(const json& j, std::size_t rank,
                                     const std::string& name) {
  require(j.is_array() && j.size() == rank, name, "rational vector of wrong rank");
  std::vector<Rat> c;
  for (const auto& x : j) {
    require(x.is_string(), name, "rationals are written as strings 'p/q'");
    c.push_back(rat_from_string(x.get<std::string>()));
  }
  return RationalWeight(std::move(c));
}

// The adjoint representation of the group behind a root datum, as a character.
VirtualKCharacter adjoint_character(std::shared_ptr<const RootDatum> rd) {
  std::map<Weight, i64> weights;
  Weight zero(std::vector<i64>(rd->rank(), 0));
  weights[zero] = static_cast<i64>(rd->rank());
  for (const Weight& r : rd->positive_roots()) {
    weights[r] += 1;
    weights[-r] += 1;
  }
  return character_from_weights(rd, weights);
}

json load_catalog_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::UsageError, "cannot open catalog file '" + path + "'");
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    fail(ErrorCode::CorruptCatalog, "catalog is not valid JSON: " + std::string(e.what()));
  }
  if (!doc.is_array()) fail(ErrorCode::CorruptCatalog, "catalog must be a JSON array");
  return doc;
}

const std::set<std::string> kKnownKeys = {
    "name",          "g_datum",       "k_datum",           "g_as_k_rep",
    "k_adjoint",     "p_as_k_rep",    "invariant_degrees", "m_rank",
    "m_cocharacters", "weight_reduction", "split"};

PairPtr parse_pair(const json& entry) {
  if (!entry.is_object() || !entry.contains("name") || !entry["name"].is_string())
    fail(ErrorCode::CorruptCatalog, "catalog entry without a name");
  const std::string name = entry["name"].get<std::string>();

  // Strict mode: unknown keys are rejected so typos cannot silently pass.
  for (const auto& [key, value] : entry.items())
    require(kKnownKeys.count(key) > 0, name, "unknown key '" + key + "'");
  for (const auto& key : kKnownKeys)
    require(entry.contains(key), name, "missing key '" + key + "'");

  auto pair = std::make_shared<SymmetricPairData>();
  pair->name = name;
  try {
    pair->g = RootDatum::build(entry["g_datum"].get<std::string>());
    pair->k = RootDatum::build(entry["k_datum"].get<std::string>());
  } catch (const Error& e) {
    corrupt(name, e.what());
  }

  pair->g_as_k_rep = parse_character(entry["g_as_k_rep"], pair->k, name);
  pair->k_adjoint = parse_character(entry["k_adjoint"], pair->k, name);
  pair->p_as_k_rep = parse_character(entry["p_as_k_rep"], pair->k, name);

  require(entry["invariant_degrees"].is_array(), name, "invariant_degrees must be an array");
  for (const auto& d : entry["invariant_degrees"]) {
    require(d.is_number_integer() && d.get<i64>() > 0, name,
            "invariant degrees are positive integers");
    pair->invariant_degrees.push_back(d.get<i64>());
  }

  require(entry["m_rank"].is_number_integer() && entry["m_rank"].get<int>() >= 0, name,
          "m_rank must be a non-negative integer");
  pair->m_rank = entry["m_rank"].get<int>();

  const auto& cochars = entry["m_cocharacters"];
  require(cochars.is_array() && cochars.size() == (std::size_t(1) << pair->m_rank), name,
          "m_cocharacters must list one vector per element of M");
  for (const auto& v : cochars)
    pair->m_cocharacters.push_back(parse_rational_vector(v, pair->k->rank(), name));

  const auto& reduction = entry["weight_reduction"];
  require(reduction.is_array() && reduction.size() == static_cast<std::size_t>(pair->m_rank),
          name, "weight_reduction must have one row per M generator");
  for (const auto& row : reduction)
    pair->weight_reduction.push_back(parse_weight(row, pair->g->rank(), name));

  require(entry["split"].is_boolean(), name, "split must be a boolean");
  pair->split = entry["split"].get<bool>();

  return pair;
}

void validate_pair(const SymmetricPairData& p) {
  const std::string& name = p.name;

  // Cartan decomposition bookkeeping.
  require(p.dim_g() == p.g->group_dimension(), name,
          "g_as_k_rep dimension disagrees with the group dimension");
  require(p.dim_k() == p.k->group_dimension(), name,
          "k_adjoint dimension disagrees with dim K");
  require(p.dim_k() + p.dim_p() == p.dim_g(), name,
          "dim k + dim p != dim g");
  require(p.g_as_k_rep == p.k_adjoint + p.p_as_k_rep, name,
          "g_as_k_rep != k_adjoint + p_as_k_rep");
  require(p.k_adjoint == adjoint_character(p.k), name,
          "k_adjoint is not the adjoint character of the K datum");

  // Invariant theory bookkeeping.
  i64 prod = 1;
  for (i64 d : p.invariant_degrees) prod *= d;
  require(prod == static_cast<i64>(p.g->weyl_group().size()), name,
          "product of invariant degrees != |W|");

  if (p.split) {
    require(p.dim_p() == static_cast<i64>(p.g->positive_roots().size() + p.g->rank()), name,
            "split pair must have dim p = #positive roots + rank");
    require(p.m_rank == static_cast<int>(p.g->rank()), name,
            "split pair must have m_rank = rank of G");
  } else {
    require(p.m_rank == 0 && p.dim_p() == 0, name,
            "compact pair must have m_rank = 0 and p = 0");
  }

  // M must act by +-1 on the K-weight lattice.
  require(!p.m_cocharacters.empty(), name, "missing identity cocharacter");
  for (const Rat& x : p.m_cocharacters[0].c)
    require(x == 0, name, "identity element must carry the zero cocharacter");
  for (const RationalWeight& x : p.m_cocharacters)
    for (const Weight& basis : p.k->fundamental_weights()) {
      Rat s(0);
      for (std::size_t i = 0; i < p.k->rank(); ++i) s += Rat(basis.c[i]) * x.c[i];
      require(is_integral(s), name, "cocharacter does not pair integrally with the K lattice");
    }

  require(p.k->semisimple_rank() == 0 || !p.k->ktype_fold(), name,
          "folded labels only make sense for a torus datum");
}

}  // namespace

std::string default_catalog_path() {
#ifdef KRES_DEFAULT_CATALOG
  return KRES_DEFAULT_CATALOG;
#else
  return "data/pairs.json";
#endif
}

PairPtr load_pair(const std::string& name, const std::string& catalog_path) {
  json doc = load_catalog_file(catalog_path);
  for (const auto& entry : doc) {
    if (entry.is_object() && entry.contains("name") && entry["name"] == name) {
      PairPtr pair = parse_pair(entry);
      validate_pair(*pair);
      return pair;
    }
  }
  fail(ErrorCode::UnknownPair, "no pair named '" + name + "' in " + catalog_path);
}

std::vector<CatalogRow> catalog_list(const std::string& catalog_path) {
  json doc = load_catalog_file(catalog_path);
  std::vector<CatalogRow> rows;
  for (const auto& entry : doc) {
    PairPtr pair = parse_pair(entry);
    validate_pair(*pair);
    CatalogRow row;
    row.name = pair->name;
    row.g_label = pair->g->label();
    row.k_label = pair->k->label();
    row.dim_g = pair->dim_g();
    row.dim_k = pair->dim_k();
    row.dim_p = pair->dim_p();
    row.degrees = pair->invariant_degrees;
    row.m_rank = pair->m_rank;
    row.split = pair->split;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<int> lambda_bar(const SymmetricPairData& pair, const Weight& lambda) {
  internal_check(lambda.rank() == pair.g->rank(), "weight rank mismatch");
  std::vector<int> out(lambda.c.size());
  for (std::size_t i = 0; i < lambda.c.size(); ++i)
    out[i] = static_cast<int>(((lambda.c[i] % 2) + 2) % 2);
  return out;
}

TwoGroupCharacter m_character_of(const SymmetricPairData& pair,
                                 const std::vector<int>& lam_bar) {
  internal_check(lam_bar.size() == pair.g->rank(), "lambda_bar rank mismatch");
  TwoGroupCharacter ch;
  ch.rank = pair.m_rank;
  const std::size_t n = std::size_t(1) << pair.m_rank;
  ch.values.assign(n, 1);
  // Parity of <lambda, row_j> for each generator j.
  std::vector<int> parity(pair.m_rank, 0);
  for (int j = 0; j < pair.m_rank; ++j) {
    i64 s = 0;
    for (std::size_t i = 0; i < pair.g->rank(); ++i)
      s += pair.weight_reduction[static_cast<std::size_t>(j)].c[i] * lam_bar[i];
    parity[j] = static_cast<int>(((s % 2) + 2) % 2);
  }
  for (std::size_t mask = 0; mask < n; ++mask) {
    int total = 0;
    for (int j = 0; j < pair.m_rank; ++j)
      if (mask & (std::size_t(1) << j)) total ^= parity[j];
    ch.values[mask] = total ? -1 : 1;
  }
  return ch;
}

TwoGroupCharacter reduce_mod_2(const SymmetricPairData& pair, const Weight& lambda) {
  return m_character_of(pair, lambda_bar(pair, lambda));
}

TwoGroupCharacter restrict_to_M(const SymmetricPairData& pair, const Weight& tau) {
  if (!pair.k->is_dominant(tau))
    fail(ErrorCode::NotDominant, "K-type label must be dominant: " + tau.str());
  const auto& weights = weight_multiset(*pair.k, tau);
  TwoGroupCharacter ch;
  ch.rank = pair.m_rank;
  const std::size_t n = std::size_t(1) << pair.m_rank;
  ch.values.assign(n, 0);
  for (std::size_t mask = 0; mask < n; ++mask) {
    const RationalWeight& x = pair.m_cocharacters[mask];
    i64 acc = 0;
    for (const auto& [w, m] : weights) {
      Rat s(0);
      for (std::size_t i = 0; i < pair.k->rank(); ++i) s += Rat(w.c[i]) * x.c[i];
      internal_check(is_integral(s), "cocharacter pairing left a fraction");
      acc += (Int(s.get_num()) % 2 == 0) ? m : -m;
    }
    ch.values[mask] = acc;
  }
  return ch;
}

std::vector<Weight> ktype_labels(const SymmetricPairData& pair, i64 bound) {
  std::vector<Weight> out;
  for (Weight& w : pair.k->dominant_weights_up_to(bound)) {
    if (pair.k->ktype_fold() && w.c[0] < 0) continue;
    out.push_back(std::move(w));
  }
  return out;
}

std::vector<Weight> signed_ktypes(const SymmetricPairData& pair, i64 bound) {
  return pair.k->dominant_weights_up_to(bound);
}

}  // namespace kres

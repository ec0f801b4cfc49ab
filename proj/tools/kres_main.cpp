// kres: exact restriction calculus on principal-series bases and graded
// K-theory of nilpotent cones, for the pairs in the catalog.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "kres/jsonio.hpp"

namespace fs = std::filesystem;
using namespace kres;

namespace {

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::UsageError:
    case ErrorCode::UnknownPair:
    case ErrorCode::CorruptCatalog:
    case ErrorCode::NotDominant:
    case ErrorCode::BadIndex:
      return 2;
    case ErrorCode::TruncationTooSmall:
      return 3;
    case ErrorCode::NotSplit:
    case ErrorCode::UnsupportedPair:
    case ErrorCode::UnsupportedType:
    case ErrorCode::WrongSide:
      return 4;
    case ErrorCode::Internal:
      return 70;
  }
  return 70;
}

std::string env_or(const char* name, const std::string& fallback) {
  const char* v = std::getenv(name);
  return v ? std::string(v) : fallback;
}

// Content-addressed output cache.  Entries are complete output documents;
// stale formats are skipped via the schema_version tag.
class OutputCache {
public:
  explicit OutputCache(std::string dir) : dir_(std::move(dir)) {}

  std::optional<std::string> lookup(const OrderedJson& config_echo) const {
    std::ifstream in(path_for(config_echo));
    if (!in) return std::nullopt;
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    try {
      OrderedJson doc = OrderedJson::parse(text);
      if (!doc.contains("schema_version") || doc["schema_version"] != "1") return std::nullopt;
      if (!doc.contains("config_echo") || doc["config_echo"] != config_echo) return std::nullopt;
    } catch (const OrderedJson::exception&) {
      return std::nullopt;
    }
    return text;
  }

  void store(const OrderedJson& config_echo, const std::string& text) const {
    std::error_code ec;
    fs::create_directories(dir_, ec);
    if (ec) return;  // cache is best-effort
    fs::path final_path = path_for(config_echo);
    fs::path tmp = final_path;
    tmp += ".tmp" + std::to_string(static_cast<unsigned long>(::getpid()));
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      if (!out) return;
      out << text;
    }
    fs::rename(tmp, final_path, ec);
    if (ec) fs::remove(tmp, ec);
  }

private:
  fs::path path_for(const OrderedJson& config_echo) const {
    char hex[17];
    std::snprintf(hex, sizeof hex, "%016llx",
                  static_cast<unsigned long long>(fnv1a(config_echo.dump())));
    return fs::path(dir_) / (std::string(hex) + ".json");
  }

  std::string dir_;
};

struct Output {
  std::string out_path;

  // Returns the bytes that were printed, for the exit-code decision.
  OrderedJson emit(const OutputCache& cache, const OrderedJson& config_echo,
                   const std::function<OrderedJson()>& compute) const {
    std::string text;
    if (auto hit = cache.lookup(config_echo)) {
      text = *hit;
    } else {
      OrderedJson doc = envelope(config_echo, compute());
      text = dump_stable(doc);
      cache.store(config_echo, text);
    }
    std::cout << text;
    if (!out_path.empty()) {
      std::ofstream f(out_path, std::ios::binary | std::ios::trunc);
      if (!f) fail(ErrorCode::UsageError, "cannot write '" + out_path + "'");
      f << text;
    }
    return OrderedJson::parse(text);
  }
};

struct VerifyDefaults {
  i64 degree, bound;
};

VerifyDefaults verify_defaults(const std::string& suite, const std::string& pair) {
  if (suite == "split-prop") {
    if (pair == "sl2r") return {16, 10};
    if (pair == "sl3r") return {12, 6};
    return {10, 4};
  }
  if (suite == "koszul-ktypes") {
    if (pair == "sl2r") return {16, 10};
    if (pair == "sl3r") return {14, 6};
    return {12, 4};
  }
  if (suite == "translation") {
    if (pair == "sp4r") return {0, 4};
    return {0, 6};
  }
  if (suite == "infchar") return {0, 6};
  if (suite == "homology") {
    if (pair == "su2") return {0, 2};
    return {0, 4};
  }
  fail(ErrorCode::UsageError, "unknown suite '" + suite + "'");
}

constexpr unsigned kInfCharSeed = 20240809u;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact restriction calculus for split pairs at small rank"};
  app.require_subcommand(1);

  std::string catalog = env_or("KRES_CATALOG", default_catalog_path());
  app.add_option("--catalog", catalog, "catalog file (JSON)")->capture_default_str();

  OutputCache cache(env_or("KRES_CACHE_DIR", ".kres-cache"));

  // ---- catalog ----
  auto* cmd_catalog = app.add_subcommand("catalog", "list the catalog entries");
  std::string catalog_out;
  cmd_catalog->add_option("--out", catalog_out, "also write the JSON to this path");

  // ---- rmap ----
  auto* cmd_rmap =
      app.add_subcommand("rmap", "image of a complex principal-series class");
  std::string rmap_pair, rmap_lambda, rmap_nu, rmap_convention = "half-sum", rmap_out;
  cmd_rmap->add_option("--pair", rmap_pair, "pair name")->required();
  cmd_rmap->add_option("--lambda", rmap_lambda, "lattice parameter, comma-separated integers")
      ->required();
  cmd_rmap->add_option("--nu", rmap_nu, "continuous parameter, comma-separated rationals p/q")
      ->required();
  cmd_rmap->add_option("--convention", rmap_convention, "half-sum|nu")->capture_default_str();
  cmd_rmap->add_option("--out", rmap_out, "also write the JSON to this path");

  // ---- ktypes ----
  auto* cmd_ktypes = app.add_subcommand("ktypes", "K-multiplicity table of a principal series");
  std::string kt_pair, kt_side = "real", kt_lambda, kt_nu, kt_out;
  i64 kt_bound = 6;
  cmd_ktypes->add_option("--pair", kt_pair, "pair name")->required();
  cmd_ktypes->add_option("--side", kt_side, "real|complex")->capture_default_str();
  cmd_ktypes->add_option("--lambda", kt_lambda, "lattice parameter")->required();
  cmd_ktypes->add_option("--nu", kt_nu, "continuous parameter (multiplicities do not depend on it)");
  cmd_ktypes->add_option("--bound", kt_bound, "K-type coordinate bound")->capture_default_str();
  cmd_ktypes->add_option("--out", kt_out, "also write the JSON to this path");

  // ---- koszul ----
  auto* cmd_koszul = app.add_subcommand("koszul", "homology of the Koszul complex of F(a)(x)F(b)");
  std::string kz_pair, kz_a, kz_b, kz_out;
  cmd_koszul->add_option("--pair", kz_pair, "pair name (sl2-based)")->required();
  cmd_koszul->add_option("--a", kz_a, "left highest weight")->required();
  cmd_koszul->add_option("--b", kz_b, "right highest weight")->required();
  cmd_koszul->add_option("--out", kz_out, "also write the JSON to this path");

  // ---- verify ----
  auto* cmd_verify = app.add_subcommand("verify", "run a verification suite");
  std::string vf_pair, vf_suite_pos, vf_suite_flag, vf_convention = "half-sum", vf_out;
  i64 vf_degree = -1, vf_bound = -1;
  cmd_verify->add_option("--pair", vf_pair, "pair name")->required();
  cmd_verify->add_option("SUITE", vf_suite_pos,
                         "split-prop|koszul-ktypes|translation|infchar|homology");
  cmd_verify->add_option("--suite", vf_suite_flag, "same as the positional argument");
  cmd_verify->add_option("--degree", vf_degree, "truncation degree override");
  cmd_verify->add_option("--bound", vf_bound, "weight bound override");
  cmd_verify->add_option("--convention", vf_convention, "half-sum|nu")->capture_default_str();
  cmd_verify->add_option("--out", vf_out, "also write the report to this path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (cmd_catalog->parsed()) {
      OrderedJson echo{{"command", "catalog"}, {"catalog", catalog}};
      Output{catalog_out}.emit(cache, echo, [&] {
        OrderedJson rows = OrderedJson::array();
        for (const CatalogRow& r : catalog_list(catalog)) {
          OrderedJson row;
          row["name"] = r.name;
          row["g"] = r.g_label;
          row["k"] = r.k_label;
          row["dim_g"] = r.dim_g;
          row["dim_k"] = r.dim_k;
          row["dim_p"] = r.dim_p;
          row["degrees"] = r.degrees;
          row["m_rank"] = r.m_rank;
          row["split"] = r.split;
          rows.push_back(std::move(row));
        }
        return OrderedJson{{"pairs", rows}};
      });
      return 0;
    }

    if (cmd_rmap->parsed()) {
      PairPtr pair = load_pair(rmap_pair, catalog);
      ContinuousConvention conv = parse_convention(rmap_convention);
      Weight lambda = parse_integer_vector_arg(rmap_lambda, pair->g->rank());
      RationalWeight nu = parse_rational_vector_arg(rmap_nu, pair->g->rank());
      OrderedJson echo{{"command", "rmap"},          {"pair", rmap_pair},
                       {"lambda", rmap_lambda},      {"nu", rmap_nu},
                       {"convention", rmap_convention}, {"catalog", catalog}};
      Output{rmap_out}.emit(cache, echo, [&] {
        StandardClass x(GroupSide::Complex);
        x.add(*pair, ComplexPSParam{lambda, nu}, 1);
        return standard_class_json(restriction_hom(*pair, x, conv));
      });
      return 0;
    }

    if (cmd_ktypes->parsed()) {
      PairPtr pair = load_pair(kt_pair, catalog);
      if (kt_side != "real" && kt_side != "complex")
        fail(ErrorCode::UsageError, "--side must be real or complex");
      Weight lambda = parse_integer_vector_arg(kt_lambda, pair->g->rank());
      OrderedJson echo{{"command", "ktypes"}, {"pair", kt_pair},   {"side", kt_side},
                       {"lambda", kt_lambda}, {"nu", kt_nu},       {"bound", kt_bound},
                       {"catalog", catalog}};
      Output{kt_out}.emit(cache, echo, [&] {
        OrderedJson entries = OrderedJson::array();
        if (kt_side == "complex") {
          for (const Weight& tau : pair->g->dominant_weights_up_to(kt_bound)) {
            i64 m = ktype_mult_complex(*pair, lambda, tau);
            if (m == 0) continue;
            OrderedJson entry;
            entry["tau"] = weight_json(tau);
            entry["mult"] = m;
            entries.push_back(std::move(entry));
          }
        } else {
          RealPSParam p{lambda_bar(*pair, lambda),
                        RationalWeight(std::vector<Rat>(pair->g->rank(), Rat(0)))};
          for (const Weight& tau : ktype_labels(*pair, kt_bound)) {
            i64 m = ktype_mult_real(*pair, p, tau);
            if (pair->k->ktype_fold())
              internal_check(m == ktype_mult_real(*pair, p, -tau),
                             "folded K-type labels carry unequal multiplicities");
            if (m == 0) continue;
            OrderedJson entry;
            entry["tau"] = weight_json(tau);
            entry["mult"] = m;
            entries.push_back(std::move(entry));
          }
        }
        OrderedJson payload;
        payload["side"] = kt_side;
        payload["entries"] = std::move(entries);
        return payload;
      });
      return 0;
    }

    if (cmd_koszul->parsed()) {
      PairPtr pair = load_pair(kz_pair, catalog);
      Weight a = parse_integer_vector_arg(kz_a, 1);
      Weight b = parse_integer_vector_arg(kz_b, 1);
      OrderedJson echo{{"command", "koszul"}, {"pair", kz_pair}, {"a", kz_a},
                       {"b", kz_b},           {"catalog", catalog}};
      Output{kz_out}.emit(cache, echo, [&] {
        MatrixRep m = build_module(pair, a, b);
        internal_check(bracket_relations_hold(m), "module violates bracket relations");
        KoszulComplexData c = build_koszul_complex(m);
        internal_check(boundary_squares_to_zero(c), "boundary does not square to zero");
        std::vector<VirtualKCharacter> h = homology(c);
        OrderedJson table = OrderedJson::array();
        OrderedJson dims = OrderedJson::array();
        for (std::size_t i = 0; i < h.size(); ++i) {
          OrderedJson row;
          row["i"] = i;
          row["dim"] = h[i].dimension();
          row["character"] = character_json(h[i]);
          table.push_back(std::move(row));
          dims.push_back(h[i].dimension());
        }
        OrderedJson payload;
        payload["pair"] = kz_pair;
        payload["module_dim"] = m.dim;
        payload["dims"] = std::move(dims);
        payload["homology"] = std::move(table);
        return payload;
      });
      return 0;
    }

    if (cmd_verify->parsed()) {
      std::string suite = !vf_suite_flag.empty() ? vf_suite_flag : vf_suite_pos;
      if (suite.empty())
        fail(ErrorCode::UsageError, "verify needs a suite (positional or --suite)");
      PairPtr pair = load_pair(vf_pair, catalog);
      ContinuousConvention conv = parse_convention(vf_convention);
      VerifyDefaults defaults = verify_defaults(suite, vf_pair);
      i64 degree = vf_degree >= 0 ? vf_degree : defaults.degree;
      i64 bound = vf_bound >= 0 ? vf_bound : defaults.bound;

      OrderedJson echo{{"command", "verify"},   {"pair", vf_pair}, {"suite", suite},
                       {"degree", degree},      {"bound", bound},
                       {"convention", vf_convention}, {"catalog", catalog}};
      OrderedJson doc = Output{vf_out}.emit(cache, echo, [&]() -> OrderedJson {
        OrderedJson payload;
        payload["suite"] = suite;
        if (suite == "split-prop") {
          payload["report"] = split_report_json(verify_split_proposition(*pair, degree, bound));
        } else if (suite == "koszul-ktypes") {
          payload["report"] =
              spherical_report_json(spherical_ktype_crosscheck(*pair, bound, degree));
        } else if (suite == "translation") {
          payload["report"] = translation_report_json(verify_translation_commutes(
              *pair, bound, bound, standard_nu_values(*pair), conv));
        } else if (suite == "infchar") {
          payload["report"] = infchar_report_json(verify_infchar_compat(
              *pair, bound, standard_nu_values(*pair), 100, kInfCharSeed, conv));
        } else if (suite == "homology") {
          payload["report"] = koszul_grid_report_json(verify_koszul_grid(pair, bound, bound));
        } else {
          fail(ErrorCode::UsageError, "unknown suite '" + suite + "'");
        }
        return payload;
      });
      bool pass = doc["payload"]["report"]["pass"].get<bool>();
      return pass ? 0 : 1;
    }
  } catch (const Error& e) {
    std::cerr << "kres: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "kres: unexpected error: " << e.what() << "\n";
    return 70;
  }

  return 2;
}

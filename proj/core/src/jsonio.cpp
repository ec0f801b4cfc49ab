#include "kres/jsonio.hpp"

#include <sstream>

namespace kres {

namespace {
constexpr const char* kSchemaVersion = "1";
}

OrderedJson weight_json(const Weight& w) {
  OrderedJson arr = OrderedJson::array();
  for (i64 x : w.c) arr.push_back(x);
  return arr;
}

OrderedJson rational_weight_json(const RationalWeight& w) {
  OrderedJson arr = OrderedJson::array();
  for (const Rat& x : w.c) arr.push_back(rat_to_string(x));
  return arr;
}

OrderedJson character_json(const VirtualKCharacter& ch) {
  OrderedJson arr = OrderedJson::array();
  for (const auto& [w, m] : ch.terms()) {
    OrderedJson term;
    term["tau"] = weight_json(w);
    term["mult"] = m;
    arr.push_back(std::move(term));
  }
  return arr;
}

OrderedJson standard_class_json(const StandardClass& cls) {
  OrderedJson out;
  out["side"] = group_side_label(cls.side());
  OrderedJson terms = OrderedJson::array();
  if (cls.side() == GroupSide::Complex) {
    for (const auto& [p, m] : cls.complex_terms()) {
      OrderedJson term;
      term["lambda"] = weight_json(p.lambda);
      term["nu"] = rational_weight_json(p.nu);
      term["mult"] = m;
      terms.push_back(std::move(term));
    }
  } else {
    for (const auto& [p, m] : cls.real_terms()) {
      OrderedJson term;
      term["lambda_bar"] = p.lambda_bar;
      term["nu"] = rational_weight_json(p.nu);
      term["mult"] = m;
      terms.push_back(std::move(term));
    }
  }
  out["terms"] = std::move(terms);
  return out;
}

OrderedJson split_report_json(const SplitIdentityReport& report) {
  OrderedJson out;
  out["pair"] = report.pair_name;
  out["degree"] = report.truncation;
  out["bound"] = report.bound;
  out["exact_window"] = report.window;
  out["pass"] = report.pass();
  out["mismatch_count"] = report.mismatches.size();
  OrderedJson items = OrderedJson::array();
  for (const auto& m : report.mismatches) {
    OrderedJson item;
    item["tau"] = weight_json(m.tau);
    item["degree"] = m.degree;
    item["lhs"] = m.lhs;
    item["rhs"] = m.rhs;
    items.push_back(std::move(item));
  }
  out["mismatches"] = std::move(items);
  return out;
}

OrderedJson translation_report_json(const TranslationReport& report) {
  OrderedJson out;
  out["pair"] = report.pair_name;
  out["lambda_bound"] = report.lambda_bound;
  out["eps_bound"] = report.eps_bound;
  out["checked"] = report.checked;
  out["pass"] = report.pass();
  out["mismatch_count"] = report.mismatches.size();
  OrderedJson items = OrderedJson::array();
  for (const auto& m : report.mismatches) {
    OrderedJson item;
    item["lambda"] = weight_json(m.base.lambda);
    item["nu"] = rational_weight_json(m.base.nu);
    item["eps"] = weight_json(m.eps);
    items.push_back(std::move(item));
  }
  out["mismatches"] = std::move(items);
  return out;
}

OrderedJson infchar_report_json(const InfCharReport& report) {
  OrderedJson out;
  out["pair"] = report.pair_name;
  out["lambda_bound"] = report.lambda_bound;
  out["checked"] = report.checked;
  out["pass"] = report.pass();
  out["mismatch_count"] = report.mismatches.size();
  OrderedJson items = OrderedJson::array();
  for (const auto& m : report.mismatches) {
    OrderedJson item;
    item["lambda"] = weight_json(m.base.lambda);
    item["nu"] = rational_weight_json(m.base.nu);
    item["expected_left"] = rational_weight_json(m.expected_left);
    item["got"] = rational_weight_json(m.got);
    items.push_back(std::move(item));
  }
  out["mismatches"] = std::move(items);
  return out;
}

OrderedJson spherical_report_json(const SphericalReport& report) {
  OrderedJson out;
  out["pair"] = report.pair_name;
  out["bound"] = report.bound;
  out["degree"] = report.truncation;
  out["checked"] = report.checked;
  out["pass"] = report.pass();
  out["mismatch_count"] = report.mismatches.size();
  OrderedJson items = OrderedJson::array();
  for (const auto& m : report.mismatches) {
    OrderedJson item;
    item["tau"] = weight_json(m.tau);
    item["frobenius"] = m.frobenius;
    item["theta_sheaf"] = m.theta_sheaf;
    item["restricted"] = m.restricted;
    items.push_back(std::move(item));
  }
  out["mismatches"] = std::move(items);
  return out;
}

OrderedJson koszul_grid_report_json(const KoszulGridReport& report) {
  OrderedJson out;
  out["pair"] = report.pair_name;
  out["bound_a"] = report.bound_a;
  out["bound_b"] = report.bound_b;
  out["checked"] = report.checked;
  out["pass"] = report.pass();
  out["mismatch_count"] = report.mismatches.size();
  OrderedJson items = OrderedJson::array();
  for (const auto& m : report.mismatches) {
    OrderedJson item;
    item["a"] = weight_json(m.a);
    item["b"] = weight_json(m.b);
    item["what"] = m.what;
    items.push_back(std::move(item));
  }
  out["mismatches"] = std::move(items);
  return out;
}

OrderedJson envelope(const OrderedJson& config_echo, const OrderedJson& payload) {
  OrderedJson out;
  out["schema_version"] = kSchemaVersion;
  out["config_echo"] = config_echo;
  out["payload"] = payload;
  return out;
}

std::string dump_stable(const OrderedJson& doc) { return doc.dump(2) + "\n"; }

namespace {

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, ',')) parts.push_back(cur);
  if (!text.empty() && text.back() == ',') parts.push_back("");
  return parts;
}

}  // namespace

RationalWeight parse_rational_vector_arg(const std::string& text, std::size_t rank) {
  auto parts = split_commas(text);
  if (parts.size() != rank)
    fail(ErrorCode::UsageError, "expected " + std::to_string(rank) +
                                    " comma-separated rationals, got '" + text + "'");
  std::vector<Rat> c;
  for (const auto& p : parts) c.push_back(rat_from_string(p));
  return RationalWeight(std::move(c));
}

Weight parse_integer_vector_arg(const std::string& text, std::size_t rank) {
  RationalWeight r = parse_rational_vector_arg(text, rank);
  if (!r.is_integral())
    fail(ErrorCode::UsageError, "expected integers, got '" + text + "'");
  return r.to_weight();
}

}  // namespace kres

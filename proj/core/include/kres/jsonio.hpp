#ifndef KRES_JSONIO_HPP
#define KRES_JSONIO_HPP

#include <json.hpp>
#include <string>

#include "kres/grothendieck.hpp"
#include "kres/koszul.hpp"
#include "kres/ktheory.hpp"

namespace kres {

// Insertion-ordered JSON so emitted documents are byte-stable.
using OrderedJson = nlohmann::ordered_json;

OrderedJson weight_json(const Weight& w);
OrderedJson rational_weight_json(const RationalWeight& w);
OrderedJson character_json(const VirtualKCharacter& ch);

// {side, terms: [{lambda|lambda_bar, nu, mult}]}
OrderedJson standard_class_json(const StandardClass& cls);

OrderedJson split_report_json(const SplitIdentityReport& report);
OrderedJson translation_report_json(const TranslationReport& report);
OrderedJson infchar_report_json(const InfCharReport& report);
OrderedJson spherical_report_json(const SphericalReport& report);
OrderedJson koszul_grid_report_json(const KoszulGridReport& report);

// Versioned output envelope used by every CLI command.
OrderedJson envelope(const OrderedJson& config_echo, const OrderedJson& payload);

// Canonical serialization: two-space indent plus trailing newline.
std::string dump_stable(const OrderedJson& doc);

RationalWeight parse_rational_vector_arg(const std::string& text, std::size_t rank);
Weight parse_integer_vector_arg(const std::string& text, std::size_t rank);

}  // namespace kres

#endif

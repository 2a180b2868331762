#pragma once

// JSON renderings shared by the command-line tool. Coefficients are strings
// in the Laurent text grammar; words use "1" for the trivial word.

#include <nlohmann/json.hpp>

#include "qshuffle/checks.hpp"
#include "qshuffle/element.hpp"
#include "qshuffle/families.hpp"
#include "qshuffle/relations.hpp"
#include "qshuffle/report.hpp"
#include "qshuffle/series.hpp"
#include "qshuffle/suite.hpp"

namespace qshuffle {

/// {"terms": [{"word": "xxy", "coeff": "q^2 + 1"}, ...]} in graded-lex order.
nlohmann::json to_json(const FreeElement& v);
/// Inverse of to_json(FreeElement). Throws ParseError or nlohmann::json::exception.
FreeElement element_from_json(const nlohmann::json& j);

/// {"id", "params", "verdict", "difference", "lhs_terms", "rhs_terms", "millis"},
/// plus "t_power" for failed series reports.
nlohmann::json to_json(const VerificationReport& r);

/// {"word", "in_U", "class", "family"?, "n"?, "offset"?, "segment"?}
nlohmann::json to_json(const Word& w, const WordClass& c);

/// {"order", "coefficients": [element JSON, ...]}
nlohmann::json to_json(const TruncatedSeries& s);

nlohmann::json to_json(const CheckResult& c);
nlohmann::json to_json(const SweepResult& s);

/// {"id", "arity", "group", "formula", "note"}
nlohmann::json to_json(const RelationFamily& f);

}  // namespace qshuffle

#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "hopfgrow/algebra.hpp"
#include "hopfgrow/presentation.hpp"

namespace hopfgrow {

using json = nlohmann::ordered_json;

// Names visible to the expression parser.
struct ParseContext {
  int cyclotomic_order = 1;
  std::vector<std::string> transcendentals;
  std::vector<std::string> group_names;
  std::vector<std::string> y_names;

  static ParseContext of(const Presentation& p);
};

// Expressions: sums of terms like `-3/2 * q1^2 zeta^3 g1^-1 y1 y2^2`,
// with parentheses, `*` optional between factors. `zeta` is the primitive
// N-th root for the declared order N and `zetaM` the primitive M-th root.
RawElement parse_expression(const std::string& text, const ParseContext& ctx);
Scalar parse_scalar(const std::string& text, const ParseContext& ctx);
GroupElem parse_group_element(const std::string& text, const Presentation& p);
AlgebraElement parse_element(const Algebra& alg, const std::string& text);

Scalar scalar_from_json(const json& j, const ParseContext& ctx);
json scalar_to_json(const Scalar& s, int cyclotomic_order);

Presentation presentation_from_json(const json& j);
json presentation_to_json(const Presentation& p);
json read_json_file(const std::string& path);

json group_to_json(const Presentation& p, const GroupElem& g);
json element_to_json(const Presentation& p, const AlgebraElement& x);

}  // namespace hopfgrow

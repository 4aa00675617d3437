#pragma once

#include <map>
#include <string>
#include <vector>

#include "hopfgrow/format.hpp"
#include "hopfgrow/presentation.hpp"

namespace hopfgrow {

using Params = std::map<std::string, std::string>;

struct ExampleInfo {
  std::string name;
  std::string summary;
  std::vector<std::string> params;  // "key=default: meaning"
  bool computable = true;
};

std::vector<ExampleInfo> list_examples();

// Builds a builtin presentation. Unknown names or parameters are usage errors;
// the metadata-only stub is rejected with a pointer to its construction.
Presentation make_example(const std::string& name, const Params& params = {});

// Golden values for check-example, keyed like the summary produced by the report layer.
json expected_values(const std::string& name, const Params& params = {});

// Parses "k=v" strings into a parameter map.
Params parse_params(const std::vector<std::string>& kv);

// Direct builders.
Presentation make_taft(int p, bool quotient = true);
Presentation make_qplane(int v);
Presentation make_exterior(int s);

}  // namespace hopfgrow

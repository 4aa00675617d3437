#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hopfgrow/bounds.hpp"
#include "hopfgrow/format.hpp"
#include "hopfgrow/growth.hpp"
#include "hopfgrow/invariants.hpp"

namespace hopfgrow {

struct PipelineOptions {
  InvariantOptions invariants;
  GrowthOptions growth;
  DetectorOptions detector;
  int pbw_degree = 8;
  bool measure = true;  // run the growth enumeration
};

// Everything the bounds, growth and check-example commands report, together
// with the cross-module assertions evaluated on it.
struct Pipeline {
  PipelineOptions options;
  InvariantReport invariants;
  BoundReport first;
  SecondBounds second;
  ThirdBounds third;
  GrowthVerdict verdict;
  std::optional<GrowthReport> growth;
  std::vector<AlgebraElement> pbw_generators;
  PbwScan pbw;
  std::vector<Check> consistency;

  bool consistent() const;
};

Pipeline run_pipeline(const Algebra& alg, const PipelineOptions& opts);

json scalar_json(const Presentation& p, const Scalar& s);
json invariants_to_json(const Presentation& p, const InvariantReport& r);
json bound_to_json(const BoundReport& r);
json verdict_to_json(const GrowthVerdict& v);
json growth_to_json(const GrowthReport& r);
json pbw_to_json(const Presentation& p, const std::vector<AlgebraElement>& S, const PbwScan& s);
json checks_to_json(const std::vector<Check>& cs);
json pipeline_to_json(const Presentation& p, const Pipeline& r);

// Flat key/value digest compared against golden values by check-example.
json summary(const Algebra& alg, const Pipeline& r);

struct Mismatch {
  std::string key;
  json expected, actual;
};
std::vector<Mismatch> compare_expected(const json& expected, const json& summary);

std::string invariants_text(const Presentation& p, const InvariantReport& r);
std::string bound_text(const BoundReport& r);
std::string verdict_text(const GrowthVerdict& v);
std::string growth_text(const GrowthReport& r);
std::string pbw_text(const Presentation& p, const PbwScan& s);
std::string pipeline_text(const Algebra& alg, const Pipeline& r);

}  // namespace hopfgrow

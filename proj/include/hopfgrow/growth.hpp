#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hopfgrow/algebra.hpp"
#include "hopfgrow/bounds.hpp"

namespace hopfgrow {

struct GrowthOptions {
  int n_max = 12;
  size_t max_words = 0;  // 0 reads HOPFGROW_MAX_WORDS, falling back to one million
  double delta = 0.15;
  int window = 4;
  double residual = 0.05;
};

// Word ceiling from the environment, or the fallback.
size_t max_words_from_env(size_t fallback = 1000000);

struct GrowthEstimate {
  std::string classification = "inconclusive";  // polynomial | exponential | inconclusive
  std::optional<int> degree;
  double base = 0;   // ratio estimate for exponential growth
  double slope = 0;  // log-log slope over the fit window
  double fit_residual = 0;
  std::string method;  // finite-differences | ratio | log-log | none
  int window_begin = 0, window_end = 0;
};

struct GrowthReport {
  std::string generating_set;
  std::vector<long> dims;  // dim F_n for n = 0..n_max (fewer when truncated)
  bool truncated = false;
  GrowthEstimate estimate;
  GrowthOptions options;
};

// dim F_n for F_n = V^n with V = k1 + span(group generators and inverses) + span(y's).
GrowthReport measure_growth(const Algebra& alg, GrowthOptions opts = {});

// Fits an estimate to a dims sequence.
GrowthEstimate estimate_growth(const std::vector<long>& dims, const GrowthOptions& opts);

// Whether the ratio test alone flags super-polynomial growth.
bool ratio_flags_exponential(const std::vector<long>& dims, const GrowthOptions& opts);

std::string growth_table(const GrowthReport& r);

struct PbwScan {
  bool independent = true;
  int degree_bound = 0;
  std::optional<int> degree;          // total degree of the first dependent monomial
  std::vector<int> monomial;          // its exponents
  std::string relation;               // F = sum d_G G with d_G in C0
  std::vector<Hypothesis> conclusions;  // items (i)-(iv)
  bool consistent = true;             // every conclusion held
};

// Ordered monomials over S of total degree <= d, tested for dependence over C0
// using left translates by group elements of length <= ball.
PbwScan pbw_dependence_scan(const Algebra& alg, const std::vector<AlgebraElement>& S, int d, int ball = 2);

// Witnesses from the report that satisfy the standing hypotheses of the scan:
// skew primitive, independent modulo C0, and pairwise commuting with weights up to C0.
std::vector<AlgebraElement> pbw_set(const Algebra& alg, const InvariantReport& rep);

}  // namespace hopfgrow

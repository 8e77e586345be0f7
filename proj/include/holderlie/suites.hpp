#pragma once

#include <optional>
#include <string>
#include <vector>

#include "holderlie/corpus.hpp"
#include "holderlie/lie.hpp"
#include "holderlie/product.hpp"

namespace holderlie {

/// One verified inequality (or identity), aggregated over a corpus: lhs/rhs
/// are the two sides of the worst trial.
struct CheckRecord {
    std::string id;
    std::string anchor;  // which statement this exercises
    double lhs = 0.0;
    double rhs = 0.0;
    bool pass = false;
    double margin() const { return rhs - lhs; }
};

struct SuiteConfig {
    Domain domain = Domain::ball(Vec::Zero(2), 0.5);
    SamplePlan plan = SamplePlan::grid(6);
    CorpusSpec corpus;
    std::vector<HolderIndex> indices = {{0, 0.5}, {1, 1.0}, {2, 0.5}};
    std::vector<std::string> suites;
    double tol = 1e-9;
    int kmax = 4;
};

std::vector<CheckRecord> suite_taylor(const Domain& d, const SamplePlan& p,
                                      const CorpusSpec& corpus,
                                      double tol_rel = 1e-9, double tol_poly = 1e-12);
std::vector<CheckRecord> suite_interp(const CorpusSpec& corpus,
                                      double tol_recovery = 1e-10);
std::vector<CheckRecord> suite_norms(int n_cubics, int grid_points,
                                     std::uint64_t seed, double tol_rel = 2e-2);
std::vector<CheckRecord> suite_inclusions(const Domain& d, const SamplePlan& p,
                                          const CorpusSpec& corpus,
                                          const std::vector<HolderIndex>& indices,
                                          double mult_tol = 1e-9);
std::vector<CheckRecord> suite_convexity(const Domain& d, const SamplePlan& p,
                                         const CorpusSpec& corpus,
                                         double mult_tol = 1e-9);
std::vector<CheckRecord> suite_product(const Domain& d, const SamplePlan& p,
                                       const CorpusSpec& corpus,
                                       const std::vector<int>& ks,
                                       const std::vector<double>& ss,
                                       double mult_tol = 1e-9);
std::vector<CheckRecord> suite_bch(const Domain& d, int n_pairs = 100,
                                   int rescale_pairs = 10000,
                                   double tol_fidelity = 1e-10,
                                   double tol_nilpotent = 1e-12);
std::vector<CheckRecord> suite_group(const Domain& d, const SamplePlan& p,
                                     int n_functions = 50,
                                     double tol_normal_form = 1e-9,
                                     double tol_group = 1e-10,
                                     double tol_bch_pointwise = 1e-8);
std::vector<CheckRecord> suite_chain(const Domain& d, const SamplePlan& p,
                                     const CorpusSpec& corpus, int chain_length,
                                     const std::vector<double>& ss);

/// Constants report: interpolation constants, the pointwise-bound chain,
/// inclusion and product constants for the configured domain.
struct ConstantsRow {
    int k;
    std::vector<double> nodes;             // uniform node set of degree k (k >= 1)
    std::vector<double> lambda_abs_sums;   // sum_mu |lambda_{mu,j}|, j = 0..k
    std::optional<Lemma24Constants> l24;   // at s = 1, x0 = incenter (k >= 1)
    double dk;
    double ck;
};
struct ConstantsTable {
    double eps0;
    std::vector<ConstantsRow> rows;  // k = 0..kmax
};
ConstantsTable constants_table(const Domain& d, int kmax);

struct Report {
    std::vector<CheckRecord> records;
    ConstantsTable constants;
    bool all_pass = true;
};

/// Runs the configured suites; records sorted by id. Throws ConfigInvalid on
/// an unknown suite name.
Report run_suite(const SuiteConfig& cfg);

}  // namespace holderlie

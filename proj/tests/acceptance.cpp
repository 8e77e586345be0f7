// Acceptance gate: runs every headline criterion at its pinned tolerance and
// prints one pass/fail line each. Exit code 0 iff all criteria hold.

#include <cstdio>
#include <string>
#include <vector>

#include "holderlie/suites.hpp"

using namespace holderlie;

namespace {

int failures = 0;

void report(int num, const std::string& label, const std::vector<CheckRecord>& recs) {
    bool ok = !recs.empty();
    double worst = 0.0;
    std::string worst_id;
    for (const auto& r : recs) {
        ok = ok && r.pass;
        if (worst_id.empty() || r.margin() < worst) {
            worst = r.margin();
            worst_id = r.id;
        }
    }
    if (!ok) ++failures;
    std::printf("[%s] %2d. %s (%zu checks, tightest: %s)\n", ok ? "PASS" : "FAIL", num,
                label.c_str(), recs.size(), worst_id.c_str());
    std::fflush(stdout);
}

std::vector<CheckRecord> filter(const std::vector<CheckRecord>& recs,
                                const std::string& prefix, bool invert = false) {
    std::vector<CheckRecord> out;
    for (const auto& r : recs)
        if ((r.id.rfind(prefix, 0) == 0) != invert) out.push_back(r);
    return out;
}

}  // namespace

int main() {
    const Domain dom = Domain::ball(Vec::Zero(2), 0.5);
    const SamplePlan plan = SamplePlan::grid(6);

    CorpusSpec smooth;
    smooth.count = 100;
    report(1, "Taylor identity, both remainder forms, 100 smooth functions, tol 1e-9",
           suite_taylor(dom, plan, smooth, 1e-9, 1e-12));

    CorpusSpec interp;
    interp.count = 100;
    report(2, "interpolation recovery to 1e-10 and homogeneous-part bound",
           suite_interp(interp, 1e-10));

    report(3, "isometric embedding p_(k,1) = p_(k+1,0) on 1e4-point grids, rel 2e-2",
           suite_norms(20, 10000, 42, 2e-2));

    CorpusSpec big;
    big.count = 200;
    report(4, "inclusion, pointwise-bound and embedding inequalities, 200 functions",
           suite_inclusions(dom, plan, big, {{0, 0.5}, {1, 1.0}, {2, 0.5}}, 1e-9));

    report(5, "log convexity and unit-ball interpolation, 200 functions x 5 triples",
           suite_convexity(dom, plan, big, 1e-9));

    report(6, "product inequality with recursive C_k, 200 pairs, k in {0,1,2}",
           suite_product(dom, plan, big, {0, 1, 2}, {0.0, 0.5, 1.0}, 1e-9));

    const auto bch = suite_bch(dom, 100, 10000, 1e-10, 1e-12);
    report(7, "BCH fidelity 1e-10 (so3, sl2) and nilpotent exactness 1e-12 (h3)",
           filter(bch, "bch/compatible-rescaling", /*invert=*/true));

    report(8, "normal form roundtrip 1e-9 and group axioms 1e-10, 50 functions",
           suite_group(dom, plan, 50, 1e-9, 1e-10, 1e-8));

    CorpusSpec chain;
    chain.count = 100;
    report(9, "norm chain nonincreasing, N = 10, s in {0, 0.25}, 100 functions",
           suite_chain(dom, plan, chain, 10, {0.0, 0.25}));

    report(10, "compatible rescaling, 1e4 bracket probes per shipped algebra",
           filter(bch, "bch/compatible-rescaling"));

    if (failures) std::printf("%d criterion(s) FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}

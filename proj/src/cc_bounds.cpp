#include "tracecc/cc.hpp"
#include "tracecc/trace_lang.hpp"

namespace tracecc {

BoundsReport cc_bounds(const Rule& rule, const Word& z) {
    BoundsReport rep;
    rep.q = rule.q;
    rep.z = z;
    rep.n = z.size() - 1;

    CcMatrix m = build_matrix(rule, z);
    DistinctCounts counts = distinct_counts(m);
    rep.distinct_rows = counts.rows;
    rep.distinct_cols = counts.cols;
    rep.left_cc_bits = ceil_log2(counts.rows);
    rep.right_cc_bits = ceil_log2(counts.cols);

    try {
        rep.multiround_exact_bits = multiround_exact(m);
    } catch (const resource_error&) {
    }
    try {
        FoolingSet fs = fooling_set(m, m.side <= 16 ? FoolingMode::exact : FoolingMode::greedy);
        rep.fooling_size = fs.size();
        rep.fooling_bound_bits = fs.bound_bits();
    } catch (const resource_error&) {
    }
    try {
        auto [r2, rq] = rank_diagnostics(m);
        rep.rank_gf2 = r2;
        rep.rank_rational = rq;
    } catch (const resource_error&) {
    }
    try {
        rep.right_image_size = forward_image_size(rule, z, CcSide::right);
        rep.right_image_bits = ceil_log2(*rep.right_image_size);
        rep.left_image_size = forward_image_size(rule, z, CcSide::left);
        rep.left_image_bits = ceil_log2(*rep.left_image_size);
    } catch (const resource_error&) {
    }
    try {
        rep.right_tau_size = tau_set(rule, z, CcSide::right).size();
        rep.right_tau_bits = ceil_log2(*rep.right_tau_size + 1);
        rep.left_tau_size = tau_set(rule, z, CcSide::left).size();
        rep.left_tau_bits = ceil_log2(*rep.left_tau_size + 1);
    } catch (const resource_error&) {
    }
    return rep;
}

}  // namespace tracecc

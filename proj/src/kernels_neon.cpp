#if defined(__aarch64__)

#include <arm_neon.h>

#include <cmath>
#include <cstring>

#include "mopsoplus/kernels.hpp"

namespace mopsoplus::kernels {
namespace {

void swarm_step_neon(double w, double c1r1, double c2r2,
                     const double* pbest, const double* leader, const double* ub,
                     double* x, double* v, std::int32_t* dec, std::size_t n) {
    const float64x2_t wv = vdupq_n_f64(w);
    const float64x2_t c1v = vdupq_n_f64(c1r1);
    const float64x2_t c2v = vdupq_n_f64(c2r2);
    const float64x2_t one = vdupq_n_f64(1.0);
    const float64x2_t half = vdupq_n_f64(0.5);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        float64x2_t xi = vld1q_f64(x + i);
        float64x2_t vi = vld1q_f64(v + i);
        float64x2_t pb = vld1q_f64(pbest + i);
        float64x2_t ld = vld1q_f64(leader + i);
        float64x2_t t = vfmaq_f64(vmulq_f64(vsubq_f64(pb, xi), c1v), vsubq_f64(ld, xi), c2v);
        vi = vfmaq_f64(t, vi, wv);
        float64x2_t xn = vaddq_f64(xi, vi);
        float64x2_t xc = vminq_f64(vmaxq_f64(xn, one), vld1q_f64(ub + i));
        uint64x2_t unclipped = vceqq_f64(xc, xn);
        vi = vreinterpretq_f64_u64(vandq_u64(unclipped, vreinterpretq_u64_f64(vi)));
        vst1q_f64(x + i, xc);
        vst1q_f64(v + i, vi);
        int64x2_t d = vcvtq_s64_f64(vrndmq_f64(vaddq_f64(xc, half)));
        dec[i] = static_cast<std::int32_t>(vgetq_lane_s64(d, 0));
        dec[i + 1] = static_cast<std::int32_t>(vgetq_lane_s64(d, 1));
    }
    for (; i < n; ++i) {
        double xi = x[i];
        double t = std::fma(leader[i] - xi, c2r2, (pbest[i] - xi) * c1r1);
        double vi = std::fma(v[i], w, t);
        double xn = xi + vi;
        double xc = std::min(std::max(xn, 1.0), ub[i]);
        if (xc != xn) vi = 0.0;
        x[i] = xc;
        v[i] = vi;
        dec[i] = static_cast<std::int32_t>(std::floor(xc + 0.5));
    }
}

DomScan dominance_scan_neon(double res, double cost,
                            const double* member_res, const double* member_cost,
                            std::size_t n, std::uint64_t* dominated_out) {
    if (dominated_out) std::memset(dominated_out, 0, ((n + 63) / 64) * sizeof(std::uint64_t));
    const float64x2_t cr = vdupq_n_f64(res);
    const float64x2_t cc = vdupq_n_f64(cost);
    DomScan out;
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        float64x2_t mr = vld1q_f64(member_res + i);
        float64x2_t mc = vld1q_f64(member_cost + i);
        uint64x2_t eq = vandq_u64(vceqq_f64(mr, cr), vceqq_f64(mc, cc));
        uint64x2_t mdomc = vbicq_u64(vandq_u64(vcgeq_f64(mr, cr), vcleq_f64(mc, cc)), eq);
        uint64x2_t cdomm = vbicq_u64(vandq_u64(vcleq_f64(mr, cr), vcgeq_f64(mc, cc)), eq);
        out.duplicate |= (vgetq_lane_u64(eq, 0) | vgetq_lane_u64(eq, 1)) != 0;
        out.candidate_dominated |= (vgetq_lane_u64(mdomc, 0) | vgetq_lane_u64(mdomc, 1)) != 0;
        if (dominated_out) {
            std::uint64_t bits = (vgetq_lane_u64(cdomm, 0) & 1u) | ((vgetq_lane_u64(cdomm, 1) & 1u) << 1);
            if (bits) dominated_out[i >> 6] |= bits << (i & 63);
        }
    }
    for (; i < n; ++i) {
        double mr = member_res[i];
        double mc = member_cost[i];
        bool eq = (mr == res) & (mc == cost);
        out.duplicate |= eq;
        out.candidate_dominated |= (mr >= res) & (mc <= cost) & !eq;
        bool cand_dom = (res >= mr) & (cost <= mc) & !eq;
        if (cand_dom && dominated_out) dominated_out[i >> 6] |= std::uint64_t(1) << (i & 63);
    }
    return out;
}

}  // namespace

namespace detail {
const Ops neon_ops = {&swarm_step_neon, &dominance_scan_neon};
}  // namespace detail

}  // namespace mopsoplus::kernels

#endif

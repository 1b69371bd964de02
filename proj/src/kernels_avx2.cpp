#if defined(__x86_64__) || defined(__i386__)

#include <immintrin.h>

#include <cmath>
#include <cstring>

#include "mopsoplus/kernels.hpp"

namespace mopsoplus::kernels {
namespace {

void swarm_step_avx2(double w, double c1r1, double c2r2,
                     const double* pbest, const double* leader, const double* ub,
                     double* x, double* v, std::int32_t* dec, std::size_t n) {
    const __m256d wv = _mm256_set1_pd(w);
    const __m256d c1v = _mm256_set1_pd(c1r1);
    const __m256d c2v = _mm256_set1_pd(c2r2);
    const __m256d one = _mm256_set1_pd(1.0);
    const __m256d half = _mm256_set1_pd(0.5);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d xi = _mm256_loadu_pd(x + i);
        __m256d vi = _mm256_loadu_pd(v + i);
        __m256d pb = _mm256_loadu_pd(pbest + i);
        __m256d ld = _mm256_loadu_pd(leader + i);
        __m256d t = _mm256_fmadd_pd(_mm256_sub_pd(ld, xi), c2v,
                                    _mm256_mul_pd(_mm256_sub_pd(pb, xi), c1v));
        vi = _mm256_fmadd_pd(vi, wv, t);
        __m256d xn = _mm256_add_pd(xi, vi);
        __m256d xc = _mm256_min_pd(_mm256_max_pd(xn, one), _mm256_loadu_pd(ub + i));
        __m256d clipped = _mm256_cmp_pd(xc, xn, _CMP_NEQ_OQ);
        vi = _mm256_andnot_pd(clipped, vi);
        _mm256_storeu_pd(x + i, xc);
        _mm256_storeu_pd(v + i, vi);
        __m128i d = _mm256_cvttpd_epi32(_mm256_floor_pd(_mm256_add_pd(xc, half)));
        _mm_storeu_si128(reinterpret_cast<__m128i*>(dec + i), d);
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

DomScan dominance_scan_avx2(double res, double cost,
                            const double* member_res, const double* member_cost,
                            std::size_t n, std::uint64_t* dominated_out) {
    if (dominated_out) std::memset(dominated_out, 0, ((n + 63) / 64) * sizeof(std::uint64_t));
    const __m256d cr = _mm256_set1_pd(res);
    const __m256d cc = _mm256_set1_pd(cost);
    int any_mdomc = 0;
    int any_eq = 0;
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d mr = _mm256_loadu_pd(member_res + i);
        __m256d mc = _mm256_loadu_pd(member_cost + i);
        __m256d eq = _mm256_and_pd(_mm256_cmp_pd(mr, cr, _CMP_EQ_OQ),
                                   _mm256_cmp_pd(mc, cc, _CMP_EQ_OQ));
        __m256d mdomc = _mm256_andnot_pd(eq, _mm256_and_pd(_mm256_cmp_pd(mr, cr, _CMP_GE_OQ),
                                                           _mm256_cmp_pd(mc, cc, _CMP_LE_OQ)));
        __m256d cdomm = _mm256_andnot_pd(eq, _mm256_and_pd(_mm256_cmp_pd(mr, cr, _CMP_LE_OQ),
                                                           _mm256_cmp_pd(mc, cc, _CMP_GE_OQ)));
        any_eq |= _mm256_movemask_pd(eq);
        any_mdomc |= _mm256_movemask_pd(mdomc);
        int bits = _mm256_movemask_pd(cdomm);
        if (bits && dominated_out)
            dominated_out[i >> 6] |= static_cast<std::uint64_t>(bits) << (i & 63);
    }
    DomScan out;
    out.candidate_dominated = any_mdomc != 0;
    out.duplicate = any_eq != 0;
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
const Ops avx2_ops = {&swarm_step_avx2, &dominance_scan_avx2};
}  // namespace detail

}  // namespace mopsoplus::kernels

#endif

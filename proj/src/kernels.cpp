#include "mopsoplus/kernels.hpp"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <string>

#include "mopsoplus/types.hpp"

namespace mopsoplus::kernels {

namespace {

void swarm_step_scalar(double w, double c1r1, double c2r2,
                       const double* pbest, const double* leader, const double* ub,
                       double* x, double* v, std::int32_t* dec, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
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

DomScan dominance_scan_scalar(double res, double cost,
                              const double* member_res, const double* member_cost,
                              std::size_t n, std::uint64_t* dominated_out) {
    if (dominated_out) std::memset(dominated_out, 0, ((n + 63) / 64) * sizeof(std::uint64_t));
    DomScan out;
    for (std::size_t i = 0; i < n; ++i) {
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
const Ops scalar_ops = {&swarm_step_scalar, &dominance_scan_scalar};
}  // namespace detail

namespace {

const detail::Ops* pick_best() {
#if defined(__x86_64__) || defined(__i386__)
    if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma"))
        return &detail::avx2_ops;
#endif
#if defined(__aarch64__)
    return &detail::neon_ops;
#endif
    return &detail::scalar_ops;
}

const detail::Ops* pick(Isa isa) {
    switch (isa) {
        case Isa::scalar:
            return &detail::scalar_ops;
        case Isa::avx2:
#if defined(__x86_64__) || defined(__i386__)
            if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma"))
                return &detail::avx2_ops;
#endif
            return nullptr;
        case Isa::neon:
#if defined(__aarch64__)
            return &detail::neon_ops;
#endif
            return nullptr;
    }
    return nullptr;
}

struct Dispatch {
    const detail::Ops* ops;
    Isa isa;

    Dispatch() {
        if (const char* env = std::getenv("MOPSOPLUS_ISA")) {
            std::string s(env);
            Isa want = s == "avx2" ? Isa::avx2 : s == "neon" ? Isa::neon : Isa::scalar;
            if (const detail::Ops* p = pick(want)) {
                ops = p;
                isa = want;
                return;
            }
            throw Error("MOPSOPLUS_ISA=" + s + " is not usable on this CPU");
        }
        ops = pick_best();
        isa = ops == &detail::scalar_ops ? Isa::scalar
#if defined(__aarch64__)
                                         : Isa::neon;
#else
                                         : Isa::avx2;
#endif
    }
};

Dispatch& dispatch() {
    static Dispatch d;
    return d;
}

}  // namespace

Isa active() { return dispatch().isa; }

void force(Isa isa) {
    const detail::Ops* p = pick(isa);
    if (!p) throw Error(std::string("ISA ") + name(isa) + " is not usable on this CPU");
    dispatch().ops = p;
    dispatch().isa = isa;
}

const char* name(Isa isa) {
    switch (isa) {
        case Isa::scalar: return "scalar";
        case Isa::avx2: return "avx2";
        case Isa::neon: return "neon";
    }
    return "?";
}

void swarm_step(double w, double c1r1, double c2r2,
                const double* pbest, const double* leader, const double* ub,
                double* x, double* v, std::int32_t* dec, std::size_t n) {
    dispatch().ops->swarm_step(w, c1r1, c2r2, pbest, leader, ub, x, v, dec, n);
}

DomScan dominance_scan(double res, double cost,
                       const double* member_res, const double* member_cost,
                       std::size_t n, std::uint64_t* dominated_out) {
    return dispatch().ops->dominance_scan(res, cost, member_res, member_cost, n, dominated_out);
}

}  // namespace mopsoplus::kernels

#pragma once

#include <cstddef>
#include <cstdint>

namespace mopsoplus::kernels {

enum class Isa { scalar, avx2, neon };

/// ISA selected at startup: best supported one, unless the MOPSOPLUS_ISA
/// environment variable (scalar|avx2|neon) forces a specific level.
Isa active();

/// Test hook. Throws Error if the requested ISA is not usable on this CPU.
void force(Isa isa);

const char* name(Isa isa);

/// Fused position/velocity/decode step for one particle over n variables:
///
///   v <- fma(v, w, fma(leader - x, c2r2, (pbest - x) * c1r1))
///   x <- x + v, clipped to [1, ub_k]; v zeroed on clipped components
///   dec <- floor(x + 0.5)
///
/// All variants (scalar reference included) use fma so results are
/// bit-identical across ISAs.
void swarm_step(double w, double c1r1, double c2r2,
                const double* pbest, const double* leader, const double* ub,
                double* x, double* v, std::int32_t* dec, std::size_t n);

struct DomScan {
    bool candidate_dominated = false;  // some member dominates the candidate
    bool duplicate = false;            // some member has bit-equal objectives
};

/// Classifies a candidate objective pair (maximise res, minimise cost)
/// against n member pairs in one pass. When `dominated_out` is non-null it
/// must hold (n + 63) / 64 words; it is zeroed and bit i is set when the
/// candidate strictly dominates member i. No early exit: the outputs are a
/// pure function of the inputs on every ISA.
DomScan dominance_scan(double res, double cost,
                       const double* member_res, const double* member_cost,
                       std::size_t n, std::uint64_t* dominated_out);

namespace detail {

struct Ops {
    void (*swarm_step)(double, double, double, const double*, const double*,
                       const double*, double*, double*, std::int32_t*, std::size_t);
    DomScan (*dominance_scan)(double, double, const double*, const double*,
                              std::size_t, std::uint64_t*);
};

extern const Ops scalar_ops;
#if defined(__x86_64__) || defined(__i386__)
extern const Ops avx2_ops;
#endif
#if defined(__aarch64__)
extern const Ops neon_ops;
#endif

}  // namespace detail

}  // namespace mopsoplus::kernels

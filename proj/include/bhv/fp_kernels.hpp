#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

namespace bhv::fpk {

// Dense row kernels over F_p. Inputs are reduced residues in [0, p);
// outputs are reduced residues. p < 2^62.
//
// The scalar kernels are the reference implementation and work for every
// supported modulus. The AVX2 kernels require p < 2^31 (products must fit
// a 32x32 -> 64 bit multiply) and are selected at runtime when the CPU
// supports them; results are bit-identical to the scalar path.

/// y[i] = (y[i] + c * x[i]) mod p
void axpy_scalar(std::uint64_t* y, const std::uint64_t* x, std::uint64_t c,
                 std::size_t n, std::uint64_t p);

/// x[i] = (c * x[i]) mod p
void scal_scalar(std::uint64_t* x, std::uint64_t c, std::size_t n,
                 std::uint64_t p);

#if defined(__x86_64__) || defined(_M_X64)
#define BHV_HAVE_AVX2_KERNELS 1
void axpy_avx2(std::uint64_t* y, const std::uint64_t* x, std::uint64_t c,
               std::size_t n, std::uint64_t p);
void scal_avx2(std::uint64_t* x, std::uint64_t c, std::size_t n,
               std::uint64_t p);
#endif

using AxpyFn = void (*)(std::uint64_t*, const std::uint64_t*, std::uint64_t,
                        std::size_t, std::uint64_t);
using ScalFn = void (*)(std::uint64_t*, std::uint64_t, std::size_t,
                        std::uint64_t);

struct Kernels {
    AxpyFn axpy;
    ScalFn scal;
    const char* name;  // "scalar" or "avx2"
};

/// True when the running CPU can execute the AVX2 kernels.
bool cpu_has_avx2();

/// Picks the kernel set for modulus p. Honors BHV_FP_KERNELS=scalar|avx2|auto
/// (forcing avx2 falls back to scalar when the CPU or modulus rules it out).
Kernels select_kernels(std::uint64_t p);

}  // namespace bhv::fpk

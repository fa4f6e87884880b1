#include "bhv/fp_kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace bhv::fpk {

bool cpu_has_avx2() {
#if defined(BHV_HAVE_AVX2_KERNELS)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

Kernels select_kernels(std::uint64_t p) {
    const Kernels scalar{axpy_scalar, scal_scalar, "scalar"};
#if defined(BHV_HAVE_AVX2_KERNELS)
    const char* mode = std::getenv("BHV_FP_KERNELS");
    bool force_scalar = mode && std::strcmp(mode, "scalar") == 0;
    bool avx2_ok = cpu_has_avx2() && p < (1ull << 31) && !force_scalar;
    if (avx2_ok) return Kernels{axpy_avx2, scal_avx2, "avx2"};
#else
    (void)p;
#endif
    return scalar;
}

}  // namespace bhv::fpk

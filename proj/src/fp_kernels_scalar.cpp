#include "bhv/fp_kernels.hpp"

namespace bhv::fpk {

void axpy_scalar(std::uint64_t* y, const std::uint64_t* x, std::uint64_t c,
                 std::size_t n, std::uint64_t p) {
    if (c == 0) return;
    for (std::size_t i = 0; i < n; ++i) {
        unsigned __int128 t = static_cast<unsigned __int128>(c) * x[i] + y[i];
        y[i] = static_cast<std::uint64_t>(t % p);
    }
}

void scal_scalar(std::uint64_t* x, std::uint64_t c, std::size_t n,
                 std::uint64_t p) {
    if (c == 1) return;
    for (std::size_t i = 0; i < n; ++i) {
        unsigned __int128 t = static_cast<unsigned __int128>(c) * x[i];
        x[i] = static_cast<std::uint64_t>(t % p);
    }
}

}  // namespace bhv::fpk

#include "zmds/kernels.hpp"

#include <cstdlib>

namespace zmds {

bool avx2_available() {
#if defined(ZMDS_HAVE_AVX2)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

#if !defined(ZMDS_HAVE_AVX2)
const Kernels& Kernels::avx2() { return scalar(); }
#endif

const Kernels& Kernels::active() {
    static const Kernels* chosen = [] {
        const char* f = std::getenv("ZMDS_FORCE_SCALAR");
        if (f && f[0] == '1' && f[1] == '\0') return &scalar();
        return avx2_available() ? &avx2() : &scalar();
    }();
    return *chosen;
}

}  // namespace zmds

#include <bit>

#include "eqsteenrod/gf2/kernels.hpp"

namespace eqsteenrod::gf2::detail {

namespace {

void xor_into(Word* dst, const Word* src, std::size_t words) {
    for (std::size_t i = 0; i < words; ++i) dst[i] ^= src[i];
}

std::size_t popcount(const Word* p, std::size_t words) {
    std::size_t total = 0;
    for (std::size_t i = 0; i < words; ++i) total += static_cast<std::size_t>(std::popcount(p[i]));
    return total;
}

bool all_zero(const Word* p, std::size_t words) {
    for (std::size_t i = 0; i < words; ++i) {
        if (p[i] != 0) return false;
    }
    return true;
}

}  // namespace

const Kernels& scalar_kernels() {
    static constexpr Kernels k{Isa::scalar, "scalar", &xor_into, &popcount, &all_zero};
    return k;
}

}  // namespace eqsteenrod::gf2::detail

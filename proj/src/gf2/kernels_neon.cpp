#include <arm_neon.h>

#include <bit>

#include "eqsteenrod/gf2/kernels.hpp"

namespace eqsteenrod::gf2::detail {

namespace {

void xor_into(Word* dst, const Word* src, std::size_t words) {
    std::size_t i = 0;
    for (; i + 2 <= words; i += 2) vst1q_u64(dst + i, veorq_u64(vld1q_u64(dst + i), vld1q_u64(src + i)));
    for (; i < words; ++i) dst[i] ^= src[i];
}

std::size_t popcount(const Word* p, std::size_t words) {
    std::size_t total = 0;
    std::size_t i = 0;
    for (; i + 2 <= words; i += 2) {
        const uint8x16_t bytes = vcntq_u8(vreinterpretq_u8_u64(vld1q_u64(p + i)));
        total += vaddvq_u8(bytes);
    }
    for (; i < words; ++i) total += static_cast<std::size_t>(std::popcount(p[i]));
    return total;
}

bool all_zero(const Word* p, std::size_t words) {
    std::size_t i = 0;
    uint64x2_t acc = vdupq_n_u64(0);
    for (; i + 2 <= words; i += 2) acc = vorrq_u64(acc, vld1q_u64(p + i));
    if ((vgetq_lane_u64(acc, 0) | vgetq_lane_u64(acc, 1)) != 0) return false;
    for (; i < words; ++i) {
        if (p[i] != 0) return false;
    }
    return true;
}

}  // namespace

const Kernels& neon_kernels() {
    static constexpr Kernels k{Isa::neon, "neon", &xor_into, &popcount, &all_zero};
    return k;
}

}  // namespace eqsteenrod::gf2::detail

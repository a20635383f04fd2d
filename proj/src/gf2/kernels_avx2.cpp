// Compiled with -mavx2; only reached after the CPU reports AVX2.

#include <immintrin.h>

#include <bit>

#include "eqsteenrod/gf2/kernels.hpp"

namespace eqsteenrod::gf2::detail {

namespace {

constexpr std::size_t kLane = 4;  // words per __m256i

void xor_into(Word* dst, const Word* src, std::size_t words) {
    std::size_t i = 0;
    for (; i + 2 * kLane <= words; i += 2 * kLane) {
        auto* d = reinterpret_cast<__m256i*>(dst + i);
        const auto* s = reinterpret_cast<const __m256i*>(src + i);
        const __m256i a0 = _mm256_loadu_si256(d);
        const __m256i a1 = _mm256_loadu_si256(d + 1);
        const __m256i b0 = _mm256_loadu_si256(s);
        const __m256i b1 = _mm256_loadu_si256(s + 1);
        _mm256_storeu_si256(d, _mm256_xor_si256(a0, b0));
        _mm256_storeu_si256(d + 1, _mm256_xor_si256(a1, b1));
    }
    for (; i + kLane <= words; i += kLane) {
        auto* d = reinterpret_cast<__m256i*>(dst + i);
        const __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        _mm256_storeu_si256(d, _mm256_xor_si256(_mm256_loadu_si256(d), b));
    }
    for (; i < words; ++i) dst[i] ^= src[i];
}

// Nibble-lookup popcount (Mula): per-byte counts via pshufb, then summed
// into 64-bit lanes with sad_epu8.
std::size_t popcount(const Word* p, std::size_t words) {
    const __m256i lookup =
        _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4, 0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i low_mask = _mm256_set1_epi8(0x0f);
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + kLane <= words; i += kLane) {
        const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p + i));
        const __m256i lo = _mm256_and_si256(v, low_mask);
        const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
        const __m256i bytes = _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo), _mm256_shuffle_epi8(lookup, hi));
        acc = _mm256_add_epi64(acc, _mm256_sad_epu8(bytes, _mm256_setzero_si256()));
    }
    alignas(32) std::uint64_t lanes[kLane];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    std::size_t total = static_cast<std::size_t>(lanes[0] + lanes[1] + lanes[2] + lanes[3]);
    for (; i < words; ++i) total += static_cast<std::size_t>(std::popcount(p[i]));
    return total;
}

bool all_zero(const Word* p, std::size_t words) {
    std::size_t i = 0;
    __m256i acc = _mm256_setzero_si256();
    for (; i + kLane <= words; i += kLane) {
        acc = _mm256_or_si256(acc, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p + i)));
    }
    if (!_mm256_testz_si256(acc, acc)) return false;
    for (; i < words; ++i) {
        if (p[i] != 0) return false;
    }
    return true;
}

}  // namespace

const Kernels& avx2_kernels() {
    static constexpr Kernels k{Isa::avx2, "avx2", &xor_into, &popcount, &all_zero};
    return k;
}

}  // namespace eqsteenrod::gf2::detail

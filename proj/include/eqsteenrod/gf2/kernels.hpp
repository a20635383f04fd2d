#pragma once

// Word-level kernels for bit-packed GF(2) rows.
//
// Each instruction set provides the same table of kernels; the scalar table
// is the reference, and the vector tables must agree with it bit for bit.
// The active table is picked once at startup from what the CPU reports and
// can be pinned with EQSTEENROD_ISA=scalar|avx2|neon.

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace eqsteenrod::gf2 {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

enum class Isa { scalar, avx2, neon };

struct Kernels {
    Isa isa;
    const char* name;
    /// dst[i] ^= src[i] for i < words.
    void (*xor_into)(Word* dst, const Word* src, std::size_t words);
    /// Number of set bits in p[0..words).
    std::size_t (*popcount)(const Word* p, std::size_t words);
    /// True when every word is zero.
    bool (*all_zero)(const Word* p, std::size_t words);
};

namespace detail {
const Kernels& scalar_kernels();
#if defined(EQSTEENROD_HAVE_AVX2)
const Kernels& avx2_kernels();
#endif
#if defined(EQSTEENROD_HAVE_NEON)
const Kernels& neon_kernels();
#endif
}  // namespace detail

/// Compiled in and supported by the running CPU.
bool isa_available(Isa isa);
std::vector<Isa> available_isas();

/// Kernel table for `isa`; throws std::invalid_argument if unavailable.
const Kernels& kernels_for(Isa isa);

/// The table used by BitMatrix.
const Kernels& active_kernels();

/// Pins the active table (tests and benchmarks). Not thread-safe with
/// concurrent eliminations.
void set_active_isa(Isa isa);

std::string_view isa_name(Isa isa);
Isa parse_isa(std::string_view name);

}  // namespace eqsteenrod::gf2

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "eqsteenrod/gf2/kernels.hpp"

namespace eqsteenrod::gf2 {

namespace {

bool cpu_supports(Isa isa) {
    switch (isa) {
        case Isa::scalar:
            return true;
        case Isa::avx2:
#if defined(EQSTEENROD_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
            return __builtin_cpu_supports("avx2");
#else
            return false;
#endif
        case Isa::neon:
#if defined(EQSTEENROD_HAVE_NEON)
            return true;  // mandatory on AArch64
#else
            return false;
#endif
    }
    return false;
}

const Kernels* select_default() {
    if (const char* env = std::getenv("EQSTEENROD_ISA"); env != nullptr && *env != '\0') {
        return &kernels_for(parse_isa(env));
    }
    if (isa_available(Isa::avx2)) return &kernels_for(Isa::avx2);
    if (isa_available(Isa::neon)) return &kernels_for(Isa::neon);
    return &detail::scalar_kernels();
}

std::atomic<const Kernels*>& active_slot() {
    static std::atomic<const Kernels*> slot{select_default()};
    return slot;
}

}  // namespace

bool isa_available(Isa isa) { return cpu_supports(isa); }

std::vector<Isa> available_isas() {
    std::vector<Isa> out;
    for (Isa isa : {Isa::scalar, Isa::avx2, Isa::neon}) {
        if (isa_available(isa)) out.push_back(isa);
    }
    return out;
}

const Kernels& kernels_for(Isa isa) {
    if (!isa_available(isa)) throw std::invalid_argument("instruction set not available: " + std::string(isa_name(isa)));
    switch (isa) {
        case Isa::scalar:
            return detail::scalar_kernels();
#if defined(EQSTEENROD_HAVE_AVX2)
        case Isa::avx2:
            return detail::avx2_kernels();
#endif
#if defined(EQSTEENROD_HAVE_NEON)
        case Isa::neon:
            return detail::neon_kernels();
#endif
        default:
            break;
    }
    throw std::invalid_argument("instruction set not compiled in: " + std::string(isa_name(isa)));
}

const Kernels& active_kernels() { return *active_slot().load(std::memory_order_acquire); }

void set_active_isa(Isa isa) { active_slot().store(&kernels_for(isa), std::memory_order_release); }

std::string_view isa_name(Isa isa) {
    switch (isa) {
        case Isa::scalar:
            return "scalar";
        case Isa::avx2:
            return "avx2";
        case Isa::neon:
            return "neon";
    }
    return "unknown";
}

Isa parse_isa(std::string_view name) {
    if (name == "scalar") return Isa::scalar;
    if (name == "avx2") return Isa::avx2;
    if (name == "neon") return Isa::neon;
    throw std::invalid_argument("unknown instruction set '" + std::string(name) + "'");
}

}  // namespace eqsteenrod::gf2

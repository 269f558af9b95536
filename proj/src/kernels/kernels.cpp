#include "qmeas/kernels.hpp"

#include "qmeas/errors.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>

namespace qmeas::kern {

namespace {

std::atomic<const Ops*> g_forced{nullptr};

const Ops* lookup(const char* name) {
    if (std::strcmp(name, "scalar") == 0) return &scalar_ops();
#if defined(__x86_64__) || defined(_M_X64)
    if (std::strcmp(name, "avx2") == 0) {
        if (!cpu_supports_avx2())
            throw ValidationError("kernel impl 'avx2' not supported by CPU");
        return &avx2_ops();
    }
#endif
    throw ValidationError(std::string("unknown kernel impl '") + name + "'");
}

const Ops* auto_select() {
    if (const char* env = std::getenv("QMEAS_KERNELS")) return lookup(env);
#if defined(__x86_64__) || defined(_M_X64)
    if (cpu_supports_avx2()) return &avx2_ops();
#endif
    return &scalar_ops();
}

} // namespace

#if defined(__x86_64__) || defined(_M_X64)
bool cpu_supports_avx2() {
    static const bool ok =
        __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
    return ok;
}
#endif

const Ops& active() {
    if (const Ops* f = g_forced.load(std::memory_order_acquire)) return *f;
    static const Ops* selected = auto_select();
    return *selected;
}

void force_impl(const char* name) {
    g_forced.store(name ? lookup(name) : nullptr, std::memory_order_release);
}

} // namespace qmeas::kern

#include "indpath/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace indpath::kern {

#if defined(INDPATH_HAVE_AVX2)
namespace avx2 {
double dot(const double*, const double*, std::size_t);
void axpy(double, const double*, double*, std::size_t);
void scale(double, double*, std::size_t);
std::size_t iamax(const double*, std::size_t);
}  // namespace avx2
#endif

namespace {

constexpr Ops kScalarOps{"scalar", scalar::dot, scalar::axpy, scalar::scale, scalar::iamax};

#if defined(INDPATH_HAVE_AVX2)
constexpr Ops kAvx2Ops{"avx2", avx2::dot, avx2::axpy, avx2::scale, avx2::iamax};
constexpr Ops kVariants[] = {kScalarOps, kAvx2Ops};
#else
constexpr Ops kVariants[] = {kScalarOps};
#endif

bool cpu_supports(std::string_view name) {
  if (name == "scalar") return true;
#if defined(INDPATH_HAVE_AVX2)
  if (name == "avx2") return __builtin_cpu_supports("avx2");
#endif
  return false;
}

const Ops* pick_default() {
  if (const char* env = std::getenv("INDPATH_KERNEL")) {
    for (const Ops& v : kVariants)
      if (env == std::string_view(v.name) && cpu_supports(v.name)) return &v;
    // Unknown or unsupported override: fall through to detection.
  }
  for (std::size_t i = std::size(kVariants); i-- > 0;)
    if (cpu_supports(kVariants[i].name)) return &kVariants[i];
  return &kVariants[0];
}

const Ops*& active_slot() {
  static const Ops* active = pick_default();
  return active;
}

}  // namespace

const Ops& ops() { return *active_slot(); }

bool select(std::string_view name) {
  for (const Ops& v : kVariants) {
    if (name == std::string_view(v.name) && cpu_supports(v.name)) {
      active_slot() = &v;
      return true;
    }
  }
  return false;
}

const Ops* variants(std::size_t* count) {
  *count = std::size(kVariants);
  return kVariants;
}

}  // namespace indpath::kern

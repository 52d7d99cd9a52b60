#include <cstdlib>
#include <string>

#include "chartab/error.hpp"
#include "kernels_internal.hpp"

namespace chartab {

namespace {

bool cpu_has(const char* feature) {
#if defined(__x86_64__) || defined(__i386__)
  __builtin_cpu_init();
  if (std::string(feature) == "ssse3") return __builtin_cpu_supports("ssse3");
  if (std::string(feature) == "avx2") return __builtin_cpu_supports("avx2");
#else
  (void)feature;
#endif
  return false;
}

const CoxeterKernels& select_kernels() {
  const auto avail = available_kernels();
  if (const char* env = std::getenv("CHARTAB_SIMD"); env != nullptr && *env != '\0') {
    for (const auto* k : avail) {
      if (std::string(k->name) == env) return *k;
    }
    throw DomainError(std::string("CHARTAB_SIMD names an unavailable kernel set: ") + env);
  }
  return *avail.back();
}

}  // namespace

std::vector<const CoxeterKernels*> available_kernels() {
  std::vector<const CoxeterKernels*> out{&scalar_kernels()};
  if (const auto* k = detail::ssse3_kernels(); k != nullptr && cpu_has("ssse3")) out.push_back(k);
  if (const auto* k = detail::avx2_kernels(); k != nullptr && cpu_has("avx2")) out.push_back(k);
  return out;
}

const CoxeterKernels& active_kernels() {
  static const CoxeterKernels& k = select_kernels();
  return k;
}

}  // namespace chartab

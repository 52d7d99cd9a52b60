#include "kernels_internal.hpp"

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>

namespace chartab::detail {

namespace {

// Four elements per register. The byte shuffle works inside 128-bit halves,
// so each half carries two elements with the same offsets as the SSE path.
inline __m256i lane_offsets() {
  return _mm256_set_epi8(8, 8, 8, 8, 8, 8, 8, 8, 0, 0, 0, 0, 0, 0, 0, 0, 8, 8, 8, 8, 8, 8, 8, 8, 0, 0, 0,
                         0, 0, 0, 0, 0);
}

inline __m256i compose4(__m256i w, __m256i v) {
  const __m256i idx = _mm256_add_epi8(_mm256_and_si256(v, _mm256_set1_epi8(0x0F)), lane_offsets());
  const __m256i r = _mm256_shuffle_epi8(w, idx);
  return _mm256_xor_si256(r, _mm256_and_si256(v, _mm256_set1_epi8(static_cast<char>(0x80))));
}

inline __m256i load4(const Packed* p) { return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p)); }
inline void store4(Packed* p, __m256i v) { _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v); }

void compose(const Packed* w, const Packed* v, Packed* out, std::size_t n) {
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) store4(out + k, compose4(load4(w + k), load4(v + k)));
  compose_scalar(w + k, v + k, out + k, n - k);
}

void mul_right(const Packed* x, Packed s, Packed* out, std::size_t n) {
  const __m256i sv = _mm256_set1_epi64x(static_cast<long long>(s));
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) store4(out + k, compose4(load4(x + k), sv));
  mul_right_scalar(x + k, s, out + k, n - k);
}

void twisted_conj(Packed s, Packed fs, const Packed* x, Packed* out, std::size_t n) {
  const __m256i sv = _mm256_set1_epi64x(static_cast<long long>(s));
  const __m256i fv = _mm256_set1_epi64x(static_cast<long long>(fs));
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) store4(out + k, compose4(compose4(sv, load4(x + k)), fv));
  twisted_conj_scalar(s, fs, x + k, out + k, n - k);
}

void length(Family family, const Packed* x, int* out, std::size_t n) {
  const __m256i zero = _mm256_setzero_si256();
  const __m256i lane = _mm256_set1_epi64x(0x0706050403020100LL);
  std::size_t k = 0;
  alignas(32) long long sums_out[4];
  for (; k + 4 <= n; k += 4) {
    const __m256i p = load4(x + k);
    const __m256i mag = _mm256_add_epi8(_mm256_and_si256(p, _mm256_set1_epi8(0x0F)), _mm256_set1_epi8(1));
    const __m256i neg = _mm256_cmpgt_epi8(zero, p);
    const __m256i val = _mm256_sub_epi8(_mm256_xor_si256(mag, neg), neg);
    __m256i acc = zero;
    for (int i = 0; i < 8; ++i) {
      const __m256i bidx = _mm256_add_epi8(_mm256_set1_epi8(static_cast<char>(i)), lane_offsets());
      const __m256i vi = _mm256_shuffle_epi8(val, bidx);
      const __m256i later = _mm256_cmpgt_epi8(lane, _mm256_set1_epi8(static_cast<char>(i)));
      const __m256i inv = _mm256_and_si256(_mm256_cmpgt_epi8(vi, val), later);
      const __m256i nsp = _mm256_and_si256(_mm256_cmpgt_epi8(zero, _mm256_add_epi8(vi, val)), later);
      acc = _mm256_sub_epi8(_mm256_sub_epi8(acc, inv), nsp);
    }
    if (family == Family::B) acc = _mm256_sub_epi8(acc, neg);
    _mm256_store_si256(reinterpret_cast<__m256i*>(sums_out), _mm256_sad_epu8(acc, zero));
    for (int j = 0; j < 4; ++j) out[k + j] = static_cast<int>(sums_out[j]);
  }
  length_scalar(family, x + k, out + k, n - k);
}

}  // namespace

const CoxeterKernels* avx2_kernels() {
  static const CoxeterKernels k{"avx2", compose, mul_right, twisted_conj, length};
  return &k;
}

}  // namespace chartab::detail

#else

namespace chartab::detail {
const CoxeterKernels* avx2_kernels() { return nullptr; }
}  // namespace chartab::detail

#endif

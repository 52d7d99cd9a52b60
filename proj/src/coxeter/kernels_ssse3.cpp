#include "kernels_internal.hpp"

#if defined(__x86_64__) || defined(__i386__)
#include <tmmintrin.h>

namespace chartab::detail {

namespace {

// Two elements per register: lanes 0-7 and 8-15.
inline __m128i lane_offsets() { return _mm_set_epi8(8, 8, 8, 8, 8, 8, 8, 8, 0, 0, 0, 0, 0, 0, 0, 0); }

inline __m128i compose2(__m128i w, __m128i v) {
  const __m128i idx = _mm_add_epi8(_mm_and_si128(v, _mm_set1_epi8(0x0F)), lane_offsets());
  const __m128i r = _mm_shuffle_epi8(w, idx);
  return _mm_xor_si128(r, _mm_and_si128(v, _mm_set1_epi8(static_cast<char>(0x80))));
}

inline __m128i load2(const Packed* p) { return _mm_loadu_si128(reinterpret_cast<const __m128i*>(p)); }
inline void store2(Packed* p, __m128i v) { _mm_storeu_si128(reinterpret_cast<__m128i*>(p), v); }

void compose(const Packed* w, const Packed* v, Packed* out, std::size_t n) {
  std::size_t k = 0;
  for (; k + 2 <= n; k += 2) store2(out + k, compose2(load2(w + k), load2(v + k)));
  compose_scalar(w + k, v + k, out + k, n - k);
}

void mul_right(const Packed* x, Packed s, Packed* out, std::size_t n) {
  const __m128i sv = _mm_set1_epi64x(static_cast<long long>(s));
  std::size_t k = 0;
  for (; k + 2 <= n; k += 2) store2(out + k, compose2(load2(x + k), sv));
  mul_right_scalar(x + k, s, out + k, n - k);
}

void twisted_conj(Packed s, Packed fs, const Packed* x, Packed* out, std::size_t n) {
  const __m128i sv = _mm_set1_epi64x(static_cast<long long>(s));
  const __m128i fv = _mm_set1_epi64x(static_cast<long long>(fs));
  std::size_t k = 0;
  for (; k + 2 <= n; k += 2) store2(out + k, compose2(compose2(sv, load2(x + k)), fv));
  twisted_conj_scalar(s, fs, x + k, out + k, n - k);
}

void length(Family family, const Packed* x, int* out, std::size_t n) {
  const __m128i zero = _mm_setzero_si128();
  const __m128i lane = _mm_set_epi8(7, 6, 5, 4, 3, 2, 1, 0, 7, 6, 5, 4, 3, 2, 1, 0);
  std::size_t k = 0;
  for (; k + 2 <= n; k += 2) {
    const __m128i p = load2(x + k);
    const __m128i mag = _mm_add_epi8(_mm_and_si128(p, _mm_set1_epi8(0x0F)), _mm_set1_epi8(1));
    const __m128i neg = _mm_cmpgt_epi8(zero, p);
    const __m128i val = _mm_sub_epi8(_mm_xor_si128(mag, neg), neg);
    __m128i acc = zero;
    for (int i = 0; i < 8; ++i) {
      const __m128i bidx = _mm_add_epi8(_mm_set1_epi8(static_cast<char>(i)), lane_offsets());
      const __m128i vi = _mm_shuffle_epi8(val, bidx);
      const __m128i later = _mm_cmpgt_epi8(lane, _mm_set1_epi8(static_cast<char>(i)));
      const __m128i inv = _mm_and_si128(_mm_cmpgt_epi8(vi, val), later);
      const __m128i nsp = _mm_and_si128(_mm_cmpgt_epi8(zero, _mm_add_epi8(vi, val)), later);
      acc = _mm_sub_epi8(_mm_sub_epi8(acc, inv), nsp);
    }
    if (family == Family::B) acc = _mm_sub_epi8(acc, neg);
    const __m128i sums = _mm_sad_epu8(acc, zero);
    out[k] = _mm_cvtsi128_si32(sums);
    out[k + 1] = _mm_extract_epi16(sums, 4);
  }
  length_scalar(family, x + k, out + k, n - k);
}

}  // namespace

const CoxeterKernels* ssse3_kernels() {
  static const CoxeterKernels k{"ssse3", compose, mul_right, twisted_conj, length};
  return &k;
}

}  // namespace chartab::detail

#else

namespace chartab::detail {
const CoxeterKernels* ssse3_kernels() { return nullptr; }
}  // namespace chartab::detail

#endif

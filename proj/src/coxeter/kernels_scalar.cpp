#include "kernels_internal.hpp"

namespace chartab {

Packed compose_packed(Packed w, Packed v) {
  Packed out = 0;
  for (int i = 0; i < 8; ++i) {
    const unsigned vb = static_cast<unsigned>(v >> (8 * i)) & 0xFFu;
    const unsigned wb = static_cast<unsigned>(w >> (8 * (vb & 0x0Fu))) & 0xFFu;
    out |= static_cast<Packed>(wb ^ (vb & 0x80u)) << (8 * i);
  }
  return out;
}

namespace detail {

namespace {

int signed_value(Packed p, int lane) {
  const unsigned b = static_cast<unsigned>(p >> (8 * lane)) & 0xFFu;
  const int v = static_cast<int>(b & 0x0Fu) + 1;
  return (b & 0x80u) ? -v : v;
}

int length_one(Family family, Packed p) {
  // Padding lanes hold values larger in absolute value than every active
  // lane and never contribute, so all eight lanes can be scanned.
  int v[8];
  for (int i = 0; i < 8; ++i) v[i] = signed_value(p, i);
  int count = 0;
  for (int i = 0; i < 8; ++i) {
    if (family == Family::B && v[i] < 0) ++count;
    for (int j = i + 1; j < 8; ++j) {
      if (v[i] > v[j]) ++count;
      if (v[i] + v[j] < 0) ++count;
    }
  }
  return count;
}

}  // namespace

void compose_scalar(const Packed* w, const Packed* v, Packed* out, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) out[k] = compose_packed(w[k], v[k]);
}

void mul_right_scalar(const Packed* x, Packed s, Packed* out, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) out[k] = compose_packed(x[k], s);
}

void twisted_conj_scalar(Packed s, Packed fs, const Packed* x, Packed* out, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) out[k] = compose_packed(compose_packed(s, x[k]), fs);
}

void length_scalar(Family family, const Packed* x, int* out, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) out[k] = length_one(family, x[k]);
}

}  // namespace detail

const CoxeterKernels& scalar_kernels() {
  static const CoxeterKernels k{"scalar", detail::compose_scalar, detail::mul_right_scalar,
                                detail::twisted_conj_scalar, detail::length_scalar};
  return k;
}

}  // namespace chartab

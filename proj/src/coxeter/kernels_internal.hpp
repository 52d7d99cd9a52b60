#pragma once

#include "chartab/coxeter.hpp"

namespace chartab::detail {

// Each returns nullptr when the variant was not compiled for this target.
const CoxeterKernels* ssse3_kernels();
const CoxeterKernels* avx2_kernels();

// Shared scalar tail loops used by the SIMD variants for leftover elements.
void compose_scalar(const Packed* w, const Packed* v, Packed* out, std::size_t n);
void mul_right_scalar(const Packed* x, Packed s, Packed* out, std::size_t n);
void twisted_conj_scalar(Packed s, Packed fs, const Packed* x, Packed* out, std::size_t n);
void length_scalar(Family family, const Packed* x, int* out, std::size_t n);

}  // namespace chartab::detail

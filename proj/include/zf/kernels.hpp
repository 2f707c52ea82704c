#pragma once

#include <complex>
#include <cstddef>

namespace zf::kern {

using cplx = std::complex<double>;

// Dense row-major square-matrix kernels. The omp variants are the production
// path; kern::serial holds the plain-loop reference used by the unit tests and
// the kernel benchmark. Both walk entries in identical order, so results are
// bit-for-bit equal and reports stay reproducible under any thread count.

void multiply(const cplx* a, const cplx* b, cplx* c, std::size_t dim);
void add_scaled(cplx* acc, const cplx* x, cplx alpha, std::size_t count);
void adjoint(const cplx* a, cplx* out, std::size_t dim);
double max_abs_diff(const cplx* a, const cplx* b, std::size_t count);

namespace serial {

void multiply(const cplx* a, const cplx* b, cplx* c, std::size_t dim);
void add_scaled(cplx* acc, const cplx* x, cplx alpha, std::size_t count);
void adjoint(const cplx* a, cplx* out, std::size_t dim);
double max_abs_diff(const cplx* a, const cplx* b, std::size_t count);

} // namespace serial

} // namespace zf::kern

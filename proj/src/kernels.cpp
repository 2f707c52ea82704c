#include "zf/kernels.hpp"

#include <algorithm>
#include <cmath>

namespace zf::kern {

namespace {

// ikj loop over row-major storage; the k-accumulation order per output entry
// is fixed, which keeps omp and serial results identical.
inline void multiply_rows(const cplx* a, const cplx* b, cplx* c, std::size_t dim,
                          std::size_t row_begin, std::size_t row_end) {
    for (std::size_t i = row_begin; i < row_end; ++i) {
        cplx* ci = c + i * dim;
        std::fill(ci, ci + dim, cplx{0.0, 0.0});
        const cplx* ai = a + i * dim;
        for (std::size_t k = 0; k < dim; ++k) {
            const cplx aik = ai[k];
            if (aik == cplx{0.0, 0.0}) continue;
            const cplx* bk = b + k * dim;
            for (std::size_t j = 0; j < dim; ++j) ci[j] += aik * bk[j];
        }
    }
}

} // namespace

void multiply(const cplx* a, const cplx* b, cplx* c, std::size_t dim) {
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < static_cast<long long>(dim); ++i)
        multiply_rows(a, b, c, dim, static_cast<std::size_t>(i), static_cast<std::size_t>(i) + 1);
}

void add_scaled(cplx* acc, const cplx* x, cplx alpha, std::size_t count) {
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < static_cast<long long>(count); ++i) acc[i] += alpha * x[i];
}

void adjoint(const cplx* a, cplx* out, std::size_t dim) {
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < static_cast<long long>(dim); ++i)
        for (std::size_t j = 0; j < dim; ++j)
            out[static_cast<std::size_t>(i) * dim + j] = std::conj(a[j * dim + static_cast<std::size_t>(i)]);
}

double max_abs_diff(const cplx* a, const cplx* b, std::size_t count) {
    double m = 0.0;
#pragma omp parallel for schedule(static) reduction(max : m)
    for (long long i = 0; i < static_cast<long long>(count); ++i)
        m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

namespace serial {

void multiply(const cplx* a, const cplx* b, cplx* c, std::size_t dim) {
    multiply_rows(a, b, c, dim, 0, dim);
}

void add_scaled(cplx* acc, const cplx* x, cplx alpha, std::size_t count) {
    for (std::size_t i = 0; i < count; ++i) acc[i] += alpha * x[i];
}

void adjoint(const cplx* a, cplx* out, std::size_t dim) {
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) out[i * dim + j] = std::conj(a[j * dim + i]);
}

double max_abs_diff(const cplx* a, const cplx* b, std::size_t count) {
    double m = 0.0;
    for (std::size_t i = 0; i < count; ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

} // namespace serial

} // namespace zf::kern

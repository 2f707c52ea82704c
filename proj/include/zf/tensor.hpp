#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "zf/errors.hpp"

namespace zf {

using cplx = std::complex<double>;

/// Dense complex linear map on an m-fold tensor product of N-dimensional
/// sites. Storage is row-major over the lexicographic multi-index of sites
/// (site 1 most significant). site_count 0 is a scalar (1x1 matrix).
///
/// Values are immutable for all practical purposes: every operation below
/// returns a fresh operator, so instances can be shared across threads.
class MultiSiteOperator {
public:
    MultiSiteOperator() : site_dim_(2), site_count_(0), dim_(1), entries_(1, cplx{0.0, 0.0}) {}

    MultiSiteOperator(int site_dim, int site_count)
        : site_dim_(site_dim), site_count_(site_count), dim_(pow_dim(site_dim, site_count)),
          entries_(dim_ * dim_, cplx{0.0, 0.0}) {
        if (site_dim < 2) throw DimensionMismatch("site dimension must be >= 2");
        if (site_count < 0) throw DimensionMismatch("site count must be >= 0");
    }

    static MultiSiteOperator identity(int site_dim, int site_count);
    /// Two-site operator mapping e_a (x) e_b to e_b (x) e_a.
    static MultiSiteOperator permutation_swap(int site_dim);

    int site_dim() const { return site_dim_; }
    int site_count() const { return site_count_; }
    std::size_t dim() const { return dim_; }

    cplx& operator()(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }
    const cplx& operator()(std::size_t row, std::size_t col) const { return entries_[row * dim_ + col]; }

    const std::vector<cplx>& entries() const { return entries_; }
    std::vector<cplx>& entries() { return entries_; }

    bool same_shape(const MultiSiteOperator& other) const {
        return site_dim_ == other.site_dim_ && site_count_ == other.site_count_;
    }

    MultiSiteOperator& operator+=(const MultiSiteOperator& other);
    MultiSiteOperator& operator-=(const MultiSiteOperator& other);
    MultiSiteOperator& operator*=(cplx scalar);

    static std::size_t pow_dim(int site_dim, int site_count) {
        std::size_t d = 1;
        for (int i = 0; i < site_count; ++i) d *= static_cast<std::size_t>(site_dim);
        return d;
    }

private:
    int site_dim_;
    int site_count_;
    std::size_t dim_;
    std::vector<cplx> entries_;
};

MultiSiteOperator operator*(const MultiSiteOperator& a, const MultiSiteOperator& b);
MultiSiteOperator operator+(MultiSiteOperator a, const MultiSiteOperator& b);
MultiSiteOperator operator-(MultiSiteOperator a, const MultiSiteOperator& b);
MultiSiteOperator operator*(cplx scalar, MultiSiteOperator a);

/// acc += alpha * x, shapes must match.
void add_scaled(MultiSiteOperator& acc, const MultiSiteOperator& x, cplx alpha);

/// Places a two-site operator on sites (i, j) of an m-site space: first
/// tensor slot on site i, second on site j, identity elsewhere. Sites are
/// 1-based and may come in either order (i > j reverses the slots).
MultiSiteOperator embed(const MultiSiteOperator& two_site, int site_i, int site_j, int total_sites);

/// General slot placement: slot s of `op` (1-based) acts on sites[s-1] of the
/// total space, identity on unmapped sites. `sites` entries are 1-based and
/// pairwise distinct.
MultiSiteOperator embed_at(const MultiSiteOperator& op, const std::vector<int>& sites, int total_sites);

/// Left-to-right matrix product, first element leftmost.
MultiSiteOperator chain_product(const std::vector<MultiSiteOperator>& ops);

MultiSiteOperator adjoint(const MultiSiteOperator& op);

double max_abs_distance(const MultiSiteOperator& a, const MultiSiteOperator& b);

/// Max entrywise magnitude of (op - I); convenience for residuals against
/// the identity.
double max_abs_from_identity(const MultiSiteOperator& op);

} // namespace zf

#pragma once

#include "tamecover/fq.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace tamecover {

struct BudgetError : std::runtime_error {
    std::uint64_t required;
    explicit BudgetError(std::uint64_t req)
        : std::runtime_error("enumeration budget exceeded"), required(req) {}
};

constexpr std::uint64_t kDefaultBudget = std::uint64_t(1) << 24;

struct DLParams {
    std::uint64_t q = 2; // prime power
    long d = 1;
    long m = 1; // points live in F_{q^m}

    DLParams() = default;
    DLParams(std::uint64_t q_, long d_, long m_);
};

/// Shared state for point work over F_{q^m}: the ambient field and the
/// rational subfield F_q as a subset of it.
class DLContext {
public:
    explicit DLContext(const DLParams& params, std::uint64_t budget = kDefaultBudget);

    const DLParams& params() const { return params_; }
    const FqField& field() const { return *field_; }
    std::shared_ptr<const FqField> field_ptr() const { return field_; }
    const std::vector<std::uint64_t>& rational_points() const { return base_; }
    std::uint64_t point_space_size() const; // q^{m(d+1)}

private:
    DLParams params_;
    std::shared_ptr<const FqField> field_;
    std::vector<std::uint64_t> base_; // F_q inside F_{q^m}, sorted by code
};

using Point = std::vector<std::uint64_t>; // length d+1, codes in the ambient field

// (-1)^d * product over a in F_q^{d+1} minus 0 of <a, z>. Zero output means
// the point lies on a rational hyperplane.
std::uint64_t linear_form_product(const DLContext& ctx, const Point& z);

// det(z_i^{q^j}), 0 <= i, j <= d.
std::uint64_t moore_determinant(const DLContext& ctx, const Point& z);

// Same value as linear_form_product, via the Moore route: (-1)^d * det^{q-1}.
std::uint64_t linear_form_product_via_moore(const DLContext& ctx, const Point& z);

struct DLCounts {
    std::uint64_t dl_count = 0;    // affine points with product value 1
    std::uint64_t omega_count = 0; // projective points off all rational hyperplanes
};

// Exhaustive count over F_{q^m}^{d+1} minus 0, lexicographic in coordinates
// (z_0 most significant). Throws BudgetError when q^{m(d+1)} exceeds budget.
// When collect is non-null the DL points are appended in enumeration order.
DLCounts enumerate_points(const DLContext& ctx, std::uint64_t budget = kDefaultBudget,
                          std::vector<Point>* collect = nullptr);

// Entries of g are codes of elements of the rational subfield F_q.
// Throws std::invalid_argument when g is singular or has a bad shape.
bool check_gl_invariance(const DLContext& ctx, const std::vector<std::vector<std::uint64_t>>& g,
                         const Point& z);

struct FreeActionReport {
    bool ok = false;
    std::uint64_t scalar_order = 0; // N = q^{d+1} - 1
    std::uint64_t fiber_size = 0;
    std::uint64_t image_count = 0; // projective image in Omega
    std::uint64_t dl_count = 0;
};

// Verifies that scaling by F_{q^{d+1}}^* preserves the point set, acts
// freely, and has fibers of size exactly N over the projective image.
// Requires (d+1) | m so that the scalars are rational over F_{q^m}.
FreeActionReport check_free_scaling_action(const DLContext& ctx,
                                           std::uint64_t budget = kDefaultBudget);

} // namespace tamecover

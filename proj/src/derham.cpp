#include "tamecover/derham.hpp"

#include "tamecover/forms.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace tamecover {

long isotypic_dimension(const CoverSpec& cover, long q, long iso)
{
    iso %= cover.n;
    if (iso < 0)
        iso += cover.n;
    if (q < 0 || q > cover.d())
        return 0;
    if (iso % cover.n_tilde != 0)
        return 0;
    return static_cast<long>(binomial(cover.d(), q));
}

long cohomology_dimension(const CoverSpec& cover, long q)
{
    if (q < 0 || q > cover.d())
        return 0;
    return cover.pi0 * static_cast<long>(binomial(cover.d(), q));
}

ExponentBox ExponentBox::centered(long d, long radius)
{
    ExponentBox b;
    b.lo.assign(static_cast<std::size_t>(d), -radius);
    b.hi.assign(static_cast<std::size_t>(d), radius);
    return b;
}

namespace {

// One graded piece of the complex is the exterior algebra on d symbols with
// differential wedge-by-v. Ranks are found by fraction-free elimination on
// integer matrices; buffers are reused across pieces.
struct KoszulWorkspace {
    long d;
    std::vector<std::vector<AxisSet>> by_card;
    std::vector<std::size_t> pos_in_card;           // subset mask -> column/row index
    std::vector<std::vector<long long>> mat;        // one dense buffer per degree q
    std::vector<std::size_t> rows_of, cols_of;

    explicit KoszulWorkspace(long d_) : d(d_)
    {
        const std::size_t nsub = std::size_t(1) << d;
        by_card.resize(static_cast<std::size_t>(d + 1));
        pos_in_card.resize(nsub);
        for (AxisSet I = 0; I < nsub; ++I) {
            auto& bucket = by_card[static_cast<std::size_t>(popcount(I))];
            pos_in_card[I] = bucket.size();
            bucket.push_back(I);
        }
        for (long q = 0; q < d; ++q) {
            rows_of.push_back(by_card[static_cast<std::size_t>(q + 1)].size());
            cols_of.push_back(by_card[static_cast<std::size_t>(q)].size());
            mat.emplace_back(rows_of.back() * cols_of.back());
        }
    }

    // dim H^q for every q at the piece with weight vector v
    void piece(const long long* v, long* h_out)
    {
        for (long q = 0; q < d; ++q) {
            auto& m = mat[static_cast<std::size_t>(q)];
            std::fill(m.begin(), m.end(), 0);
            const auto& dom = by_card[static_cast<std::size_t>(q)];
            const std::size_t cols = cols_of[static_cast<std::size_t>(q)];
            for (std::size_t jc = 0; jc < dom.size(); ++jc) {
                const AxisSet I = dom[jc];
                for (long r = 1; r <= d; ++r) {
                    const AxisSet bit = AxisSet(1) << (r - 1);
                    if ((I & bit) || v[r - 1] == 0)
                        continue;
                    const std::size_t jr = pos_in_card[I | bit];
                    const int sgn = (popcount(I & (bit - 1)) & 1) ? -1 : 1;
                    m[jr * cols + jc] = sgn * v[r - 1];
                }
            }
        }
        long rank_prev = 0;
        for (long q = 0; q <= d; ++q) {
            const long dim_q = static_cast<long>(by_card[static_cast<std::size_t>(q)].size());
            long rank_q = 0;
            if (q < d)
                rank_q = eliminate(static_cast<std::size_t>(q));
            h_out[q] = dim_q - rank_q - rank_prev;
            rank_prev = rank_q;
        }
    }

private:
    long eliminate(std::size_t q)
    {
        auto& m = mat[q];
        const std::size_t rows = rows_of[q], cols = cols_of[q];
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols && r < rows; ++c) {
            std::size_t piv = r;
            while (piv < rows && m[piv * cols + c] == 0)
                ++piv;
            if (piv == rows)
                continue;
            if (piv != r)
                for (std::size_t k = 0; k < cols; ++k)
                    std::swap(m[piv * cols + k], m[r * cols + k]);
            for (std::size_t i = r + 1; i < rows; ++i) {
                const long long b = m[i * cols + c];
                if (b == 0)
                    continue;
                const long long a = m[r * cols + c];
                const long long g = std::gcd(std::abs(a), std::abs(b));
                const long long fa = b / g, fb = a / g;
                for (std::size_t k = c; k < cols; ++k)
                    m[i * cols + k] = m[i * cols + k] * fb - m[r * cols + k] * fa;
            }
            ++r;
        }
        return static_cast<long>(r);
    }
};

} // namespace

std::vector<long> koszul_oracle_all(const CoverSpec& cover, const ExponentBox& window)
{
    const long d = cover.d();
    if (window.lo.size() != static_cast<std::size_t>(d) || window.hi.size() != window.lo.size())
        throw std::invalid_argument("koszul_oracle: window dimension mismatch");
    for (long i = 0; i < d; ++i)
        if (window.lo[static_cast<std::size_t>(i)] > window.hi[static_cast<std::size_t>(i)])
            throw std::invalid_argument("koszul_oracle: empty window axis");
    if (d > 20)
        throw std::invalid_argument("koszul_oracle: dimension too large");

    KoszulWorkspace ws(d);
    std::vector<long> total(static_cast<std::size_t>(d + 1), 0);
    std::vector<long> h(static_cast<std::size_t>(d + 1), 0);
    ExpVec nu(static_cast<std::size_t>(d), 0);
    std::vector<long long> v(static_cast<std::size_t>(d) + 1, 0); // +1 so data() is valid at d=0

    for (long iso = 0; iso < cover.n; ++iso) {
        for (long i = 0; i < d; ++i)
            nu[static_cast<std::size_t>(i)] = window.lo[static_cast<std::size_t>(i)];
        while (true) {
            for (long i = 0; i < d; ++i)
                v[static_cast<std::size_t>(i)] =
                    static_cast<long long>(cover.n) * nu[static_cast<std::size_t>(i)] +
                    static_cast<long long>(iso) * cover.beta[static_cast<std::size_t>(i)];
            ws.piece(v.data(), h.data());
            for (long q = 0; q <= d; ++q)
                total[static_cast<std::size_t>(q)] += h[static_cast<std::size_t>(q)];
            long i = 0;
            for (; i < d; ++i) {
                auto& c = nu[static_cast<std::size_t>(i)];
                if (++c <= window.hi[static_cast<std::size_t>(i)])
                    break;
                c = window.lo[static_cast<std::size_t>(i)];
            }
            if (i == d)
                break;
        }
    }
    return total;
}

long koszul_oracle(const CoverSpec& cover, long q, const ExponentBox& window)
{
    if (q < 0 || q > cover.d())
        return 0;
    return koszul_oracle_all(cover, window)[static_cast<std::size_t>(q)];
}

long kunneth_dimension(const CoverSpec& a, const CoverSpec& b, long iso, long q)
{
    if (a.n != b.n)
        throw std::invalid_argument("kunneth_dimension: covers must share the group order n");
    long total = 0;
    for (long q1 = 0; q1 <= q; ++q1)
        total += isotypic_dimension(a, q1, iso) * isotypic_dimension(b, q - q1, iso);
    return total;
}

} // namespace tamecover

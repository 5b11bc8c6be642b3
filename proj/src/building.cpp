#include "tamecover/building.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <set>
#include <unordered_map>

namespace tamecover {

SimplexType::SimplexType(std::vector<long> parts) : e(std::move(parts))
{
    if (e.empty())
        throw std::invalid_argument("SimplexType: empty composition");
    for (long p : e)
        if (p < 1)
            throw std::invalid_argument("SimplexType: parts must be >= 1");
}

long SimplexType::d() const
{
    long s = 0;
    for (long p : e)
        s += p;
    return s - 1;
}

long SimplexType::partial_dim(long i) const
{
    long s = 0;
    for (long t = 0; t <= i; ++t)
        s += e[static_cast<std::size_t>(t)];
    return s - 1;
}

// ---------------------------------------------------------------------------
// subspaces of F_q^n as reduced-row-echelon bases

namespace {

using Row = std::vector<std::uint64_t>;
using Subspace = std::vector<Row>; // RREF rows

// reduce v by the RREF rows; returns true when v lies in the span
bool in_span(const FqField& F, const Subspace& s, Row v)
{
    for (const auto& row : s) {
        std::size_t piv = 0;
        while (piv < row.size() && row[piv] == 0)
            ++piv;
        if (v[piv] != 0) {
            const std::uint64_t c = v[piv];
            for (std::size_t i = piv; i < v.size(); ++i)
                v[i] = F.sub(v[i], F.mul(c, row[i]));
        }
    }
    for (auto x : v)
        if (x != 0)
            return false;
    return true;
}

bool contains(const FqField& F, const Subspace& big, const Subspace& small)
{
    for (const auto& row : small)
        if (!in_span(F, big, row))
            return false;
    return true;
}

void enumerate_subspaces_dim(const FqField& F, long n, long k, std::vector<Subspace>& out)
{
    // choose pivot columns, then fill free entries
    std::vector<long> pivots(static_cast<std::size_t>(k));
    for (long i = 0; i < k; ++i)
        pivots[static_cast<std::size_t>(i)] = i;
    const std::uint64_t q = F.size();
    while (true) {
        // free positions: row i, columns > pivots[i], not pivot columns
        std::vector<std::pair<long, long>> free_pos;
        std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
        for (long p : pivots)
            is_pivot[static_cast<std::size_t>(p)] = true;
        for (long i = 0; i < k; ++i)
            for (long c = pivots[static_cast<std::size_t>(i)] + 1; c < n; ++c)
                if (!is_pivot[static_cast<std::size_t>(c)])
                    free_pos.emplace_back(i, c);

        std::vector<std::uint64_t> fill(free_pos.size(), 0);
        while (true) {
            Subspace s(static_cast<std::size_t>(k), Row(static_cast<std::size_t>(n), 0));
            for (long i = 0; i < k; ++i)
                s[static_cast<std::size_t>(i)][static_cast<std::size_t>(pivots[static_cast<std::size_t>(i)])] =
                    F.from_int(1);
            for (std::size_t t = 0; t < free_pos.size(); ++t)
                s[static_cast<std::size_t>(free_pos[t].first)][static_cast<std::size_t>(free_pos[t].second)] =
                    fill[t];
            out.push_back(std::move(s));
            std::size_t t = 0;
            for (; t < fill.size(); ++t) {
                if (++fill[t] < q)
                    break;
                fill[t] = 0;
            }
            if (t == fill.size())
                break;
        }
        // next pivot combination
        long i = k - 1;
        while (i >= 0 && pivots[static_cast<std::size_t>(i)] == n - k + i)
            --i;
        if (i < 0)
            break;
        ++pivots[static_cast<std::size_t>(i)];
        for (long j = i + 1; j < k; ++j)
            pivots[static_cast<std::size_t>(j)] = pivots[static_cast<std::size_t>(j - 1)] + 1;
    }
}

} // namespace

std::map<SimplexType, BigInt> star_census(std::uint64_t q, long d, std::uint64_t budget)
{
    if (d < 0)
        throw std::invalid_argument("star_census: d must be >= 0");
    {
        unsigned __int128 sz = 1;
        for (long i = 0; i <= d; ++i)
            sz *= q;
        if (sz > budget)
            throw BudgetError(sz > UINT64_MAX ? UINT64_MAX : static_cast<std::uint64_t>(sz));
    }
    std::uint64_t p;
    unsigned h;
    factor_prime_power(q, p, h);
    const FqField F(p, h);
    const long n = d + 1;

    // proper nonzero subspaces grouped by dimension
    std::vector<std::vector<Subspace>> by_dim(static_cast<std::size_t>(n));
    for (long k = 1; k < n; ++k)
        enumerate_subspaces_dim(F, n, k, by_dim[static_cast<std::size_t>(k)]);

    std::map<SimplexType, BigInt> census;
    census[SimplexType({n})] = 1; // the vertex itself: empty flag

    // chains ordered by strictly increasing dimension
    struct Frame {
        std::vector<const Subspace*> chain;
        std::vector<long> dims;
    };
    std::vector<std::pair<std::vector<const Subspace*>, std::vector<long>>> stack;
    for (long k = 1; k < n; ++k)
        for (const auto& s : by_dim[static_cast<std::size_t>(k)])
            stack.push_back({{&s}, {k}});
    while (!stack.empty()) {
        auto [chain, dims] = std::move(stack.back());
        stack.pop_back();
        // record this chain as a flag
        std::vector<long> parts;
        parts.push_back(dims[0]);
        for (std::size_t i = 1; i < dims.size(); ++i)
            parts.push_back(dims[i] - dims[i - 1]);
        parts.push_back(n - dims.back());
        census[SimplexType(parts)] += 1;
        // extend
        for (long k = dims.back() + 1; k < n; ++k)
            for (const auto& s : by_dim[static_cast<std::size_t>(k)])
                if (contains(F, s, *chain.back())) {
                    auto c2 = chain;
                    c2.push_back(&s);
                    auto d2 = dims;
                    d2.push_back(k);
                    stack.push_back({std::move(c2), std::move(d2)});
                }
    }
    return census;
}

std::vector<BigInt> beta_values(std::uint64_t q, const SimplexType& type)
{
    const long d = type.d();
    const long k = type.k();
    std::vector<BigInt> out;
    for (long i = 0; i < k; ++i) {
        const long di = type.partial_dim(i);
        out.push_back(ipow(BigInt(q), static_cast<unsigned long>(d - di)) *
                      (ipow(BigInt(q), static_cast<unsigned long>(type.e[static_cast<std::size_t>(i)])) - 1));
    }
    return out;
}

std::vector<BigInt> beta_values_counted(std::uint64_t q, const SimplexType& type)
{
    const long d = type.d();
    const long k = type.k();
    std::vector<BigInt> counts(static_cast<std::size_t>(k + 1), 0);
    // block of a coordinate index: the i with d_{i-1} < index <= d_i
    std::vector<long> block(static_cast<std::size_t>(d + 1), 0);
    {
        long i = 0;
        for (long pos = 0; pos <= d; ++pos) {
            while (pos > type.partial_dim(i))
                ++i;
            block[static_cast<std::size_t>(pos)] = i;
        }
    }
    std::vector<std::uint64_t> a(static_cast<std::size_t>(d + 1), 0);
    while (true) {
        std::size_t t = 0;
        for (; t < a.size(); ++t) {
            if (++a[t] < q)
                break;
            a[t] = 0;
        }
        if (t == a.size())
            break;
        std::size_t lead = 0;
        while (a[lead] == 0)
            ++lead;
        counts[static_cast<std::size_t>(block[lead])] += 1;
    }
    counts.resize(static_cast<std::size_t>(k)); // the last block rides on the trivial coordinate
    return counts;
}

long level_of(const std::vector<long>& a, const SimplexType& type)
{
    const long d = type.d();
    if (a.size() != static_cast<std::size_t>(d + 1))
        throw std::invalid_argument("level_of: vector length != d+1");
    long last = -1;
    for (long i = 0; i <= d; ++i)
        if (a[static_cast<std::size_t>(i)] != 0)
            last = i;
    if (last < 0)
        throw std::invalid_argument("level_of: zero vector");
    for (long i = 0; i <= type.k(); ++i)
        if (type.partial_dim(i) >= last)
            return i;
    return type.k(); // unreachable
}

VanishingReport m_and_vanishing(const CharacterIndex& chi, const SimplexType& type)
{
    if (type.k() < 1)
        throw std::invalid_argument("m_and_vanishing: positive-dimensional simplices only");
    if (type.d() != chi.d)
        throw std::invalid_argument("m_and_vanishing: type and character dimensions differ");
    long m = type.d() + 1;
    for (long p : type.e)
        m = std::gcd(m, p);
    const BigInt N = chi.modulus();
    const BigInt comp = ipow(chi.q, static_cast<unsigned long>(m)) - 1; // q^m - 1 components
    VanishingReport rep;
    rep.m = m;
    rep.vanishes = (chi.j % (N / comp)) != 0;
    return rep;
}

long jl_multiplicity(long d)
{
    if (d < 1)
        throw std::invalid_argument("jl_multiplicity: d must be >= 1");
    return d + 1;
}


// ---------------------------------------------------------------------------
// lattices over F_q[pi]: canonical row Hermite form, BFS, simplex types.
// All arithmetic is exact; entries stay at degree <= R+1, so the bounded
// truncation is faithful to the full building out to the requested radius.

namespace {

using PolyQ = std::vector<std::uint64_t>; // coeff codes, constant term first

PolyQ ptrim(PolyQ a)
{
    while (!a.empty() && a.back() == 0)
        a.pop_back();
    return a;
}

long pdeg(const PolyQ& a)
{
    return static_cast<long>(a.size()) - 1; // -1 for the zero polynomial
}

// a - s*b
PolyQ psub_scaled(const FqField& F, PolyQ a, const PolyQ& b, const PolyQ& s)
{
    if (b.empty() || s.empty())
        return a;
    a.resize(std::max(a.size(), b.size() + s.size() - 1), 0);
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            a[i + j] = F.sub(a[i + j], F.mul(s[i], b[j]));
    }
    return ptrim(std::move(a));
}

// quotient of a by nonzero b
PolyQ pquot(const FqField& F, PolyQ a, const PolyQ& b)
{
    PolyQ q;
    const long db = pdeg(b);
    const std::uint64_t lead_inv = F.inv(b.back());
    while (pdeg(a) >= db) {
        const long shift = pdeg(a) - db;
        const std::uint64_t c = F.mul(a.back(), lead_inv);
        PolyQ s(static_cast<std::size_t>(shift) + 1, 0);
        s.back() = c;
        if (q.size() < s.size())
            q.resize(s.size(), 0);
        q[static_cast<std::size_t>(shift)] = F.add(q[static_cast<std::size_t>(shift)], c);
        a = psub_scaled(F, std::move(a), b, s);
    }
    return ptrim(std::move(q));
}

PolyQ pscale(const FqField& F, PolyQ a, std::uint64_t c)
{
    for (auto& x : a)
        x = F.mul(x, c);
    return ptrim(std::move(a));
}

PolyQ pshift(PolyQ a, long k) // multiply by pi^k, k >= 0
{
    if (a.empty())
        return a;
    a.insert(a.begin(), static_cast<std::size_t>(k), 0);
    return a;
}

PolyQ padd(const FqField& F, const PolyQ& a, const PolyQ& b)
{
    PolyQ sum(std::max(a.size(), b.size()), 0);
    for (std::size_t t = 0; t < sum.size(); ++t) {
        const std::uint64_t va = t < a.size() ? a[t] : 0;
        const std::uint64_t vb = t < b.size() ? b[t] : 0;
        sum[t] = F.add(va, vb);
    }
    return ptrim(std::move(sum));
}

using LatRow = std::vector<PolyQ>;

struct Lattice {
    std::vector<LatRow> rows; // row Hermite form, full rank, square
};

void row_reduce(const FqField& F, LatRow& row, const LatRow& pivot, const PolyQ& quot)
{
    if (quot.empty())
        return;
    for (std::size_t c = 0; c < row.size(); ++c)
        row[c] = psub_scaled(F, std::move(row[c]), pivot[c], quot);
}

// canonical row Hermite form of the row span: upper triangular, monic
// pi-power pivots, above-pivot entries reduced. Unique for full rank.
Lattice hermite(const FqField& F, std::vector<LatRow> gens, std::size_t n)
{
    std::size_t r = 0;
    for (std::size_t col = 0; col < n && r < gens.size(); ++col) {
        while (true) {
            std::size_t best = SIZE_MAX;
            long best_deg = 0;
            for (std::size_t i = r; i < gens.size(); ++i) {
                const long dg = pdeg(gens[i][col]);
                if (dg >= 0 && (best == SIZE_MAX || dg < best_deg)) {
                    best = i;
                    best_deg = dg;
                }
            }
            if (best == SIZE_MAX)
                break;
            std::swap(gens[best], gens[r]);
            bool again = false;
            for (std::size_t i = r + 1; i < gens.size(); ++i) {
                if (gens[i][col].empty())
                    continue;
                const PolyQ quot = pquot(F, gens[i][col], gens[r][col]);
                row_reduce(F, gens[i], gens[r], quot);
                if (!gens[i][col].empty())
                    again = true;
            }
            if (!again)
                break;
        }
        if (pdeg(gens[r][col]) >= 0) {
            const std::uint64_t inv = F.inv(gens[r][col].back());
            for (auto& e : gens[r])
                e = pscale(F, std::move(e), inv);
            for (std::size_t i = 0; i < r; ++i) {
                if (gens[i][col].empty())
                    continue;
                const PolyQ quot = pquot(F, gens[i][col], gens[r][col]);
                row_reduce(F, gens[i], gens[r], quot);
            }
            ++r;
        }
    }
    gens.resize(r);
    Lattice L;
    L.rows = std::move(gens);
    return L;
}

// divide out the pi-content so the minimal elementary divisor is pi^0
void normalize_homothety(Lattice& L)
{
    while (true) {
        bool all_div = true;
        for (const auto& row : L.rows)
            for (const auto& e : row)
                if (!e.empty() && e[0] != 0)
                    all_div = false;
        if (!all_div)
            break;
        for (auto& row : L.rows)
            for (auto& e : row)
                if (!e.empty())
                    e.erase(e.begin());
    }
}

std::string lattice_key(const Lattice& L)
{
    std::string s;
    for (const auto& row : L.rows) {
        for (const auto& e : row) {
            for (auto c : e)
                s += std::to_string(c) + ",";
            s += ";";
        }
        s += "|";
    }
    return s;
}

std::string lattice_label(const Lattice& L)
{
    std::string s;
    for (std::size_t i = 0; i < L.rows.size(); ++i) {
        if (i)
            s += "; ";
        s += "[";
        for (std::size_t j = 0; j < L.rows[i].size(); ++j) {
            if (j)
                s += ", ";
            const auto& e = L.rows[i][j];
            if (e.empty()) {
                s += "0";
                continue;
            }
            std::string t;
            for (std::size_t kdeg = 0; kdeg < e.size(); ++kdeg) {
                if (e[kdeg] == 0)
                    continue;
                if (!t.empty())
                    t += "+";
                if (kdeg == 0)
                    t += std::to_string(e[kdeg]);
                else {
                    if (e[kdeg] != 1)
                        t += std::to_string(e[kdeg]) + "*";
                    t += kdeg == 1 ? "pi" : "pi^" + std::to_string(kdeg);
                }
            }
            s += t;
        }
        s += "]";
    }
    return s;
}

long max_diag_exponent(const Lattice& L)
{
    long mx = 0;
    for (std::size_t i = 0; i < L.rows.size(); ++i)
        mx = std::max(mx, pdeg(L.rows[i][i]));
    return mx;
}

Lattice standard_lattice(const FqField& F, std::size_t n)
{
    Lattice L;
    L.rows.assign(n, LatRow(n));
    for (std::size_t i = 0; i < n; ++i)
        L.rows[i][i] = PolyQ{F.from_int(1)};
    return L;
}

Lattice lattice_scale(const Lattice& L, long k) // multiply by pi^k, k >= 0
{
    Lattice out = L;
    for (auto& row : out.rows)
        for (auto& e : row)
            e = pshift(e, k);
    return out;
}

// membership of a row vector in the row span (outer in Hermite form)
bool lattice_contains(const FqField& F, const Lattice& outer, const LatRow& v)
{
    LatRow rem = v;
    for (std::size_t i = 0; i < outer.rows.size(); ++i) {
        if (rem[i].empty())
            continue;
        const PolyQ quot = pquot(F, rem[i], outer.rows[i][i]);
        row_reduce(F, rem, outer.rows[i], quot);
        if (!rem[i].empty())
            return false;
    }
    for (const auto& e : rem)
        if (!e.empty())
            return false;
    return true;
}

bool lattice_subset(const FqField& F, const Lattice& inner, const Lattice& outer)
{
    for (const auto& row : inner.rows)
        if (!lattice_contains(F, outer, row))
            return false;
    return true;
}

// all classes with a representative strictly between pi*L and L, one per
// proper nonzero subspace of L/piL
std::vector<Lattice> lattice_neighbors(const FqField& F, const Lattice& L,
                                       const std::vector<std::vector<Subspace>>& by_dim)
{
    const std::size_t n = L.rows.size();
    std::vector<Lattice> out;
    for (const auto& bucket : by_dim) {
        for (const auto& W : bucket) {
            std::vector<LatRow> gens;
            for (const auto& row : L.rows) {
                LatRow shifted;
                for (const auto& e : row)
                    shifted.push_back(pshift(e, 1));
                gens.push_back(std::move(shifted));
            }
            for (const auto& w : W) {
                LatRow combo(n);
                for (std::size_t c = 0; c < n; ++c) {
                    PolyQ acc;
                    for (std::size_t kk = 0; kk < n; ++kk)
                        if (w[kk] != 0)
                            acc = padd(F, acc, pscale(F, L.rows[kk][c], w[kk]));
                    combo[c] = std::move(acc);
                }
                gens.push_back(std::move(combo));
            }
            Lattice Lp = hermite(F, std::move(gens), n);
            normalize_homothety(Lp);
            out.push_back(std::move(Lp));
        }
    }
    return out;
}

struct BuildingData {
    TruncatedBuilding pub;
    std::vector<Lattice> lattices;
};

BuildingData bfs_internal(std::uint64_t q, long d, long R, std::uint64_t budget)
{
    if (d < 1 || R < 0)
        throw std::invalid_argument("bfs_vertices: need d >= 1, R >= 0");
    std::uint64_t p;
    unsigned h;
    factor_prime_power(q, p, h);
    const FqField F(p, h);
    const std::size_t n = static_cast<std::size_t>(d + 1);

    std::vector<std::vector<Subspace>> by_dim;
    for (long k = 1; k <= d; ++k) {
        std::vector<Subspace> bucket;
        enumerate_subspaces_dim(F, d + 1, k, bucket);
        by_dim.push_back(std::move(bucket));
    }

    BuildingData B;
    B.pub.q = q;
    B.pub.d = d;
    B.pub.radius = R;

    std::unordered_map<std::string, long> ids;
    auto intern = [&](Lattice L) {
        const std::string key = lattice_key(L);
        auto it = ids.find(key);
        if (it != ids.end())
            return std::pair<long, bool>(it->second, false);
        const long id = static_cast<long>(B.lattices.size());
        ids.emplace(key, id);
        B.lattices.push_back(std::move(L));
        return std::pair<long, bool>(id, true);
    };

    intern(standard_lattice(F, n));
    B.pub.depth.push_back(0);
    std::vector<long> frontier = {0};
    for (long depth = 1; depth <= R && !frontier.empty(); ++depth) {
        std::vector<long> next;
        for (long id : frontier) {
            const Lattice L = B.lattices[static_cast<std::size_t>(id)]; // copy: vector grows
            for (auto& nb : lattice_neighbors(F, L, by_dim)) {
                auto [nid, fresh] = intern(std::move(nb));
                if (fresh) {
                    B.pub.depth.push_back(depth);
                    next.push_back(nid);
                    if (B.lattices.size() > budget)
                        throw BudgetError(B.lattices.size());
                }
            }
        }
        frontier = std::move(next);
    }

    const std::size_t count = B.lattices.size();
    B.pub.adjacency.assign(count, {});
    for (std::size_t id = 0; id < count; ++id) {
        const Lattice& L = B.lattices[id];
        std::set<long> nbrs;
        for (auto& nb : lattice_neighbors(F, L, by_dim)) {
            auto it = ids.find(lattice_key(nb));
            if (it != ids.end() && it->second != static_cast<long>(id))
                nbrs.insert(it->second);
        }
        B.pub.adjacency[id].assign(nbrs.begin(), nbrs.end());
        B.pub.labels.push_back(lattice_label(L));
    }
    return B;
}

// Representatives between pi*L0 and L0 give a flag in L0/piL0; the type is
// its dimension-jump composition read from the base vertex. Rotating the
// base changes only the rotation of the answer, which the gcd data ignores.
SimplexType clique_type(const FqField& F, const std::vector<Lattice>& lattices,
                        const std::vector<long>& clique, long d)
{
    const std::size_t n = static_cast<std::size_t>(d + 1);
    const Lattice& L0 = lattices[static_cast<std::size_t>(clique[0])];
    std::vector<long> dims;
    for (std::size_t t = 1; t < clique.size(); ++t) {
        const Lattice& Lj = lattices[static_cast<std::size_t>(clique[t])];
        const long reach = max_diag_exponent(L0) + max_diag_exponent(Lj) + 2;
        bool found = false;
        for (long c = -reach; c <= reach && !found; ++c) {
            // compare pi^c * Lj against (pi*L0, L0) at a common integral scale
            const long lift = c < 0 ? -c : 0;
            const Lattice cand = lattice_scale(Lj, c + lift);
            const Lattice base = lattice_scale(L0, lift);
            const Lattice pibase = lattice_scale(L0, lift + 1);
            if (!lattice_subset(F, cand, base) || !lattice_subset(F, pibase, cand))
                continue;
            if (lattice_subset(F, base, cand))
                continue; // same class as the base vertex
            // coordinates of cand in the base row basis, taken mod pi
            std::vector<Row> mat;
            for (const auto& row : cand.rows) {
                LatRow rem = row;
                Row coeff(n, 0);
                for (std::size_t i = 0; i < n; ++i) {
                    if (rem[i].empty())
                        continue;
                    const PolyQ quot = pquot(F, rem[i], base.rows[i][i]);
                    coeff[i] = quot.empty() ? 0 : quot[0];
                    row_reduce(F, rem, base.rows[i], quot);
                }
                mat.push_back(coeff);
            }
            long rank = 0;
            for (std::size_t col = 0; col < n; ++col) {
                std::size_t piv = static_cast<std::size_t>(rank);
                while (piv < mat.size() && mat[piv][col] == 0)
                    ++piv;
                if (piv == mat.size())
                    continue;
                std::swap(mat[piv], mat[static_cast<std::size_t>(rank)]);
                const std::uint64_t inv = F.inv(mat[static_cast<std::size_t>(rank)][col]);
                for (std::size_t i = 0; i < mat.size(); ++i) {
                    if (i == static_cast<std::size_t>(rank) || mat[i][col] == 0)
                        continue;
                    const std::uint64_t f = F.mul(mat[i][col], inv);
                    for (std::size_t kk = col; kk < n; ++kk)
                        mat[i][kk] = F.sub(mat[i][kk], F.mul(f, mat[static_cast<std::size_t>(rank)][kk]));
                }
                ++rank;
            }
            if (rank <= 0 || rank >= d + 1)
                continue;
            dims.push_back(rank);
            found = true;
        }
        if (!found)
            throw std::logic_error("clique vertices do not form a lattice chain");
    }
    std::sort(dims.begin(), dims.end());
    std::vector<long> parts;
    parts.push_back(dims[0]);
    for (std::size_t i = 1; i < dims.size(); ++i) {
        if (dims[i] == dims[i - 1])
            throw std::logic_error("clique gives a degenerate flag");
        parts.push_back(dims[i] - dims[i - 1]);
    }
    parts.push_back(d + 1 - dims.back());
    return SimplexType(parts);
}

} // namespace

TruncatedBuilding bfs_vertices(std::uint64_t q, long d, long R, std::uint64_t budget)
{
    return bfs_internal(q, d, R, budget).pub;
}

CechE1Report cech_e1(std::uint64_t q, long d, long R, const CharacterIndex& chi, std::uint64_t budget)
{
    if (chi.q != q || chi.d != d)
        throw std::invalid_argument("cech_e1: character parameters disagree with (q, d)");
    CechE1Report rep;
    rep.q = q;
    rep.d = d;
    rep.radius = R;
    rep.theta = chi.j;
    rep.primitive = is_primitive(chi);

    BuildingData B = bfs_internal(q, d, R, budget);
    const long nv = static_cast<long>(B.pub.adjacency.size());

    // cliques of the adjacency graph are the simplices of the truncation
    std::vector<std::vector<std::vector<long>>> cliques(static_cast<std::size_t>(d + 1));
    for (long v = 0; v < nv; ++v)
        cliques[0].push_back({v});
    for (long r = 1; r <= d; ++r) {
        for (const auto& s : cliques[static_cast<std::size_t>(r - 1)]) {
            const long last = s.back();
            for (long u : B.pub.adjacency[static_cast<std::size_t>(last)]) {
                if (u <= last)
                    continue;
                bool ok = true;
                for (long w : s)
                    if (!std::binary_search(B.pub.adjacency[static_cast<std::size_t>(w)].begin(),
                                            B.pub.adjacency[static_cast<std::size_t>(w)].end(), u)) {
                        ok = false;
                        break;
                    }
                if (ok) {
                    auto s2 = s;
                    s2.push_back(u);
                    cliques[static_cast<std::size_t>(r)].push_back(std::move(s2));
                }
            }
        }
    }
    rep.simplex_counts.clear();
    for (long r = 0; r <= d; ++r)
        rep.simplex_counts.push_back(static_cast<long>(cliques[static_cast<std::size_t>(r)].size()));

    if (!rep.primitive) {
        // non-cuspidal vertex parts are outside the computable scope; the
        // vanishing argument also needs primitivity. Mark, never guess.
        for (long r = 0; r <= d; ++r)
            if (rep.simplex_counts[static_cast<std::size_t>(r)] > 0)
                for (long s = 0; s <= d; ++s)
                    rep.entries[{r, s}] = std::nullopt;
        rep.total_hd = std::nullopt;
        return rep;
    }

    const BigInt cusp = cuspidal_dimension(BigInt(q), d);
    for (long s = 0; s <= d; ++s)
        rep.entries[{0, s}] = (s == d) ? BigInt(nv) * cusp : BigInt(0);

    std::uint64_t p;
    unsigned h;
    factor_prime_power(q, p, h);
    const FqField F(p, h);
    for (long r = 1; r <= d; ++r) {
        if (rep.simplex_counts[static_cast<std::size_t>(r)] == 0)
            continue;
        bool all_vanish = true;
        for (const auto& clique : cliques[static_cast<std::size_t>(r)]) {
            const SimplexType t = clique_type(F, B.lattices, clique, d);
            if (!m_and_vanishing(chi, t).vanishes)
                all_vanish = false;
        }
        for (long s = 0; s <= d; ++s)
            rep.entries[{r, s}] = all_vanish ? std::optional<BigInt>(BigInt(0)) : std::nullopt;
    }

    rep.total_hd = BigInt(nv) * cusp;
    return rep;
}

} // namespace tamecover

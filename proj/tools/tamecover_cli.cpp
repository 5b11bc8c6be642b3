// Command-line front end: every library operation behind JSON-producing
// subcommands, for scripted verification runs.
//
//   tamecover cover-dims --d 2 --n 6 --beta 2,4 --deg 1
//   tamecover bt cech --q 2 --d 1 --R 1 --j 1
//
// Exit codes: 0 success, 2 validation error, 3 budget error, 4 not-closed.

#include "tamecover/building.hpp"
#include "tamecover/chars.hpp"
#include "tamecover/derham.hpp"
#include "tamecover/dl.hpp"
#include "tamecover/forms.hpp"
#include "tamecover/json_io.hpp"
#include "tamecover/torseur.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <functional>
#include <fstream>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

using namespace tamecover;

namespace {

struct ValidationError : std::runtime_error {
    std::string code;
    ValidationError(std::string code_, const std::string& msg)
        : std::runtime_error(msg), code(std::move(code_)) {}
};

std::uint64_t default_budget()
{
    if (const char* env = std::getenv("TAMECOVER_BUDGET")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0)
            return v;
    }
    return kDefaultBudget;
}

std::vector<long> parse_long_list(const std::string& s)
{
    std::vector<long> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(std::stol(item));
    return out;
}

CoverSpec make_cover(long d, long n, const std::string& beta_str, long p)
{
    const std::vector<long> beta = parse_long_list(beta_str);
    if (beta.size() != static_cast<std::size_t>(d))
        throw ValidationError("beta_length", "beta must list exactly d exponents");
    if (p > 0 && std::gcd(n, p) != 1)
        throw ValidationError("n_not_coprime_to_p", "n must be prime to the residue characteristic");
    return CoverSpec(TorusSpec(d), n, beta, p);
}

CharacterIndex make_char(long q, long d, const std::string& j_str)
{
    const BigInt j = parse_bigint(j_str);
    const BigInt N = ipow(BigInt(q), static_cast<unsigned long>(d + 1)) - 1;
    if (j < 0 || j >= N)
        throw ValidationError("j_out_of_range", "need 0 <= j < q^{d+1} - 1");
    return CharacterIndex(q, d, j);
}

void print_table(const json& j, const std::string& prefix, std::ostream& os)
{
    if (j.is_object()) {
        for (const auto& [k, v] : j.items())
            print_table(v, prefix.empty() ? k : prefix + "." + k, os);
    } else if (j.is_array() && !j.empty() && (j[0].is_object() || j[0].is_array())) {
        std::size_t i = 0;
        for (const auto& v : j)
            print_table(v, prefix + "[" + std::to_string(i++) + "]", os);
    } else {
        os << prefix << " = " << j.dump() << "\n";
    }
}

void emit(const json& j, const std::string& format, const std::string& out_path)
{
    std::ostringstream body;
    if (format == "table")
        print_table(j, "", body);
    else
        body << j.dump(2) << "\n";
    if (out_path.empty() || out_path == "-") {
        std::cout << body.str();
    } else {
        std::ofstream f(out_path);
        if (!f)
            throw ValidationError("output_path", "cannot open output file: " + out_path);
        f << body.str();
    }
}

json read_input_json(const std::string& path)
{
    if (path == "-")
        return json::parse(std::cin);
    std::ifstream f(path);
    if (!f)
        throw ValidationError("input_path", "cannot open input file: " + path);
    return json::parse(f);
}

std::vector<std::vector<std::uint64_t>> parse_matrix(const std::string& s)
{
    std::vector<std::vector<std::uint64_t>> rows;
    std::stringstream ss(s);
    std::string row;
    while (std::getline(ss, row, ';')) {
        std::vector<std::uint64_t> r;
        std::stringstream rs(row);
        std::string item;
        while (std::getline(rs, item, ','))
            r.push_back(std::stoull(item));
        rows.push_back(std::move(r));
    }
    return rows;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact cohomology of tame cyclic covers, Deligne-Lusztig point counts, "
                 "and Bruhat-Tits bookkeeping"};
    app.require_subcommand(1);

    std::string format = "json";
    std::string out_path;
    app.add_option("--format", format, "json or table")->check(CLI::IsMember({"json", "table"}));
    app.add_option("--out", out_path, "output path (default stdout)");

    std::uint64_t budget = default_budget();

    long d = 1, n = 1, deg = 0, p = 0, q = 2, m = 1, R = 0, iso = 0, window = 4;
    long a1 = 0, a2 = 0, da = 1, db = 1;
    std::string beta_str = "0", beta2_str, beta_a, beta_b, j_str = "0", type_str, g_str, s_axes;
    std::string input_path = "-";

    // reduce
    auto* reduce_cmd = app.add_subcommand("reduce", "reduce a closed form to the canonical basis");
    reduce_cmd->add_option("--in", input_path, "IsoForm JSON path, - for stdin");

    // cover-dims
    auto* dims_cmd = app.add_subcommand("cover-dims", "pi0 * binom(d, q) for a Kummer cover");
    dims_cmd->add_option("--d", d)->required();
    dims_cmd->add_option("--n", n)->required();
    dims_cmd->add_option("--beta", beta_str)->required();
    dims_cmd->add_option("--deg", deg)->required();
    dims_cmd->add_option("--p", p);

    // oracle
    auto* oracle_cmd = app.add_subcommand("oracle", "Koszul-window rank oracle");
    oracle_cmd->add_option("--d", d)->required();
    oracle_cmd->add_option("--n", n)->required();
    oracle_cmd->add_option("--beta", beta_str)->required();
    oracle_cmd->add_option("--deg", deg)->required();
    oracle_cmd->add_option("--window", window, "box radius in each axis");
    oracle_cmd->add_option("--p", p);

    // kunneth
    auto* kun_cmd = app.add_subcommand("kunneth", "Kunneth convolution of two covers");
    kun_cmd->add_option("--n", n)->required();
    kun_cmd->add_option("--da", da)->required();
    kun_cmd->add_option("--beta-a", beta_a)->required();
    kun_cmd->add_option("--db", db)->required();
    kun_cmd->add_option("--beta-b", beta_b)->required();
    kun_cmd->add_option("--iso", iso)->required();
    kun_cmd->add_option("--deg", deg)->required();

    // torseur
    auto* torseur_cmd = app.add_subcommand("torseur", "torsor-class bookkeeping");
    auto* t_add = torseur_cmd->add_subcommand("add", "sum of two classes");
    t_add->add_option("--n", n)->required();
    t_add->add_option("--a1", a1)->required();
    t_add->add_option("--beta1", beta_str)->required();
    t_add->add_option("--a2", a2)->required();
    t_add->add_option("--beta2", beta2_str)->required();
    auto* t_pi0 = torseur_cmd->add_subcommand("pi0", "component count of a class");
    t_pi0->add_option("--n", n)->required();
    t_pi0->add_option("--a", a1);
    t_pi0->add_option("--beta", beta_str)->required();
    auto* t_split = torseur_cmd->add_subcommand("split", "product splitting of a class");
    t_split->add_option("--n", n)->required();
    t_split->add_option("--a", a1);
    t_split->add_option("--beta", beta_str)->required();
    t_split->add_option("--s-axes", s_axes, "1-based axes owned by the S factor, comma separated");

    // dl
    auto* dl_cmd = app.add_subcommand("dl", "Deligne-Lusztig point work");
    auto* dl_count = dl_cmd->add_subcommand("count", "exhaustive point counts");
    dl_count->add_option("--q", q)->required();
    dl_count->add_option("--d", d)->required();
    dl_count->add_option("--m", m)->required();
    dl_count->add_option("--budget", budget);
    auto* dl_inv = dl_cmd->add_subcommand("invariance", "GL-invariance sweep for one matrix");
    dl_inv->add_option("--q", q)->required();
    dl_inv->add_option("--d", d)->required();
    dl_inv->add_option("--m", m)->required();
    dl_inv->add_option("--g", g_str, "rows semicolon-separated, entries comma-separated")->required();
    dl_inv->add_option("--budget", budget);
    auto* dl_free = dl_cmd->add_subcommand("free-action", "scaling-action structure check");
    dl_free->add_option("--q", q)->required();
    dl_free->add_option("--d", d)->required();
    dl_free->add_option("--m", m)->required();
    dl_free->add_option("--budget", budget);

    // char
    auto* char_cmd = app.add_subcommand("char", "character arithmetic");
    auto* ch_prim = char_cmd->add_subcommand("primitive", "norm-factorization test");
    ch_prim->add_option("--q", q)->required();
    ch_prim->add_option("--d", d)->required();
    ch_prim->add_option("--j", j_str)->required();
    auto* ch_orbit = char_cmd->add_subcommand("orbit", "Green orbit of j under multiplication by q");
    ch_orbit->add_option("--q", q)->required();
    ch_orbit->add_option("--d", d)->required();
    ch_orbit->add_option("--j", j_str)->required();
    auto* ch_cusp = char_cmd->add_subcommand("cusp-dim", "cuspidal dimension");
    ch_cusp->add_option("--q", q)->required();
    ch_cusp->add_option("--d", d)->required();

    // bt
    auto* bt_cmd = app.add_subcommand("bt", "building combinatorics");
    auto* bt_star = bt_cmd->add_subcommand("star", "flag census at the standard vertex");
    bt_star->add_option("--q", q)->required();
    bt_star->add_option("--d", d)->required();
    bt_star->add_option("--budget", budget);
    auto* bt_bfs = bt_cmd->add_subcommand("bfs", "vertices within a radius");
    bt_bfs->add_option("--q", q)->required();
    bt_bfs->add_option("--d", d)->required();
    bt_bfs->add_option("--R", R)->required();
    bt_bfs->add_option("--budget", budget);
    auto* bt_beta = bt_cmd->add_subcommand("beta", "tube unit exponents of a simplex type");
    bt_beta->add_option("--q", q)->required();
    bt_beta->add_option("--type", type_str, "composition of d+1, comma separated")->required();
    auto* bt_vanish = bt_cmd->add_subcommand("vanish", "component count and theta-vanishing");
    bt_vanish->add_option("--q", q)->required();
    bt_vanish->add_option("--d", d)->required();
    bt_vanish->add_option("--j", j_str)->required();
    bt_vanish->add_option("--type", type_str)->required();
    auto* bt_cech = bt_cmd->add_subcommand("cech", "E1 page over a truncated building");
    bt_cech->add_option("--q", q)->required();
    bt_cech->add_option("--d", d)->required();
    bt_cech->add_option("--R", R)->required();
    bt_cech->add_option("--j", j_str)->required();
    bt_cech->add_option("--budget", budget);

    // jl-mult
    auto* jl_cmd = app.add_subcommand("jl-mult", "multiplicity of the induced representation");
    jl_cmd->add_option("--d", d)->required();

    // let --format/--out appear after a subcommand name as well
    const std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* cmd) {
        cmd->fallthrough();
        for (auto* sub : cmd->get_subcommands({}))
            enable_fallthrough(sub);
    };
    for (auto* sub : app.get_subcommands({}))
        enable_fallthrough(sub);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp")
            return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        json out;
        if (reduce_cmd->parsed()) {
            const IsoForm w = iso_form_from_json(read_input_json(input_path));
            const auto res = reduce_to_class(w);
            out["class"] = to_json(res.cls);
            out["primitive"] = to_json(res.primitive);
        } else if (dims_cmd->parsed()) {
            out["dim"] = cohomology_dimension(make_cover(d, n, beta_str, p), deg);
        } else if (oracle_cmd->parsed()) {
            const CoverSpec cv = make_cover(d, n, beta_str, p);
            out["dim"] = koszul_oracle(cv, deg, ExponentBox::centered(d, window));
            out["window"] = window;
        } else if (kun_cmd->parsed()) {
            const CoverSpec A = make_cover(da, n, beta_a, 0);
            const CoverSpec B = make_cover(db, n, beta_b, 0);
            out["dim"] = kunneth_dimension(A, B, iso, deg);
        } else if (t_add->parsed()) {
            const auto b1 = parse_long_list(beta_str), b2 = parse_long_list(beta2_str);
            if (b1.size() != b2.size())
                throw ValidationError("beta_length", "the two beta lists must have equal length");
            out = to_json(add_classes(TorseurClass(n, a1, b1), TorseurClass(n, a2, b2)));
        } else if (t_pi0->parsed()) {
            out["pi0"] = pi0_of_class(TorseurClass(n, a1, parse_long_list(beta_str)));
        } else if (t_split->parsed()) {
            const auto beta = parse_long_list(beta_str);
            AxisOwnership own(beta.size(), false);
            for (long ax : parse_long_list(s_axes.empty() ? std::string() : s_axes)) {
                if (ax < 1 || ax > static_cast<long>(beta.size()))
                    throw ValidationError("axis_out_of_range", "S-axis outside 1..d");
                own[static_cast<std::size_t>(ax - 1)] = true;
            }
            const auto [cs, cc] = split_product_class(TorseurClass(n, a1, beta), own);
            out["s"] = to_json(cs);
            out["c"] = to_json(cc);
        } else if (dl_count->parsed()) {
            DLContext ctx(DLParams(q, d, m), budget);
            const auto counts = enumerate_points(ctx, budget);
            // cross-verify the two evaluation routes before reporting
            bool moore_ok = true;
            const std::uint64_t space = ctx.point_space_size();
            if (space <= 4096) {
                const std::uint64_t fsz = ctx.field().size();
                for (std::uint64_t code = 1; code < space; ++code) {
                    std::uint64_t c = code;
                    Point z(static_cast<std::size_t>(d + 1));
                    for (long i = d; i >= 0; --i) {
                        z[static_cast<std::size_t>(i)] = c % fsz;
                        c /= fsz;
                    }
                    if (linear_form_product(ctx, z) != linear_form_product_via_moore(ctx, z))
                        moore_ok = false;
                }
            } else {
                std::mt19937_64 rng(20260811);
                std::uniform_int_distribution<std::uint64_t> dist(0, ctx.field().size() - 1);
                for (int t = 0; t < 1000; ++t) {
                    Point z(static_cast<std::size_t>(d + 1), 0);
                    for (auto& cc : z)
                        cc = dist(rng);
                    if (std::all_of(z.begin(), z.end(), [](std::uint64_t v) { return v == 0; }))
                        z[0] = 1;
                    if (linear_form_product(ctx, z) != linear_form_product_via_moore(ctx, z))
                        moore_ok = false;
                }
            }
            out["q"] = q;
            out["d"] = d;
            out["m"] = m;
            out["dl_count"] = counts.dl_count;
            out["omega_count"] = counts.omega_count;
            out["moore_identity_checked"] = moore_ok;
        } else if (dl_inv->parsed()) {
            DLContext ctx(DLParams(q, d, m), budget);
            const auto g = parse_matrix(g_str);
            const std::uint64_t fsz = ctx.field().size();
            unsigned __int128 space = 1;
            for (long i = 0; i <= d; ++i)
                space *= fsz;
            if (space > budget)
                throw BudgetError(ctx.point_space_size());
            bool invariant = true;
            std::uint64_t checked = 0;
            for (std::uint64_t code = 1; code < static_cast<std::uint64_t>(space); ++code) {
                std::uint64_t c = code;
                Point z(static_cast<std::size_t>(d + 1));
                for (long i = d; i >= 0; --i) {
                    z[static_cast<std::size_t>(i)] = c % fsz;
                    c /= fsz;
                }
                if (!check_gl_invariance(ctx, g, z))
                    invariant = false;
                ++checked;
            }
            out["invariant"] = invariant;
            out["points_checked"] = checked;
        } else if (dl_free->parsed()) {
            DLContext ctx(DLParams(q, d, m), budget);
            out = to_json(check_free_scaling_action(ctx, budget));
            out["q"] = q;
            out["d"] = d;
            out["m"] = m;
        } else if (ch_prim->parsed()) {
            out["primitive"] = is_primitive(make_char(q, d, j_str));
        } else if (ch_orbit->parsed()) {
            json orbit = json::array();
            for (const BigInt& v : green_orbit(make_char(q, d, j_str)))
                orbit.push_back(static_cast<long>(v));
            out["orbit"] = std::move(orbit);
        } else if (ch_cusp->parsed()) {
            out["dim"] = cuspidal_dimension(BigInt(q), d).str();
        } else if (bt_star->parsed()) {
            json census = json::array();
            for (const auto& [type, count] : star_census(q, d, budget)) {
                json entry;
                entry["type"] = type.e;
                entry["count"] = count.str();
                census.push_back(std::move(entry));
            }
            out["census"] = std::move(census);
        } else if (bt_bfs->parsed()) {
            out = to_json(bfs_vertices(q, d, R, budget));
        } else if (bt_beta->parsed()) {
            const SimplexType type(parse_long_list(type_str));
            json closed = json::array(), counted = json::array();
            for (const auto& b : beta_values(q, type))
                closed.push_back(b.str());
            for (const auto& b : beta_values_counted(q, type))
                counted.push_back(b.str());
            out["beta"] = std::move(closed);
            out["beta_counted"] = std::move(counted);
        } else if (bt_vanish->parsed()) {
            const SimplexType type(parse_long_list(type_str));
            if (type.d() != d)
                throw ValidationError("type_dimension", "composition must sum to d+1");
            const auto rep = m_and_vanishing(make_char(q, d, j_str), type);
            out["m"] = rep.m;
            out["vanishes"] = rep.vanishes;
        } else if (bt_cech->parsed()) {
            out = to_json(cech_e1(q, d, R, make_char(q, d, j_str), budget));
        } else if (jl_cmd->parsed()) {
            out["multiplicity"] = jl_multiplicity(d);
        }
        emit(out, format, out_path);
        return 0;
    } catch (const BudgetError& e) {
        json err;
        err["error"]["code"] = "budget";
        err["error"]["message"] = e.what();
        err["error"]["required"] = e.required;
        std::cerr << err.dump(2) << "\n";
        return 3;
    } catch (const NotClosedError& e) {
        json err;
        err["error"]["code"] = "not_closed";
        err["error"]["message"] = e.what();
        std::cerr << err.dump(2) << "\n";
        return 4;
    } catch (const ValidationError& e) {
        json err;
        err["error"]["code"] = e.code;
        err["error"]["message"] = e.what();
        std::cerr << err.dump(2) << "\n";
        return 2;
    } catch (const std::exception& e) {
        json err;
        err["error"]["code"] = "bad_argument";
        err["error"]["message"] = e.what();
        std::cerr << err.dump(2) << "\n";
        return 2;
    }
}

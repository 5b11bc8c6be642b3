#include "tamecover/json_io.hpp"

#include <cstdint>
#include <limits>

namespace tamecover {

namespace {

std::vector<long> get_long_vec(const json& j, const char* key)
{
    if (!j.contains(key) || !j[key].is_array())
        throw std::invalid_argument(std::string("missing or non-array field: ") + key);
    std::vector<long> out;
    for (const auto& v : j[key])
        out.push_back(v.get<long>());
    return out;
}

AxisSet mask_from_list(const json& arr, long d)
{
    AxisSet I = 0;
    long prev = 0;
    for (const auto& v : arr) {
        const long axis = v.get<long>();
        if (axis < 1 || axis > d)
            throw std::invalid_argument("axis out of range in I");
        if (axis <= prev)
            throw std::invalid_argument("axis list must be strictly increasing");
        prev = axis;
        I |= AxisSet(1) << (axis - 1);
    }
    return I;
}

json list_from_mask(AxisSet I)
{
    json arr = json::array();
    for (int axis : axis_list(I))
        arr.push_back(axis);
    return arr;
}

// numbers when they fit, decimal strings beyond 2^63
json bigint_json(const BigInt& v)
{
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(v);
    return v.str();
}

} // namespace

json to_json(const IsoForm& w)
{
    json j;
    j["d"] = w.cover().d();
    j["n"] = w.cover().n;
    j["beta"] = w.cover().beta;
    j["iso"] = w.iso();
    j["deg"] = w.degree();
    json terms = json::array();
    for (const auto& [I, f] : w.components())
        for (const auto& [exp, c] : f.terms()) {
            json t;
            t["coeff"] = to_string(c);
            t["exp"] = exp;
            t["I"] = list_from_mask(I);
            terms.push_back(std::move(t));
        }
    j["terms"] = std::move(terms);
    return j;
}

IsoForm iso_form_from_json(const json& j)
{
    const long d = j.at("d").get<long>();
    const long n = j.at("n").get<long>();
    const std::vector<long> beta = get_long_vec(j, "beta");
    const long iso = j.at("iso").get<long>();
    const long deg = j.at("deg").get<long>();
    const long p = j.contains("p") ? j["p"].get<long>() : 0;
    CoverSpec cover(TorusSpec(d), n, beta, p);
    IsoForm w(cover, deg, iso);
    if (j.contains("terms"))
        for (const auto& t : j["terms"]) {
            const AxisSet I = mask_from_list(t.at("I"), d);
            if (popcount(I) != deg)
                throw std::invalid_argument("term subset size != deg");
            ExpVec exp;
            for (const auto& v : t.at("exp"))
                exp.push_back(v.get<long>());
            if (exp.size() != static_cast<std::size_t>(d))
                throw std::invalid_argument("term exponent length != d");
            w.add_term(I, exp, parse_rational(t.at("coeff").get<std::string>()));
        }
    return w;
}

json to_json(const CohomClass& cls)
{
    json j;
    j["d"] = cls.cover.d();
    j["n"] = cls.cover.n;
    j["beta"] = cls.cover.beta;
    j["deg"] = cls.degree;
    json coords = json::array();
    for (const auto& [key, c] : cls.coords) {
        json t;
        t["a"] = key.first;
        t["I"] = list_from_mask(key.second);
        t["coeff"] = to_string(c);
        coords.push_back(std::move(t));
    }
    j["coords"] = std::move(coords);
    return j;
}

json to_json(const TorseurClass& c)
{
    json j;
    j["n"] = c.n;
    j["a"] = c.unit_exponent;
    j["beta"] = c.beta_mod;
    return j;
}

TorseurClass torseur_from_json(const json& j)
{
    return TorseurClass(j.at("n").get<long>(), j.at("a").get<long>(), get_long_vec(j, "beta"));
}

json to_json(const FreeActionReport& rep)
{
    json j;
    j["ok"] = rep.ok;
    j["scalar_order"] = rep.scalar_order;
    j["fiber_size"] = rep.fiber_size;
    j["image_count"] = rep.image_count;
    j["dl_count"] = rep.dl_count;
    return j;
}

json to_json(const CechE1Report& rep)
{
    json j;
    j["q"] = rep.q;
    j["d"] = rep.d;
    j["R"] = rep.radius;
    j["theta"] = bigint_json(rep.theta);
    j["primitive"] = rep.primitive;
    json e1 = json::array();
    for (const auto& [rs, dim] : rep.entries) {
        json t;
        t["r"] = rs.first;
        t["s"] = rs.second;
        if (dim)
            t["dim"] = bigint_json(*dim);
        else
            t["dim"] = "not-computed";
        e1.push_back(std::move(t));
    }
    j["e1"] = std::move(e1);
    if (rep.total_hd)
        j["total_hd"] = bigint_json(*rep.total_hd);
    else
        j["total_hd"] = "not-computed";
    j["simplex_counts"] = rep.simplex_counts;
    return j;
}

json to_json(const TruncatedBuilding& b)
{
    json j;
    j["q"] = b.q;
    j["d"] = b.d;
    j["R"] = b.radius;
    j["count"] = b.labels.size();
    json verts = json::array();
    for (std::size_t i = 0; i < b.labels.size(); ++i) {
        json v;
        v["id"] = i;
        v["label"] = b.labels[i];
        v["depth"] = b.depth[i];
        v["adj"] = b.adjacency[i];
        verts.push_back(std::move(v));
    }
    j["vertices"] = std::move(verts);
    return j;
}

} // namespace tamecover

#include <weierforge/io/json.hpp>

#include <fstream>
#include <sstream>

#include <weierforge/error.hpp>

namespace weierforge::io
{

using curve::LocalRing;
using curve::RationalCurve;
using curve::Singularity;
using curve::SingularityKind;
using exact::Characteristic;
using exact::Point;
using exact::Polynomial;
using exact::TruncatedSeries;
using numsg::NumericalSemigroup;

namespace
{

// nlohmann throws its own exceptions on missing keys and wrong types.
template <class F>
auto guarded(const char *what, F &&f) -> decltype(f())
{
    try {
        return f();
    } catch (const Json::exception &e) {
        fail(ErrorCode::parse_error, std::string(what) + ": " + e.what());
    }
}

const Json &field(const Json &j, const char *key)
{
    ensure(j.is_object(), ErrorCode::parse_error, std::string("expected an object holding '") + key + "'");
    const auto it = j.find(key);
    ensure(it != j.end(), ErrorCode::parse_error, std::string("missing field '") + key + "'");
    return *it;
}

Characteristic characteristic_of(const Json &j)
{
    if (!j.contains("characteristic")) {
        return 0;
    }
    const auto p = field(j, "characteristic").get<long long>();
    exact::check_characteristic(p);
    return static_cast<Characteristic>(p);
}

Point point_of(Characteristic p, const Json &j)
{
    if (j.is_number_integer()) {
        return Point::from_int(p, j.get<long long>());
    }
    return Point::parse(p, j.get<std::string>());
}

TruncatedSeries series_of(Characteristic p, const Json &j, int truncation)
{
    Polynomial f = j.is_number_integer() ? Polynomial::from_ints(p, {j.get<long long>()})
                                         : Polynomial::parse(p, j.get<std::string>());
    return TruncatedSeries::from_polynomial(f, truncation);
}

std::vector<curve::BranchTuple> basis_of(Characteristic p, const Json &j, const std::vector<int> &xi)
{
    std::vector<curve::BranchTuple> basis;
    for (const auto &row : j) {
        ensure(row.is_array() && row.size() == xi.size(), ErrorCode::parse_error,
               "each basis entry needs one series per branch");
        curve::BranchTuple b;
        for (std::size_t i = 0; i < xi.size(); ++i) {
            b.push_back(series_of(p, row[i], xi[i]));
        }
        basis.push_back(std::move(b));
    }
    return basis;
}

Json basis_json(const LocalRing &ring)
{
    static const char *vars[] = {"t", "u", "v", "w"};
    Json out = Json::array();
    for (const auto &b : ring.basis()) {
        Json row = Json::array();
        for (std::size_t i = 0; i < b.size(); ++i) {
            row.push_back(series_text(b[i], i < 4 ? vars[i] : "s"));
        }
        out.push_back(std::move(row));
    }
    return out;
}

Json point_json(const valsg2::ValuePoint &v)
{
    return Json::array({v.x, v.y});
}

valsg2::ValuePoint value_point_of(const Json &j)
{
    ensure(j.is_array() && j.size() == 2, ErrorCode::parse_error, "a value point is a pair [x, y]");
    return {j[0].get<int>(), j[1].get<int>()};
}

} // namespace

Json parse_json(const std::string &text)
{
    try {
        return Json::parse(text);
    } catch (const Json::parse_error &e) {
        fail(ErrorCode::parse_error, std::string("malformed JSON: ") + e.what());
    }
}

Json read_json_file(const std::string &path)
{
    std::ifstream in(path);
    ensure(static_cast<bool>(in), ErrorCode::invalid_argument, "cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return parse_json(os.str());
}

Json to_json(const NumericalSemigroup &s)
{
    return Json{{"generators", s.generators()}, {"gaps", s.gaps()},         {"conductor", s.conductor()},
                {"genus", s.genus()},           {"symmetric", s.is_symmetric()}, {"weight", s.weight()}};
}

NumericalSemigroup semigroup_from_json(const Json &j)
{
    return guarded("semigroup", [&] {
        if (j.is_string()) {
            return NumericalSemigroup::parse(j.get<std::string>());
        }
        if (j.contains("gaps")) {
            return NumericalSemigroup::from_gaps(field(j, "gaps").get<std::vector<int>>());
        }
        return NumericalSemigroup::from_generators(field(j, "generators").get<std::vector<int>>());
    });
}

std::string series_text(const TruncatedSeries &s, const std::string &var)
{
    return Polynomial(s.characteristic(), s.dense(0, s.truncation())).to_string(var);
}

Json to_json(const LocalRing &ring)
{
    return Json{{"characteristic", ring.characteristic()},
                {"conductor", ring.conductor()},
                {"basis", basis_json(ring)},
                {"strict", ring.is_gorenstein()}};
}

LocalRing ring_from_json(const Json &j)
{
    return guarded("ring", [&] {
        const Characteristic p = characteristic_of(j);
        const auto xi = field(j, "conductor").get<std::vector<int>>();
        const bool strict = j.value("strict", true);
        return LocalRing(p, xi, basis_of(p, field(j, "basis"), xi), strict);
    });
}

Json to_json(const RationalCurve &x)
{
    Json sings = Json::array();
    for (const auto &s : x.singularities()) {
        Json e{{"kind", curve::to_string(s.kind())}};
        switch (s.kind()) {
        case SingularityKind::monomial:
            e["location"] = s.locations()[0].to_string();
            e["generators"] = s.semigroup()->generators();
            break;
        case SingularityKind::unibranch: {
            e["location"] = s.locations()[0].to_string();
            e["conductor"] = s.ring().conductor()[0];
            Json basis = Json::array();
            for (const auto &b : s.ring().basis()) {
                basis.push_back(series_text(b[0], "t"));
            }
            e["basis"] = std::move(basis);
            break;
        }
        case SingularityKind::two_branch: {
            Json locs = Json::array();
            for (const auto &q : s.locations()) {
                locs.push_back(q.to_string());
            }
            e["locations"] = std::move(locs);
            e["conductor"] = s.ring().conductor();
            e["basis"] = basis_json(s.ring());
            break;
        }
        }
        sings.push_back(std::move(e));
    }
    return Json{{"characteristic", x.characteristic()}, {"singularities", std::move(sings)}};
}

RationalCurve curve_from_json(const Json &j)
{
    return guarded("curve", [&] {
        const Characteristic p = characteristic_of(j);
        std::vector<Singularity> sings;
        for (const auto &e : field(j, "singularities")) {
            const auto kind = field(e, "kind").get<std::string>();
            if (kind == "monomial") {
                const NumericalSemigroup s = e.contains("gaps") || e.contains("generators")
                                                 ? semigroup_from_json(e)
                                                 : semigroup_from_json(field(e, "semigroup"));
                sings.push_back(Singularity::monomial(s, point_of(p, field(e, "location"))));
            } else if (kind == "unibranch") {
                const int c = field(e, "conductor").get<int>();
                std::vector<TruncatedSeries> basis;
                for (const auto &b : field(e, "basis")) {
                    basis.push_back(series_of(p, b, c));
                }
                sings.push_back(Singularity::unibranch(std::move(basis), c, point_of(p, field(e, "location"))));
            } else if (kind == "two-branch" || kind == "two_branch") {
                const auto &locs = field(e, "locations");
                ensure(locs.is_array() && locs.size() == 2, ErrorCode::parse_error,
                       "a two-branch singularity needs two locations");
                const auto xi = field(e, "conductor").get<std::vector<int>>();
                LocalRing ring(p, xi, basis_of(p, field(e, "basis"), xi));
                sings.push_back(Singularity::two_branch(std::move(ring), point_of(p, locs[0]), point_of(p, locs[1])));
            } else {
                fail(ErrorCode::parse_error, "unknown singularity kind '" + kind + "'");
            }
        }
        return RationalCurve(p, std::move(sings));
    });
}

Json to_json(const curve::WeightReport &r)
{
    Json weights = Json::array();
    for (const auto &w : r.singular) {
        Json locs = Json::array();
        for (const auto &q : w.locations) {
            locs.push_back(q.to_string());
        }
        weights.push_back(Json{{"singularity", w.singularity}, {"location", std::move(locs)}, {"delta", w.delta},
                               {"weight", w.weight}});
    }
    Json smooth = Json::array();
    for (const auto &e : r.smooth.entries) {
        smooth.push_back(Json{{"factor", e.factor ? Json(e.factor->to_string()) : Json(nullptr)},
                              {"location", e.location()},
                              {"multiplicity", e.multiplicity},
                              {"degree", e.degree}});
    }
    return Json{{"characteristic", r.characteristic},
                {"genus", r.genus},
                {"orders", r.orders.terms()},
                {"N", r.n},
                {"weights", std::move(weights)},
                {"smooth", std::move(smooth)},
                {"smooth_total", r.smooth_total()},
                {"total", r.total},
                {"expected", r.expected}};
}

curve::WeightReport report_from_json(const Json &j)
{
    return guarded("weight report", [&] {
        curve::WeightReport r;
        r.characteristic = characteristic_of(j);
        const Characteristic p = r.characteristic;
        r.genus = field(j, "genus").get<int>();
        r.orders = padic::OrderSequence(field(j, "orders").get<std::vector<int>>(), p);
        r.n = field(j, "N").get<long long>();
        for (const auto &w : field(j, "weights")) {
            curve::PointWeight pw;
            pw.singularity = field(w, "singularity").get<std::size_t>();
            for (const auto &q : field(w, "location")) {
                pw.locations.push_back(point_of(p, q));
            }
            pw.delta = field(w, "delta").get<int>();
            pw.weight = field(w, "weight").get<long long>();
            r.singular.push_back(std::move(pw));
        }
        for (const auto &e : field(j, "smooth")) {
            wronski::DivisorEntry d;
            const auto &f = field(e, "factor");
            if (!f.is_null()) {
                d.factor = Polynomial::parse(p, f.get<std::string>());
            }
            d.multiplicity = field(e, "multiplicity").get<long long>();
            d.degree = field(e, "degree").get<int>();
            r.smooth.entries.push_back(std::move(d));
        }
        r.total = field(j, "total").get<long long>();
        r.expected = field(j, "expected").get<long long>();
        return r;
    });
}

ValueSemigroupReport ValueSemigroupReport::of(const valsg2::ValueSemigroup2 &s)
{
    return {s.maximals(),
            s.conductor(),
            s.intersection(),
            s.delta1(),
            s.delta2(),
            s.first_projection(),
            s.second_projection(),
            valsg2::symmetry_check(s).symmetric()};
}

Json to_json(const ValueSemigroupReport &r)
{
    Json maximals = Json::array();
    for (const auto &m : r.maximals) {
        maximals.push_back(point_json(m));
    }
    return Json{{"maximals", std::move(maximals)},
                {"conductor", point_json(r.conductor)},
                {"I", r.intersection},
                {"delta1", r.delta1},
                {"delta2", r.delta2},
                {"S1", to_json(r.s1)},
                {"S2", to_json(r.s2)},
                {"symmetric", r.symmetric}};
}

ValueSemigroupReport semigroup_report_from_json(const Json &j)
{
    return guarded("semigroup report", [&] {
        ValueSemigroupReport r;
        for (const auto &m : field(j, "maximals")) {
            r.maximals.push_back(value_point_of(m));
        }
        r.conductor = value_point_of(field(j, "conductor"));
        r.intersection = field(j, "I").get<int>();
        r.delta1 = field(j, "delta1").get<int>();
        r.delta2 = field(j, "delta2").get<int>();
        r.s1 = semigroup_from_json(field(j, "S1"));
        r.s2 = semigroup_from_json(field(j, "S2"));
        r.symmetric = field(j, "symmetric").get<bool>();
        return r;
    });
}

} // namespace weierforge::io

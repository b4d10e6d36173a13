#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <weierforge/curve/curve.hpp>
#include <weierforge/curve/formulas.hpp>
#include <weierforge/error.hpp>
#include <weierforge/io/examples.hpp>
#include <weierforge/io/json.hpp>
#include <weierforge/padic/padic.hpp>
#include <weierforge/valsg2/adapted.hpp>
#include <weierforge/valsg2/plane_curve.hpp>
#include <weierforge/wronski/wronski.hpp>

using namespace weierforge;
using io::Json;
using numsg::NumericalSemigroup;

namespace
{

constexpr int exit_user_error = 2;
constexpr int exit_internal = 3;

struct Options {
    std::string format = "text";
    std::optional<long long> characteristic;
    std::vector<int> gens;
    std::vector<int> gaps;
    std::vector<int> exponents;
    std::vector<std::string> functions;
    std::string at;
    std::string input;
    std::vector<std::string> singularities;
    std::string branches;
    std::string example;
    bool list = false;
};

bool json_output(const Options &o)
{
    return o.format == "json";
}

exact::Characteristic characteristic(const Options &o, exact::Characteristic fallback = 0)
{
    if (!o.characteristic) {
        return fallback;
    }
    exact::check_characteristic(*o.characteristic);
    return static_cast<exact::Characteristic>(*o.characteristic);
}

NumericalSemigroup semigroup_arg(const Options &o)
{
    ensure(o.gens.empty() != o.gaps.empty(), ErrorCode::invalid_argument, "give exactly one of --gens and --gaps");
    return o.gens.empty() ? NumericalSemigroup::from_gaps(o.gaps) : NumericalSemigroup::from_generators(o.gens);
}

std::string joined(const std::vector<int> &v)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        os << (i ? "," : "") << v[i];
    }
    return os.str();
}

void emit(const Options &o, const Json &j, const std::string &text)
{
    if (json_output(o)) {
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << text;
    }
}

int run_semigroup(const Options &o)
{
    const auto s = semigroup_arg(o);
    emit(o, io::to_json(s), io::semigroup_text(s));
    return 0;
}

int run_padic(const Options &o)
{
    const auto s = semigroup_arg(o);
    ensure(o.characteristic.has_value() && *o.characteristic > 0, ErrorCode::invalid_argument,
           "padic needs a prime --char");
    const auto p = characteristic(o);
    const auto up = static_cast<std::uint64_t>(p);
    Json j{{"semigroup", io::to_json(s)},
           {"characteristic", p},
           {"classicality_product_test", padic::classicality_product_test(s.gaps(), up)},
           {"uses_all_weight", padic::uses_all_weight(s.gaps(), up)}};
    std::ostringstream os;
    os << s.to_string() << " in characteristic " << p << '\n';
    os << "classicality product test " << (j["classicality_product_test"].get<bool>() ? "passes" : "fails") << '\n';
    os << (j["uses_all_weight"].get<bool>() ? "uses all the weight" : "does not use all the weight") << '\n';
    if (s.is_symmetric() && s.genus() > 0) {
        const auto w = curve::monomial_curve_weights(s, p);
        j["orders"] = w.orders.terms();
        j["weight_at_singularity"] = w.at_singularity;
        j["weight_at_infinity"] = w.at_infinity;
        os << "canonical orders " << w.orders.to_string() << '\n';
        os << "on P^1 with the singularity at 0: weight " << w.at_singularity << " there, " << w.at_infinity
           << " at infinity\n";
    }
    emit(o, j, os.str());
    return 0;
}

int run_orders(const Options &o)
{
    const auto p = characteristic(o);
    ensure(o.exponents.empty() != o.functions.empty(), ErrorCode::invalid_argument,
           "give exactly one of --exponents and --functions");
    if (!o.exponents.empty()) {
        ensure(o.at.empty(), ErrorCode::invalid_argument, "--at applies to --functions");
        const auto eps = padic::monomial_order_sequence(o.exponents, p);
        emit(o, Json{{"characteristic", p}, {"exponents", o.exponents}, {"orders", eps.terms()}},
             "orders " + eps.to_string() + "\n");
        return 0;
    }
    std::vector<exact::RationalFunction> f;
    for (const auto &text : o.functions) {
        const auto slash = text.find('/');
        if (slash == std::string::npos) {
            f.emplace_back(exact::Polynomial::parse(p, text));
        } else {
            f.emplace_back(exact::Polynomial::parse(p, text.substr(0, slash)),
                           exact::Polynomial::parse(p, text.substr(slash + 1)));
        }
    }
    const wronski::LinearSystem v(f);
    Json j{{"characteristic", p}, {"orders", v.orders().terms()}};
    std::string text = "orders " + v.orders().to_string() + "\n";
    if (!o.at.empty()) {
        const auto q = exact::Point::parse(p, o.at);
        const auto local = wronski::vq_orders(v, q);
        const auto w = wronski::smooth_weight(v, q);
        j["at"] = q.to_string();
        j["local_orders"] = local;
        j["weight"] = w.weight;
        text += "orders at " + q.to_string() + ": " + joined(local) + "\nweight " + std::to_string(w.weight) + "\n";
    }
    emit(o, j, text);
    return 0;
}

// "<3,4>@0" or "3,4@inf"
curve::Singularity inline_singularity(const std::string &text, exact::Characteristic p)
{
    const auto at = text.rfind('@');
    ensure(at != std::string::npos, ErrorCode::parse_error, "singularity '" + text + "' needs '@location'");
    return curve::Singularity::monomial(NumericalSemigroup::parse(text.substr(0, at)),
                                        exact::Point::parse(p, text.substr(at + 1)));
}

int run_curve(const Options &o)
{
    ensure(o.input.empty() != o.singularities.empty(), ErrorCode::invalid_argument,
           "give a curve file or at least one --sing");
    std::optional<curve::RationalCurve> x;
    if (!o.input.empty()) {
        Json j = io::read_json_file(o.input);
        if (o.characteristic) {
            j["characteristic"] = *o.characteristic;
        }
        x = io::curve_from_json(j);
    } else {
        const auto p = characteristic(o);
        std::vector<curve::Singularity> sings;
        for (const auto &s : o.singularities) {
            sings.push_back(inline_singularity(s, p));
        }
        x.emplace(p, std::move(sings));
    }
    const auto r = curve::weight_report(*x);
    emit(o, io::to_json(r), io::report_text(*x, r));
    return 0;
}

exact::Polynomial branch_coordinate(const std::string &text, exact::Characteristic p)
{
    return exact::Polynomial::parse(p, text);
}

// "x1,y1;x2,y2" (or "x1,y1|x2,y2") with each coordinate a polynomial in t.
curve::LocalRing plane_ring(const std::string &text, exact::Characteristic p)
{
    const auto semi = text.find_first_of(";|");
    ensure(semi != std::string::npos, ErrorCode::parse_error, "--branches takes 'x1,y1;x2,y2'");
    const auto branch = [&](const std::string &b) {
        const auto comma = b.find(',');
        ensure(comma != std::string::npos, ErrorCode::parse_error, "a branch is 'x(t),y(t)'");
        return valsg2::PlaneBranch{branch_coordinate(b.substr(0, comma), p), branch_coordinate(b.substr(comma + 1), p)};
    };
    return valsg2::plane_two_branch_ring(branch(text.substr(0, semi)), branch(text.substr(semi + 1)));
}

int run_two_branch(const Options &o)
{
    ensure(o.input.empty() != o.branches.empty(), ErrorCode::invalid_argument,
           "give a ring file or --branches");
    std::optional<curve::LocalRing> ring;
    if (!o.input.empty()) {
        Json j = io::read_json_file(o.input);
        if (o.characteristic) {
            j["characteristic"] = *o.characteristic;
        }
        ring = io::ring_from_json(j);
    } else {
        ring = plane_ring(o.branches, characteristic(o));
    }
    ensure(ring->branches() == 2, ErrorCode::invalid_argument, "the ring must have two branches");
    const valsg2::ValueSemigroup2 s(*ring);
    const auto sr = io::ValueSemigroupReport::of(s);
    Json j{{"ring", io::to_json(*ring)}, {"semigroup", io::to_json(sr)}};
    std::string text = io::value_semigroup_text(sr);
    if (!o.at.empty()) {
        const auto p = ring->characteristic();
        const auto comma = o.at.find(',');
        ensure(comma != std::string::npos, ErrorCode::parse_error, "--at takes two points 'a,b'");
        const curve::RationalCurve x(p, {curve::Singularity::two_branch(*ring, exact::Point::parse(p, o.at.substr(0, comma)),
                                                                        exact::Point::parse(p, o.at.substr(comma + 1)))});
        const auto w = valsg2::v_systems_weights(x);
        const long long formula = valsg2::two_branch_weight(s, x.genus(), w.first, w.second);
        const auto r = curve::weight_report(x);
        ensure(formula == r.singular[0].weight, ErrorCode::internal,
               "semigroup formula " + std::to_string(formula) + " disagrees with the direct weight "
                   + std::to_string(r.singular[0].weight));
        j["v_systems"] = Json::array({w.first, w.second});
        j["formula_weight"] = formula;
        j["report"] = io::to_json(r);
        text += "v-system weights " + std::to_string(w.first) + ", " + std::to_string(w.second) + "\n";
        text += "formula weight " + std::to_string(formula) + "\n" + io::report_text(x, r);
    }
    emit(o, j, text);
    return 0;
}

int run_reproduce(const Options &o)
{
    if (o.list) {
        Json j = Json::array();
        std::string text;
        for (const auto &e : io::example_catalog()) {
            j.push_back(Json{{"name", e.name}, {"summary", e.summary}});
            text += e.name + "  " + e.summary + "\n";
        }
        emit(o, j, text);
        return 0;
    }
    ensure(!o.example.empty(), ErrorCode::invalid_argument, "name an example, or pass --list");
    std::optional<exact::Characteristic> p;
    if (o.characteristic) {
        p = characteristic(o);
    }
    const auto rep = io::reproduce(o.example, p);
    std::ostringstream os;
    os << rep.name << ": " << rep.summary << '\n';
    for (const auto &run : rep.runs) {
        os << "\n[" << run.label << "]\n" << run.text;
        for (const auto &c : run.checks) {
            os << (c.ok() ? "  ok   " : "  FAIL ") << c.what << ": " << c.actual;
            if (!c.ok()) {
                os << " (expected " << c.expected << ")";
            }
            os << '\n';
        }
    }
    os << (rep.passed() ? "all checks passed\n" : "CHECKS FAILED\n");
    emit(o, rep.to_json(), os.str());
    return rep.passed() ? 0 : exit_internal;
}

void report_error(const Options &o, const std::string &code, const std::string &message)
{
    if (json_output(o)) {
        std::cerr << Json{{"error", {{"code", code}, {"message", message}}}}.dump() << '\n';
    } else {
        std::cerr << "error [" << code << "]: " << message << '\n';
    }
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Weierstrass weights of singular rational curves"};
    app.require_subcommand(1);
    Options o;
    const auto common = [&](CLI::App *sub) {
        sub->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--char", o.characteristic, "characteristic: 0 or a prime");
    };
    const auto semigroup_opts = [&](CLI::App *sub) {
        sub->add_option("--gens", o.gens, "generators")->delimiter(',');
        sub->add_option("--gaps", o.gaps, "gap set")->delimiter(',');
    };

    auto *semigroup = app.add_subcommand("semigroup", "gaps, conductor, weight and symmetry of a numerical semigroup");
    common(semigroup);
    semigroup_opts(semigroup);

    auto *padic = app.add_subcommand("padic", "p-adic criteria for a semigroup's monomial point");
    common(padic);
    semigroup_opts(padic);

    auto *orders = app.add_subcommand("orders", "order sequence of monomials or of rational functions on P^1");
    common(orders);
    orders->add_option("--exponents", o.exponents, "exponents of t -> (t^a_0 : ... : t^a_n)")->delimiter(',');
    orders->add_option("--functions", o.functions, "functions such as 1, t^2, 1/(t^2-1)")->delimiter(',');
    orders->add_option("--at", o.at, "also report local orders and weight at this point");

    auto *curve_cmd = app.add_subcommand("curve", "Weierstrass weights of a rational curve");
    common(curve_cmd);
    curve_cmd->add_option("input", o.input, "curve description (JSON)");
    curve_cmd->add_option("--sing", o.singularities, "monomial singularity such as '<3,4>@0'");

    auto *two_branch = app.add_subcommand("two-branch", "value semigroup of a two-branch singularity");
    common(two_branch);
    two_branch->add_option("input", o.input, "ring description (JSON)");
    two_branch->add_option("--branches", o.branches, "plane branches 'x1,y1;x2,y2' in t");
    two_branch->add_option("--at", o.at, "branch points 'a,b' on P^1 for the weight computation");

    auto *reproduce = app.add_subcommand("reproduce", "recompute a worked example and check its values");
    common(reproduce);
    reproduce->add_option("example", o.example, "example name");
    reproduce->add_flag("--list", o.list, "list the examples");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        return app.exit(e) == 0 ? 0 : exit_user_error;
    }

    try {
        if (*semigroup) {
            return run_semigroup(o);
        }
        if (*padic) {
            return run_padic(o);
        }
        if (*orders) {
            return run_orders(o);
        }
        if (*curve_cmd) {
            return run_curve(o);
        }
        if (*two_branch) {
            return run_two_branch(o);
        }
        return run_reproduce(o);
    } catch (const Error &e) {
        report_error(o, std::string(to_string(e.code())), e.what());
        return is_internal(e.code()) ? exit_internal : exit_user_error;
    } catch (const std::exception &e) {
        report_error(o, "internal", e.what());
        return exit_internal;
    }
}

#include "hypervol_cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hypervol/errors.hpp"
#include "hypervol/mc_oracle.hpp"
#include "hypervol/orthoscheme.hpp"
#include "hypervol/solids.hpp"
#include "hypervol/tetrahedra.hpp"

namespace hypervol::cli {
namespace {

using json = nlohmann::ordered_json;
using quadrature::IntegralResult;
using quadrature::Tolerance;

constexpr double kPi = std::numbers::pi;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// number formatting ----------------------------------------------------------

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + '"';
}

std::string csv_value(const json& v) {
    if (v.is_number_float()) return fmt(v.get<double>());
    if (v.is_string()) return v.get<std::string>();
    if (v.is_object()) {
        std::string s;
        for (const auto& [key, val] : v.items()) {
            if (!s.empty()) s += ';';
            s += key + '=' + csv_value(val);
        }
        return s;
    }
    if (v.is_array()) {
        std::string s;
        for (const auto& item : v) {
            if (!s.empty()) s += ' ';
            s += csv_value(item);
        }
        return s;
    }
    return v.dump();
}

// Serialises a list of flat records: JSON lines, or CSV with the keys of the
// first record as header (nested objects flattened to name=value;...).
std::string render(const std::vector<json>& records, const std::string& format) {
    std::ostringstream os;
    if (format == "csv") {
        if (records.empty()) return {};
        bool first = true;
        for (const auto& [key, _] : records.front().items()) {
            os << (first ? "" : ",") << csv_field(key);
            first = false;
        }
        os << "\r\n";
        for (const json& r : records) {
            first = true;
            for (const auto& [_, val] : r.items()) {
                os << (first ? "" : ",") << csv_field(csv_value(val));
                first = false;
            }
            os << "\r\n";
        }
    } else {
        for (const json& r : records) os << r.dump() << '\n';
    }
    return os.str();
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << text << std::flush;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open " + path + " for writing");
    f << text;
    f.close();
    if (!f) throw IoError("failed writing " + path);
}

// shape parameters -------------------------------------------------------------

double parse_number(const std::string& name, const std::string& text) {
    double v = 0.0;
    const char* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (ec != std::errc() || ptr != end || !std::isfinite(v)) {
        throw UsageError("--" + name + ": not a finite number: '" + text + "'");
    }
    return v;
}

std::vector<double> parse_list(const std::string& name, const std::string& text) {
    std::vector<double> out;
    std::string item;
    std::istringstream is(text);
    while (std::getline(is, item, ',')) out.push_back(parse_number(name, item));
    if (out.empty()) throw UsageError("--" + name + ": empty list");
    return out;
}

using RawParams = std::map<std::string, std::string>;

RawParams parse_extras(const std::vector<std::string>& rest) {
    RawParams raw;
    for (std::size_t i = 0; i < rest.size(); ++i) {
        const std::string& tok = rest[i];
        if (tok.rfind("--", 0) != 0 || tok.size() < 3) {
            throw UsageError("unexpected argument '" + tok + "'");
        }
        std::string name = tok.substr(2), value;
        if (auto eq = name.find('='); eq != std::string::npos) {
            value = name.substr(eq + 1);
            name.resize(eq);
        } else {
            if (i + 1 >= rest.size()) throw UsageError("--" + name + " needs a value");
            value = rest[++i];
        }
        if (!raw.emplace(name, value).second) throw UsageError("--" + name + " given twice");
    }
    return raw;
}

struct Job {
    std::string shape;
    std::map<std::string, double> p;
    std::vector<double> edges;  // ndim-orthoscheme only
    double k = 1.0;
    std::optional<double> reltol;
};

struct Outcome {
    double volume;
    double error;
    std::string method;
};

Outcome closed(double v) { return {v, 0.0, "closed-form"}; }
Outcome quad(const IntegralResult& r, double scale = 1.0) {
    return {scale * r.value, scale * r.error_estimate, "quadrature"};
}

struct ShapeInfo {
    std::vector<std::string> params;
    std::set<std::string> angles;
    double default_reltol;
    std::function<Outcome(const Job&, const Tolerance&)> eval;
};

double get(const Job& j, const char* name) { return j.p.at(name); }

const std::map<std::string, ShapeInfo>& shapes() {
    using namespace orthoscheme;
    using namespace tetrahedra;
    static const std::map<std::string, ShapeInfo> table = {
        {"sphere", {{"x"}, {}, 1e-10, [](const Job& j, const Tolerance&) {
             return closed(solids::sphere_volume(get(j, "x"), models::Curvature(j.k)));
         }}},
        {"barrel", {{"p", "q"}, {}, 1e-10, [](const Job& j, const Tolerance&) {
             return closed(solids::barrel(get(j, "p"), get(j, "q"), models::Curvature(j.k)));
         }}},
        {"barrel-wedge", {{"p", "T"}, {}, 1e-10, [](const Job& j, const Tolerance&) {
             return closed(solids::barrel_wedge(get(j, "p"), get(j, "T")));
         }}},
        {"equidistant", {{"p", "q"}, {}, 1e-10, [](const Job& j, const Tolerance&) {
             return closed(solids::equidistant_body(get(j, "p"), get(j, "q"), models::Curvature(j.k)));
         }}},
        {"sector", {{"p"}, {}, 1e-10, [](const Job& j, const Tolerance&) {
             return closed(solids::paraspherical_sector(get(j, "p"), models::Curvature(j.k)));
         }}},
        {"cone", {{"b", "beta"}, {"beta"}, 1e-10, [](const Job& j, const Tolerance& tol) {
             return quad(solids::circular_cone(get(j, "b"), get(j, "beta"), models::Curvature(j.k), tol));
         }}},
        {"asymptotic-cone", {{"b"}, {}, 1e-10, [](const Job& j, const Tolerance&) {
             return closed(solids::asymptotic_cone(get(j, "b"), models::Curvature(j.k)));
         }}},
        {"orthoscheme-edges", {{"a", "b", "c"}, {}, 1e-10, [](const Job& j, const Tolerance& tol) {
             return quad(volume_edges({get(j, "a"), get(j, "b"), get(j, "c")}, tol, models::Curvature(j.k)));
         }}},
        {"orthoscheme-angles", {{"alpha", "beta", "gamma"}, {"alpha", "beta", "gamma"}, 1e-10,
                                [](const Job& j, const Tolerance&) {
             const auto ang = OrthoschemeAngles::from_dihedrals(get(j, "alpha"), get(j, "beta"), get(j, "gamma"));
             return closed(j.k * j.k * j.k * volume_angles(ang));
         }}},
        {"orthoscheme-one-ideal", {{"b", "c"}, {}, 1e-10, [](const Job& j, const Tolerance& tol) {
             return quad(volume_one_ideal(get(j, "b") / j.k, get(j, "c") / j.k, tol), j.k * j.k * j.k);
         }}},
        {"orthoscheme-two-ideal", {{"b"}, {}, 1e-10, [](const Job& j, const Tolerance& tol) {
             return quad(volume_two_ideal(get(j, "b") / j.k, tol), j.k * j.k * j.k);
         }}},
        {"ideal-tetra-b", {{"b"}, {}, 1e-10, [](const Job& j, const Tolerance& tol) {
             return quad(volume_ideal_tetrahedron_b(get(j, "b") / j.k, tol), j.k * j.k * j.k);
         }}},
        {"bolyai-1", {{"a", "b", "c"}, {}, 1e-10, [](const Job& j, const Tolerance& tol) {
             return quad(bolyai_integral_1({get(j, "a") / j.k, get(j, "b") / j.k, get(j, "c") / j.k}, tol),
                         j.k * j.k * j.k);
         }}},
        {"bolyai-asym-1", {{"alpha", "c"}, {"alpha"}, 1e-10, [](const Job& j, const Tolerance& tol) {
             return quad(bolyai_asymptotic_1(get(j, "alpha"), get(j, "c") / j.k, tol), j.k * j.k * j.k);
         }}},
        {"bolyai-asym-2", {{"alpha_max", "b"}, {"alpha_max"}, 1e-10, [](const Job& j, const Tolerance& tol) {
             return quad(bolyai_asymptotic_2(get(j, "alpha_max"), get(j, "b") / j.k, tol), j.k * j.k * j.k);
         }}},
        {"ndim-orthoscheme", {{"edges"}, {}, 1e-8, [](const Job& j, const Tolerance& tol) {
             std::vector<double> e = j.edges;
             for (double& v : e) v /= j.k;
             return quad(volume_ndim(e, tol), std::pow(j.k, static_cast<double>(e.size())));
         }}},
        {"milnor", {{"A", "B", "C"}, {"A", "B", "C"}, 1e-10, [](const Job& j, const Tolerance&) {
             return closed(j.k * j.k * j.k * milnor_ideal(get(j, "A"), get(j, "B"), get(j, "C")));
         }}},
        {"derevnin-mednykh", {{"A", "B", "C", "D", "E", "F"}, {"A", "B", "C", "D", "E", "F"}, 1e-10,
                              [](const Job& j, const Tolerance& tol) {
             const TetraDihedrals t{get(j, "A"), get(j, "B"), get(j, "C"), get(j, "D"), get(j, "E"), get(j, "F")};
             return quad(derevnin_mednykh(t, tol), j.k * j.k * j.k);
         }}},
        {"murakami-yano", {{"A", "B", "C", "D", "E", "F"}, {"A", "B", "C", "D", "E", "F"}, 1e-10,
                           [](const Job& j, const Tolerance&) {
             const TetraDihedrals t{get(j, "A"), get(j, "B"), get(j, "C"), get(j, "D"), get(j, "E"), get(j, "F")};
             return closed(j.k * j.k * j.k * murakami_yano(t));
         }}},
        {"lambert-cube", {{"w0", "w1", "w2", "theta"}, {"w0", "w1", "w2", "theta"}, 1e-10,
                          [](const Job& j, const Tolerance&) {
             const LambertCubeAngles w{get(j, "w0"), get(j, "w1"), get(j, "w2"), get(j, "theta")};
             return closed(j.k * j.k * j.k * lambert_cube(w));
         }}},
        {"mohanty", {{"A", "B", "E"}, {"A", "B", "E"}, 1e-10, [](const Job& j, const Tolerance&) {
             return closed(j.k * j.k * j.k * mohanty_octahedron({get(j, "A"), get(j, "B"), get(j, "E")}));
         }}},
        {"triangle-2d", {{"a", "b"}, {}, 1e-10, [](const Job& j, const Tolerance& tol) {
             return quad(area_right_triangle(get(j, "a") / j.k, get(j, "b") / j.k, tol), j.k * j.k);
         }}},
    };
    return table;
}

const ShapeInfo& shape_info(const std::string& shape) {
    const auto it = shapes().find(shape);
    if (it == shapes().end()) throw UsageError("unknown shape '" + shape + "'");
    return it->second;
}

Job make_job(const std::string& shape, const RawParams& raw, double k, std::optional<double> reltol,
             bool degrees) {
    const ShapeInfo& info = shape_info(shape);
    Job job;
    job.shape = shape;
    job.k = k;
    job.reltol = reltol;
    if (!(k > 0.0) || !std::isfinite(k)) throw UsageError("--k must be finite and > 0");
    for (const auto& [name, _] : raw) {
        if (std::find(info.params.begin(), info.params.end(), name) == info.params.end()) {
            throw UsageError("shape '" + shape + "' takes no parameter --" + name);
        }
    }
    for (const std::string& name : info.params) {
        const auto it = raw.find(name);
        if (it == raw.end()) throw UsageError("shape '" + shape + "' needs --" + name);
        if (name == "edges") {
            job.edges = parse_list(name, it->second);
            continue;
        }
        double v = parse_number(name, it->second);
        if (degrees && info.angles.count(name)) v *= kPi / 180.0;
        job.p[name] = v;
    }
    return job;
}

json params_json(const Job& job) {
    json p = json::object();
    for (const std::string& name : shape_info(job.shape).params) {
        if (name == "edges") {
            p[name] = job.edges;
        } else {
            p[name] = job.p.at(name);
        }
    }
    return p;
}

Tolerance job_tolerance(const Job& job) {
    Tolerance tol;
    tol.rel = job.reltol.value_or(shape_info(job.shape).default_reltol);
    tol.validate();
    return tol;
}

json vol_record(const Job& job) {
    const Outcome o = shape_info(job.shape).eval(job, job_tolerance(job));
    json r;
    r["shape"] = job.shape;
    r["params"] = params_json(job);
    r["k"] = job.k;
    r["volume"] = o.volume;
    r["method"] = o.method;
    r["error_estimate"] = o.error;
    return r;
}

// Monte-Carlo ---------------------------------------------------------------

struct McJob {
    Job job;
    std::size_t samples = 1'000'000;
    std::uint64_t seed = 42;
    std::size_t shards = mc::kDefaultShards;
};

// Klein half-width w of the square whose hyperbolic area is p.
double slab_half_width(double p, models::Curvature k) {
    const double kk = k.value();
    double lo = 0.0, hi = kk / std::numbers::sqrt2 * (1.0 - 1e-9);
    if (!(p > 0.0) || !(p < mc::slab_base_area(hi, k))) {
        throw UsageError("mc equidistant: p must lie in (0, " + fmt(mc::slab_base_area(hi, k)) + ")");
    }
    while (hi - lo > 1e-14 * kk) {
        const double mid = 0.5 * (lo + hi);
        (mc::slab_base_area(mid, k) < p ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

json mc_record(const McJob& m) {
    const Job& job = m.job;
    const models::Curvature k(job.k);
    const Tolerance tol = job_tolerance(job);
    mc::Region region;
    std::string region_name;
    double analytic = 0.0;

    if (job.shape == "sphere") {
        region = mc::region_ball(get(job, "x"), k);
        region_name = "ball";
        analytic = solids::sphere_volume(get(job, "x"), k);
    } else if (job.shape == "barrel") {
        region = mc::region_barrel(get(job, "p"), get(job, "q"), k);
        region_name = "barrel";
        analytic = solids::barrel(get(job, "p"), get(job, "q"), k);
    } else if (job.shape == "cone") {
        region = mc::region_cone(get(job, "b"), get(job, "beta"), k);
        region_name = "cone";
        analytic = solids::circular_cone(get(job, "b"), get(job, "beta"), k, tol).value;
    } else if (job.shape == "equidistant") {
        const double w = slab_half_width(get(job, "p"), k);
        region = mc::region_slab(w, get(job, "q"), k);
        region_name = "slab";
        analytic = solids::equidistant_body(get(job, "p"), get(job, "q"), k);
    } else if (job.shape == "orthoscheme-edges") {
        const auto v = mc::orthoscheme_vertices(get(job, "a"), get(job, "b"), get(job, "c"), k);
        region = mc::region_simplex({v.begin(), v.end()}, k);
        region_name = "simplex";
        analytic = orthoscheme::volume_edges({get(job, "a"), get(job, "b"), get(job, "c")}, tol, k).value;
    } else if (job.shape == "orthoscheme-two-ideal") {
        region = mc::region_doubled_two_ideal(get(job, "b"), 1.0 - 1e-6, k);
        region_name = "doubled-two-ideal";
        analytic = 2.0 * job.k * job.k * job.k *
                   orthoscheme::volume_two_ideal(get(job, "b") / job.k, tol).value;
    } else {
        throw UsageError("no Monte-Carlo region for shape '" + job.shape + "'");
    }

    const mc::MCEstimate e = mc::estimate(region, m.samples, m.seed, k, m.shards);
    const double z = e.std_error > 0.0 ? (e.mean - analytic) / e.std_error
                                       : (e.mean == analytic ? 0.0 : HUGE_VAL);
    json r;
    r["shape"] = job.shape;
    r["params"] = params_json(job);
    r["k"] = job.k;
    r["region"] = region_name;
    r["analytic"] = analytic;
    r["mc_mean"] = e.mean;
    r["std_error"] = e.std_error;
    r["z"] = z;
    r["samples"] = e.samples;
    r["seed"] = e.seed;
    r["shards"] = m.shards;
    r["pass"] = std::abs(z) <= 4.0;
    return r;
}

// conversions ---------------------------------------------------------------

json convert_record(const std::string& direction, const RawParams& raw, bool degrees) {
    using namespace orthoscheme;
    auto need = [&raw](const char* name) {
        const auto it = raw.find(name);
        if (it == raw.end()) throw UsageError(std::string("convert needs --") + name);
        return parse_number(name, it->second);
    };
    auto only = [&raw](std::initializer_list<const char*> allowed) {
        for (const auto& [name, _] : raw) {
            if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return name == a; })) {
                throw UsageError("convert takes no parameter --" + name);
            }
        }
    };
    OrthoschemeEdges e;
    OrthoschemeAngles ang;
    if (direction == "edges-to-angles") {
        only({"a", "b", "c"});
        e = {need("a"), need("b"), need("c")};
        ang = edges_to_angles(e);
    } else if (direction == "angles-to-edges") {
        only({"alpha", "beta", "gamma"});
        const double s = degrees ? kPi / 180.0 : 1.0;
        ang = OrthoschemeAngles::from_dihedrals(s * need("alpha"), s * need("beta"), s * need("gamma"));
        e = angles_to_edges(ang);
    } else {
        throw UsageError("convert direction must be edges-to-angles or angles-to-edges");
    }
    json r;
    r["direction"] = direction;
    r["a"] = e.a;
    r["b"] = e.b;
    r["c"] = e.c;
    r["z"] = e.z();
    r["alpha"] = ang.alpha;
    r["beta"] = ang.beta;
    r["gamma"] = ang.gamma;
    r["delta"] = ang.delta;
    return r;
}

// cross-checks --------------------------------------------------------------

struct CaseResult {
    std::string suite;
    std::string name;
    json inputs;
    json values;  // method -> value
    double threshold = 0.0;
    std::string error;
};

using Case = std::function<CaseResult()>;

json finish_case(const CaseResult& c) {
    double lo = HUGE_VAL, hi = -HUGE_VAL;
    for (const auto& [_, v] : c.values.items()) {
        lo = std::min(lo, v.get<double>());
        hi = std::max(hi, v.get<double>());
    }
    const double spread = c.values.empty() ? 0.0 : hi - lo;
    json r;
    r["suite"] = c.suite;
    r["case"] = c.name;
    r["inputs"] = c.inputs;
    r["values"] = c.values;
    r["max_delta"] = spread;
    r["threshold"] = c.threshold;
    r["pass"] = c.error.empty() && spread <= c.threshold;
    r["error"] = c.error;
    return r;
}

void orthoscheme_cases(std::vector<Case>& cases, bool fine) {
    using namespace orthoscheme;
    const auto triples = sample_valid_angles(fine ? 100 : 24, 20240601);
    for (std::size_t i = 0; i < triples.size(); ++i) {
        const OrthoschemeAngles ang = triples[i];
        cases.push_back([ang, i] {
            CaseResult c{"orthoscheme", "angles-" + std::to_string(i), {}, json::object(), 0.0, {}};
            c.inputs = {{"alpha", ang.alpha}, {"beta", ang.beta}, {"gamma", ang.gamma}};
            const double va = volume_angles(ang);
            c.values["angles"] = va;
            c.values["edges"] = volume_edges(angles_to_edges(ang)).value;
            c.threshold = 1e-6 * std::max(1.0, va);
            return c;
        });
    }
    const std::vector<double> grid = fine ? std::vector<double>{0.5, 0.75, 1.0, 1.25, 1.5}
                                          : std::vector<double>{0.5, 1.0, 1.5};
    for (double a : grid) {
        for (double b : grid) {
            for (double cc : grid) {
                cases.push_back([a, b, cc] {
                    const OrthoschemeEdges e{a, b, cc};
                    CaseResult c{"orthoscheme", "bolyai-" + fmt(a) + "-" + fmt(b) + "-" + fmt(cc),
                                 {{"a", a}, {"b", b}, {"c", cc}}, json::object(), 1e-6, {}};
                    c.values["edges"] = volume_edges(e).value;
                    c.values["bolyai-1"] = bolyai_integral_1(e).value;
                    c.values["angles"] = volume_angles(edges_to_angles(e));
                    return c;
                });
            }
        }
    }
}

void tetrahedra_cases(std::vector<Case>& cases, bool fine) {
    using namespace tetrahedra;
    const auto sample = sample_perturbed_ideal(fine ? 40 : 12, 20240602);
    for (std::size_t i = 0; i < sample.size(); ++i) {
        const TetraDihedrals t = sample[i];
        cases.push_back([t, i] {
            CaseResult c{"tetrahedra", "compact-" + std::to_string(i), {}, json::object(), 1e-6, {}};
            c.inputs = {{"A", t.A}, {"B", t.B}, {"C", t.C}, {"D", t.D}, {"E", t.E}, {"F", t.F}};
            c.values["derevnin-mednykh"] = derevnin_mednykh(t).value;
            c.values["murakami-yano"] = murakami_yano(t);
            return c;
        });
    }
    const std::vector<std::array<double, 2>> ideal = {
        {kPi / 3, kPi / 3}, {0.9, 1.1}, {0.5, 1.0}, {1.2, 1.2}, {0.7, 1.6}};
    for (const auto& [A, B] : ideal) {
        cases.push_back([A, B] {
            const double C = kPi - A - B;
            const TetraDihedrals t{A, B, C, A, B, C};
            CaseResult c{"tetrahedra", "ideal-" + fmt(A) + "-" + fmt(B),
                         {{"A", A}, {"B", B}, {"C", C}}, json::object(), 1e-5, {}};
            c.values["derevnin-mednykh"] = derevnin_mednykh(t).value;
            c.values["murakami-yano"] = murakami_yano(t);
            c.values["milnor"] = milnor_ideal(A, B, C);
            return c;
        });
    }
}

void solids_cases(std::vector<Case>& cases, bool fine) {
    const std::vector<double> grid = fine ? std::vector<double>{0.1, 0.25, 0.5, 0.75, 1.0, 1.25, 1.5, 2.0, 3.0}
                                          : std::vector<double>{0.25, 0.5, 1.0, 1.5, 2.0};
    for (double v : grid) {
        cases.push_back([v] {
            CaseResult c{"solids", "sphere-" + fmt(v), {{"x", v}}, json::object(), 1e-8, {}};
            c.values["closed-form"] = solids::sphere_volume(v);
            c.values["quadrature"] = solids::sphere_volume_quadrature(v).value;
            return c;
        });
        cases.push_back([v] {
            CaseResult c{"solids", "equidistant-" + fmt(v), {{"p", 1.0}, {"q", v}}, json::object(), 1e-8, {}};
            c.values["closed-form"] = solids::equidistant_body(1.0, v);
            c.values["quadrature"] = solids::equidistant_body_quadrature(1.0, v).value;
            return c;
        });
        cases.push_back([v] {
            CaseResult c{"solids", "barrel-" + fmt(v), {{"p", 1.0}, {"q", v}}, json::object(), 1e-8, {}};
            c.values["closed-form"] = solids::barrel(1.0, v);
            c.values["quadrature"] = solids::barrel_quadrature(1.0, v).value;
            return c;
        });
    }
}

std::vector<json> run_cases(const std::vector<Case>& cases) {
    std::vector<json> rows(cases.size());
    const auto n = static_cast<long long>(cases.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (long long i = 0; i < n; ++i) {
        const auto idx = static_cast<std::size_t>(i);
        CaseResult c;
        try {
            c = cases[idx]();
        } catch (const std::exception& ex) {
            c.suite = "?";
            c.name = "case-" + std::to_string(idx);
            c.inputs = json::object();
            c.values = json::object();
            c.error = ex.what();
        }
        rows[idx] = finish_case(c);
    }
    return rows;
}

// command plumbing --------------------------------------------------------------

struct Common {
    double k = 1.0;
    std::optional<double> reltol;
    std::string format = "json";
    std::string out;
    bool degrees = false;
};

void add_common(CLI::App* sub, Common& c, double& reltol_value) {
    sub->add_option("--k", c.k, "curvature parameter k > 0");
    sub->add_option("--reltol", reltol_value, "relative quadrature tolerance");
    sub->add_option("--format", c.format, "json (one object per line) or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out", c.out, "write records to this file");
    sub->add_flag("--degrees", c.degrees, "angle parameters are in degrees");
}

std::vector<json> run_batch(const std::string& path, bool degrees_default) {
    std::ifstream f(path);
    if (!f) throw IoError("cannot read " + path);
    json jobs;
    try {
        jobs = json::parse(f);
    } catch (const json::parse_error& e) {
        throw UsageError(path + ": " + e.what());
    }
    if (!jobs.is_array()) throw UsageError(path + ": expected a JSON array of jobs");

    // validate everything first so that a bad job produces no output at all
    std::vector<McJob> parsed;
    std::vector<bool> is_mc;
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        const json& spec = jobs[i];
        if (!spec.is_object() || !spec.contains("shape") || !spec["shape"].is_string()) {
            throw UsageError("job " + std::to_string(i) + ": needs a string field 'shape'");
        }
        McJob m;
        RawParams raw;
        double k = 1.0;
        std::optional<double> reltol;
        bool degrees = degrees_default;
        bool mc_job = false;
        auto number = [&](const std::string& key, const json& v) {
            if (!v.is_number()) throw UsageError("job " + std::to_string(i) + ": '" + key + "' must be a number");
            return v.get<double>();
        };
        auto count = [&](const std::string& key, const json& v) {
            if (!v.is_number_unsigned()) {
                throw UsageError("job " + std::to_string(i) + ": '" + key + "' must be a non-negative integer");
            }
            return v.get<std::uint64_t>();
        };
        for (const auto& [key, v] : spec.items()) {
            if (key == "shape") continue;
            if (key == "k") {
                k = number(key, v);
            } else if (key == "reltol") {
                reltol = number(key, v);
            } else if (key == "degrees") {
                if (!v.is_boolean()) throw UsageError("job " + std::to_string(i) + ": 'degrees' must be boolean");
                degrees = v.get<bool>();
            } else if (key == "samples") {
                m.samples = count(key, v);
                mc_job = true;
            } else if (key == "seed") {
                m.seed = count(key, v);
            } else if (key == "shards") {
                m.shards = count(key, v);
            } else if (v.is_array()) {
                std::string list;
                for (const json& x : v) list += (list.empty() ? "" : ",") + fmt(number(key, x));
                raw[key] = list;
            } else if (v.is_number()) {
                raw[key] = fmt(v.get<double>());
            } else if (v.is_string()) {
                raw[key] = v.get<std::string>();
            } else {
                throw UsageError("job " + std::to_string(i) + ": bad value for '" + key + "'");
            }
        }
        m.job = make_job(spec["shape"].get<std::string>(), raw, k, reltol, degrees);
        job_tolerance(m.job);
        parsed.push_back(m);
        is_mc.push_back(mc_job);
    }

    std::vector<json> records;
    for (std::size_t i = 0; i < parsed.size(); ++i) {
        records.push_back(is_mc[i] ? mc_record(parsed[i]) : vol_record(parsed[i].job));
    }
    return records;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Volumes of hyperbolic solids", "hypervol"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "hypervol 1.0");

    Common common;
    double reltol_value = 0.0;

    std::string shape, direction, suite, grid = "coarse", batch_path;
    std::size_t samples = 1'000'000;
    std::uint64_t seed = 42;
    std::size_t shards = mc::kDefaultShards;

    auto* vol = app.add_subcommand("vol", "evaluate one volume; shape parameters as --name value");
    vol->add_option("shape", shape, "shape name")->required();
    vol->allow_extras();

    auto* convert = app.add_subcommand("convert", "orthoscheme edges <-> dihedral angles");
    convert->add_option("direction", direction, "edges-to-angles | angles-to-edges")->required();
    convert->allow_extras();

    auto* cross = app.add_subcommand("crosscheck", "cross-validation tables");
    cross->add_option("suite", suite, "orthoscheme | tetrahedra | solids | all")
        ->required()
        ->check(CLI::IsMember({"orthoscheme", "tetrahedra", "solids", "all"}));
    cross->add_option("--grid", grid, "coarse | fine")->check(CLI::IsMember({"coarse", "fine"}));

    auto* mcc = app.add_subcommand("mc", "Monte-Carlo check of a closed form or quadrature");
    mcc->add_option("shape", shape, "shape name")->required();
    mcc->add_option("--samples", samples, "sample count (>= 10000)");
    mcc->add_option("--seed", seed, "64-bit seed");
    mcc->add_option("--shards", shards, "number of independent random streams");
    mcc->allow_extras();

    auto* batch = app.add_subcommand("batch", "run a JSON array of jobs");
    batch->add_option("jobs", batch_path, "jobs.json")->required();

    // each subcommand gets its own copies of the common flags
    for (CLI::App* sub : {vol, convert, cross, mcc, batch}) add_common(sub, common, reltol_value);
    auto reltol_given = [&](CLI::App* sub) { return sub->get_option("--reltol")->count() > 0; };

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kInvalid;
    }

    try {
        int code = kOk;
        std::vector<json> records;
        for (CLI::App* sub : {vol, convert, cross, mcc, batch}) {
            if (sub->parsed() && reltol_given(sub)) common.reltol = reltol_value;
        }

        if (vol->parsed()) {
            const Job job = make_job(shape, parse_extras(vol->remaining()), common.k, common.reltol,
                                     common.degrees);
            records.push_back(vol_record(job));
        } else if (convert->parsed()) {
            records.push_back(convert_record(direction, parse_extras(convert->remaining()), common.degrees));
        } else if (mcc->parsed()) {
            McJob m{make_job(shape, parse_extras(mcc->remaining()), common.k, common.reltol, common.degrees),
                    samples, seed, shards};
            records.push_back(mc_record(m));
            if (!records.back()["pass"].get<bool>()) code = kCheckFailed;
        } else if (cross->parsed()) {
            std::vector<Case> cases;
            const bool fine = grid == "fine";
            if (suite == "orthoscheme" || suite == "all") orthoscheme_cases(cases, fine);
            if (suite == "tetrahedra" || suite == "all") tetrahedra_cases(cases, fine);
            if (suite == "solids" || suite == "all") solids_cases(cases, fine);
            records = run_cases(cases);
            for (const json& r : records) {
                if (!r["pass"].get<bool>()) code = kCheckFailed;
            }
        } else if (batch->parsed()) {
            records = run_batch(batch_path, common.degrees);
            for (const json& r : records) {
                if (r.contains("pass") && !r["pass"].get<bool>()) code = kCheckFailed;
            }
        }
        emit(render(records, common.format), common.out, out);
        return code;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kInvalid;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kInvalid;
    } catch (const UnsupportedError& e) {
        err << "error: " << e.what() << '\n';
        return kInvalid;
    } catch (const NotRealizableError& e) {
        err << "not realizable: " << e.what() << '\n';
        return kNotRealizable;
    } catch (const ConvergenceError& e) {
        err << "no convergence: " << e.what() << '\n';
        return kNoConvergence;
    } catch (const IoError& e) {
        err << "i/o error: " << e.what() << '\n';
        return kIoError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kInvalid;
    }
}

}  // namespace hypervol::cli

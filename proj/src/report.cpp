#include "lrc/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace lrc {

using nlohmann::json;

namespace {

template <typename T>
json optional_json(const std::optional<T>& v) {
    return v ? json(*v) : json(nullptr);
}

template <typename T>
std::optional<T> optional_from(const json& j, const char* key) {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    return j.at(key).get<T>();
}

std::string join(const std::vector<int>& v) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << "}";
    return os.str();
}

}  // namespace

FieldInfo field_info(const CyclicLRC& code) {
    const auto& f = *code.field();
    return {f.characteristic(), f.degree(), f.order(), f.modulus(), f.primitive().value, code.alpha().value};
}

std::vector<AnnotatedRow> annotate(const ConstructionParams& params) {
    std::vector<AnnotatedRow> rows;
    for (std::size_t i = 0; i < params.t(); ++i)
        rows.push_back({"D_" + std::to_string(i + 1), local_defining_set(params, i).exponents()});
    rows.push_back({"D_g", DefiningSet(params.length(), params.global).exponents()});
    return rows;
}

CodeReport make_report(const ConstructionParams& params, const ReportOptions& options) {
    params.validate();
    const auto code = build_code(params);
    CodeReport r;
    r.params = params;
    r.field = field_info(code);
    r.n = code.length();
    r.k = code.dimension();
    r.defining_set = code.defining_set().exponents();
    r.rows = annotate(params);
    r.overlap = local_union(params).intersect(DefiningSet(r.n, params.global)).exponents();
    for (auto c : code.generator_poly().coeffs()) r.generator.push_back(c.value);
    r.bounds = compute_bounds(params, code);
    r.availability = verify_availability(code, params, options.local_method);
    r.distance = options.exact_distance ? min_distance_exact(code, options.budget)
                                        : min_distance_bracket(code, options.trials, options.seed);
    return r;
}

std::string render_defining_set(int n, const std::vector<AnnotatedRow>& rows, const std::vector<int>& full) {
    std::size_t label = 7;  // "alpha^i"
    for (const auto& r : rows) label = std::max(label, r.source.size());
    const int width = static_cast<int>(std::to_string(std::max(0, n - 1)).size());

    std::ostringstream os;
    auto line = [&](const std::string& name, const std::vector<int>& marks, bool numbers) {
        os << std::left << std::setw(static_cast<int>(label)) << name << " |";
        for (int e = 0; e < n; ++e) {
            os << ' ' << std::right << std::setw(width);
            if (numbers)
                os << e;
            else
                os << (std::binary_search(marks.begin(), marks.end(), e) ? "x" : "");
        }
        os << '\n';
    };
    line("alpha^i", {}, true);
    os << std::string(label + 2 + static_cast<std::size_t>(n * (width + 1)), '-') << '\n';
    for (const auto& r : rows) line(r.source, r.exponents, false);
    os << std::string(label + 2 + static_cast<std::size_t>(n * (width + 1)), '-') << '\n';
    line("D", full, false);
    return os.str();
}

std::string render_text(const CodeReport& r) {
    std::ostringstream os;
    os << "Cyclic LRC [" << r.n << ", " << r.k << "] over GF(" << r.field.order << ")";
    if (r.field.m > 1) {
        std::vector<int> mod(r.field.modulus.begin(), r.field.modulus.end());
        os << ", modulus coefficients " << join(mod);
    }
    os << ", alpha = element " << r.field.alpha << '\n';
    os << "n_i = " << join(r.params.lengths) << ", rho_i = " << join(r.params.rhos)
       << ", r_i = " << join(r.availability.localities) << ", l = " << r.params.shift << "\n\n";
    os << render_defining_set(r.n, r.rows, r.defining_set) << '\n';
    os << "|D| = " << r.defining_set.size() << ", k = n - |D| = " << r.k << '\n';
    if (!r.overlap.empty()) os << "warning: global exponents " << join(r.overlap) << " already lie in a local set\n";

    const auto& b = r.bounds;
    os << "\nBounds\n";
    os << "  BCH:            d >= " << b.bch.bound << "  (u=" << b.bch.witness.u << ", z=" << b.bch.witness.z1 << ")\n";
    os << "  Hartmann-Tzeng: d >= " << b.ht.bound << "  (u=" << b.ht.witness.u << ", z1=" << b.ht.witness.z1
       << ", z2=" << b.ht.witness.z2 << ", delta=" << b.ht.witness.delta << ", gamma=" << b.ht.witness.gamma << ")\n";
    os << "  product:        d >= " << b.product << '\n';
    if (b.singleton_like_min) {
        os << "  Singleton-like: d <= " << *b.singleton_like_min << "  (per locality " << join(b.singleton_like)
           << ")\n";
    }
    if (b.thm4) {
        os << "  dimension:      k <= " << *b.thm4 << "  at d = " << b.design_distance << " (xi=" << b.thm4_xi->xi
           << ", v=" << b.thm4_xi->v << ")\n";
    }
    if (b.rect) {
        os << "  rectangle:      k <= " << b.rect->bound << "  (sides " << join(b.rect->sides) << ")\n";
    }

    const auto& a = r.availability;
    os << "\nAvailability: " << (a.passed() ? "pass" : "FAIL")
       << (a.strongly_orthogonal ? " (strongly orthogonal)" : " (NOT strongly orthogonal)") << '\n';
    for (const auto& g : a.groups) {
        os << "  A_{" << g.partition + 1 << "," << g.index << "} " << join(g.positions) << "  d_local "
           << (g.local.exact ? "= " : ">= ") << g.local.distance << " (" << to_string(g.local.method) << "), need "
           << g.rho << (g.pass ? "  ok" : "  FAIL") << '\n';
    }

    const auto& d = r.distance;
    os << "\nDistance: ";
    if (d.exact)
        os << "d = " << d.lower;
    else
        os << d.lower << " <= d <= " << d.upper;
    os << " (" << to_string(d.method) << ", " << d.evaluations << " weights)\n";
    return os.str();
}

LocalMethod parse_local_method(const std::string& s) {
    if (s == "auto") return LocalMethod::Auto;
    if (s == "enumerate") return LocalMethod::Enumerate;
    if (s == "parity-rank") return LocalMethod::ParityRank;
    throw std::invalid_argument("unknown local distance method '" + s + "'");
}

DistanceMethod parse_distance_method(const std::string& s) {
    if (s == "exhaustive") return DistanceMethod::Exhaustive;
    if (s == "sampled") return DistanceMethod::Sampled;
    throw std::invalid_argument("unknown distance method '" + s + "'");
}

void to_json(json& j, const ConstructionParams& p) {
    j = json{{"n", p.lengths},   {"rho", p.rhos},       {"b", p.offsets},
             {"l", p.shift},     {"dg", p.global},      {"q", optional_json(p.field_order)}};
}

void from_json(const json& j, ConstructionParams& p) {
    j.at("n").get_to(p.lengths);
    j.at("rho").get_to(p.rhos);
    j.at("b").get_to(p.offsets);
    j.at("l").get_to(p.shift);
    j.at("dg").get_to(p.global);
    p.field_order = optional_from<std::uint32_t>(j, "q");
}

void to_json(json& j, const HTWitness& w) {
    j = json{{"n", w.n}, {"u", w.u}, {"z1", w.z1}, {"z2", w.z2}, {"delta", w.delta}, {"gamma", w.gamma}};
}

void from_json(const json& j, HTWitness& w) {
    j.at("n").get_to(w.n);
    j.at("u").get_to(w.u);
    j.at("z1").get_to(w.z1);
    j.at("z2").get_to(w.z2);
    j.at("delta").get_to(w.delta);
    j.at("gamma").get_to(w.gamma);
}

void to_json(json& j, const DistanceBound& b) { j = json{{"bound", b.bound}, {"witness", b.witness}}; }

void from_json(const json& j, DistanceBound& b) {
    j.at("bound").get_to(b.bound);
    j.at("witness").get_to(b.witness);
}

void to_json(json& j, const BoundReport& b) {
    j = json{{"bch", b.bch},
             {"ht", b.ht},
             {"product", b.product},
             {"singleton_like", b.singleton_like},
             {"singleton_like_min", optional_json(b.singleton_like_min)},
             {"design_distance", b.design_distance}};
    j["thm4"] = optional_json(b.thm4);
    j["thm4_xi"] = b.thm4_xi ? json{{"xi", b.thm4_xi->xi}, {"v", b.thm4_xi->v}} : json(nullptr);
    j["rect"] = b.rect ? json{{"bound", b.rect->bound}, {"sides", b.rect->sides}} : json(nullptr);
}

void from_json(const json& j, BoundReport& b) {
    j.at("bch").get_to(b.bch);
    j.at("ht").get_to(b.ht);
    j.at("product").get_to(b.product);
    j.at("singleton_like").get_to(b.singleton_like);
    b.singleton_like_min = optional_from<int>(j, "singleton_like_min");
    j.at("design_distance").get_to(b.design_distance);
    b.thm4 = optional_from<int>(j, "thm4");
    if (j.contains("thm4_xi") && !j.at("thm4_xi").is_null())
        b.thm4_xi = XiValue{j.at("thm4_xi").at("xi").get<int>(), j.at("thm4_xi").at("v").get<int>()};
    else
        b.thm4_xi.reset();
    if (j.contains("rect") && !j.at("rect").is_null())
        b.rect = RectBound{j.at("rect").at("bound").get<int>(), j.at("rect").at("sides").get<std::vector<int>>()};
    else
        b.rect.reset();
}

void to_json(json& j, const LocalDistance& d) {
    j = json{{"distance", d.distance},
             {"exact", d.exact},
             {"method", to_string(d.method)},
             {"restricted_dimension", d.restricted_dimension}};
}

void from_json(const json& j, LocalDistance& d) {
    j.at("distance").get_to(d.distance);
    j.at("exact").get_to(d.exact);
    d.method = parse_local_method(j.at("method").get<std::string>());
    j.at("restricted_dimension").get_to(d.restricted_dimension);
}

void to_json(json& j, const GroupCheck& g) {
    j = json{{"partition", g.partition}, {"index", g.index}, {"positions", g.positions},
             {"rho", g.rho},             {"local", g.local}, {"pass", g.pass}};
}

void from_json(const json& j, GroupCheck& g) {
    j.at("partition").get_to(g.partition);
    j.at("index").get_to(g.index);
    j.at("positions").get_to(g.positions);
    j.at("rho").get_to(g.rho);
    j.at("local").get_to(g.local);
    j.at("pass").get_to(g.pass);
}

void to_json(json& j, const AvailabilityReport& a) {
    j = json{{"groups", a.groups},
             {"localities", a.localities},
             {"strongly_orthogonal", a.strongly_orthogonal},
             {"passed", a.passed()}};
}

void from_json(const json& j, AvailabilityReport& a) {
    j.at("groups").get_to(a.groups);
    j.at("localities").get_to(a.localities);
    j.at("strongly_orthogonal").get_to(a.strongly_orthogonal);
}

void to_json(json& j, const DistanceResult& d) {
    j = json{{"lower", d.lower},
             {"upper", d.upper},
             {"exact", d.exact},
             {"method", to_string(d.method)},
             {"evaluations", d.evaluations}};
}

void from_json(const json& j, DistanceResult& d) {
    j.at("lower").get_to(d.lower);
    j.at("upper").get_to(d.upper);
    j.at("exact").get_to(d.exact);
    d.method = parse_distance_method(j.at("method").get<std::string>());
    j.at("evaluations").get_to(d.evaluations);
}

void to_json(json& j, const FieldInfo& f) {
    j = json{{"p", f.p},
             {"m", f.m},
             {"order", f.order},
             {"modulus", f.modulus},
             {"primitive", f.primitive},
             {"alpha", f.alpha}};
}

void from_json(const json& j, FieldInfo& f) {
    j.at("p").get_to(f.p);
    j.at("m").get_to(f.m);
    j.at("order").get_to(f.order);
    j.at("modulus").get_to(f.modulus);
    j.at("primitive").get_to(f.primitive);
    j.at("alpha").get_to(f.alpha);
}

void to_json(json& j, const AnnotatedRow& r) { j = json{{"source", r.source}, {"exponents", r.exponents}}; }

void from_json(const json& j, AnnotatedRow& r) {
    j.at("source").get_to(r.source);
    j.at("exponents").get_to(r.exponents);
}

void to_json(json& j, const CodeReport& r) {
    j = json{{"schema", r.schema},
             {"params", r.params},
             {"field", r.field},
             {"n", r.n},
             {"k", r.k},
             {"defining_set", r.defining_set},
             {"rows", r.rows},
             {"overlap", r.overlap},
             {"generator", r.generator},
             {"bounds", r.bounds},
             {"availability", r.availability},
             {"distance", r.distance}};
}

void from_json(const json& j, CodeReport& r) {
    j.at("schema").get_to(r.schema);
    if (r.schema != kReportSchema) throw std::invalid_argument("unsupported report schema " + std::to_string(r.schema));
    j.at("params").get_to(r.params);
    j.at("field").get_to(r.field);
    j.at("n").get_to(r.n);
    j.at("k").get_to(r.k);
    j.at("defining_set").get_to(r.defining_set);
    j.at("rows").get_to(r.rows);
    j.at("overlap").get_to(r.overlap);
    j.at("generator").get_to(r.generator);
    j.at("bounds").get_to(r.bounds);
    j.at("availability").get_to(r.availability);
    j.at("distance").get_to(r.distance);
}

}  // namespace lrc

#include "plint/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace plint::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

Int int_from_json(const json& j) {
    if (j.is_number_integer()) return Int(j.get<long>());
    if (j.is_string()) {
        Int v;
        if (v.set_str(j.get<std::string>(), 10) != 0) bad("not an integer: " + j.dump());
        return v;
    }
    bad("not an integer: " + j.dump());
}

long long_from_json(const json& j) {
    if (!j.is_number_integer()) bad("expected an integer, got " + j.dump());
    return j.get<long>();
}

std::vector<Rat> rats_from_json(const json& j) {
    if (!j.is_array()) bad("expected an array of rationals, got " + j.dump());
    std::vector<Rat> out;
    for (const auto& v : j) out.push_back(rat_from_json(v));
    return out;
}

json rats_to_json(const std::vector<Rat>& v) {
    json a = json::array();
    for (const auto& r : v) a.push_back(to_json(r));
    return a;
}

json ext_to_json(const ExtMult& m) {
    if (m.is_infinite()) return "INFINITY";
    return m.value();
}

// Wraps library errors raised while building a value from a document so
// that structural problems still surface as ParseError.
template <class F>
auto parsing(F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const json::exception& e) {
        bad(e.what());
    }
}

}  // namespace

json to_json(const Rat& r) { return to_string(r); }

Rat rat_from_json(const json& j) {
    if (j.is_number_integer()) return Rat(Int(j.get<long>()));
    if (j.is_string()) return parse_rat(j.get<std::string>());
    bad("not a rational: " + j.dump());
}

json to_json(const Form& f) {
    json terms = json::array();
    for (const auto& [e, c] : f.terms()) terms.push_back({{"e", {e[0], e[1], e[2]}}, {"c", to_json(c)}});
    return {{"degree", f.degree()}, {"terms", terms}};
}

Form form_from_json(const json& j) {
    return parsing([&] {
        if (j.is_string()) return parse_form(j.get<std::string>());
        if (j.is_object() && j.contains("expr")) {
            int zero_degree = j.contains("degree") ? static_cast<int>(long_from_json(j["degree"])) : 0;
            Form f = parse_form(field(j, "expr").get<std::string>(), zero_degree);
            if (j.contains("degree") && f.degree() != zero_degree)
                throw Error(ErrorKind::DegreeMismatch, "expression degree differs from \"degree\"");
            return f;
        }
        int degree = static_cast<int>(long_from_json(field(j, "degree")));
        Form::TermMap terms;
        for (const auto& t : field(j, "terms")) {
            const json& e = field(t, "e");
            if (!e.is_array() || e.size() != 3) bad("exponent must have three entries");
            Exponent ex{static_cast<int>(long_from_json(e[0])), static_cast<int>(long_from_json(e[1])),
                        static_cast<int>(long_from_json(e[2]))};
            if (ex[0] < 0 || ex[1] < 0 || ex[2] < 0) bad("negative exponent");
            Rat c = rat_from_json(field(t, "c"));
            if (c == 0) continue;
            if (!terms.emplace(ex, c).second) bad("repeated monomial");
        }
        return Form::from_terms(degree, terms);
    });
}

json to_json(const FactoredDivisor& d) {
    json fs = json::array();
    for (const auto& f : d.factors())
        fs.push_back({{"form", to_json(f.form)},
                      {"mult", f.multiplicity},
                      {"irreducible_hint", f.irreducible_hint},
                      {"reduced_verified", f.reduced_verified}});
    return {{"factors", fs}, {"components", d.component_count()}, {"components_exact", d.component_count_exact()}};
}

FactoredDivisor divisor_from_json(const json& j) {
    return parsing([&] {
        if (j.is_string() || (j.is_object() && !j.contains("factors")))
            return FactoredDivisor({{form_from_json(j), 1, false, false}}, true);
        std::vector<DivisorFactor> fs;
        for (const auto& f : field(j, "factors")) {
            DivisorFactor df;
            df.form = form_from_json(field(f, "form"));
            df.multiplicity = f.contains("mult") ? long_from_json(f["mult"]) : 1;
            df.irreducible_hint = f.value("irreducible_hint", false);
            fs.push_back(std::move(df));
        }
        return FactoredDivisor(std::move(fs), true);
    });
}

json to_json(const ProjPoint& p) { return {p[0].get_str(), p[1].get_str(), p[2].get_str()}; }

ProjPoint point_from_json(const json& j) {
    if (!j.is_array() || j.size() != 3) bad("a point is an array of three integers");
    return ProjPoint::from_integers(int_from_json(j[0]), int_from_json(j[1]), int_from_json(j[2]));
}

ProjPoint parse_point(const std::string& text) {
    std::string t;
    for (char c : text) {
        if (c == '[' || c == ']' || c == '(' || c == ')' || c == ' ') continue;
        t.push_back(c == ':' ? ',' : c);
    }
    std::vector<Int> v;
    std::stringstream ss(t);
    std::string part;
    while (std::getline(ss, part, ',')) {
        Int x;
        if (part.empty() || x.set_str(part, 10) != 0) bad("bad point \"" + text + "\"");
        v.push_back(x);
    }
    if (v.size() != 3) bad("a point needs three coordinates: \"" + text + "\"");
    return ProjPoint::from_integers(v[0], v[1], v[2]);
}

json to_json(const Pencil& p) {
    json special = json::array();
    for (const auto& m : p.special_members())
        special.push_back({{"st", {m.param.s().get_str(), m.param.t().get_str()}}, {"factors", to_json(m.factors)}});
    json witnesses = json::array();
    for (const auto& w : p.base_witnesses()) witnesses.push_back(to_json(w));
    return {{"F", to_json(p.f())}, {"G", to_json(p.g())}, {"special_members", special}, {"base_witnesses", witnesses}};
}

Pencil pencil_from_json(const json& j) {
    return parsing([&] {
        std::vector<SpecialMember> special;
        if (j.contains("special_members"))
            for (const auto& m : j["special_members"]) {
                const json& st = field(m, "st");
                if (!st.is_array() || st.size() != 2) bad("\"st\" must have two entries");
                special.push_back({P1Point::from_rationals(rat_from_json(st[0]), rat_from_json(st[1])),
                                   divisor_from_json(field(m, "factors"))});
            }
        std::vector<ProjPoint> witnesses;
        if (j.contains("base_witnesses"))
            for (const auto& w : j["base_witnesses"]) witnesses.push_back(point_from_json(w));
        return Pencil(form_from_json(field(j, "F")), form_from_json(field(j, "G")), std::move(special),
                      std::move(witnesses));
    });
}

json to_json(const Endo& e) {
    json c = json::array();
    for (const auto& f : e.components()) c.push_back(to_json(f));
    return {{"d", e.degree()}, {"components", c}};
}

Endo endo_from_json(const json& j) {
    return parsing([&] {
        const json& c = field(j, "components");
        if (!c.is_array() || c.size() != 3) bad("an endomorphism has three components");
        Endo e({form_from_json(c[0]), form_from_json(c[1]), form_from_json(c[2])});
        if (j.contains("d") && long_from_json(j["d"]) != e.degree())
            throw Error(ErrorKind::DegreeMismatch, "\"d\" differs from the component degree");
        return e;
    });
}

json to_json(const FamilySpec& s) {
    json j{{"family", std::string(to_string(s.family))}};
    if (s.alpha0 != 0) j["alpha0"] = s.alpha0;
    if (s.alpha1 != 0) j["alpha1"] = s.alpha1;
    if (s.n != 0) j["n"] = s.n;
    if (s.s != 0) j["s"] = s.s;
    if (s.a != 0) j["a"] = to_json(s.a);
    if (s.b != 0) j["b"] = s.b;
    if (s.l != 0) j["l"] = s.l;
    if (!s.avec.empty()) j["avec"] = rats_to_json(s.avec);
    if (!s.coeffs.empty()) j["coeffs"] = rats_to_json(s.coeffs);
    if (!s.p.empty()) j["p"] = rats_to_json(s.p);
    if (!s.a0.empty()) j["a0"] = rats_to_json(s.a0);
    if (!s.a1.empty()) j["a1"] = rats_to_json(s.a1);
    if (!s.chain.empty()) {
        json c = json::array();
        for (const auto& t : s.chain) c.push_back(rats_to_json(t.avec));
        j["chain"] = c;
    }
    return j;
}

FamilySpec family_spec_from_json(const json& j) {
    return parsing([&] {
        FamilySpec s;
        const json& fam = field(j, "family");
        if (!fam.is_string()) bad("\"family\" must be a string");
        s.family = parse_family_id(fam.get<std::string>());
        for (const auto& [key, value] : j.items()) {
            if (key == "family") continue;
            if (key == "alpha0") s.alpha0 = long_from_json(value);
            else if (key == "alpha1") s.alpha1 = long_from_json(value);
            else if (key == "n") s.n = long_from_json(value);
            else if (key == "s") s.s = long_from_json(value);
            else if (key == "a") s.a = rat_from_json(value);
            else if (key == "b") s.b = long_from_json(value);
            else if (key == "l") s.l = long_from_json(value);
            else if (key == "avec") s.avec = rats_from_json(value);
            else if (key == "coeffs") s.coeffs = rats_from_json(value);
            else if (key == "p") s.p = rats_from_json(value);
            else if (key == "a0") s.a0 = rats_from_json(value);
            else if (key == "a1") s.a1 = rats_from_json(value);
            else if (key == "chain") {
                for (const auto& t : value) s.chain.push_back({rats_from_json(t)});
            } else {
                bad("unknown family field \"" + key + "\"");
            }
        }
        return s;
    });
}

json to_json(const FamilyCurve& c) {
    return {{"curve", to_json(c.curve)},
            {"curve_text", c.curve.to_string()},
            {"divisor", to_json(c.divisor)},
            {"pencil", to_json(c.pencil)}};
}

json to_json(const HeightReport& r, bool decimal) {
    json local = json::array();
    for (const auto& l : r.local) {
        json e{{"p", l.base.get_str()}, {"e", l.exponent}};
        if (!l.is_prime) e["prime"] = false;
        local.push_back(e);
    }
    json j{{"point", to_json(r.point)},
           {"divisor", to_json(r.divisor_form)},
           {"local", local},
           {"s_integral", r.s_integral},
           {"h_point", {{"max_abs_coord", r.max_abs_coord.get_str()}}},
           {"h_divisor", {{"coeff_max", r.coeff_max.get_str()}, {"degree", r.degree}}},
           {"height_log", r.global_log.to_string()}};
    if (decimal) j["approx"] = {{"height_log", r.global_log.approx()}};
    return j;
}

json to_json(const WeightReport& r) {
    json members = json::array();
    for (const auto& m : r.per_member)
        members.push_back({{"st", {m.param.s().get_str(), m.param.t().get_str()}},
                           {"campana", ext_to_json(m.campana)},
                           {"gcd", ext_to_json(m.gcd)}});
    return {{"campana_weight", to_json(r.campana_weight)},
            {"gcd_weight", to_json(r.gcd_weight)},
            {"per_member", members},
            {"verdict", std::string(to_string(r.verdict))},
            {"divisor_components", r.divisor_components},
            {"divisor_components_exact", r.divisor_components_exact},
            {"base_witnesses_checked", r.base_witnesses_checked}};
}

json to_json(const ConstructedPoint& c) {
    return {{"point", to_json(c.point)},
            {"affine", rats_to_json({c.affine.begin(), c.affine.end()})},
            {"u", to_json(c.u)},
            {"t", to_json(c.t)},
            {"value", to_json(c.value)}};
}

json fibers_to_json(const std::map<FiberKey, long>& hits) {
    json a = json::array();
    long total = 0;
    for (const auto& [k, n] : hits) {
        a.push_back({{"fiber", k.to_string()}, {"count", n}});
        total += n;
    }
    return {{"points", total}, {"fibers", a}};
}

json s_unit_solutions_to_json(const std::vector<std::pair<Rat, Rat>>& sols, long exponent_bound) {
    json a = json::array();
    for (const auto& [u, v] : sols) a.push_back({to_json(u), to_json(v)});
    return {{"exponent_bound", exponent_bound}, {"complete_within_bound_only", true}, {"solutions", a}};
}

void write_points_csv(std::ostream& out, const std::vector<ProjPoint>& points) {
    out << "x,y,z\n";
    for (const auto& p : points) out << p.to_csv() << '\n';
}

std::vector<ProjPoint> read_points_csv(std::istream& in) {
    std::vector<ProjPoint> out;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        bool was_first = first;
        first = false;
        if (line.empty() || line[0] == '#') continue;
        if (was_first && line.find_first_of("xyzXYZ") != std::string::npos) continue;
        out.push_back(parse_point(line));
    }
    return out;
}

void write_orbit_csv(std::ostream& out, const Orbit& orbit) {
    out << "index,x,y,z,removed_content,s_integral\n";
    for (const auto& r : orbit.records) {
        out << r.index << ',' << r.point.to_csv() << ',' << r.removed_content.get_str() << ',';
        if (r.on_divisor) out << "ON_DIVISOR";
        else if (r.s_integral) out << (*r.s_integral ? "true" : "false");
        out << '\n';
    }
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::InvalidInput, "cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        bad(path + ": " + e.what());
    }
}

}  // namespace plint::io

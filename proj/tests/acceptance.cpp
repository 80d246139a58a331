// One line per acceptance criterion; exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <thread>

#include "oracles.hpp"
#include "plint/constructions.hpp"
#include "plint/families.hpp"
#include "plint/heights.hpp"
#include "plint/io.hpp"
#include "plint/orbits.hpp"
#include "plint/pencils.hpp"
#include "plint/search.hpp"

using namespace plint;

namespace {

const std::string data = PLINT_TEST_DATA;

Form F(const std::string& s) { return parse_form(s); }
P1Point st(long s, long t) { return P1Point::from_integers(s, t); }
ProjPoint pt(long x, long y, long z) { return ProjPoint::from_integers(x, y, z); }

FactoredDivisor fd(std::initializer_list<std::pair<const char*, long>> items) {
    std::vector<DivisorFactor> fs;
    for (const auto& [f, m] : items) fs.push_back({F(f), m, true, false});
    return FactoredDivisor(std::move(fs));
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Collects failed checks with a short description of each.
struct Checks {
    std::vector<std::string> failures;
    long count = 0;

    void expect(bool ok, const std::string& what) {
        ++count;
        if (!ok) failures.push_back(what);
    }
};

struct Result {
    bool pass;
    std::string detail;
};

Result finish(const Checks& c, const std::string& summary) {
    if (c.failures.empty()) return {true, summary + ", " + std::to_string(c.count) + " checks"};
    std::string d = std::to_string(c.failures.size()) + " of " + std::to_string(c.count) + " checks failed; first: " +
                    c.failures.front();
    return {false, d};
}

// 1. Weight goldens, each under one second.
Result weights() {
    Checks c;
    auto timed = [&](const std::string& name, const std::function<void()>& fn) {
        auto t0 = std::chrono::steady_clock::now();
        fn();
        double s = seconds_since(t0);
        c.expect(s < 1.0, name + " took " + std::to_string(s) + "s");
    };
    timed("cusp", [&] {
        Pencil p(F("Y^2*Z"), F("X^3"),
                 {{st(1, 0), fd({{"Y", 2}, {"Z", 1}})},
                  {st(0, 1), fd({{"X", 3}})},
                  {st(1, -1), fd({{"Y^2*Z - X^3", 1}})}},
                 {pt(0, 0, 1), pt(0, 1, 0)});
        auto r = weight_report(p, fd({{"Z", 1}, {"Y^2*Z - X^3", 1}}));
        c.expect(r.gcd_weight == make_rat(13, 6), "cusp gcd weight " + to_string(r.gcd_weight));
        c.expect(r.verdict == Verdict::DegenerateEffective, "cusp verdict");
    });
    timed("powerful", [&] {
        Pencil p(F("Y^2*Z^3"), F("X^5"),
                 {{st(1, 0), fd({{"Y", 2}, {"Z", 3}})},
                  {st(0, 1), fd({{"X", 5}})},
                  {st(1, -1), fd({{"Y^2*Z^3 - X^5", 1}})}});
        auto r = weight_report(p, fd({{"Y^2*Z^3 - X^5", 1}}));
        c.expect(r.campana_weight == make_rat(23, 10), "powerful campana weight " + to_string(r.campana_weight));
        c.expect(r.gcd_weight == make_rat(9, 5), "powerful gcd weight " + to_string(r.gcd_weight));
        c.expect(r.verdict == Verdict::DegenerateUnderAbc, "powerful verdict");
    });
    timed("unicuspidal", [&] {
        FamilySpec s;
        s.family = FamilyId::TonoUnicuspI;
        s.n = 2;
        s.s = 2;
        s.coeffs = {Rat(1)};
        auto a = generate_family(s);
        auto r = weight_report(a.pencil, a.divisor);
        c.expect(r.gcd_weight == make_rat(23, 12), "unicuspidal n=s=2 gcd weight " + to_string(r.gcd_weight));
        s.s = 3;
        s.coeffs = {Rat(0), Rat(1)};
        auto b = generate_family(s);
        auto r3 = weight_report(b.pencil, b.divisor);
        c.expect(r3.gcd_weight >= make_rat(85, 42), "unicuspidal n=2 s=3 gcd weight " + to_string(r3.gcd_weight));
    });
    timed("yoshihara", [&] {
        auto y = yoshihara_quintic();
        Form f = y.curve, g = F("Y*Z - X^2");
        FactoredDivisor dprime({{f, 1, true}, {g, 1, true}, {f.pow(2) + g.pow(5), 1, true}});
        auto r = weight_report(y.pencil, dprime);
        c.expect(r.divisor_components == 3 && r.divisor_components_exact, "Yoshihara r");
        c.expect(r.verdict == Verdict::DegenerateEffective, "Yoshihara verdict");
    });
    return finish(c, "13/6 effective, 23/10 vs 9/5 under abc, 23/12, >= 85/42, Yoshihara r=3 effective");
}

// 2. Construction identities over at least 100 parameter choices.
Result constructions() {
    Checks c;
    auto t0 = std::chrono::steady_clock::now();
    auto golden = [&](const Form& f, const ProjPoint& p, const mpz_class& want, const std::string& name) {
        c.expect(oracle::evaluate(f, p[0], p[1], p[2]) == want, name);
    };
    PlaceSet s2 = PlaceSet::from_longs({2}), s3 = PlaceSet::from_longs({3});
    golden(third_type_form(2), third_type_point(2, {Rat(2), s2}, 1).point, 2048, "F(1,4,16)");
    golden(third_type_form(2), third_type_point(2, {Rat(3), s3}, 1).point, 177147, "F(2,9,81)");
    golden(congruence_form(Rat(1), 2), congruence_point(1, 2, {Rat(2), s2}).point, 32768, "F(1,4,48)");
    golden(congruence_form(Rat(2), 2), congruence_point(2, 2, {Rat(2), s2}).point, mpz_class(1) << 29,
           "F(1,16,11776)");

    oracle::Rng rng(20261016);
    const std::vector<long> primes{2, 3, 5, 7, 11};
    long choices = 0;
    for (int trial = 0; trial < 400; ++trial) {
        std::vector<long> sv;
        for (long p : primes)
            if (oracle::uniform(rng, 0, 2) == 0) sv.push_back(p);
        if (sv.empty()) sv.push_back(primes[static_cast<std::size_t>(oracle::uniform(rng, 0, 4))]);
        PlaceSet s(std::vector<Int>(sv.begin(), sv.end()));
        Rat u = oracle::uniform(rng, 0, 1) == 0 ? Rat(1) : Rat(-1);
        for (long p : sv) u *= pow(Rat(p), oracle::uniform(rng, -3, 4));
        if (u == 1) continue;
        UnitParam up{u, s};
        bool third = trial % 2 == 0;
        long alpha = oracle::uniform(rng, 2, 4), m = oracle::uniform(rng, 1, 3);
        long a = oracle::uniform(rng, 0, 6), b = oracle::uniform(rng, 2, 4);
        ConstructedPoint p = third ? third_type_point(alpha, up, m) : congruence_point(a, b, up);
        Form f = third ? third_type_form(alpha) : congruence_form(Rat(a), b);
        std::string name = (third ? "third type alpha=" + std::to_string(alpha) : "congruence a=" + std::to_string(a)) +
                           " u=" + to_string(u);
        c.expect(p.value == u, name + ": F(P) != u");
        // Independent evaluation of the dehomogenized form at the affine triple.
        mpq_class v = 0;
        for (const auto& [e, coeff] : f.terms()) {
            mpq_class mono = coeff;
            for (int k = 0; k < 3; ++k)
                for (int i = 0; i < e[static_cast<std::size_t>(k)]; ++i) mono *= p.affine[static_cast<std::size_t>(k)];
            v += mono;
        }
        c.expect(v == u, name + ": oracle evaluation");
        c.expect(oracle::supported_on(oracle::evaluate(f, p.point[0], p.point[1], p.point[2]).get_num(), sv),
                 name + ": integral value has primes outside S");
        c.expect(is_s_integral(FactoredDivisor::single(f), p.point, s), name + ": not S-integral");
        ++choices;
    }
    c.expect(choices >= 100, "only " + std::to_string(choices) + " parameter choices");
    double secs = seconds_since(t0);
    c.expect(secs < 10.0, "took " + std::to_string(secs) + "s");
    return finish(c, std::to_string(choices) + " parameter choices plus 4 goldens");
}

// 3. (u^{a(b+1)} - u^{ab} - a(u-1)) / (u-1)^2 is an S-integer.
Result congruence() {
    Checks c;
    const std::vector<long> sv{2, 3};
    for (long i = -8; i <= 8; ++i)
        for (long j = -8; j <= 8; ++j)
            for (int sign : {1, -1}) {
                mpq_class u = sign;
                for (long k = 0; k < std::abs(i); ++k) u = i > 0 ? mpq_class(u * 2) : mpq_class(u / 2);
                for (long k = 0; k < std::abs(j); ++k) u = j > 0 ? mpq_class(u * 3) : mpq_class(u / 3);
                if (u == 1) continue;
                for (long a = 0; a <= 10; ++a)
                    for (long b = 2; b <= 6; ++b) {
                        mpq_class ua = 1;
                        for (long k = 0; k < a; ++k) ua *= u;
                        mpq_class tb = 1;
                        for (long k = 0; k < b; ++k) tb *= ua;
                        mpq_class q = (tb * ua - tb - a * (u - 1)) / ((u - 1) * (u - 1));
                        c.expect(oracle::supported_on(q.get_den(), sv),
                                 "u=" + u.get_str() + " a=" + std::to_string(a) + " b=" + std::to_string(b));
                    }
            }
    return finish(c, "S={2,3}, exponents -8..8, a<=10, b<=6");
}

// 4. Orbit of [3:2:1] under coordinate squaring.
Result orbit_scan() {
    Checks c;
    Endo sq({F("X^2"), F("Y^2"), F("Z^2")});
    FactoredDivisor xyz = fd({{"X", 1}, {"Y", 1}, {"Z", 1}});
    auto t0 = std::chrono::steady_clock::now();
    Orbit o = scan_orbit_integrality(sq, pt(3, 2, 1), xyz, PlaceSet::from_longs({2, 3}), 20, pow(Int(10), 1000000));
    double secs = seconds_since(t0);
    c.expect(o.records.size() == 21 && !o.truncated, "orbit truncated");
    for (const auto& r : o.records)
        c.expect(r.s_integral == true, "index " + std::to_string(r.index) + " not integral");
    c.expect(secs < 1.0, "took " + std::to_string(secs) + "s");
    Orbit o2 = scan_orbit_integrality(sq, pt(3, 2, 1), xyz, PlaceSet::from_longs({2}), 0);
    c.expect(o2.records.at(0).s_integral == false, "index 0 integral for S={2}");
    return finish(c, "indices 0..20 integral for S={2,3}; index 0 not integral for S={2}");
}

// 5. Completely invariant line sets.
Result invariant_sets() {
    Checks c;
    Endo sq({F("X^2"), F("Y^2"), F("Z^2")});
    Endo swap({F("Y^2"), F("X^2"), F("Z^2")});
    c.expect(is_completely_invariant_line_set(sq, {F("X"), F("Y"), F("Z")}), "{X,Y,Z} under squaring");
    c.expect(!is_completely_invariant_line_set(swap, {F("X")}), "{X} under swap");
    c.expect(is_completely_invariant_line_set(swap, {F("X"), F("Y")}), "{X,Y} under swap");
    return finish(c, "{X,Y,Z} true; swap: {X} false, {X,Y} true");
}

// 6. Sum of local heights equals deg(f) h(P) + log |f|_inf.
Result height_identity() {
    Checks c;
    oracle::Rng rng(6);
    int done = 0;
    while (done < 1000) {
        int d = static_cast<int>(oracle::uniform(rng, 1, 5));
        Form f = oracle::random_form(rng, d, 50).primitive();
        ProjPoint p = ProjPoint::from_integers(oracle::uniform(rng, -1000000, 1000000),
                                               oracle::uniform(rng, -1000000, 1000000),
                                               oracle::uniform(rng, -1000000, 1000000));
        if (oracle::evaluate(f, p[0], p[1], p[2]) == 0) continue;
        LogSum lhs = archimedean_local_height(f, p);
        for (const auto& l : finite_local_heights(f, p)) lhs += LogSum::term(l.base, l.exponent);
        LogSum rhs = Int(d) * point_height(p) + LogSum::term(coefficient_max(f));
        c.expect(lhs.same_value(rhs), f.to_string() + " at " + p.to_string());
        ++done;
    }
    return finish(c, "1000 random pairs, degree <= 5, coordinates <= 10^6");
}

// 7. Enumeration equals the naive oracle.
Result enumeration() {
    Checks c;
    auto t0 = std::chrono::steady_clock::now();
    std::vector<std::vector<const char*>> ds{{"Z"}, {"X", "Y", "Z"}, {"Y^2*Z - X^3", "Z"}};
    std::vector<std::vector<long>> ss{{}, {2}, {2, 3}};
    for (const auto& dnames : ds)
        for (const auto& sv : ss)
            for (long b : {5L, 20L, 50L}) {
                std::vector<DivisorFactor> fs;
                std::vector<Form> forms;
                for (const char* n : dnames) {
                    fs.push_back({F(n), 1, true, false});
                    forms.push_back(F(n));
                }
                auto lib = enumerate_integral_points(FactoredDivisor(fs), PlaceSet(std::vector<Int>(sv.begin(), sv.end())), b);
                std::vector<std::array<long, 3>> got;
                for (const auto& p : lib) got.push_back({p[0].get_si(), p[1].get_si(), p[2].get_si()});
                c.expect(got == oracle::enumerate(forms, sv, b),
                         FactoredDivisor(fs).product().to_string() + " B=" + std::to_string(b));
            }
    double secs = seconds_since(t0);
    c.expect(secs < 60.0, "took " + std::to_string(secs) + "s");
    return finish(c, "27 (D, S, B) combinations in " + std::to_string(static_cast<int>(secs + 0.5)) + "s");
}

// 8. Fibers of the B=1000 points against the recorded oracle list.
Result fiber_concentration() {
    Checks c;
    std::map<std::pair<long, long>, long> golden;
    long golden_points = -1;
    std::ifstream in(data + "/fibers_b1000.txt");
    std::string line;
    while (std::getline(in, line)) {
        if (line.rfind("# points ", 0) == 0) {
            golden_points = std::stol(line.substr(9));
            continue;
        }
        std::istringstream row(line);
        long s, t, n;
        if (row >> s >> t >> n) golden[{s, t}] = n;
    }
    c.expect(!golden.empty() && golden_points > 0, "golden fiber list missing");
    Pencil pencil(F("Y^2*Z"), F("X^3"));
    FactoredDivisor d = fd({{"Z", 1}, {"Y^2*Z - X^3", 1}});
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    auto pts = enumerate_integral_points(d, PlaceSet::from_longs({2, 3}), 1000, threads);
    c.expect(static_cast<long>(pts.size()) == golden_points, "point count " + std::to_string(pts.size()));
    std::map<std::pair<long, long>, long> got;
    for (const auto& [k, n] : fibers_hit(pts, pencil)) {
        c.expect(!k.is_base_point(), "a point at a base point");
        if (k.param) got[{k.param->s().get_si(), k.param->t().get_si()}] = n;
    }
    for (const auto& [k, n] : got)
        c.expect(golden.count(k) == 1, "fiber [" + std::to_string(k.first) + ":" + std::to_string(k.second) +
                                           "] not in the golden list");
    c.expect(got == golden, "fiber counts differ from the golden list");
    return finish(c, std::to_string(pts.size()) + " points on " + std::to_string(got.size()) + " golden fibers");
}

// 9. Family closed forms after canonical serialization.
Result families() {
    Checks c;
    auto same = [&](const Form& got, const std::string& closed, const std::string& name) {
        std::string a = io::to_json(got).dump(), b = io::to_json(F(closed).primitive()).dump();
        c.expect(a == b, name + ": " + got.to_string());
    };
    FamilySpec s;
    s.family = FamilyId::TonoBicusp1;
    s.alpha0 = 2;
    s.alpha1 = 3;
    s.a = 5;
    same(generate_family(s).curve, "Y^3 + X*(Z + 5*Y)^2", "TONO_BICUSP_1");
    s = {};
    s.family = FamilyId::TonoBicusp2;
    s.alpha0 = 2;
    s.alpha1 = 3;
    s.avec = {Rat(0), Rat(1)};
    same(generate_family(s).curve, "(X*Z + Y^2)^2 + X*Y^3", "TONO_BICUSP_2");
    s = {};
    s.family = FamilyId::TonoBicusp3;
    s.alpha0 = 2;
    s.alpha1 = 5;
    s.avec = {Rat(0), Rat(1)};
    same(generate_family(s).curve, "Y^5 + X*(X*Z + Y^2)^2", "TONO_BICUSP_3");
    s = {};
    s.family = FamilyId::TonoUnicuspI;
    s.n = 2;
    s.s = 2;
    s.coeffs = {Rat(1)};
    same(generate_family(s).curve,
         exact_divide(F("((X^2*Z + Y^3)*Y + X^4)^3 - (X^2*Z + Y^3)^4"), F("X^2")).to_string(), "unicuspidal (i)");
    s = {};
    s.family = FamilyId::AokiI;
    s.a = 2;
    s.b = 3;
    auto ai = generate_family(s);
    same(ai.curve, "X^2*Y^3 + Z^5", "Aoki (i)");
    c.expect(ai.pencil.f() == F("X^2*Y^3") && ai.pencil.g() == F("Z^5"), "Aoki (i) pencil");
    s.family = FamilyId::AokiIV;
    auto aiv = generate_family(s);
    same(aiv.curve, "X^2*Z - Y^3", "Aoki (iv)");
    c.expect(aiv.pencil.f() == F("X^2*Z") && aiv.pencil.g() == F("Y^3"), "Aoki (iv) pencil");
    same(yoshihara_quintic().curve, "(Y*Z - X^2)*(Y*Z^2 - X^2*Z - 2*X*Y^2) + Y^5", "Yoshihara");
    return finish(c, "Tono bicuspidal cases 1-3, unicuspidal (i), Aoki (i)/(iv), Yoshihara");
}

// 10. Bounded S-unit equation against brute force.
Result s_units() {
    Checks c;
    auto lib = solve_s_unit_bounded(PlaceSet::from_longs({2, 3}), 6);
    auto brute = oracle::s_unit_solutions({2, 3}, 6);
    std::set<std::pair<mpq_class, mpq_class>> got(lib.begin(), lib.end());
    c.expect(got == brute, "differs from brute force");
    for (auto [u, v] : std::vector<std::pair<long, long>>{{2, -1}, {4, -3}, {9, -8}})
        c.expect(got.count({Rat(u), Rat(v)}) == 1, "missing (" + std::to_string(u) + "," + std::to_string(v) + ")");
    c.expect(got.count({make_rat(1, 2), make_rat(1, 2)}) == 1, "missing (1/2,1/2)");
    c.expect(got.count({make_rat(3, 4), make_rat(1, 4)}) == 1, "missing (3/4,1/4)");
    for (const auto& [u, v] : got) c.expect(got.count({v, u}) == 1, "not closed under swap");
    return finish(c, std::to_string(lib.size()) + " solutions for S={2,3}, E=6");
}

}  // namespace

int main() {
    std::vector<std::function<Result()>> criteria{weights,     constructions, congruence,          orbit_scan,
                                                  invariant_sets, height_identity, enumeration, fiber_concentration,
                                                  families,    s_units};
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Result r;
        try {
            r = criteria[i]();
        } catch (const std::exception& e) {
            r = {false, std::string("exception: ") + e.what()};
        }
        if (!r.pass) ++failed;
        std::cout << "criterion " << i + 1 << ": " << (r.pass ? "PASS" : "FAIL") << " (" << r.detail << ")"
                  << std::endl;
    }
    return failed == 0 ? 0 : 1;
}

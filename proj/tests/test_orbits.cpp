#include "doctest.h"

#include <chrono>
#include <functional>
#include <optional>

#include "oracles.hpp"
#include "plint/orbits.hpp"

using namespace plint;

namespace {
Form F(const std::string& s) { return parse_form(s); }
ProjPoint pt(long x, long y, long z) { return ProjPoint::from_integers(x, y, z); }
Endo endo(const std::string& a, const std::string& b, const std::string& c) { return Endo({F(a), F(b), F(c)}); }

ErrorKind kind_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::ParseError;
}

FactoredDivisor xyz() {
    return FactoredDivisor({{F("X"), 1, true, false}, {F("Y"), 1, true, false}, {F("Z"), 1, true, false}});
}
}  // namespace

TEST_CASE("endo validation and application") {
    Endo sq = endo("X^2", "Y^2", "Z^2");
    auto r = apply_endo(sq, pt(3, 2, 1));
    CHECK(r.point == pt(9, 4, 1));
    CHECK(r.removed_content == 1);
    CHECK(apply_endo(sq, pt(2, 2, 2)).point == pt(1, 1, 1));
    CHECK(kind_of([] { apply_endo(endo("Y*Z", "X*Z", "X*Y"), pt(1, 0, 0)); }) == ErrorKind::IndeterminatePoint);
    auto c = apply_endo(endo("2*X^2", "2*Y^2", "4*Z^2"), pt(1, 1, 1));
    CHECK(c.point == pt(1, 1, 2));
    CHECK(c.removed_content == 2);
    CHECK(kind_of([] { endo("X^2", "Y", "Z^2"); }) == ErrorKind::DegreeMismatch);
    CHECK(kind_of([] { Endo({F("X"), Form::zero(1), F("Z")}); }) == ErrorKind::InvalidInput);
    CHECK(endo("X^2/2", "Y^2", "Z^2").components()[0] == F("X^2"));
}

TEST_CASE("orbit iteration") {
    Endo sq = endo("X^2", "Y^2", "Z^2");
    Orbit o = iterate_orbit(sq, pt(3, 2, 1), 3);
    REQUIRE(o.records.size() == 4);
    CHECK(o.records[3].point == pt(6561, 256, 1));
    CHECK(!o.truncated);
    CHECK(o.records[2].height.same_value(LogSum::term(Int(81), 1)));
    CHECK(iterate_orbit(sq, pt(3, 2, 1), 0).records.size() == 1);

    Orbit capped = iterate_orbit(sq, pt(3, 2, 1), 10, Int(1000000));
    CHECK(capped.records.size() == 4);
    CHECK(capped.truncated);
    CHECK(capped.truncated_at == 4);

    CHECK(kind_of([] { iterate_orbit(endo("Y*Z", "X*Z", "X*Y"), pt(1, 1, 0), 3); }) ==
          ErrorKind::IndeterminatePoint);
    // Determinism.
    CHECK(iterate_orbit(sq, pt(5, -3, 2), 5).records.back().point ==
          iterate_orbit(sq, pt(5, -3, 2), 5).records.back().point);
}

TEST_CASE("pullback divisors") {
    Endo sq = endo("X^2", "Y^2", "Z^2");
    FactoredDivisor p = pullback_divisor(sq, xyz());
    REQUIRE(p.factors().size() == 3);
    for (const auto& f : p.factors()) CHECK(f.multiplicity == 2);
    CHECK(p.degree() == 6);

    Endo case1 = endo("X^2 + Y*Z", "X*Y - Z^2", "Z^2");
    FactoredDivisor z = pullback_divisor(case1, FactoredDivisor::single(F("Z")));
    REQUIRE(z.factors().size() == 1);
    CHECK(z.factors()[0].form == F("Z"));
    CHECK(z.factors()[0].multiplicity == 2);

    // A pulled-back factor that is a square of a non-hinted form.
    Endo lin = endo("(X+Y)^2", "Y^2", "Z^2");
    FactoredDivisor x = pullback_divisor(lin, FactoredDivisor::single(F("X")));
    REQUIRE(x.factors().size() == 1);
    CHECK(x.factors()[0].form == F("X+Y"));
    CHECK(x.factors()[0].multiplicity == 2);

    oracle::Rng rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        int d = static_cast<int>(oracle::uniform(rng, 1, 3));
        Endo phi({oracle::random_form(rng, d, 3), oracle::random_form(rng, d, 3), oracle::random_form(rng, d, 3)});
        Form g = oracle::random_form(rng, static_cast<int>(oracle::uniform(rng, 1, 2)), 3).primitive();
        if (g.is_constant()) continue;
        FactoredDivisor dv({{g, oracle::uniform(rng, 1, 2), false, false}});
        FactoredDivisor pb = pullback_divisor(phi, dv);
        CHECK(pb.degree() == d * dv.degree());
        CHECK(are_proportional(pb.product(), compose(dv.product(), phi.components())));
    }
}

TEST_CASE("orbit integrality scans") {
    Endo sq = endo("X^2", "Y^2", "Z^2");
    PlaceSet s23 = PlaceSet::from_longs({2, 3});
    Orbit o = scan_orbit_integrality(sq, pt(3, 2, 1), xyz(), s23, 5);
    for (const auto& r : o.records) CHECK(r.s_integral == true);

    Orbit o2 = scan_orbit_integrality(sq, pt(3, 2, 1), xyz(), PlaceSet::from_longs({2}), 5);
    CHECK(o2.records[0].s_integral == false);

    Orbit o3 = scan_orbit_integrality(sq, pt(3, 2, 1), FactoredDivisor::single(F("Z")), PlaceSet(), 5);
    for (const auto& r : o3.records) CHECK(r.s_integral == true);

    Orbit o4 = scan_orbit_integrality(sq, pt(3, 0, 1), xyz(), s23, 2);
    for (const auto& r : o4.records) {
        CHECK(r.on_divisor);
        CHECK(!r.s_integral.has_value());
    }

    auto start = std::chrono::steady_clock::now();
    Orbit big = scan_orbit_integrality(sq, pt(3, 2, 1), xyz(), s23, 20, pow(Int(10), 2000000));
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    CHECK(big.records.size() == 21);
    for (const auto& r : big.records) CHECK(r.s_integral == true);
    CHECK(secs < 5.0);

    Orbit threaded = scan_orbit_integrality(sq, pt(5, -3, 7), xyz(), PlaceSet::from_longs({3, 5, 7}), 8,
                                            default_height_cap(), 3);
    Orbit serial = scan_orbit_integrality(sq, pt(5, -3, 7), xyz(), PlaceSet::from_longs({3, 5, 7}), 8);
    for (std::size_t i = 0; i < serial.records.size(); ++i)
        CHECK(threaded.records[i].s_integral == serial.records[i].s_integral);
}

TEST_CASE("functoriality at good primes") {
    oracle::Rng rng(123);
    for (int trial = 0; trial < 60; ++trial) {
        Endo phi({oracle::random_form(rng, 2, 4), oracle::random_form(rng, 2, 4), oracle::random_form(rng, 2, 4)});
        Form f = oracle::random_form(rng, static_cast<int>(oracle::uniform(rng, 1, 3)), 5).primitive();
        ProjPoint p = ProjPoint::from_integers(oracle::uniform(rng, -30, 30), oracle::uniform(rng, -30, 30),
                                               oracle::uniform(rng, 1, 30));
        std::optional<ReducedTriple> step;
        try {
            step = apply_endo(phi, p);
        } catch (const Error&) {
            continue;
        }
        const ReducedTriple& next = *step;
        Form pulled = compose(f, phi.components());
        mpq_class lhs = oracle::evaluate(pulled, p[0], p[1], p[2]);
        mpq_class rhs = oracle::evaluate(f, next.point[0], next.point[1], next.point[2]);
        mpz_class g = 1;
        for (int i = 0; i < f.degree(); ++i) g *= next.removed_content;
        CHECK(abs(lhs) == abs(rhs * g));
    }
}

TEST_CASE("invariant lines") {
    Endo sq = endo("X^2", "Y^2", "Z^2");
    Endo swap = endo("Y^2", "X^2", "Z^2");
    CHECK(is_invariant_line(sq, F("X")));
    CHECK(!is_invariant_line(sq, F("X+Y")));
    CHECK(!is_invariant_line(swap, F("X")));
    CHECK(kind_of([&] { is_invariant_line(sq, F("X^2")); }) == ErrorKind::NotALine);

    CHECK(is_completely_invariant_line_set(sq, {F("X"), F("Y"), F("Z")}));
    CHECK(!is_completely_invariant_line_set(swap, {F("X")}));
    CHECK(is_completely_invariant_line_set(swap, {F("X"), F("Y")}));
    CHECK(is_completely_invariant_line_set(sq, {F("X"), F("Y")}));
    CHECK(!is_completely_invariant_line_set(sq, {F("X+Y")}));
    CHECK(kind_of([&] { is_completely_invariant_line_set(sq, {F("X"), F("Y"), F("Z"), F("X+Y")}); }) ==
          ErrorKind::TooManyLines);
    CHECK(kind_of([&] { is_completely_invariant_line_set(sq, {F("X"), F("2*X")}); }) == ErrorKind::InvalidInput);
}

TEST_CASE("singularity chains") {
    Endo sq = endo("X^2", "Y^2", "Z^2");
    Form cusp = F("Y^2*Z - X^3");
    auto r = singularity_chain_check(sq, cusp, pt(0, 0, 1), {pt(0, 0, 1), pt(1, 1, 1)});
    REQUIRE(r.size() == 2);
    CHECK(r[0].verified());
    CHECK(!r[1].maps_to_point);
    CHECK(singularity_chain_check(sq, cusp, pt(0, 0, 1), {}).empty());
    CHECK(kind_of([&] { singularity_chain_check(sq, cusp, pt(1, 1, 1), {}); }) == ErrorKind::NotSingular);
    CHECK(kind_of([&] { singularity_chain_check(sq, cusp, pt(1, 2, 3), {}); }) == ErrorKind::NotSingular);
}

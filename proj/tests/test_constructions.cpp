#include "doctest.h"

#include <cmath>
#include <functional>

#include "oracles.hpp"
#include "plint/constructions.hpp"
#include "plint/heights.hpp"

using namespace plint;

namespace {
ErrorKind kind_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::ParseError;
}

UnitParam unit(long u, std::initializer_list<long> s) { return {Rat(u), PlaceSet::from_longs(s)}; }

ProjPoint pt(long x, long y, long z) { return ProjPoint::from_integers(x, y, z); }

mpq_class eval_at(const Form& f, const ProjPoint& p) { return oracle::evaluate(f, p[0], p[1], p[2]); }
}  // namespace

TEST_CASE("third type points") {
    Form f = third_type_form(2);
    auto c = third_type_point(2, unit(2, {2}), 1);
    CHECK(c.point == pt(1, 4, 16));
    CHECK(c.value == 2);
    CHECK(eval_at(f, c.point) == 2048);
    CHECK(is_s_integral(FactoredDivisor::single(f), c.point, PlaceSet::from_longs({2})));

    auto d = third_type_point(2, unit(3, {3}), 1);
    CHECK(d.point == pt(2, 9, 81));
    CHECK(eval_at(f, d.point) == 177147);

    auto e = third_type_point(2, unit(1, {}), 3);
    CHECK(e.point == pt(0, 1, 3));
    CHECK(e.value == 1);

    CHECK(kind_of([] { third_type_point(1, unit(2, {2}), 1); }) == ErrorKind::ParameterViolation);
    CHECK(kind_of([] { third_type_point(2, unit(2, {2}), 0); }) == ErrorKind::ParameterViolation);
    CHECK(kind_of([] { third_type_point(2, unit(6, {2}), 1); }) == ErrorKind::InvalidInput);
}

TEST_CASE("congruence points") {
    Form f = congruence_form(Rat(1), 2);
    auto c = congruence_point(1, 2, unit(2, {2}));
    CHECK(c.point == pt(1, 4, 48));
    CHECK(c.t == 2);
    CHECK(eval_at(f, c.point) == 32768);

    auto d = congruence_point(1, 2, unit(3, {3}));
    CHECK(d.point == pt(2, 9, 324));
    CHECK(eval_at(f, d.point) == 14348907);

    auto e = congruence_point(2, 2, unit(2, {2}));
    CHECK(e.point == pt(1, 16, 11776));
    CHECK(eval_at(congruence_form(Rat(2), 2), e.point) == mpq_class(mpz_class(1) << 29));

    CHECK(kind_of([] { congruence_point(1, 2, unit(1, {2})); }) == ErrorKind::InvalidInput);
    CHECK(kind_of([] { congruence_point(1, 1, unit(2, {2})); }) == ErrorKind::ParameterViolation);
    CHECK(kind_of([] { congruence_point(-1, 2, unit(2, {2})); }) == ErrorKind::ParameterViolation);
}

TEST_CASE("line curve congruence points") {
    auto c = line_curve_congruence_point(1, 2, unit(2, {2}));
    CHECK(c.affine[0] == Rat(1, 4));
    CHECK(c.affine[1] == 12);
    CHECK(c.affine[2] == 1);
    CHECK(is_s_integral(line_curve_divisor(Rat(1), 2), c.point, PlaceSet::from_longs({2})));

    auto d = line_curve_congruence_point(1, 2, unit(3, {3}));
    CHECK(d.affine[0] == Rat(2, 9));
    CHECK(d.affine[1] == 36);

    auto e = line_curve_congruence_point(1, 3, unit(-1, {2}));
    CHECK(is_s_integral(line_curve_divisor(Rat(1), 3), e.point, PlaceSet::from_longs({2})));
}

TEST_CASE("general congruence over rational S-integers") {
    PlaceSet s = PlaceSet::from_longs({2, 3});
    for (Rat a : {Rat(1, 2), Rat(-5, 3), Rat(7, 4), Rat(-2)})
        for (long u : {2, 3, 4, 9, -1, -2, 6}) {
            CAPTURE(a);
            CAPTURE(u);
            auto c = general_congruence_point(a, 2, UnitParam{Rat(u), s});
            CHECK(c.value == u);
            CHECK(is_s_integral(FactoredDivisor::single(congruence_form(a, 2)), c.point, s));
        }
    CHECK(kind_of([&] { general_congruence_point(Rat(1, 5), 2, UnitParam{Rat(2), s}); }) ==
          ErrorKind::ParameterViolation);
    // For natural a it agrees with the t = u^a construction.
    CHECK(general_congruence_point(Rat(3), 2, UnitParam{Rat(5), PlaceSet::from_longs({5})}).point ==
          congruence_point(3, 2, UnitParam{Rat(5), PlaceSet::from_longs({5})}).point);
}

TEST_CASE("identity property over many parameters") {
    oracle::Rng rng(20261016);
    std::vector<long> primes{2, 3, 5, 7};
    int checked = 0;
    for (int trial = 0; trial < 160; ++trial) {
        std::vector<long> sv;
        for (long p : primes)
            if (oracle::uniform(rng, 0, 1) == 1) sv.push_back(p);
        if (sv.empty()) sv.push_back(2);
        PlaceSet s(std::vector<Int>(sv.begin(), sv.end()));
        Rat u = oracle::uniform(rng, 0, 1) == 0 ? Rat(1) : Rat(-1);
        for (long p : sv) u *= pow(Rat(p), oracle::uniform(rng, -2, 3));
        if (u == 1) u = sv[0];
        UnitParam up{u, s};
        long alpha = oracle::uniform(rng, 2, 4), m = oracle::uniform(rng, 1, 3);
        long a = oracle::uniform(rng, 0, 4), b = oracle::uniform(rng, 2, 4);
        bool third = trial % 2 == 0;
        ConstructedPoint c = third ? third_type_point(alpha, up, m) : congruence_point(a, b, up);
        Form f = third ? third_type_form(alpha) : congruence_form(Rat(a), b);
        CAPTURE(trial);
        CHECK(c.value == u);
        std::array<Rat, 3> affine = c.affine;
        CHECK(oracle::evaluate(f, affine[0].get_num() * affine[1].get_den() * affine[2].get_den(),
                               affine[1].get_num() * affine[0].get_den() * affine[2].get_den(),
                               affine[2].get_num() * affine[0].get_den() * affine[1].get_den()) != 0);
        CHECK(is_s_integral(FactoredDivisor::single(f), c.point, s));
        ++checked;
    }
    CHECK(checked >= 100);
}

TEST_CASE("S-integrality via oracle evaluation") {
    oracle::Rng rng(7);
    for (int trial = 0; trial < 120; ++trial) {
        std::vector<long> sv{2, 3};
        long e2 = oracle::uniform(rng, 0, 4), e3 = oracle::uniform(rng, 0, 4);
        if (e2 + e3 == 0) e2 = 1;
        long u = (1L << e2) * static_cast<long>(std::pow(3, e3));
        UnitParam up{Rat(u), PlaceSet(std::vector<Int>(sv.begin(), sv.end()))};
        long alpha = oracle::uniform(rng, 2, 3), a = oracle::uniform(rng, 0, 3), b = oracle::uniform(rng, 2, 3);
        auto c1 = third_type_point(alpha, up, 1);
        auto c2 = congruence_point(a, b, up);
        CAPTURE(u);
        CHECK(oracle::supported_on(eval_at(third_type_form(alpha), c1.point).get_num(), sv));
        CHECK(oracle::supported_on(eval_at(congruence_form(Rat(a), b), c2.point).get_num(), sv));
        CHECK(is_s_integral(FactoredDivisor::single(third_type_form(alpha)), c1.point, up.s));
        CHECK(is_s_integral(FactoredDivisor::single(congruence_form(Rat(a), b)), c2.point, up.s));
    }
}

TEST_CASE("congruence divisibility") {
    for (long a = 0; a <= 10; ++a)
        for (long b = 2; b <= 6; ++b)
            for (long base : {2, 3, 5, -2, -3})
                for (long e = 1; e <= 8; ++e) {
                    mpz_class u = 1;
                    for (long i = 0; i < e; ++i) u *= base;
                    if (u == 1) continue;
                    mpz_class ua = 1;
                    for (long i = 0; i < a; ++i) ua *= u;
                    mpz_class tb = 1;
                    for (long i = 0; i < b; ++i) tb *= ua;
                    mpz_class lhs = tb * ua - tb - a * (u - 1);
                    mpz_class m = (u - 1) * (u - 1);
                    CHECK(lhs % m == 0);
                }
}

TEST_CASE("unit sequence and streams") {
    auto seq = unit_sequence(PlaceSet::from_longs({2, 3}), 8, 10);
    std::vector<Int> want{2, 3, 6, 4, 12, 9, 18, 36};
    CHECK(seq == want);
    CHECK(unit_sequence(PlaceSet::from_longs({2}), 3, 10) == std::vector<Int>{2, 4, 8});

    StreamParams tp;
    auto pts = generalized_unit_stream(tp, PlaceSet::from_longs({2}), 3);
    REQUIRE(pts.size() == 3);
    CHECK(pts[0].u == 2);
    CHECK(pts[1].u == 4);
    CHECK(pts[2].u == 8);
    CHECK(!(pts[0].point == pts[1].point));

    StreamParams cp;
    cp.mode = ConstructionMode::Congruence;
    auto cpts = generalized_unit_stream(cp, PlaceSet::from_longs({2, 3}), 4);
    CHECK(cpts.size() == 4);
    for (std::size_t i = 0; i < cpts.size(); ++i)
        for (std::size_t j = i + 1; j < cpts.size(); ++j) CHECK(!(cpts[i].point == cpts[j].point));

    StreamParams lp;
    lp.mode = ConstructionMode::LineCurve;
    for (const auto& c : generalized_unit_stream(lp, PlaceSet::from_longs({3}), 3))
        CHECK(is_s_integral(line_curve_divisor(Rat(1), 2), c.point, PlaceSet::from_longs({3})));

    CHECK(kind_of([] { generalized_unit_stream(StreamParams{}, PlaceSet::from_longs({}), 1); }) ==
          ErrorKind::ExhaustedSearch);
    StreamParams small;
    small.max_exponent = 2;
    CHECK(kind_of([&] { generalized_unit_stream(small, PlaceSet::from_longs({2}), 5); }) ==
          ErrorKind::ExhaustedSearch);
}

#include "plint/constructions.hpp"

#include <algorithm>

#include "plint/heights.hpp"

namespace plint {

namespace {

const Form& X() {
    static const Form f = Form::var(0);
    return f;
}
const Form& Y() {
    static const Form f = Form::var(1);
    return f;
}
const Form& Z() {
    static const Form f = Form::var(2);
    return f;
}

void require(bool ok, const std::string& what) {
    if (!ok) throw Error(ErrorKind::ParameterViolation, what);
}

// Raw value of the dehomogenized form at an affine triple; the forms here
// are the exact (non-normalized) polynomials of the identities.
Rat value_at(const Form& f, const std::array<Rat, 3>& p) { return f.evaluate(p); }

Form raw_congruence_form(const Rat& a, long b) {
    Form inner = X().pow(2) * Z() + a * X() * Y().pow(2) + Y().pow(3);
    return Y().pow(static_cast<unsigned>(3 * b + 1)) + X() * inner.pow(static_cast<unsigned>(b));
}

Form raw_line_curve_form(const Rat& a, long b) {
    Form inner = X().pow(2) * Y() + a * X() * Z().pow(2) + Z().pow(3);
    return Z().pow(static_cast<unsigned>(3 * b + 1)) + X() * inner.pow(static_cast<unsigned>(b));
}

// The congruence point for a given t; verifies that the third coordinate is
// an S-integer.
ConstructedPoint congruence_with_t(const Rat& a, long b, const UnitParam& up, const Rat& t) {
    const Rat& u = up.u;
    Rat um1 = u - 1;
    Rat tb = pow(t, b);
    Rat x = um1 / tb;
    Rat z = tb * (tb * t - tb - a * um1) / (um1 * um1);
    if (!is_s_unit(Rat(z.get_den()), up.s))
        throw Error(ErrorKind::CongruenceFailure,
                    "t^{b+1} - t^b - a(u-1) is not divisible by (u-1)^2 for u = " + to_string(u));
    std::array<Rat, 3> affine{x, Rat(1), z};
    Rat value = value_at(raw_congruence_form(a, b), affine);
    if (value != u) throw Error(ErrorKind::CongruenceFailure, "identity F(P) = u failed");
    return {reduce_point(affine), affine, u, t, value};
}

void check_congruence_params(long a, long b, const UnitParam& u) {
    u.validate();
    require(a >= 0, "a must be a natural number");
    require(b >= 2, "b must be at least 2");
    if (u.u == 1) throw Error(ErrorKind::InvalidInput, "u = 1 gives no point");
}

}  // namespace

void UnitParam::validate() const {
    if (!is_s_unit(u, s))
        throw Error(ErrorKind::InvalidInput, to_string(u) + " is not an S-unit for S = {" + s.to_string() + "}");
}

Form third_type_form(long alpha) {
    require(alpha >= 2, "alpha must be at least 2");
    return Y().pow(static_cast<unsigned>(2 * alpha + 1)) +
           X() * (X() * Z() + Y().pow(2)).pow(static_cast<unsigned>(alpha));
}

Form congruence_form(const Rat& a, long b) {
    require(b >= 2, "b must be at least 2");
    return raw_congruence_form(a, b).primitive();
}

Form line_curve_form(const Rat& a, long b) {
    require(b >= 2, "b must be at least 2");
    return raw_line_curve_form(a, b).primitive();
}

FactoredDivisor line_curve_divisor(const Rat& a, long b) {
    return FactoredDivisor({{Z(), 1, true, false}, {line_curve_form(a, b), 1, false, false}});
}

ConstructedPoint third_type_point(long alpha, const UnitParam& up, long m) {
    up.validate();
    require(alpha >= 2, "alpha must be at least 2");
    require(m >= 1, "m must be at least 1");
    const Rat& u = up.u;
    std::array<Rat, 3> affine;
    if (u == 1) {
        affine = {Rat(0), Rat(1), Rat(m)};
    } else {
        Rat uam = pow(u, alpha * m);
        affine = {(u - 1) / uam, Rat(1), (pow(u, m) - 1) / (u - 1) * uam};
    }
    Rat value = value_at(third_type_form(alpha), affine);
    if (value != u) throw Error(ErrorKind::CongruenceFailure, "identity F(P) = u failed");
    return {reduce_point(affine), affine, u, Rat(1), value};
}

ConstructedPoint congruence_point(long a, long b, const UnitParam& u) {
    check_congruence_params(a, b, u);
    return congruence_with_t(Rat(a), b, u, pow(u.u, a));
}

ConstructedPoint line_curve_congruence_point(long a, long b, const UnitParam& u) {
    ConstructedPoint c = congruence_point(a, b, u);
    std::array<Rat, 3> swapped{c.affine[0], c.affine[2], c.affine[1]};
    c.value = value_at(raw_line_curve_form(Rat(a), b), swapped);
    if (c.value != u.u) throw Error(ErrorKind::CongruenceFailure, "identity C(P) = u failed");
    c.affine = swapped;
    c.point = reduce_point(swapped);
    return c;
}

ConstructedPoint general_congruence_point(const Rat& a, long b, const UnitParam& u) {
    u.validate();
    require(b >= 2, "b must be at least 2");
    require(is_s_unit(Rat(a.get_den()), u.s), "a must be an S-integer");
    if (u.u == 1) throw Error(ErrorKind::InvalidInput, "u = 1 gives no point");
    // O_S / (u - 1) is Z / N with N the part of the numerator of u - 1 prime
    // to S; a is congruent to a natural number m modulo N.
    Rat um1 = u.u - 1;
    Int n = remove_s_part(um1.get_num(), u.s).residual;
    Int m = 0;
    if (n > 1) {
        Int inv;
        mpz_invert(inv.get_mpz_t(), a.get_den_mpz_t(), n.get_mpz_t());
        m = a.get_num() * inv;
        mpz_mod(m.get_mpz_t(), m.get_mpz_t(), n.get_mpz_t());
    }
    if (a.get_den() == 1 && a >= 0) m = a.get_num();
    if (!m.fits_slong_p()) throw Error(ErrorKind::InvalidInput, "congruence exponent too large");
    return congruence_with_t(a, b, u, pow(u.u, m.get_si()));
}

FactoredDivisor stream_divisor(const StreamParams& params) {
    switch (params.mode) {
        case ConstructionMode::ThirdType: return FactoredDivisor::single(third_type_form(params.alpha));
        case ConstructionMode::Congruence:
        case ConstructionMode::GeneralCongruence: return FactoredDivisor::single(congruence_form(params.a, params.b));
        case ConstructionMode::LineCurve: return line_curve_divisor(params.a, params.b);
    }
    throw Error(ErrorKind::InvalidInput, "unknown construction mode");
}

namespace {

// Exponent vectors with maximum exactly k, ordered lexicographically with
// the last entry most significant.
std::vector<std::vector<long>> vectors_of_norm(std::size_t r, long k) {
    std::vector<std::vector<long>> out;
    std::vector<long> v(r, 0);
    for (;;) {
        if (*std::max_element(v.begin(), v.end()) == k) out.push_back(v);
        std::size_t i = 0;
        while (i < r && v[i] == k) v[i++] = 0;
        if (i == r) break;
        ++v[i];
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        return std::lexicographical_compare(x.rbegin(), x.rend(), y.rbegin(), y.rend());
    });
    return out;
}

template <class Visit>
void for_each_unit(const PlaceSet& s, long max_exponent, Visit&& visit) {
    const auto& primes = s.primes();
    for (long k = 1; k <= max_exponent; ++k)
        for (const auto& v : vectors_of_norm(primes.size(), k)) {
            Int u = 1;
            for (std::size_t i = 0; i < v.size(); ++i) u *= pow(primes[i], static_cast<unsigned long>(v[i]));
            if (!visit(u)) return;
        }
}

}  // namespace

std::vector<Int> unit_sequence(const PlaceSet& s, std::size_t limit, long max_exponent) {
    std::vector<Int> out;
    if (s.empty() || limit == 0) return out;
    for_each_unit(s, max_exponent, [&](const Int& u) {
        out.push_back(u);
        return out.size() < limit;
    });
    return out;
}

std::vector<ConstructedPoint> generalized_unit_stream(const StreamParams& params, const PlaceSet& s,
                                                      std::size_t count) {
    if (s.empty())
        throw Error(ErrorKind::ExhaustedSearch, "S has no finite places, so the only units are 1 and -1");
    FactoredDivisor d = stream_divisor(params);
    std::vector<ConstructedPoint> out;
    if (count == 0) return out;
    for_each_unit(s, params.max_exponent, [&](const Int& unit) {
        UnitParam up{Rat(unit), s};
        ConstructedPoint c = [&] {
            switch (params.mode) {
                case ConstructionMode::ThirdType: return third_type_point(params.alpha, up, params.m);
                case ConstructionMode::GeneralCongruence: return general_congruence_point(params.a, params.b, up);
                default: break;
            }
            if (params.a.get_den() != 1 || !params.a.get_num().fits_slong_p())
                throw Error(ErrorKind::ParameterViolation, "a must be a natural number");
            long a = params.a.get_num().get_si();
            return params.mode == ConstructionMode::Congruence ? congruence_point(a, params.b, up)
                                                               : line_curve_congruence_point(a, params.b, up);
        }();
        for (const auto& prev : out)
            if (prev.point == c.point) return true;
        if (d.on_support(c.point) || !is_s_integral(d, c.point, s))
            throw Error(ErrorKind::CongruenceFailure, "constructed point " + c.point.to_string() + " is not S-integral");
        out.push_back(std::move(c));
        return out.size() < count;
    });
    if (out.size() < count)
        throw Error(ErrorKind::ExhaustedSearch, "only " + std::to_string(out.size()) + " points with exponents up to " +
                                                    std::to_string(params.max_exponent));
    return out;
}

}  // namespace plint

#include "plint/families.hpp"

#include <algorithm>
#include <numeric>

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

Form power(const Form& f, long k) { return f.pow(static_cast<unsigned>(k)); }

[[noreturn]] void violation(const std::string& what) { throw Error(ErrorKind::ParameterViolation, what); }

void require(bool ok, const std::string& what) {
    if (!ok) violation(what);
}

long as_integer(const Rat& r, const char* name) {
    if (r.get_den() != 1 || !r.get_num().fits_slong_p())
        violation(std::string(name) + " must be a machine-size integer");
    return r.get_num().get_si();
}

std::vector<Rat> trimmed(std::vector<Rat> v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
}

// A member of a pencil as a list of (form, multiplicity). Forms are kept
// primitive and distinct.
struct FactorList {
    std::vector<std::pair<Form, long>> items;
    std::vector<bool> irreducible;

    Rat unit = 1;

    void add(const Form& f, long mult, bool irr = false) {
        if (mult == 0) return;
        if (f.degree() == 0) {
            unit *= pow(f.leading_coefficient(), mult);
            return;
        }
        Form p = f.primitive();
        unit *= pow(Rat(f.leading_coefficient() / p.leading_coefficient()), mult);
        for (std::size_t i = 0; i < items.size(); ++i)
            if (items[i].first == p) {
                items[i].second += mult;
                return;
            }
        items.emplace_back(p, mult);
        irreducible.push_back(irr || p.degree() == 1);
    }

    // The exact product, including the constant factor.
    Form product() const {
        Form r = Form::constant(unit);
        for (const auto& [f, m] : items) r = r * power(f, m);
        return r;
    }

    FactoredDivisor divisor() const {
        std::vector<DivisorFactor> fs;
        for (std::size_t i = 0; i < items.size(); ++i)
            fs.push_back({items[i].first, items[i].second, static_cast<bool>(irreducible[i]), false});
        return FactoredDivisor(std::move(fs));
    }

    // Replaces every factor l by l o tau, splitting off the X-power.
    FactorList transformed(const DeJonquieres& tau) const {
        FactorList out;
        out.unit = unit;
        auto comps = tau.components();
        for (std::size_t i = 0; i < items.size(); ++i) {
            auto fm = extract_factor_multiplicity(compose(items[i].first, comps), X());
            out.add(X(), static_cast<long>(fm.multiplicity) * items[i].second, true);
            out.add(fm.residual, items[i].second, false);
        }
        return out;
    }
};

std::vector<ProjPoint> coordinate_base_points(const Form& f, const Form& g) {
    std::vector<ProjPoint> out;
    for (auto p : {ProjPoint::from_integers(1, 0, 0), ProjPoint::from_integers(0, 1, 0),
                   ProjPoint::from_integers(0, 0, 1)})
        if (f.evaluate(p) == 0 && g.evaluate(p) == 0) out.push_back(p);
    return out;
}

// Pencil <F1, F2> whose members [1:0], [0:1] factor as given and whose member
// [1:c] is `third`.
Pencil make_pencil(const FactorList& f1, const FactorList& f2, const P1Point& third_param, const FactorList& third) {
    Form f = f1.product(), g = f2.product();
    std::vector<SpecialMember> special{{P1Point::from_integers(1, 0), f1.divisor()},
                                       {P1Point::from_integers(0, 1), f2.divisor()},
                                       {third_param, third.divisor()}};
    auto witnesses = coordinate_base_points(f, g);
    return Pencil(f, g, std::move(special), std::move(witnesses));
}

Form binary_form(const std::vector<Rat>& coeffs, int degree) {
    // sum c_i X^i Z^{degree-i}
    Form::TermMap t;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        if (coeffs[i] != 0) t.emplace(Exponent{static_cast<int>(i), 0, degree - static_cast<int>(i)}, coeffs[i]);
    return Form::from_terms(degree, t);
}

std::optional<Rat> rational_root(const Rat& q, unsigned long k) {
    auto int_root = [k](const Int& n) -> std::optional<Int> {
        Int r;
        if (mpz_root(r.get_mpz_t(), n.get_mpz_t(), k) == 0) return std::nullopt;
        return r;
    };
    Rat mag = abs(q);
    auto num = int_root(mag.get_num());
    auto den = int_root(mag.get_den());
    if (!num || !den) return std::nullopt;
    Rat r = make_rat(*num, *den);
    if (q < 0) {
        if (k % 2 == 0) return std::nullopt;
        r = -r;
    }
    return r;
}

}  // namespace

Form j_form(const std::vector<Rat>& v) {
    if (v.size() < 2) throw Error(ErrorKind::EmptyVector, "J needs at least two coefficients");
    const int n = static_cast<int>(v.size()) - 1;
    Form::TermMap t;
    t.emplace(Exponent{n, 0, 1}, Rat(1));
    for (int j = 1; j <= n + 1; ++j) {
        const Rat& c = v[static_cast<std::size_t>(j - 1)];
        if (c == 0) continue;
        auto [it, inserted] = t.emplace(Exponent{n + 1 - j, j, 0}, c);
        if (!inserted) it->second += c;
    }
    return Form::from_terms(n + 1, t);
}

void DeJonquieres::validate() const {
    require(avec.size() >= 2, "a De Jonquieres transformation needs m >= 1");
    require(avec.back() != 0, "the last coefficient of a De Jonquieres vector must be nonzero");
}

std::array<Form, 3> DeJonquieres::components() const {
    validate();
    const unsigned mm = static_cast<unsigned>(m());
    return {X().pow(mm + 1), j_form(avec), X().pow(mm) * Y()};
}

Form strict_transform(const Form& f, const DeJonquieres& tau) {
    if (f.is_zero() || f.degree() < 1) throw Error(ErrorKind::InvalidInput, "strict transform of a constant");
    auto own = extract_factor_multiplicity(f, X());
    Form rest = own.residual;
    Form out = X().pow(static_cast<unsigned>(own.multiplicity));
    if (rest.degree() > 0) rest = extract_factor_multiplicity(compose(rest, tau.components()), X()).residual;
    return out * rest;
}

std::string_view to_string(FamilyId id) noexcept {
    switch (id) {
        case FamilyId::TonoBicusp1: return "TONO_BICUSP_1";
        case FamilyId::TonoBicusp2: return "TONO_BICUSP_2";
        case FamilyId::TonoBicusp3: return "TONO_BICUSP_3";
        case FamilyId::TonoUnicuspI: return "TONO_UNICUSP_I";
        case FamilyId::TonoUnicuspII: return "TONO_UNICUSP_II";
        case FamilyId::TonoUnicuspIII: return "TONO_UNICUSP_III";
        case FamilyId::AokiI: return "AOKI_I";
        case FamilyId::AokiII: return "AOKI_II";
        case FamilyId::AokiIII: return "AOKI_III";
        case FamilyId::AokiIV: return "AOKI_IV";
        case FamilyId::Yoshihara: return "YOSHIHARA";
    }
    return "?";
}

FamilyId parse_family_id(const std::string& name) {
    for (int i = 0; i <= static_cast<int>(FamilyId::Yoshihara); ++i) {
        auto id = static_cast<FamilyId>(i);
        if (to_string(id) == name) return id;
    }
    throw Error(ErrorKind::InvalidInput, "unknown family \"" + name + "\"");
}

FamilyCurve tono_bicuspidal(const FamilySpec& spec) {
    const long a0 = spec.alpha0, a1 = spec.alpha1;
    require(1 < a0 && a0 < a1, "need 1 < alpha0 < alpha1");
    require(std::gcd(a0, a1) == 1, "alpha0 and alpha1 must be coprime");
    for (const auto& tau : spec.chain) tau.validate();

    FactorList f1, f2;
    switch (spec.family) {
        case FamilyId::TonoBicusp1:
            f1.add(Y(), a1);
            f2.add(X(), a1 - a0);
            f2.add(Z() + spec.a * Y(), a0);
            break;
        case FamilyId::TonoBicusp2:
        case FamilyId::TonoBicusp3: {
            require(spec.avec.size() >= 2, "the J vector needs n >= 1");
            require(spec.avec.back() != 0, "a_{n+1} must be nonzero");
            const long n = static_cast<long>(spec.avec.size()) - 1;
            Form j = j_form(spec.avec);
            if (spec.family == FamilyId::TonoBicusp2) {
                require(a1 < (n + 1) * a0, "need alpha1 < (n+1) alpha0");
                f1.add(j, a0, true);
                f2.add(X(), (n + 1) * a0 - a1);
                f2.add(Y(), a1);
            } else {
                require((n + 1) * a0 < a1, "need (n+1) alpha0 < alpha1");
                f1.add(Y(), a1);
                f2.add(X(), a1 - (n + 1) * a0);
                f2.add(j, a0, true);
            }
            break;
        }
        default:
            violation("not a bicuspidal family");
    }

    Form d = f1.product() + f2.product();
    for (auto it = spec.chain.rbegin(); it != spec.chain.rend(); ++it) {
        d = strict_transform(d, *it);
        f1 = f1.transformed(*it);
        f2 = f2.transformed(*it);
    }
    d = d.primitive();
    Form sum = f1.product() + f2.product();
    auto split = extract_factor_multiplicity(sum, X());
    if (!are_proportional(split.residual, d))
        throw Error(ErrorKind::NotDivisible, "member does not split as a power of X times the curve");
    FactorList third;
    third.add(X(), split.multiplicity);
    third.add(d, 1, true);
    return {FactoredDivisor({{d, 1, true, false}}), d, make_pencil(f1, f2, P1Point::from_integers(1, 1), third)};
}

FamilyCurve tono_unicuspidal(const FamilySpec& spec) {
    const long n = spec.n, s = spec.s;
    FactorList f1, f2, third;
    Form lhs, rhs, divisor_of;
    long div_mult = n;
    switch (spec.family) {
        case FamilyId::TonoUnicuspI: {
            require(n >= 2 && s >= 2, "need n, s >= 2");
            require(static_cast<long>(spec.coeffs.size()) == s - 1, "need coefficients a_2, ..., a_s");
            require(spec.coeffs.back() != 0, "a_s must be nonzero");
            Form f = X().pow(static_cast<unsigned>(n)) * Z() + Y().pow(static_cast<unsigned>(n + 1));
            Form a = power(f, s - 1) * Y();
            for (long i = 2; i <= s; ++i)
                a += spec.coeffs[static_cast<std::size_t>(i - 2)] * power(f, s - i) * power(X(), (n + 1) * i - n);
            const long mu_a = n + 1, mu_g = (n + 1) * (s - 1) + 1;
            f1.add(a, mu_a);
            f2.add(f, mu_g, true);
            lhs = power(a, mu_a);
            rhs = power(f, mu_g);
            divisor_of = X();
            break;
        }
        case FamilyId::TonoUnicuspII: {
            require(n >= 2, "need n >= 2");
            Form g = X() * Z() - Y().pow(2);
            Form gn = power(g, n);
            Form a = gn * Y() + power(X(), 2 * n + 1);
            Form h = power(g, 2 * n) * Z() + Rat(2) * power(X(), 2 * n) * Y() * gn + power(X(), 4 * n + 1);
            const long mu_a = 4 * n + 1, mu_g = 2 * n + 1;
            f1.add(a, mu_a);
            f2.add(h, mu_g);
            lhs = power(a, mu_a);
            rhs = power(h, mu_g);
            divisor_of = g;
            break;
        }
        case FamilyId::TonoUnicuspIII: {
            require(n >= 2 && s >= 1, "need n >= 2 and s >= 1");
            require(static_cast<long>(spec.coeffs.size()) == s, "need coefficients a_1, ..., a_s");
            require(spec.coeffs.back() != 0, "a_s must be nonzero");
            const long m = 4 * n + 1;
            Form g = X() * Z() - Y().pow(2);
            Form gn = power(g, n);
            Form h = power(g, 2 * n) * Z() + Rat(2) * power(X(), 2 * n) * Y() * gn + power(X(), m);
            Form b = power(h, 2 * s - 1) * (gn * Y() + power(X(), 2 * n + 1));
            for (long i = 1; i <= s; ++i)
                b += spec.coeffs[static_cast<std::size_t>(i - 1)] * power(h, 2 * (s - i)) * power(g, m * i - n);
            const long mu_a = m, mu_g = 2 * (m * s - n);
            f1.add(b, mu_a);
            f2.add(h, mu_g);
            lhs = power(b, mu_a);
            rhs = power(h, mu_g);
            divisor_of = g;
            break;
        }
        default:
            violation("not a unicuspidal family");
    }
    Form d = exact_divide(lhs - rhs, power(divisor_of, div_mult)).primitive();
    third.add(divisor_of, div_mult, true);
    third.add(d, 1, true);
    return {FactoredDivisor({{d, 1, true, false}}), d, make_pencil(f1, f2, P1Point::from_integers(1, -1), third)};
}

FamilyCurve aoki_curve(const FamilySpec& spec) {
    FactorList f1, f2;
    Form c;
    P1Point third_param = P1Point::from_integers(1, 1);
    switch (spec.family) {
        case FamilyId::AokiI: {
            const long a = as_integer(spec.a, "a"), b = spec.b;
            require(a > 1 && b > 1 && std::gcd(a, b) == 1, "need a, b > 1 coprime");
            f1.add(X(), a);
            f1.add(Y(), b);
            f2.add(Z(), a + b);
            c = f1.product() + f2.product();
            break;
        }
        case FamilyId::AokiII: {
            const long a = as_integer(spec.a, "a"), b = spec.b, l = spec.l;
            require(a > 0 && b > 1 && l > 0 && std::gcd(a, b) == 1, "need a > 0, b > 1, l > 0, gcd(a, b) = 1");
            auto p = trimmed(spec.p);
            require(!p.empty() && p.front() != 0, "need p(0) != 0");
            require(static_cast<long>(p.size()) - 1 < l, "need deg p < l");
            Form q = power(X(), l) * Y() + binary_form(p, static_cast<int>(l + 1));
            f1.add(X(), a);
            f1.add(q, b, true);
            f2.add(Z(), a + b * (l + 1));
            c = f1.product() + f2.product();
            break;
        }
        case FamilyId::AokiIII: {
            auto a0 = trimmed(spec.a0), a1 = trimmed(spec.a1);
            require(!a0.empty() && !a1.empty(), "a0 and a1 must be nonzero");
            const int d0 = static_cast<int>(a0.size()) - 1, d1 = static_cast<int>(a1.size()) - 1;
            require(d1 < d0, "need deg a1 < deg a0");
            Form h0 = binary_form(a0, d0), h1 = binary_form(a1, d1);
            require(d1 == 0 || gcd(h0, h1).degree() == 0, "a0 and a1 must be coprime");
            require(squarefree_part(h0).degree() >= 2, "a0 needs at least two distinct roots");
            c = h0 * Y() + h1 * power(Z(), 1 + d0 - d1);
            // No pencil is attached to this case; the pencil of lines through
            // [0:1:0] records only the line Z as a special member.
            FactorList z;
            z.add(Z(), 1);
            std::vector<SpecialMember> special{{P1Point::from_integers(0, 1), z.divisor()}};
            Pencil pencil(X(), Z(), std::move(special), {ProjPoint::from_integers(0, 1, 0)});
            c = c.primitive();
            return {FactoredDivisor({{Z(), 1, true, false}, {c, 1, true, false}}), c, std::move(pencil)};
        }
        case FamilyId::AokiIV: {
            const long a = as_integer(spec.a, "a"), b = spec.b;
            require(a > 1 && b > 1 && std::gcd(a, b) == 1, "need a, b > 1 coprime");
            if (a < b) {
                f1.add(X(), a);
                f1.add(Z(), b - a);
                f2.add(Y(), b);
            } else {
                f1.add(X(), a);
                f2.add(Y(), b);
                f2.add(Z(), a - b);
            }
            c = f1.product() - f2.product();
            third_param = P1Point::from_integers(1, -1);
            break;
        }
        default:
            violation("not an Aoki family");
    }
    c = c.primitive();
    FactorList third;
    third.add(c, 1, true);
    return {FactoredDivisor({{Z(), 1, true, false}, {c, 1, true, false}}), c,
            make_pencil(f1, f2, third_param, third)};
}

FamilyCurve yoshihara_quintic() {
    Form g = Y() * Z() - X().pow(2);
    Form f = g * (Y() * Z().pow(2) - X().pow(2) * Z() - Rat(2) * X() * Y().pow(2)) + Y().pow(5);
    FactorList f1, f2, third;
    f1.add(f, 2, true);
    f2.add(g, 5, true);
    third.add(f.pow(2) + g.pow(5), 1, true);
    return {FactoredDivisor({{f, 1, true, false}}), f.primitive(),
            make_pencil(f1, f2, P1Point::from_integers(1, 1), third)};
}

FamilyCurve generate_family(const FamilySpec& spec) {
    switch (spec.family) {
        case FamilyId::TonoBicusp1:
        case FamilyId::TonoBicusp2:
        case FamilyId::TonoBicusp3: return tono_bicuspidal(spec);
        case FamilyId::TonoUnicuspI:
        case FamilyId::TonoUnicuspII:
        case FamilyId::TonoUnicuspIII: return tono_unicuspidal(spec);
        case FamilyId::AokiI:
        case FamilyId::AokiII:
        case FamilyId::AokiIII:
        case FamilyId::AokiIV: return aoki_curve(spec);
        case FamilyId::Yoshihara: return yoshihara_quintic();
    }
    violation("unknown family");
}

CompanionCubic attempt_companion_cubic(const Form& f5, const Form& l3) {
    require(f5.degree() == 5 && !f5.is_zero(), "F5 must be a nonzero quintic");
    for (const auto& [e, c] : f5.terms()) require(e[2] == 0, "F5 must not involve Z");
    require(l3.degree() == 1 && !l3.is_zero() && l3.coefficient({0, 0, 1}) == 0, "L3 must be a linear form in X, Y");
    Form f = f5 + X() * Y() * l3.pow(2) * Z();
    auto a = rational_root(f5.coefficient({5, 0, 0}), 5);
    auto b = rational_root(f5.coefficient({0, 5, 0}), 5);
    if (!a || !b) throw Error(ErrorKind::IrrationalRoot, "the fifth roots of the X^5 and Y^5 coefficients are not rational");
    Form lin = *a * X() + *b * Y();
    Form g = exact_divide(f - lin.pow(5), X() * Y());
    return {f, g, *a, *b};
}

}  // namespace plint

#include "plint/heights.hpp"

#include <algorithm>
#include <cmath>

namespace plint {

namespace {

double log_of(const Int& n) {
    long exp = 0;
    double mant = mpz_get_d_2exp(&exp, n.get_mpz_t());
    return std::log(mant) + static_cast<double>(exp) * std::log(2.0);
}

Int abs_value_at(const Form& f, const ProjPoint& p) {
    Int v = f.evaluate_integer(p);
    if (v == 0) throw Error(ErrorKind::OnDivisor, p.to_string() + " lies on " + f.to_string());
    return abs(v);
}

}  // namespace

LogSum LogSum::term(const Int& base, const Int& coeff) {
    if (base <= 0) throw Error(ErrorKind::InvalidInput, "logarithm of a nonpositive number");
    LogSum s;
    if (base != 1 && coeff != 0) s.terms_.emplace(base, coeff);
    return s;
}

LogSum& LogSum::operator+=(const LogSum& other) {
    for (const auto& [b, c] : other.terms_) {
        auto [it, inserted] = terms_.emplace(b, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

LogSum& LogSum::operator-=(const LogSum& other) { return *this += (Int(-1) * other); }

LogSum operator*(const Int& c, LogSum a) {
    if (c == 0) return {};
    for (auto& [b, v] : a.terms_) v *= c;
    return a;
}

Rat LogSum::exp_value() const {
    Int num = 1, den = 1;
    for (const auto& [b, c] : terms_) {
        if (!Int(abs(c)).fits_ulong_p())
            throw Error(ErrorKind::InvalidInput, "log coefficient too large to exponentiate");
        if (c > 0) {
            num *= pow(b, c.get_ui());
        } else {
            den *= pow(b, Int(-c).get_ui());
        }
    }
    return make_rat(num, den);
}

bool LogSum::same_value(const LogSum& other) const { return (*this - other).exp_value() == 1; }

double LogSum::approx() const {
    double v = 0;
    for (const auto& [b, c] : terms_) v += c.get_d() * log_of(b);
    return v;
}

std::string LogSum::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [b, c] : terms_) {
        Int mag = abs(c);
        if (first) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        first = false;
        if (mag != 1) out += mag.get_str() + "*";
        out += "log(" + b.get_str() + ")";
    }
    return out;
}

void require_primitive(const Form& f) {
    if (f.is_zero() || !f.has_integer_coefficients() || f.content() != 1)
        throw Error(ErrorKind::NotPrimitive, f.to_string() + " is not a primitive integer form");
}

LocalHeight local_height(const Form& f, const ProjPoint& p, const Int& prime) {
    require_primitive(f);
    if (!is_prime(prime)) throw Error(ErrorKind::NotPrime, prime.get_str() + " is not prime");
    return {prime, valuation(abs_value_at(f, p), prime), true};
}

LocalHeight truncated_local_height(const Form& f, const ProjPoint& p, const Int& prime) {
    LocalHeight h = local_height(f, p, prime);
    h.exponent = std::min(h.exponent, 1L);
    return h;
}

std::vector<LocalHeight> finite_local_heights(const Form& f, const ProjPoint& p) {
    require_primitive(f);
    IntFactorization fac = factor_integer(abs_value_at(f, p));
    std::vector<LocalHeight> out;
    for (const auto& [q, e] : fac.primes) out.push_back({q, e, true});
    for (const auto& [q, e] : fac.unsplit) out.push_back({q, e, false});
    std::sort(out.begin(), out.end(), [](const LocalHeight& a, const LocalHeight& b) { return a.base < b.base; });
    return out;
}

LogSum archimedean_local_height(const Form& f, const ProjPoint& p) {
    require_primitive(f);
    Int value = abs_value_at(f, p);
    return LogSum::term(coefficient_max(f)) + LogSum::term(p.max_abs_coord(), f.degree()) - LogSum::term(value);
}

LogSum point_height(const ProjPoint& p) { return LogSum::term(p.max_abs_coord()); }

Int coefficient_max(const Form& f) {
    Int m = 0;
    for (const auto& [e, c] : f.terms()) {
        if (c.get_den() != 1) throw Error(ErrorKind::NotPrimitive, "coefficients must be integers");
        if (abs(c.get_num()) > m) m = abs(c.get_num());
    }
    return m;
}

LogSum divisor_height(const Form& f, const ProjPoint& p) {
    require_primitive(f);
    abs_value_at(f, p);
    return LogSum::term(p.max_abs_coord(), f.degree()) + LogSum::term(coefficient_max(f));
}

bool is_s_integral(const FactoredDivisor& d, const ProjPoint& p, const PlaceSet& s) {
    bool integral = true;
    // Every factor is checked for vanishing even after a bad prime is found,
    // since points on the support are an error rather than "false".
    for (const auto& f : d.factors()) {
        Int v = abs_value_at(f.form, p);
        if (integral && remove_s_part(v, s).residual != 1) integral = false;
    }
    return integral;
}

HeightReport height_report(const FactoredDivisor& d, const ProjPoint& p, const PlaceSet& s) {
    if (d.empty()) throw Error(ErrorKind::InvalidInput, "empty divisor");
    HeightReport r{p, d.product().primitive(), {}, false, p.max_abs_coord(), 0, 0, {}};
    r.s_integral = is_s_integral(d, p, s);
    r.local = finite_local_heights(r.divisor_form, p);
    r.coeff_max = coefficient_max(r.divisor_form);
    r.degree = r.divisor_form.degree();
    r.global_log = divisor_height(r.divisor_form, p);
    return r;
}

}  // namespace plint

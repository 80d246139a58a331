#pragma once

#include <map>
#include <string>
#include <vector>

#include "plint/core.hpp"
#include "plint/forms.hpp"

namespace plint {

/// An exact combination sum c_i * log(b_i) with integer coefficients and
/// integer bases b_i >= 2. Zero coefficients are never stored.
class LogSum {
public:
    LogSum() = default;
    /// c * log(base); base must be positive. log(1) contributes nothing.
    static LogSum term(const Int& base, const Int& coeff = 1);

    const std::map<Int, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    LogSum& operator+=(const LogSum& other);
    LogSum& operator-=(const LogSum& other);
    friend LogSum operator+(LogSum a, const LogSum& b) { return a += b; }
    friend LogSum operator-(LogSum a, const LogSum& b) { return a -= b; }
    friend LogSum operator*(const Int& c, LogSum a);

    /// Exact equality of the real numbers represented, decided by comparing
    /// prod b^c on both sides (so log 4 == 2 log 2).
    bool same_value(const LogSum& other) const;
    /// The positive rational exp(value).
    Rat exp_value() const;
    /// Floating-point approximation, for presentation only.
    double approx() const;
    /// "3*log(2) - log(5)"; "0" when empty.
    std::string to_string() const;

private:
    std::map<Int, Int> terms_;
};

/// exponent * log(base) at a finite place. `base` is a prime, except when the
/// factorization budget ran out, in which case it is a composite cofactor
/// coprime to every other listed base and `is_prime` is false.
struct LocalHeight {
    Int base;
    long exponent = 0;
    bool is_prime = true;
};

/// Throws NotPrimitive unless f has integer coefficients with content 1.
void require_primitive(const Form& f);

/// v_p(f(P)) * log p. Throws OnDivisor, NotPrimitive or NotPrime.
LocalHeight local_height(const Form& f, const ProjPoint& p, const Int& prime);
/// min(v_p(f(P)), 1) * log p.
LocalHeight truncated_local_height(const Form& f, const ProjPoint& p, const Int& prime);

/// All finite local heights with positive exponent, ordered by base.
std::vector<LocalHeight> finite_local_heights(const Form& f, const ProjPoint& p);

/// log |f|_inf + deg(f) * log max|x_i| - log |f(P)|, the archimedean term of
/// the canonical local height. Throws OnDivisor, NotPrimitive.
LogSum archimedean_local_height(const Form& f, const ProjPoint& p);

/// log max_i |x_i|.
LogSum point_height(const ProjPoint& p);

/// Largest absolute coefficient of an integer form.
Int coefficient_max(const Form& f);

/// deg(f) * h(P) + log |f|_inf, which equals the sum of all local heights.
LogSum divisor_height(const Form& f, const ProjPoint& p);

/// True iff every prime dividing f(P) is in S, f the primitive product of the
/// factors of D. Multiplicities play no role. Throws OnDivisor.
bool is_s_integral(const FactoredDivisor& d, const ProjPoint& p, const PlaceSet& s);

struct HeightReport {
    ProjPoint point;
    Form divisor_form;  // primitive product of D's factors with multiplicity
    std::vector<LocalHeight> local;
    bool s_integral = false;
    Int max_abs_coord;
    Int coeff_max;
    int degree = 0;
    LogSum global_log;  // the divisor height
};

HeightReport height_report(const FactoredDivisor& d, const ProjPoint& p, const PlaceSet& s);

}  // namespace plint

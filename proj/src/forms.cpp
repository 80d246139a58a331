#include "plint/forms.hpp"

#include <algorithm>
#include <numeric>

#include "poly_gcd.hpp"

namespace plint {

namespace {

void check_axis(int axis) {
    if (axis < 0 || axis > 2) throw Error(ErrorKind::InvalidInput, "axis must be 0, 1 or 2");
}

Exponent add(const Exponent& a, const Exponent& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }

bool divides(const Exponent& small, const Exponent& big) {
    return small[0] <= big[0] && small[1] <= big[1] && small[2] <= big[2];
}

Exponent sub(const Exponent& a, const Exponent& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }

// Power tables x^0..x^d for each coordinate.
template <class T>
std::array<std::vector<T>, 3> power_tables(const std::array<T, 3>& at, int d) {
    std::array<std::vector<T>, 3> pw;
    for (std::size_t a = 0; a < 3; ++a) {
        pw[a].reserve(static_cast<std::size_t>(d) + 1);
        pw[a].push_back(T(1));
        for (int k = 1; k <= d; ++k) pw[a].push_back(pw[a].back() * at[a]);
    }
    return pw;
}

}  // namespace

// ---------------------------------------------------------------------------

Form Form::zero(int degree) {
    if (degree < 0) throw Error(ErrorKind::InvalidInput, "negative degree");
    Form f;
    f.degree_ = degree;
    return f;
}

Form Form::constant(const Rat& c) { return monomial({0, 0, 0}, c); }

Form Form::var(int axis) {
    check_axis(axis);
    Exponent e{0, 0, 0};
    e[static_cast<std::size_t>(axis)] = 1;
    return monomial(e);
}

Form Form::monomial(const Exponent& e, const Rat& c) {
    if (e[0] < 0 || e[1] < 0 || e[2] < 0) throw Error(ErrorKind::InvalidInput, "negative exponent");
    Form f;
    f.degree_ = e[0] + e[1] + e[2];
    if (c != 0) f.terms_.emplace(e, c);
    return f;
}

Form Form::from_terms(int degree, const TermMap& terms) {
    Form f = zero(degree);
    for (const auto& [e, c] : terms) {
        if (e[0] < 0 || e[1] < 0 || e[2] < 0) throw Error(ErrorKind::InvalidInput, "negative exponent");
        if (e[0] + e[1] + e[2] != degree)
            throw Error(ErrorKind::DegreeMismatch, "monomial degree does not match form degree " +
                                                     std::to_string(degree));
        if (c != 0) f.terms_.emplace(e, c);
    }
    return f;
}

Rat Form::coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
}

int Form::order_in(int axis) const {
    check_axis(axis);
    if (terms_.empty()) return 0;
    int m = degree_;
    for (const auto& [e, c] : terms_) m = std::min(m, e[static_cast<std::size_t>(axis)]);
    return m;
}

Rat Form::evaluate(const std::array<Rat, 3>& at) const {
    auto pw = power_tables(at, degree_);
    Rat sum = 0;
    for (const auto& [e, c] : terms_) sum += c * pw[0][e[0]] * pw[1][e[1]] * pw[2][e[2]];
    return sum;
}

Rat Form::evaluate(const ProjPoint& at) const {
    auto pw = power_tables(at.coords(), degree_);
    Rat sum = 0;
    for (const auto& [e, c] : terms_) {
        Int m = pw[0][e[0]] * pw[1][e[1]] * pw[2][e[2]];
        sum += c * m;
    }
    return sum;
}

Int Form::evaluate_integer(const ProjPoint& at) const {
    if (!has_integer_coefficients())
        throw Error(ErrorKind::InvalidInput, "evaluate_integer needs integer coefficients");
    auto pw = power_tables(at.coords(), degree_);
    Int sum = 0;
    Int m;
    for (const auto& [e, c] : terms_) {
        m = pw[0][e[0]] * pw[1][e[1]];
        m *= pw[2][e[2]];
        sum += c.get_num() * m;
    }
    return sum;
}

Form Form::derivative(int axis) const {
    check_axis(axis);
    const auto a = static_cast<std::size_t>(axis);
    Form d = zero(std::max(degree_ - 1, 0));
    for (const auto& [e, c] : terms_) {
        if (e[a] == 0) continue;
        Exponent ne = e;
        --ne[a];
        d.terms_.emplace(ne, c * e[a]);
    }
    return d;
}

Form Form::pow(unsigned exp) const {
    Form result = constant(1);
    Form base = *this;
    while (exp > 0) {
        if (exp & 1u) result = result * base;
        exp >>= 1u;
        if (exp > 0) base = base * base;
    }
    return result;
}

bool Form::has_integer_coefficients() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.get_den() == 1; });
}

Rat Form::content() const {
    if (terms_.empty()) return 0;
    Int num = 0, den = 1;
    for (const auto& [e, c] : terms_) {
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num_mpz_t());
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    }
    return make_rat(num, den);
}

Form Form::primitive() const {
    if (terms_.empty()) return *this;
    Rat c = content();
    if (leading_coefficient() < 0) c = -c;
    Form p = *this;
    for (auto& [e, v] : p.terms_) v /= c;
    return p;
}

std::string Form::to_string() const {
    if (terms_.empty()) return "0";
    static const char* names[3] = {"X", "Y", "Z"};
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rat mag = abs(c);
        if (first) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        first = false;
        std::string mono;
        for (std::size_t a = 0; a < 3; ++a) {
            if (e[a] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += names[a];
            if (e[a] > 1) mono += "^" + std::to_string(e[a]);
        }
        if (mono.empty()) {
            out += mag.get_str();
        } else if (mag == 1) {
            out += mono;
        } else {
            out += mag.get_str() + "*" + mono;
        }
    }
    return out;
}

Form Form::operator-() const {
    Form r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

Form& Form::operator+=(const Form& other) {
    if (other.terms_.empty()) return *this;
    if (terms_.empty()) {
        *this = other;
        return *this;
    }
    if (degree_ != other.degree_)
        throw Error(ErrorKind::DegreeMismatch, "adding forms of degree " + std::to_string(degree_) +
                                                   " and " + std::to_string(other.degree_));
    for (const auto& [e, c] : other.terms_) {
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

Form& Form::operator-=(const Form& other) { return *this += -other; }

Form& Form::operator*=(const Rat& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

Form operator*(const Form& a, const Form& b) {
    Form r = Form::zero(a.degree_ + b.degree_);
    if (a.terms_.empty() || b.terms_.empty()) return r;
    Rat prod;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            prod = ca * cb;
            Exponent e = add(ea, eb);
            auto it = r.terms_.lower_bound(e);
            if (it != r.terms_.end() && it->first == e) {
                it->second += prod;
            } else {
                r.terms_.emplace_hint(it, e, prod);
            }
        }
    }
    for (auto it = r.terms_.begin(); it != r.terms_.end();) {
        if (it->second == 0) {
            it = r.terms_.erase(it);
        } else {
            ++it;
        }
    }
    return r;
}

// ---------------------------------------------------------------------------

bool are_proportional(const Form& a, const Form& b) {
    if (a.is_zero() || b.is_zero() || a.degree() != b.degree() || a.size() != b.size()) return false;
    Rat ratio = a.leading_coefficient() / b.leading_coefficient();
    auto ia = a.terms().begin();
    for (auto ib = b.terms().begin(); ib != b.terms().end(); ++ib, ++ia) {
        if (ia->first != ib->first || ia->second != ratio * ib->second) return false;
    }
    return true;
}

Form compose(const Form& f, const std::array<Form, 3>& phi) {
    const int d = phi[0].degree();
    if (phi[1].degree() != d || phi[2].degree() != d)
        throw Error(ErrorKind::DegreeMismatch, "substituted forms must share one degree");
    std::array<std::vector<Form>, 3> pw;
    for (std::size_t a = 0; a < 3; ++a) {
        pw[a].push_back(Form::constant(1));
        for (int k = 1; k <= f.degree(); ++k) pw[a].push_back(pw[a].back() * phi[a]);
    }
    Form result = Form::zero(f.degree() * d);
    for (const auto& [e, c] : f.terms()) {
        Form term = pw[0][e[0]] * pw[1][e[1]];
        term = term * pw[2][e[2]];
        term *= c;
        result += term;
    }
    return result;
}

std::optional<Form> try_divide(const Form& f, const Form& g) {
    if (g.is_zero()) throw Error(ErrorKind::ZeroDivisor, "division by the zero form");
    if (f.is_zero()) return Form::zero(std::max(0, f.degree() - g.degree()));
    if (f.degree() < g.degree()) return std::nullopt;
    Form::TermMap rem = f.terms();
    Form::TermMap quot;
    const Exponent& lg = g.leading_exponent();
    const Rat& lcg = g.leading_coefficient();
    while (!rem.empty()) {
        auto lead = rem.begin();
        if (!divides(lg, lead->first)) return std::nullopt;
        Exponent shift = sub(lead->first, lg);
        Rat c = lead->second / lcg;
        quot.emplace(shift, c);
        for (const auto& [eg, cg] : g.terms()) {
            Exponent e = add(eg, shift);
            auto [it, inserted] = rem.emplace(e, -c * cg);
            if (!inserted) {
                it->second -= c * cg;
                if (it->second == 0) rem.erase(it);
            }
        }
    }
    return Form::from_terms(f.degree() - g.degree(), quot);
}

Form exact_divide(const Form& f, const Form& g) {
    auto q = try_divide(f, g);
    if (!q) throw Error(ErrorKind::NotDivisible, g.to_string() + " does not divide " + f.to_string());
    return *q;
}

FactorMultiplicity extract_factor_multiplicity(const Form& f, const Form& g) {
    if (f.is_zero()) throw Error(ErrorKind::ZeroArgument, "multiplicity in the zero form");
    if (g.degree() < 1 || g.is_zero())
        throw Error(ErrorKind::InvalidInput, "factor must be a nonconstant form");
    FactorMultiplicity out{0, f};
    while (auto q = try_divide(out.residual, g)) {
        out.residual = std::move(*q);
        ++out.multiplicity;
    }
    return out;
}

namespace {

// Divides out Z^k given k <= order_in(2).
Form strip_z(const Form& f, int k) {
    if (k == 0) return f;
    Form::TermMap t;
    for (const auto& [e, c] : f.terms()) t.emplace(Exponent{e[0], e[1], e[2] - k}, c);
    return Form::from_terms(f.degree() - k, t);
}

}  // namespace

Form gcd(const Form& f, const Form& g) {
    if (f.is_zero() && g.is_zero()) return Form::zero(0);
    if (f.is_zero()) return g.primitive();
    if (g.is_zero()) return f.primitive();
    int kf = f.order_in(2), kg = g.order_in(2);
    BivariatePoly h = detail::bivariate_gcd(dehomogenize(strip_z(f, kf), 2),
                                            dehomogenize(strip_z(g, kg), 2));
    Form common = homogenize(h, h.total_degree(), 2);
    Form zpow = Form::var(2).pow(static_cast<unsigned>(std::min(kf, kg)));
    return (common * zpow).primitive();
}

Form squarefree_part(const Form& f) {
    if (f.degree() < 1 || f.is_zero()) throw Error(ErrorKind::InvalidInput, "squarefree part of a constant");
    Form g = f;
    for (int a = 0; a < 3 && g.degree() > 0; ++a) g = gcd(g, f.derivative(a));
    return exact_divide(f, g).primitive();
}

bool is_squarefree(const Form& f) {
    if (f.degree() < 1 || f.is_zero()) return false;
    Form g = f;
    for (int a = 0; a < 3 && g.degree() > 0; ++a) g = gcd(g, f.derivative(a));
    return g.degree() == 0;
}

bool is_singular_at(const Form& f, const ProjPoint& p) {
    if (f.evaluate(p) != 0) throw Error(ErrorKind::NotOnCurve, p.to_string() + " is not on the curve");
    for (int a = 0; a < 3; ++a)
        if (f.derivative(a).evaluate(p) != 0) return false;
    return true;
}

// ---------------------------------------------------------------------------

BivariatePoly::BivariatePoly(TermMap terms) {
    for (auto& [e, c] : terms) {
        if (e.first < 0 || e.second < 0) throw Error(ErrorKind::InvalidInput, "negative exponent");
        if (c != 0) terms_.emplace(e, c);
    }
}

int BivariatePoly::total_degree() const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e.first + e.second);
    return d;
}

Rat BivariatePoly::coefficient(int i, int j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? Rat(0) : it->second;
}

std::string BivariatePoly::to_string(char u, char v) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (first) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        first = false;
        std::string mono;
        auto put = [&](char name, int k) {
            if (k == 0) return;
            if (!mono.empty()) mono += "*";
            mono += name;
            if (k > 1) mono += "^" + std::to_string(k);
        };
        put(u, e.first);
        put(v, e.second);
        Rat mag = abs(c);
        if (mono.empty()) {
            out += mag.get_str();
        } else if (mag == 1) {
            out += mono;
        } else {
            out += mag.get_str() + "*" + mono;
        }
    }
    return out;
}

namespace {

std::pair<std::size_t, std::size_t> chart_axes(int axis) {
    check_axis(axis);
    switch (axis) {
        case 0: return {1, 2};
        case 1: return {0, 2};
        default: return {0, 1};
    }
}

}  // namespace

BivariatePoly dehomogenize(const Form& f, int axis) {
    auto [u, v] = chart_axes(axis);
    BivariatePoly::TermMap t;
    for (const auto& [e, c] : f.terms()) t.emplace(std::pair{e[u], e[v]}, c);
    return BivariatePoly(std::move(t));
}

Form homogenize(const BivariatePoly& g, int degree, int axis) {
    auto [u, v] = chart_axes(axis);
    if (g.total_degree() > degree)
        throw Error(ErrorKind::DegreeTooSmall, "degree " + std::to_string(degree) +
                                                   " is below the total degree " +
                                                   std::to_string(g.total_degree()));
    Form::TermMap t;
    for (const auto& [e, c] : g.terms()) {
        Exponent ex{0, 0, 0};
        ex[u] = e.first;
        ex[v] = e.second;
        ex[static_cast<std::size_t>(axis)] = degree - e.first - e.second;
        t.emplace(ex, c);
    }
    return Form::from_terms(degree, t);
}

// ---------------------------------------------------------------------------

ExtMult ExtMult::finite(long m) {
    if (m < 1) throw Error(ErrorKind::InvalidInput, "multiplicity must be at least 1");
    ExtMult e;
    e.value_ = m;
    return e;
}

Rat ExtMult::weight_term() const {
    if (is_infinite()) return 1;
    return 1 - make_rat(1, *value_);
}

std::string ExtMult::to_string() const { return is_infinite() ? "INFINITY" : std::to_string(*value_); }

// ---------------------------------------------------------------------------

FactoredDivisor::FactoredDivisor(std::vector<DivisorFactor> factors, bool verify_reduced) {
    for (auto& f : factors) {
        if (f.form.is_zero() || f.form.degree() < 1)
            throw Error(ErrorKind::InvalidInput, "divisor factors must be nonconstant forms");
        if (f.multiplicity < 1) throw Error(ErrorKind::InvalidInput, "multiplicities must be positive");
        f.form = f.form.primitive();
        for (const auto& prev : factors_)
            if (prev.form == f.form)
                throw Error(ErrorKind::InvalidInput, "proportional factors " + f.form.to_string());
        f.reduced_verified = verify_reduced && is_squarefree(f.form);
        factors_.push_back(std::move(f));
    }
}

FactoredDivisor FactoredDivisor::single(const Form& f, long multiplicity, bool irreducible) {
    return FactoredDivisor({DivisorFactor{f, multiplicity, irreducible, false}});
}

Form FactoredDivisor::product() const {
    Form p = Form::constant(1);
    for (const auto& f : factors_) p = p * f.form.pow(static_cast<unsigned>(f.multiplicity));
    return p;
}

Form FactoredDivisor::support_form() const {
    Form p = Form::constant(1);
    for (const auto& f : factors_) p = p * f.form;
    return p;
}

int FactoredDivisor::degree() const {
    int d = 0;
    for (const auto& f : factors_) d += f.form.degree() * static_cast<int>(f.multiplicity);
    return d;
}

bool FactoredDivisor::component_count_exact() const {
    return std::all_of(factors_.begin(), factors_.end(), [](const auto& f) { return f.irreducible_hint; });
}

bool FactoredDivisor::on_support(const ProjPoint& p) const {
    return std::any_of(factors_.begin(), factors_.end(), [&](const auto& f) { return f.form.evaluate(p) == 0; });
}

bool FactoredDivisor::contains_support_of(const Form& g) const {
    if (factors_.empty()) return false;
    for (const auto& f : factors_)
        if (are_proportional(f.form, g)) return true;
    return try_divide(support_form(), g).has_value();
}

}  // namespace plint

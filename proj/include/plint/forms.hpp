#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "plint/core.hpp"

namespace plint {

/// Exponents (i, j, k) of X^i Y^j Z^k.
using Exponent = std::array<int, 3>;

/// Graded lexicographic with X > Y > Z. Forms are homogeneous, so this is the
/// plain lexicographic order, largest monomial first.
struct MonomialOrder {
    bool operator()(const Exponent& a, const Exponent& b) const { return a > b; }
};

/// A homogeneous polynomial in X, Y, Z with rational coefficients. The zero
/// form keeps an explicit degree.
class Form {
public:
    using TermMap = std::map<Exponent, Rat, MonomialOrder>;

    Form() = default;  // zero form of degree 0

    static Form zero(int degree);
    static Form constant(const Rat& c);
    /// X (axis 0), Y (axis 1) or Z (axis 2).
    static Form var(int axis);
    static Form monomial(const Exponent& e, const Rat& c = 1);
    /// Validates that every exponent sums to `degree`; drops zero coefficients.
    static Form from_terms(int degree, const TermMap& terms);

    int degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return degree_ == 0; }
    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

    Rat coefficient(const Exponent& e) const;
    /// Coefficient of the largest monomial. Undefined for the zero form.
    const Rat& leading_coefficient() const { return terms_.begin()->second; }
    const Exponent& leading_exponent() const { return terms_.begin()->first; }

    /// Smallest exponent of the given variable over all terms (the power of
    /// that coordinate line dividing the form). Zero form: 0.
    int order_in(int axis) const;

    Rat evaluate(const std::array<Rat, 3>& at) const;
    Rat evaluate(const ProjPoint& at) const;
    /// Exact value at the canonical coordinates for integer-coefficient forms.
    Int evaluate_integer(const ProjPoint& at) const;

    Form derivative(int axis) const;
    Form pow(unsigned exp) const;

    bool has_integer_coefficients() const;
    /// Positive rational c with this = c * (primitive integer form).
    Rat content() const;
    /// Integer coefficients with gcd 1 and positive leading coefficient.
    Form primitive() const;

    /// Human-readable rendering, e.g. "Y^2*Z - X^3".
    std::string to_string() const;

    Form operator-() const;
    Form& operator+=(const Form& other);
    Form& operator-=(const Form& other);
    Form& operator*=(const Rat& c);

    friend Form operator+(Form a, const Form& b) { return a += b; }
    friend Form operator-(Form a, const Form& b) { return a -= b; }
    friend Form operator*(const Form& a, const Form& b);
    friend Form operator*(Form a, const Rat& c) { return a *= c; }
    friend Form operator*(const Rat& c, Form a) { return a *= c; }
    friend bool operator==(const Form&, const Form&) = default;

private:
    int degree_ = 0;
    TermMap terms_;
};

/// Parses an expression in X, Y, Z (case-insensitive) using + - * ^ / and
/// parentheses, e.g. "(Y*Z - X^2)*(Y*Z^2 - X^2*Z - 2*X*Y^2) + Y^5". The result
/// must be homogeneous. `zero_degree` is used only when the expression is 0.
Form parse_form(const std::string& text, int zero_degree = 0);

/// True iff a = c * b for some nonzero rational c (both nonzero, same degree).
bool are_proportional(const Form& a, const Form& b);

/// f(phi0, phi1, phi2). Throws DegreeMismatch unless the phi share a degree.
Form compose(const Form& f, const std::array<Form, 3>& phi);

/// q with f = q * g, or nullopt when g does not divide f.
std::optional<Form> try_divide(const Form& f, const Form& g);
/// Throws ZeroDivisor for g == 0 and NotDivisible when g does not divide f.
Form exact_divide(const Form& f, const Form& g);

struct FactorMultiplicity {
    int multiplicity;
    Form residual;
};
/// f = g^multiplicity * residual with g not dividing residual.
FactorMultiplicity extract_factor_multiplicity(const Form& f, const Form& g);

/// Greatest common divisor, normalized to a primitive integer form.
Form gcd(const Form& f, const Form& g);

/// Product of the distinct irreducible factors of f over Q (primitive).
Form squarefree_part(const Form& f);
bool is_squarefree(const Form& f);

/// Throws NotOnCurve if f(P) != 0.
bool is_singular_at(const Form& f, const ProjPoint& p);

/// A polynomial in two variables, used for affine charts of forms.
class BivariatePoly {
public:
    using TermMap = std::map<std::pair<int, int>, Rat, std::greater<>>;

    BivariatePoly() = default;
    explicit BivariatePoly(TermMap terms);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int total_degree() const;
    Rat coefficient(int i, int j) const;
    std::string to_string(char u = 'x', char v = 'y') const;

    friend bool operator==(const BivariatePoly&, const BivariatePoly&) = default;

private:
    TermMap terms_;
};

/// Sets the variable `axis` to 1. The remaining variables keep their order,
/// so axis 2 gives f(x, y, 1), axis 0 gives f(1, y, z) in (y, z).
BivariatePoly dehomogenize(const Form& f, int axis = 2);
/// Inverse chart map; the restored variable is `axis`. Throws DegreeTooSmall.
Form homogenize(const BivariatePoly& g, int degree, int axis = 2);

/// A multiplicity that may be infinite (the infimum/gcd of an empty set).
class ExtMult {
public:
    static ExtMult infinity() { return ExtMult(); }
    static ExtMult finite(long m);

    bool is_infinite() const { return !value_.has_value(); }
    long value() const { return *value_; }
    /// 1 - 1/m, with the infinite multiplicity contributing exactly 1.
    Rat weight_term() const;
    std::string to_string() const;  // "3" or "INFINITY"

    friend bool operator==(const ExtMult&, const ExtMult&) = default;

private:
    ExtMult() = default;
    std::optional<long> value_;
};

struct DivisorFactor {
    Form form;
    long multiplicity = 1;
    bool irreducible_hint = false;
    bool reduced_verified = false;
};

/// An effective divisor given as a list of factors with multiplicities.
/// Factor forms are stored primitive; irreducibility is a caller assertion.
class FactoredDivisor {
public:
    FactoredDivisor() = default;
    /// Throws InvalidInput on constant factors, nonpositive multiplicities or
    /// proportional factors. `reduced_verified` flags are recomputed: they are
    /// set only when `verify_reduced` is requested and the test passes.
    explicit FactoredDivisor(std::vector<DivisorFactor> factors, bool verify_reduced = false);

    static FactoredDivisor single(const Form& f, long multiplicity = 1, bool irreducible = false);

    const std::vector<DivisorFactor>& factors() const { return factors_; }
    bool empty() const { return factors_.empty(); }

    /// Product of factors with multiplicity.
    Form product() const;
    /// Product of the distinct factors, each once.
    Form support_form() const;
    int degree() const;

    /// Number of listed components; exact over Q only when every factor
    /// carries an irreducibility hint, otherwise a lower bound.
    std::size_t component_count() const { return factors_.size(); }
    bool component_count_exact() const;

    /// True iff some factor vanishes at p.
    bool on_support(const ProjPoint& p) const;
    /// True iff g divides the support form (every component of g lies in D).
    bool contains_support_of(const Form& g) const;

private:
    std::vector<DivisorFactor> factors_;
};

}  // namespace plint

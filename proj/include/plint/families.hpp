#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "plint/forms.hpp"
#include "plint/pencils.hpp"

namespace plint {

/// The polynomial X^n Z + sum_{j=1}^{n+1} v_j X^{n+1-j} Y^j, n = |v| - 1.
/// Throws EmptyVector when v has fewer than two entries.
Form j_form(const std::vector<Rat>& v);

/// The De Jonquieres transformation (X^{m+1}, J_a(X,Y,Z), X^m Y), m = |a| - 1.
struct DeJonquieres {
    std::vector<Rat> avec;  // (a_1, ..., a_{m+1}), a_{m+1} != 0

    int m() const { return static_cast<int>(avec.size()) - 1; }
    /// Throws ParameterViolation unless m >= 1 and a_{m+1} != 0.
    void validate() const;
    std::array<Form, 3> components() const;
};

/// f composed with tau, with the X-power created by the substitution divided
/// out. A power of X already dividing f is kept, so the line X stays X.
Form strict_transform(const Form& f, const DeJonquieres& tau);

enum class FamilyId {
    TonoBicusp1,
    TonoBicusp2,
    TonoBicusp3,
    TonoUnicuspI,
    TonoUnicuspII,
    TonoUnicuspIII,
    AokiI,
    AokiII,
    AokiIII,
    AokiIV,
    Yoshihara,
};
std::string_view to_string(FamilyId id) noexcept;
/// Accepts the names produced by to_string ("TONO_BICUSP_1", ...).
FamilyId parse_family_id(const std::string& name);

/// Parameters of a family member. Only the fields used by the family are
/// read; coefficients are rational.
struct FamilySpec {
    FamilyId family = FamilyId::Yoshihara;
    long alpha0 = 0, alpha1 = 0;  // Tono bicuspidal exponents
    long n = 0, s = 0;            // Tono unicuspidal
    Rat a = 0;                    // shift in (Z + aY) for TONO_BICUSP_1; exponent for Aoki
    long b = 0, l = 0;            // Aoki exponents
    std::vector<Rat> avec;        // J vector for TONO_BICUSP_2/3
    std::vector<Rat> coeffs;      // unicuspidal a_i: (a_2..a_s) for I, (a_1..a_s) for III
    std::vector<Rat> p;           // Aoki II: p(x) coefficients, constant term first
    std::vector<Rat> a0, a1;      // Aoki III: coefficients, constant term first
    /// Transforms tau_1, ..., tau_s. The curve D_s is pulled back by tau_s
    /// first and by tau_1 last.
    std::vector<DeJonquieres> chain;
};

struct FamilyCurve {
    FactoredDivisor divisor;
    Form curve;  // the (non-line) curve of the family
    Pencil pencil;
};

FamilyCurve tono_bicuspidal(const FamilySpec& spec);
FamilyCurve tono_unicuspidal(const FamilySpec& spec);
/// The divisor is the line Z together with the curve.
FamilyCurve aoki_curve(const FamilySpec& spec);
FamilyCurve yoshihara_quintic();
/// Dispatches on spec.family.
FamilyCurve generate_family(const FamilySpec& spec);

/// For F = F5(X,Y) + X*Y*L3(X,Y)^2*Z: finds rational a, b with
/// F5(X,0) = (aX)^5 and F5(0,Y) = (bY)^5 and returns the cubic
/// G = (F - (aX + bY)^5) / (XY). Throws IrrationalRoot when no rational fifth
/// root exists.
struct CompanionCubic {
    Form quintic;
    Form cubic;
    Rat a, b;
};
CompanionCubic attempt_companion_cubic(const Form& f5, const Form& l3);

}  // namespace plint

#pragma once

#include <string_view>
#include <vector>

#include "plint/core.hpp"
#include "plint/forms.hpp"

namespace plint {

/// A member s*F + t*G of a pencil, with its factorization.
struct SpecialMember {
    P1Point param;
    FactoredDivisor factors;
};

/// The pencil of curves s*F + t*G, together with the members known to be
/// multiple, reducible or contained in a divisor, and some base points.
class Pencil {
public:
    /// Validates equal degrees, independence of F and G, base witnesses
    /// (InvalidInput) and member factorizations (FactorizationMismatch).
    Pencil(Form f, Form g, std::vector<SpecialMember> special = {}, std::vector<ProjPoint> base_witnesses = {});

    const Form& f() const { return f_; }
    const Form& g() const { return g_; }
    int degree() const { return f_.degree(); }
    const std::vector<SpecialMember>& special_members() const { return special_; }
    const std::vector<ProjPoint>& base_witnesses() const { return witnesses_; }

private:
    Form f_, g_;
    std::vector<SpecialMember> special_;
    std::vector<ProjPoint> witnesses_;
};

/// s*F + t*G as a primitive integer form. Throws ZeroParameter for [0:0].
Form member(const Pencil& pencil, const Rat& s, const Rat& t);
Form member(const Pencil& pencil, const P1Point& st);

/// Throws FactorizationMismatch unless the product of the factors is a
/// nonzero constant multiple of `form`.
void verify_factorization(const Form& form, const FactoredDivisor& factors);

struct MemberMultiplicities {
    ExtMult campana;
    ExtMult gcd;
};

/// Infimum and gcd of the multiplicities of the member's components that are
/// not components of D; INFINITY when every component lies in D.
MemberMultiplicities member_multiplicities(const FactoredDivisor& member_factors, const FactoredDivisor& d);
/// Same, after checking the factorization against the member form.
MemberMultiplicities member_multiplicities(const Form& member_form, const FactoredDivisor& member_factors,
                                           const FactoredDivisor& d);

enum class Verdict {
    DegenerateUnconditional,
    DegenerateEffective,
    DegenerateUnderAbc,
    NoVerdict,
};
/// "DEGENERATE_UNCONDITIONAL", ...
std::string_view to_string(Verdict v) noexcept;

struct MemberWeight {
    P1Point param;
    ExtMult campana;
    ExtMult gcd;
};

struct WeightReport {
    Rat campana_weight;
    Rat gcd_weight;
    std::vector<MemberWeight> per_member;
    Verdict verdict = Verdict::NoVerdict;
    /// Components of D as listed; a lower bound over Q-bar unless exact.
    std::size_t divisor_components = 0;
    bool divisor_components_exact = false;
    /// Base points are only checked at the supplied witnesses.
    std::size_t base_witnesses_checked = 0;
};

/// Weights summed over the special members (unlisted members contribute 0)
/// and the degeneracy verdict. Throws BaseWitnessOffDivisor.
WeightReport weight_report(const Pencil& pencil, const FactoredDivisor& d);

}  // namespace plint

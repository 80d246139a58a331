#include "plint/pencils.hpp"

#include <algorithm>
#include <numeric>

namespace plint {

Pencil::Pencil(Form f, Form g, std::vector<SpecialMember> special, std::vector<ProjPoint> base_witnesses)
    : f_(std::move(f)), g_(std::move(g)), special_(std::move(special)), witnesses_(std::move(base_witnesses)) {
    if (f_.is_zero() || g_.is_zero() || f_.degree() < 1)
        throw Error(ErrorKind::InvalidInput, "pencil generators must be nonconstant forms");
    if (f_.degree() != g_.degree())
        throw Error(ErrorKind::DegreeMismatch, "pencil generators have different degrees");
    if (are_proportional(f_, g_)) throw Error(ErrorKind::InvalidInput, "pencil generators are proportional");
    for (const auto& w : witnesses_)
        if (f_.evaluate(w) != 0 || g_.evaluate(w) != 0)
            throw Error(ErrorKind::InvalidInput, w.to_string() + " is not a base point of the pencil");
    for (std::size_t i = 0; i < special_.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j)
            if (special_[j].param == special_[i].param)
                throw Error(ErrorKind::InvalidInput, "member " + special_[i].param.to_string() + " listed twice");
        verify_factorization(member(*this, special_[i].param), special_[i].factors);
    }
}

Form member(const Pencil& pencil, const Rat& s, const Rat& t) {
    if (s == 0 && t == 0) throw Error(ErrorKind::ZeroParameter, "member parameter [0:0]");
    return (s * pencil.f() + t * pencil.g()).primitive();
}

Form member(const Pencil& pencil, const P1Point& st) { return member(pencil, Rat(st.s()), Rat(st.t())); }

void verify_factorization(const Form& form, const FactoredDivisor& factors) {
    if (factors.empty() || !are_proportional(form, factors.product()))
        throw Error(ErrorKind::FactorizationMismatch,
                    "factorization does not multiply out to " + form.to_string());
}

MemberMultiplicities member_multiplicities(const FactoredDivisor& member_factors, const FactoredDivisor& d) {
    long inf = 0, g = 0;
    for (const auto& f : member_factors.factors()) {
        if (d.contains_support_of(f.form)) continue;
        inf = inf == 0 ? f.multiplicity : std::min(inf, f.multiplicity);
        g = std::gcd(g, f.multiplicity);
    }
    if (inf == 0) return {ExtMult::infinity(), ExtMult::infinity()};
    return {ExtMult::finite(inf), ExtMult::finite(g)};
}

MemberMultiplicities member_multiplicities(const Form& member_form, const FactoredDivisor& member_factors,
                                           const FactoredDivisor& d) {
    verify_factorization(member_form, member_factors);
    return member_multiplicities(member_factors, d);
}

std::string_view to_string(Verdict v) noexcept {
    switch (v) {
        case Verdict::DegenerateUnconditional: return "DEGENERATE_UNCONDITIONAL";
        case Verdict::DegenerateEffective: return "DEGENERATE_EFFECTIVE";
        case Verdict::DegenerateUnderAbc: return "DEGENERATE_UNDER_ABC";
        case Verdict::NoVerdict: return "NO_VERDICT";
    }
    return "?";
}

WeightReport weight_report(const Pencil& pencil, const FactoredDivisor& d) {
    if (d.empty()) throw Error(ErrorKind::InvalidInput, "empty divisor");
    for (const auto& w : pencil.base_witnesses())
        if (!d.on_support(w))
            throw Error(ErrorKind::BaseWitnessOffDivisor, "base point " + w.to_string() + " is not on the divisor");

    WeightReport r;
    r.campana_weight = 0;
    r.gcd_weight = 0;
    bool gcd_infinite = false;
    for (const auto& m : pencil.special_members()) {
        auto mult = member_multiplicities(m.factors, d);
        r.campana_weight += mult.campana.weight_term();
        r.gcd_weight += mult.gcd.weight_term();
        gcd_infinite = gcd_infinite || mult.gcd.is_infinite();
        r.per_member.push_back({m.param, mult.campana, mult.gcd});
    }
    if (r.gcd_weight > 2) {
        r.verdict = gcd_infinite ? Verdict::DegenerateEffective : Verdict::DegenerateUnconditional;
    } else if (r.campana_weight > 2) {
        r.verdict = Verdict::DegenerateUnderAbc;
    }
    r.divisor_components = d.component_count();
    r.divisor_components_exact = d.component_count_exact();
    r.base_witnesses_checked = pencil.base_witnesses().size();
    return r;
}

}  // namespace plint

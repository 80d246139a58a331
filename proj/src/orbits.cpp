#include "plint/orbits.hpp"

#include <algorithm>
#include <thread>

namespace plint {

namespace {

std::array<Form, 3> clear_denominators(std::array<Form, 3> c) {
    Int l = 1;
    for (const auto& f : c)
        for (const auto& [e, v] : f.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    if (l != 1)
        for (auto& f : c) f *= Rat(l);
    return c;
}

Int max_abs(const ProjPoint& p) { return p.max_abs_coord(); }

}  // namespace

Endo::Endo(std::array<Form, 3> components) : components_(clear_denominators(std::move(components))) {
    int d = components_[0].degree();
    for (const auto& f : components_) {
        if (f.degree() != d) throw Error(ErrorKind::DegreeMismatch, "endomorphism components differ in degree");
        if (f.is_zero()) throw Error(ErrorKind::InvalidInput, "endomorphism component is zero");
    }
    if (d < 1) throw Error(ErrorKind::InvalidInput, "endomorphism must have degree at least 1");
}

ReducedTriple apply_endo(const Endo& phi, const ProjPoint& p) {
    std::array<Int, 3> raw;
    for (std::size_t i = 0; i < 3; ++i) raw[i] = phi.components()[i].evaluate_integer(p);
    if (raw[0] == 0 && raw[1] == 0 && raw[2] == 0)
        throw Error(ErrorKind::IndeterminatePoint, "every component vanishes at " + p.to_string());
    return reduce_integer_triple(raw);
}

const Int& default_height_cap() {
    static const Int cap = pow(Int(10), 10000);
    return cap;
}

Orbit iterate_orbit(const Endo& phi, const ProjPoint& p, long n_max, const Int& height_cap) {
    if (n_max < 0) throw Error(ErrorKind::InvalidInput, "n_max must be nonnegative");
    Orbit orbit;
    ProjPoint current = p;
    Int removed = 1;
    for (long n = 0;; ++n) {
        if (max_abs(current) > height_cap) {
            orbit.truncated = true;
            orbit.truncated_at = n;
            break;
        }
        orbit.records.push_back({n, current, removed, point_height(current), std::nullopt, false});
        if (n == n_max) break;
        try {
            ReducedTriple next = apply_endo(phi, current);
            current = std::move(next.point);
            removed = std::move(next.removed_content);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::IndeterminatePoint) throw;
            throw Error(ErrorKind::IndeterminatePoint,
                        "orbit step " + std::to_string(n) + " -> " + std::to_string(n + 1) + ": " + e.what());
        }
    }
    return orbit;
}

namespace {

struct Accumulator {
    std::vector<DivisorFactor> items;

    void add(const Form& f, long m, bool irreducible) {
        Form g = f.primitive();
        for (auto& it : items)
            if (are_proportional(it.form, g)) {
                it.multiplicity += m;
                it.irreducible_hint = it.irreducible_hint || irreducible;
                return;
            }
        items.push_back({g, m, irreducible, false});
    }
};

// Splits f into pairwise coprime square-free parts: part i collects the
// factors of multiplicity exactly i.
std::vector<std::pair<Form, long>> squarefree_decomposition(const Form& f) {
    std::vector<std::pair<Form, long>> out;
    Form rest = f;
    Form prev = squarefree_part(rest);
    long i = 1;
    while (!prev.is_constant()) {
        rest = exact_divide(rest, prev);
        Form next = rest.is_constant() ? Form::constant(1) : squarefree_part(rest);
        Form part = exact_divide(prev, next);
        if (!part.is_constant()) out.emplace_back(part, i);
        prev = next;
        ++i;
    }
    return out;
}

}  // namespace

FactoredDivisor pullback_divisor(const Endo& phi, const FactoredDivisor& d, const std::vector<Form>& hints) {
    std::vector<std::pair<Form, bool>> known;
    for (int axis = 0; axis < 3; ++axis) known.emplace_back(Form::var(axis), true);
    for (const auto& f : d.factors()) known.emplace_back(f.form, f.irreducible_hint);
    for (const auto& h : hints)
        if (!h.is_constant()) known.emplace_back(h.primitive(), false);

    Accumulator acc;
    for (const auto& f : d.factors()) {
        Form h = compose(f.form, phi.components());
        for (const auto& [k, irreducible] : known) {
            if (k.degree() > h.degree()) continue;
            FactorMultiplicity fm = extract_factor_multiplicity(h, k);
            if (fm.multiplicity == 0) continue;
            acc.add(k, f.multiplicity * fm.multiplicity, irreducible);
            h = fm.residual;
        }
        if (h.is_constant()) continue;
        for (const auto& [part, i] : squarefree_decomposition(h)) acc.add(part, f.multiplicity * i, false);
    }
    return FactoredDivisor(std::move(acc.items), true);
}

Orbit scan_orbit_integrality(const Endo& phi, const ProjPoint& p, const FactoredDivisor& d, const PlaceSet& s,
                             long n_max, const Int& height_cap, unsigned threads) {
    Orbit orbit = iterate_orbit(phi, p, n_max, height_cap);
    auto scan = [&](std::size_t begin, std::size_t step) {
        for (std::size_t i = begin; i < orbit.records.size(); i += step) {
            OrbitRecord& r = orbit.records[i];
            if (d.on_support(r.point)) {
                r.on_divisor = true;
            } else {
                r.s_integral = is_s_integral(d, r.point, s);
            }
        }
    };
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(orbit.records.size())));
    if (threads == 1) {
        scan(0, 1);
        return orbit;
    }
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(scan, t, threads);
    for (auto& t : pool) t.join();
    return orbit;
}

namespace {

void require_line(const Form& l) {
    if (l.degree() != 1 || l.is_zero()) throw Error(ErrorKind::NotALine, l.to_string() + " is not a linear form");
}

}  // namespace

bool is_invariant_line(const Endo& phi, const Form& line) {
    require_line(line);
    return are_proportional(compose(line, phi.components()), line.pow(static_cast<unsigned>(phi.degree())));
}

bool is_completely_invariant_line_set(const Endo& phi, const std::vector<Form>& lines) {
    if (lines.size() > 3)
        throw Error(ErrorKind::TooManyLines, "a completely invariant curve is a union of at most three lines");
    for (const auto& l : lines) require_line(l);
    for (std::size_t i = 0; i < lines.size(); ++i)
        for (std::size_t j = i + 1; j < lines.size(); ++j)
            if (are_proportional(lines[i], lines[j])) throw Error(ErrorKind::InvalidInput, "proportional lines");
    Form prod = Form::constant(1), pulled = Form::constant(1);
    for (const auto& l : lines) {
        prod = prod * l;
        pulled = pulled * compose(l, phi.components());
    }
    if (lines.empty()) return true;
    return are_proportional(squarefree_part(pulled), prod);
}

std::vector<SingularityCandidate> singularity_chain_check(const Endo& phi, const Form& curve, const ProjPoint& p,
                                                          const std::vector<ProjPoint>& candidates) {
    bool singular = false;
    try {
        singular = is_singular_at(curve, p);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::NotOnCurve) throw;
    }
    if (!singular) throw Error(ErrorKind::NotSingular, p.to_string() + " is not a singular point of the curve");
    Form pulled = compose(curve, phi.components());
    std::vector<SingularityCandidate> out;
    for (const auto& q : candidates) {
        SingularityCandidate c{q};
        try {
            c.maps_to_point = apply_endo(phi, q).point == p;
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::IndeterminatePoint) throw;
        }
        if (c.maps_to_point) c.singular_on_pullback = is_singular_at(pulled, q);
        out.push_back(std::move(c));
    }
    return out;
}

}  // namespace plint

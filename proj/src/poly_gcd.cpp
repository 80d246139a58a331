// Bivariate gcd over Q, computed in Q[u][v] with v as the main variable:
// contents are handled by Euclid in Q[u], primitive parts by a primitive
// pseudo-remainder sequence.

#include "poly_gcd.hpp"

#include <algorithm>

namespace plint::detail {
namespace {

using UPoly = std::vector<Rat>;   // ascending powers of u, no trailing zeros
using RPoly = std::vector<UPoly>;  // ascending powers of v, no trailing zeros

void trim(UPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

void trim(RPoly& p) {
    while (!p.empty() && p.back().empty()) p.pop_back();
}

long deg(const UPoly& p) { return static_cast<long>(p.size()) - 1; }
long deg(const RPoly& p) { return static_cast<long>(p.size()) - 1; }

UPoly sub(const UPoly& a, const UPoly& b) {
    UPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

UPoly mul(const UPoly& a, const UPoly& b) {
    if (a.empty() || b.empty()) return {};
    UPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

// Division in Q[u]; returns the quotient and leaves the remainder in `a`.
UPoly divmod(UPoly& a, const UPoly& b) {
    if (deg(a) < deg(b)) return {};
    UPoly q(a.size() - b.size() + 1);
    const Rat& lb = b.back();
    while (!a.empty() && deg(a) >= deg(b)) {
        std::size_t shift = a.size() - b.size();
        Rat c = a.back() / lb;
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
        trim(a);
    }
    trim(q);
    return q;
}

UPoly make_monic(UPoly p) {
    if (p.empty()) return p;
    Rat l = p.back();
    for (auto& c : p) c /= l;
    return p;
}

UPoly ugcd(UPoly a, UPoly b) {
    while (!b.empty()) {
        UPoly r = a;
        divmod(r, b);
        a = std::move(b);
        b = make_monic(std::move(r));
    }
    return make_monic(std::move(a));
}

UPoly content(const RPoly& p) {
    UPoly g;
    for (const auto& c : p) {
        if (c.empty()) continue;
        g = g.empty() ? make_monic(c) : ugcd(g, c);
        if (g.size() == 1) break;
    }
    return g;
}

RPoly divide_by(const RPoly& p, const UPoly& c) {
    RPoly r;
    r.reserve(p.size());
    for (const auto& coeff : p) {
        UPoly rem = coeff;
        UPoly q = divmod(rem, c);
        r.push_back(std::move(q));
    }
    trim(r);
    return r;
}

RPoly primitive_part(const RPoly& p) {
    if (p.empty()) return p;
    return divide_by(p, content(p));
}

// lc(b)^k * a mod b in Q[u][v].
RPoly pseudo_remainder(RPoly a, const RPoly& b) {
    const UPoly& lb = b.back();
    while (!a.empty() && deg(a) >= deg(b)) {
        std::size_t shift = a.size() - b.size();
        UPoly la = a.back();
        for (auto& c : a) c = mul(c, lb);
        for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] = sub(a[i + shift], mul(la, b[i]));
        a.back().clear();
        trim(a);
    }
    return a;
}

RPoly to_recursive(const BivariatePoly& p) {
    RPoly r;
    for (const auto& [e, c] : p.terms()) {
        auto [i, j] = e;
        if (r.size() <= static_cast<std::size_t>(j)) r.resize(j + 1);
        auto& row = r[j];
        if (row.size() <= static_cast<std::size_t>(i)) row.resize(i + 1);
        row[i] = c;
    }
    for (auto& row : r) trim(row);
    trim(r);
    return r;
}

BivariatePoly from_recursive(const RPoly& p) {
    BivariatePoly::TermMap t;
    for (std::size_t j = 0; j < p.size(); ++j)
        for (std::size_t i = 0; i < p[j].size(); ++i)
            if (p[j][i] != 0) t[{static_cast<int>(i), static_cast<int>(j)}] = p[j][i];
    return BivariatePoly(std::move(t));
}

}  // namespace

BivariatePoly bivariate_gcd(const BivariatePoly& a_in, const BivariatePoly& b_in) {
    RPoly a = to_recursive(a_in);
    RPoly b = to_recursive(b_in);
    if (a.empty()) std::swap(a, b);
    if (a.empty()) return {};
    if (b.empty()) {
        RPoly r = a;
        UPoly l = r.back();
        // normalize: leading coefficient of the leading v-power monic in u
        UPoly inv{Rat(1) / l.back()};
        for (auto& c : r) c = mul(c, inv);
        return from_recursive(r);
    }

    UPoly ca = content(a), cb = content(b);
    UPoly c = ugcd(ca, cb);
    a = divide_by(a, ca);
    b = divide_by(b, cb);
    if (deg(a) < deg(b)) std::swap(a, b);

    RPoly g;
    for (;;) {
        if (deg(b) == 0) {
            g = RPoly{UPoly{Rat(1)}};
            break;
        }
        RPoly r = pseudo_remainder(a, b);
        if (r.empty()) {
            g = b;
            break;
        }
        a = std::move(b);
        b = primitive_part(r);
    }
    for (auto& coeff : g) coeff = mul(coeff, c);
    trim(g);
    UPoly inv{Rat(1) / g.back().back()};
    for (auto& coeff : g) coeff = mul(coeff, inv);
    return from_recursive(g);
}

}  // namespace plint::detail

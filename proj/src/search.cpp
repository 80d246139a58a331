#include "plint/search.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <thread>

#include "plint/heights.hpp"

namespace plint {

namespace {

using i128 = __int128;

struct Term {
    long coeff;
    Exponent e;
};

// Integer divisor factors in a form that can be evaluated in machine
// integers when the coefficients and bound allow it: 64-bit words when every
// value stays below 2^62, 128-bit words below 2^124.
struct Compiled {
    std::vector<std::vector<Term>> factors;
    std::vector<long> odd_primes;
    bool has_two = false;
    int max_degree = 0;
    int width = 64;  // 64, 128, or 0 for the exact path
};

Compiled compile(const std::vector<Form>& forms, const PlaceSet& s, long bound) {
    Compiled c;
    Int largest = 0;
    for (const auto& f : forms) {
        c.max_degree = std::max(c.max_degree, f.degree());
        Int total = 0;
        std::vector<Term> terms;
        for (const auto& [e, v] : f.terms()) {
            Int n = v.get_num();
            total += abs(n);
            if (n.fits_slong_p()) terms.push_back({n.get_si(), e});
            else c.width = 0;
        }
        largest = std::max<Int>(largest, total * pow(Int(bound), static_cast<unsigned long>(f.degree())));
        c.factors.push_back(std::move(terms));
    }
    if (largest >= Int(1) << 124 || c.max_degree > 31) c.width = 0;
    else if (c.width != 0 && largest >= Int(1) << 62) c.width = 128;
    for (const auto& p : s.primes()) {
        if (!p.fits_slong_p()) c.width = 0;
        else if (p == 2) c.has_two = true;
        else c.odd_primes.push_back(p.get_si());
    }
    return c;
}

template <class T>
T strip_two(T v) {
    if constexpr (sizeof(T) == 8) {
        return v >> __builtin_ctzll(static_cast<unsigned long long>(v));
    } else {
        while ((v & 1) == 0) v >>= 1;
        return v;
    }
}

// False when some factor vanishes or has a prime outside S.
template <class T>
bool fast_integral(const Compiled& c, long x, long y, long z) {
    T pw[3][32];
    long coords[3] = {x, y, z};
    for (int a = 0; a < 3; ++a) {
        pw[a][0] = 1;
        for (int k = 1; k <= c.max_degree; ++k) pw[a][k] = pw[a][k - 1] * coords[a];
    }
    for (const auto& f : c.factors) {
        T v = 0;
        for (const auto& t : f) v += static_cast<T>(t.coeff) * pw[0][t.e[0]] * pw[1][t.e[1]] * pw[2][t.e[2]];
        if (v == 0) return false;
        if (v < 0) v = -v;
        if (c.has_two) v = strip_two(v);
        for (long p : c.odd_primes)
            while (v % p == 0) v /= p;
        if (v != 1) return false;
    }
    return true;
}

std::vector<long> signed_s_units(const PlaceSet& s, long bound) {
    std::set<long> units{1};
    for (const auto& pz : s.primes()) {
        if (!pz.fits_slong_p() || pz > bound) continue;
        long p = pz.get_si();
        std::set<long> next;
        for (long u : units)
            for (long v = u; v <= bound; v *= p) {
                next.insert(v);
                if (v > bound / p) break;
            }
        units = std::move(next);
    }
    std::vector<long> out;
    for (long u : units) {
        out.push_back(u);
        out.push_back(-u);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<ProjPoint> enumerate_integral_points(const FactoredDivisor& d, const PlaceSet& s, long bound,
                                                 unsigned threads) {
    if (bound < 1) throw Error(ErrorKind::InvalidInput, "bound must be at least 1");
    // A coordinate line in D forces that coordinate to be a signed S-unit.
    std::array<std::vector<long>, 3> ranges;
    std::vector<Form> others;
    std::array<bool, 3> constrained{false, false, false};
    for (const auto& f : d.factors()) {
        bool line = false;
        for (int a = 0; a < 3; ++a)
            if (are_proportional(f.form, Form::var(a))) {
                constrained[static_cast<std::size_t>(a)] = true;
                line = true;
            }
        if (!line) others.push_back(f.form);
    }
    std::vector<long> all(static_cast<std::size_t>(2 * bound + 1));
    std::iota(all.begin(), all.end(), -bound);
    std::vector<long> units = signed_s_units(s, bound);
    for (std::size_t a = 0; a < 3; ++a) ranges[a] = constrained[a] ? units : all;

    Compiled compiled = compile(others, s, bound);
    FactoredDivisor rest;
    if (!others.empty()) {
        std::vector<DivisorFactor> fs;
        for (const auto& f : others) fs.push_back({f, 1, false, false});
        rest = FactoredDivisor(std::move(fs));
    }

    auto visit = [&](long x, long y, long z, std::vector<ProjPoint>& out) {
        if (x == 0 && y == 0 && z <= 0) return;
        if (!others.empty()) {
            if (compiled.width == 64) {
                if (!fast_integral<long>(compiled, x, y, z)) return;
            } else if (compiled.width == 128) {
                if (!fast_integral<i128>(compiled, x, y, z)) return;
            } else if (std::gcd(std::gcd(x, y), z) == 1) {
                ProjPoint p = ProjPoint::from_integers(x, y, z);
                if (rest.on_support(p) || !is_s_integral(rest, p, s)) return;
            }
        }
        if (std::gcd(std::gcd(x, y), z) != 1) return;
        out.push_back(ProjPoint::from_integers(x, y, z));
    };

    const auto& outer = ranges[0];
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(outer.size())));
    std::vector<std::vector<ProjPoint>> parts(threads);
    auto work = [&](unsigned t) {
        for (std::size_t i = t; i < outer.size(); i += threads) {
            long x = outer[i];
            if (x < 0) continue;
            for (long y : ranges[1]) {
                if (x == 0 && y < 0) continue;
                for (long z : ranges[2]) visit(x, y, z, parts[t]);
            }
        }
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
        for (auto& th : pool) th.join();
    }
    std::vector<ProjPoint> out;
    for (auto& p : parts) out.insert(out.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
    std::sort(out.begin(), out.end());
    return out;
}

std::string FiberKey::to_string() const { return param ? param->to_string() : "BASE_POINT"; }

bool operator<(const FiberKey& a, const FiberKey& b) {
    if (!a.param || !b.param) return !a.param && b.param;
    return *a.param < *b.param;
}

FiberKey fiber_of(const ProjPoint& p, const Pencil& pencil) {
    Rat f = pencil.f().evaluate(p), g = pencil.g().evaluate(p);
    if (f == 0 && g == 0) return FiberKey::base_point();
    return {P1Point::from_rationals(g, -f)};
}

std::map<FiberKey, long> fibers_hit(const std::vector<ProjPoint>& points, const Pencil& pencil) {
    std::map<FiberKey, long> out;
    for (const auto& p : points) ++out[fiber_of(p, pencil)];
    return out;
}

std::vector<std::pair<Rat, Rat>> solve_s_unit_bounded(const PlaceSet& s, long exponent_bound) {
    if (exponent_bound < 0) throw Error(ErrorKind::InvalidInput, "exponent bound must be nonnegative");
    std::vector<Rat> units{Rat(1)};
    for (const auto& p : s.primes()) {
        std::vector<Rat> next;
        for (const auto& u : units)
            for (long e = -exponent_bound; e <= exponent_bound; ++e) next.push_back(u * pow(Rat(p), e));
        units = std::move(next);
    }
    auto bounded_unit = [&](const Rat& v) {
        if (v == 0) return false;
        Int num = abs(v.get_num()), den = v.get_den();
        for (const auto& p : s.primes()) {
            long a = static_cast<long>(mpz_remove(num.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t()));
            long b = static_cast<long>(mpz_remove(den.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()));
            if (a > exponent_bound || b > exponent_bound) return false;
        }
        return num == 1 && den == 1;
    };
    std::vector<std::pair<Rat, Rat>> out;
    for (const auto& base : units)
        for (const Rat& u : {base, Rat(-base)}) {
            Rat v = 1 - u;
            if (bounded_unit(v)) out.emplace_back(u, v);
        }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace plint

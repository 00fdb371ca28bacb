#include "dq/polyroots.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <utility>

#include "dq/errors.hpp"

namespace dq {

Rational poly_eval(const Poly& c, const Rational& y) {
    Rational acc;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * y + *it;
    return acc;
}

namespace {

void trim(Poly& c) {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
}

Poly derivative(const Poly& c) {
    Poly d;
    for (size_t i = 1; i < c.size(); ++i) d.push_back(Rational(static_cast<long>(i)) * c[i]);
    return d;
}

// Remainder of a modulo b; b must be trimmed and nonzero.
Poly poly_rem(Poly a, const Poly& b) {
    trim(a);
    const size_t db = b.size() - 1;
    while (a.size() > db) {
        const Rational lead = a.back() / b.back();
        const size_t shift = a.size() - 1 - db;
        for (size_t i = 0; i <= db; ++i) a[shift + i] -= lead * b[i];
        a.pop_back();
        trim(a);
        if (a.empty()) break;
    }
    return a;
}

// Monic gcd over Q.
Poly poly_gcd(Poly a, Poly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    for (auto& ci : a) ci /= a.back();
    return a;
}

// Exact quotient a / b (remainder known to vanish).
Poly poly_div(Poly a, const Poly& b) {
    trim(a);
    if (a.empty()) return {};
    Poly q(a.size() - (b.size() - 1), Rational(0));
    while (a.size() >= b.size()) {
        const Rational lead = a.back() / b.back();
        const size_t shift = a.size() - b.size();
        q[shift] = lead;
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= lead * b[i];
        a.pop_back();
        trim(a);
        if (a.empty()) break;
    }
    return q;
}

uint64_t mod_eval(const std::vector<uint64_t>& a, uint64_t r, uint64_t p) {
    uint64_t acc = 0;
    for (auto it = a.rbegin(); it != a.rend(); ++it) acc = (acc * r + *it) % p;
    return acc;
}

// Newton iteration from a simple root mod p up to modulus >= target.
// Returns (root, modulus).
std::pair<mpz_class, mpz_class> lift_root(const std::vector<mpz_class>& a, uint64_t r0,
                                          uint64_t p, const mpz_class& target) {
    std::vector<mpz_class> da(a.size() > 1 ? a.size() - 1 : 0);
    for (size_t i = 1; i < a.size(); ++i) da[i - 1] = static_cast<long>(i) * a[i];

    mpz_class mod = p;
    mpz_class r = static_cast<unsigned long>(r0);
    while (mod < target) {
        mod *= mod;
        mpz_class fv = 0, dv = 0;
        for (auto it = a.rbegin(); it != a.rend(); ++it) fv = (fv * r + *it) % mod;
        for (auto it = da.rbegin(); it != da.rend(); ++it) dv = (dv * r + *it) % mod;
        mpz_class inv;
        if (!mpz_invert(inv.get_mpz_t(), dv.get_mpz_t(), mod.get_mpz_t()))
            throw std::logic_error("non-invertible derivative during root lifting");
        r = (r - fv * inv) % mod;
        if (r < 0) r += mod;
    }
    return {r, mod};
}

// Wang-style rational reconstruction of r mod m with |num|, den <= bound.
// Returns false when no small representative exists.
bool reconstruct(const mpz_class& r, const mpz_class& m, const mpz_class& bound, mpz_class& num,
                 mpz_class& den) {
    mpz_class r0 = m, t0 = 0, r1 = r, t1 = 1;
    while (r1 > bound) {
        mpz_class q = r0 / r1;
        mpz_class r2 = r0 - q * r1, t2 = t0 - q * t1;
        r0 = r1;
        t0 = t1;
        r1 = r2;
        t1 = t2;
    }
    if (t1 == 0) return false;
    if (t1 < 0) {
        t1 = -t1;
        r1 = -r1;
    }
    if (t1 > bound) return false;
    num = r1;
    den = t1;
    return true;
}

}  // namespace

std::vector<Rational> rational_roots(const Poly& cin) {
    Poly c = cin;
    trim(c);
    if (c.empty()) throw ZeroInput("zero polynomial has every rational as a root");

    std::vector<Rational> roots;
    if (c.size() == 1) return roots;

    // Keep one copy of each repeated factor so every surviving root is simple.
    Poly g = poly_gcd(c, derivative(c));
    if (g.size() > 1) c = poly_div(c, g);

    size_t low = 0;
    while (low < c.size() && c[low].is_zero()) ++low;
    if (low > 0) {
        roots.push_back(Rational(0));
        c.erase(c.begin(), c.begin() + low);
    }
    if (c.size() == 1) return roots;
    if (c.size() == 2) {
        roots.push_back(-c[0] / c[1]);
        std::sort(roots.begin(), roots.end());
        return roots;
    }

    // Primitive integer model.
    mpz_class l = 1;
    for (const auto& ci : c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), ci.den().get_mpz_t());
    std::vector<mpz_class> a(c.size());
    mpz_class content = 0;
    for (size_t i = 0; i < c.size(); ++i) {
        a[i] = c[i].num() * (l / c[i].den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), a[i].get_mpz_t());
    }
    for (auto& ai : a) ai /= content;

    // Any rational root n/d has n | a[0], d | a.back(); the reconstruction
    // modulus must exceed twice the product of those bounds.
    const mpz_class bound = std::max(abs(a.front()), abs(a.back()));
    const mpz_class target = 2 * bound * bound + 1;

    mpz_class pz = 200003;
    for (int attempt = 0; attempt < 64; ++attempt) {
        if (mpz_divisible_p(a.back().get_mpz_t(), pz.get_mpz_t())) {
            mpz_nextprime(pz.get_mpz_t(), pz.get_mpz_t());
            continue;
        }
        const uint64_t p = pz.get_ui();
        std::vector<uint64_t> am(a.size()), dm;
        for (size_t i = 0; i < a.size(); ++i) {
            mpz_class t = a[i] % pz;
            if (t < 0) t += pz;
            am[i] = t.get_ui();
        }
        for (size_t i = 1; i < am.size(); ++i) dm.push_back((am[i] * (i % p)) % p);

        bool bad_prime = false;
        std::vector<uint64_t> simple;
        for (uint64_t r = 0; r < p; ++r) {
            if (mod_eval(am, r, p) != 0) continue;
            if (mod_eval(dm, r, p) == 0) {
                bad_prime = true;  // repeated root mod p despite squarefree f
                break;
            }
            simple.push_back(r);
        }
        if (bad_prime) {
            mpz_nextprime(pz.get_mpz_t(), pz.get_mpz_t());
            continue;
        }

        for (uint64_t r : simple) {
            const auto [lifted, mod] = lift_root(a, r, p, target);
            mpz_class num, den;
            if (!reconstruct(lifted, mod, bound, num, den)) continue;
            const Rational cand(num, den);
            if (poly_eval(c, cand).is_zero()) roots.push_back(cand);
        }
        std::sort(roots.begin(), roots.end());
        roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
        return roots;
    }
    throw std::logic_error("no usable prime found for rational root extraction");
}

}  // namespace dq

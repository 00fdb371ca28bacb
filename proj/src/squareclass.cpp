#include "dq/squareclass.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <utility>
#include <vector>

namespace dq {

namespace {

constexpr unsigned long kTrialBound = 100000;

const std::vector<unsigned long>& small_primes() {
    static const std::vector<unsigned long> primes = [] {
        std::vector<bool> composite(kTrialBound + 1, false);
        std::vector<unsigned long> ps;
        for (unsigned long i = 2; i <= kTrialBound; ++i) {
            if (composite[i]) continue;
            ps.push_back(i);
            for (unsigned long j = i * i; j <= kTrialBound; j += i) composite[j] = true;
        }
        return ps;
    }();
    return primes;
}

bool miller_rabin_witness(const mpz_class& n, const mpz_class& a) {
    // n odd, n > 3. Returns true if a proves n composite.
    mpz_class d = n - 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
    mpz_class x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n - 1) return false;
    for (unsigned long i = 1; i < s; ++i) {
        x = (x * x) % n;
        if (x == n - 1) return false;
    }
    return true;
}

// Exact for n < 3.317e24 (fixed witness set), see Sorenson & Webster.
const long kSmallWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

mpz_class pollard_brent(const mpz_class& n) {
    // n odd composite, no factor below the trial bound. Returns a proper factor.
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(0xd10f4u);
    for (unsigned long c = 1;; ++c) {
        mpz_class y = rng.get_z_range(n - 3) + 2;
        mpz_class g = 1, q = 1, x, ys;
        unsigned long r = 1;
        const unsigned long batch = 128;
        while (g == 1) {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
            for (unsigned long k = 0; k < r && g == 1; k += batch) {
                ys = y;
                const unsigned long lim = std::min(batch, r - k);
                for (unsigned long i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    q = q * abs(x - y) % n;
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
            }
            r *= 2;
        }
        if (g == n) {
            // Batch overshot; walk one step at a time.
            g = 1;
            while (g == 1) {
                ys = (ys * ys + c) % n;
                mpz_class diff = abs(x - ys);
                mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            }
        }
        if (g != n) return g;
    }
}

// Smallest prime k >= 2 with m = r^k exact, 0 if none. m > 1.
unsigned long perfect_power_exponent(const mpz_class& m, mpz_class& root) {
    if (!mpz_perfect_power_p(m.get_mpz_t())) return 0;
    const unsigned long maxk = mpz_sizeinbase(m.get_mpz_t(), 2);
    for (unsigned long k : small_primes()) {
        if (k > maxk) break;
        if (mpz_root(root.get_mpz_t(), m.get_mpz_t(), k) != 0) return k;
    }
    return 0;
}

}  // namespace

bool is_prime(const mpz_class& n) {
    if (n < 2) return false;
    for (long p : kSmallWitnesses) {
        if (n == p) return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(p))) return false;
    }
    static const mpz_class kDeterministicBound("3317044064679887385961981");
    if (n < kDeterministicBound) {
        for (long a : kSmallWitnesses) {
            if (miller_rabin_witness(n, mpz_class(a))) return false;
        }
        return true;
    }
    return mpz_probab_prime_p(n.get_mpz_t(), 64) > 0;
}

mpz_class squarefree_part_int(const mpz_class& n0) {
    if (n0 == 0) throw ZeroInput("squarefree part of zero");
    mpz_class n = abs(n0);
    mpz_class result = n0 < 0 ? -1 : 1;

    for (unsigned long p : small_primes()) {
        if (n == 1) break;
        if (!mpz_divisible_ui_p(n.get_mpz_t(), p)) continue;
        unsigned long e = 0;
        do {
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
            ++e;
        } while (mpz_divisible_ui_p(n.get_mpz_t(), p));
        if (e & 1) result *= p;
    }
    if (n == 1) return result;

    // Cofactor: every prime factor exceeds the trial bound. Only exponent
    // parity matters, so pieces raised to an even power are dropped whole.
    std::map<mpz_class, unsigned long> parity;
    std::vector<std::pair<mpz_class, unsigned long>> work{{n, 1}};
    while (!work.empty()) {
        auto [m, mult] = std::move(work.back());
        work.pop_back();
        if (mult % 2 == 0) continue;
        if (is_prime(m)) {
            parity[m] ^= 1;
            continue;
        }
        mpz_class root;
        if (unsigned long k = perfect_power_exponent(m, root); k > 1) {
            work.emplace_back(root, mult * k);
            continue;
        }
        mpz_class d = pollard_brent(m);
        work.emplace_back(d, mult);
        work.emplace_back(mpz_class(m / d), mult);
    }
    for (const auto& [p, odd] : parity) {
        if (odd) result *= p;
    }
    return result;
}

SquareClass squarefree_part(const Rational& r) {
    if (r.is_zero()) throw ZeroInput("square class of zero");
    return SquareClass{squarefree_part_int(r.num() * r.den())};
}

std::ostream& operator<<(std::ostream& os, const SquareClass& c) {
    return os << c.d;
}

}  // namespace dq

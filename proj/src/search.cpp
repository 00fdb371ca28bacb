#include "dq/search.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <numeric>
#include <thread>
#include <tuple>

#include "dq/errors.hpp"

namespace dq {

int worker_count() {
    if (const char* env = std::getenv("DQ_THREADS")) {
        const long n = std::atol(env);
        if (n >= 1) return static_cast<int>(std::min(n, 256L));
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

namespace {

// Sort key making the output order independent of how the scan was split:
// by height, then |numerator|, positive before negative, then denominator.
auto rational_key(const Rational& r) {
    return std::make_tuple(height(r), abs(r.num()), r.sign() < 0, r.den());
}

bool dpoint_less(const DPoint& a, const DPoint& b) {
    const auto ka = std::make_tuple(rational_key(a.x), rational_key(a.y));
    const auto kb = std::make_tuple(rational_key(b.x), rational_key(b.y));
    return ka < kb;
}

// Points with x = num/den for all num in [lo, hi), den in [1, H], coprime.
void scan_numerators(const Rational& q, const Rational& m, long lo, long hi, long H,
                     std::vector<DPoint>& out) {
    for (long num = lo; num < hi; ++num) {
        for (long den = 1; den <= H; ++den) {
            if (std::gcd(std::abs(num), den) != 1) continue;
            const Rational x(num, den);
            const Rational xx = sq(x) - q;
            if (xx.is_zero()) continue;
            const Rational yy = q + m / xx;
            if (yy.sign() < 0 || !is_square(yy)) continue;
            const Rational y = sqrt_exact(yy);
            out.push_back({x, y});
            if (!y.is_zero()) out.push_back({x, -y});
        }
    }
}

}  // namespace

std::vector<DPoint> search_D_points(const Rational& q, const Rational& m, HeightBound bound) {
    if (q.is_zero()) throw InvalidParams("q must be nonzero");
    if (m.is_zero() || m == sq(q)) throw InvalidParams("m in {0, q^2} is excluded");

    const long H = bound.h;
    const long lo = -H, hi = H + 1;
    const int workers = std::max(1, std::min<int>(worker_count(), static_cast<int>(2 * H + 1)));

    std::vector<std::vector<DPoint>> parts(workers);
    std::vector<std::thread> pool;
    const long span = (hi - lo + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        const long a = lo + w * span, b = std::min(hi, a + span);
        if (a >= b) continue;
        pool.emplace_back(
            [&, a, b, w] { scan_numerators(q, m, a, b, H, parts[static_cast<size_t>(w)]); });
    }
    for (auto& t : pool) t.join();

    std::vector<DPoint> out;
    for (auto& part : parts) out.insert(out.end(), part.begin(), part.end());
    std::sort(out.begin(), out.end(), dpoint_less);
    return out;
}

std::optional<DPoint> find_square_base_point(const Rational& q, const Rational& m,
                                             HeightBound bound) {
    for (const DPoint& p : search_D_points(q, m, bound))
        if (is_square(sq(p.x) - q)) return p;
    return std::nullopt;
}

namespace {

struct BitRows {
    size_t n, words;
    std::vector<uint64_t> bits;
    explicit BitRows(size_t count) : n(count), words((count + 63) / 64), bits(n * words, 0) {}
    void set(size_t i, size_t j) { bits[i * words + j / 64] |= uint64_t(1) << (j % 64); }
    bool get(size_t i, size_t j) const {
        return bits[i * words + j / 64] >> (j % 64) & 1;
    }
    const uint64_t* row(size_t i) const { return &bits[i * words]; }
};

}  // namespace

std::vector<Quadruple> brute_force_quadruples(const Rational& q, long num_bound, long den_bound,
                                              bool signed_entries) {
    if (q.is_zero()) throw InvalidParams("q must be nonzero");
    if (num_bound < 1 || den_bound < 1) throw InvalidParams("bounds must be positive");

    std::vector<Rational> cand;
    for (long den = 1; den <= den_bound; ++den)
        for (long num = 1; num <= num_bound; ++num) {
            if (std::gcd(num, den) != 1) continue;
            cand.emplace_back(num, den);
            if (signed_entries) cand.emplace_back(-num, den);
        }
    std::sort(cand.begin(), cand.end());
    const size_t n = cand.size();

    // Pair compatibility, filled in parallel over row blocks.
    BitRows compat(n);
    const int workers = std::max(1, std::min<int>(worker_count(), static_cast<int>(n)));
    std::vector<std::thread> pool;
    std::atomic<size_t> next{0};
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (size_t i; (i = next.fetch_add(1)) < n;)
                for (size_t j = i + 1; j < n; ++j)
                    if (is_square(cand[i] * cand[j] + q)) {
                        compat.set(i, j);
                        compat.set(j, i);
                    }
        });
    for (auto& t : pool) t.join();

    std::vector<Quadruple> out;
    std::vector<uint64_t> ij(compat.words), ijk(compat.words);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            if (!compat.get(i, j)) continue;
            const uint64_t *ri = compat.row(i), *rj = compat.row(j);
            for (size_t w = 0; w < compat.words; ++w) ij[w] = ri[w] & rj[w];
            for (size_t k = j + 1; k < n; ++k) {
                if (!(ij[k / 64] >> (k % 64) & 1)) continue;
                const uint64_t* rk = compat.row(k);
                for (size_t w = 0; w < compat.words; ++w) ijk[w] = ij[w] & rk[w];
                for (size_t l = k + 1; l < n; ++l)
                    if (ijk[l / 64] >> (l % 64) & 1) {
                        const Quadruple qu{q, cand[i], cand[j], cand[k], cand[l]};
                        if (verify_quadruple(qu).pass) out.push_back(qu);
                    }
            }
        }
    return out;
}

}  // namespace dq

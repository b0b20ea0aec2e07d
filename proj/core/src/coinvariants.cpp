#include "cliffpair/coinvariants.hpp"

#include <stdexcept>

namespace cliffpair {

namespace {

bool even_orthogonal_k(const SymmetricPair& pair) {
    return pair.family() == PairFamily::AI && pair.rep_n() % 2 == 0;
}

// power sums s_1..s_m in the squared coordinates, written in the ring
// generators; for even orthogonal k the top one comes from the Newton
// identities with e_n = pf^2
std::vector<WPoly> squared_power_sums(const SymmetricPair& pair, const PolyRing* ring, int m) {
    size_t n = pair.dim_t();
    std::vector<WPoly> s(m + 1, WPoly(ring));
    size_t free_count = even_orthogonal_k(pair) ? n - 1 : n;
    for (int j = 1; j <= m; ++j) {
        if ((size_t)j <= free_count) {
            s[j] = WPoly::variable(ring, j - 1);
            continue;
        }
        if (!even_orthogonal_k(pair) || (size_t)j != n)
            throw std::invalid_argument("squared_power_sums: degree exceeds the generator range");
        // e_1..e_{n-1} by Newton from s_1..s_{n-1}; e_n = pf^2; then
        // s_n = e_1 s_{n-1} - e_2 s_{n-2} + ... + (-1)^{n-1} n e_n
        std::vector<WPoly> e(n + 1, WPoly(ring));
        e[0] = WPoly::constant(ring, Scalar(1));
        for (size_t k = 1; k < n; ++k) {
            WPoly acc(ring);
            Scalar sign(1);
            for (size_t i = 1; i <= k; ++i) {
                acc += e[k - i] * s[i] * sign;
                sign = -sign;
            }
            acc *= Scalar(1, (long)k);
            e[k] = std::move(acc);
        }
        e[n] = WPoly::variable(ring, n - 1, 2);
        WPoly acc(ring);
        Scalar sign(1);
        for (size_t i = 1; i < n; ++i) {
            acc += e[i] * s[n - i] * sign;
            sign = -sign;
        }
        acc += e[n] * WPoly::constant(ring, sign * Scalar((long)n));
        s[j] = std::move(acc);
    }
    s.erase(s.begin());
    return s;
}

} // namespace

PolyRing coinvariant_ring(const SymmetricPair& pair) {
    size_t n = pair.dim_t();
    if (n > 3) throw std::invalid_argument("coinvariant_ring: dim t exceeds the desk bound");
    PolyRing ring;
    if (even_orthogonal_k(pair)) {
        ring.nvars = n;
        for (size_t j = 1; j < n; ++j) {
            ring.names.push_back("q" + std::to_string(j));
            ring.weights.push_back(2 * (int)j);
        }
        ring.names.push_back("pf");
        ring.weights.push_back((int)n);
    } else {
        ring.nvars = n;
        for (size_t j = 1; j <= n; ++j) {
            ring.names.push_back("q" + std::to_string(j));
            ring.weights.push_back(2 * (int)j);
        }
    }
    return ring;
}

WPoly restricted_power_sum(const SymmetricPair& pair, const PolyRing* ring, int j) {
    if (j < 1) throw std::invalid_argument("restricted_power_sum: degree must be positive");
    std::vector<WPoly> s = squared_power_sums(pair, ring, j);
    WPoly out = s[j - 1];
    out *= Scalar(2);
    return out;
}

Scalar power_sum_at_rho(size_t N, int k) {
    // rho for sl(N) has coordinates (N+1-2i)/2, i = 1..N
    Scalar acc;
    for (size_t i = 1; i <= N; ++i) {
        Scalar x((long)N + 1 - 2 * (long)i, 2);
        Scalar p(1);
        for (int t = 0; t < k; ++t) p *= x;
        acc += p;
    }
    return acc;
}

PolyQuotientReport coinvariant_quotient(const SymmetricPair& pair, QuotientMode mode) {
    size_t N = pair.rep_n();
    PolyRing ring = coinvariant_ring(pair);

    PolyQuotientReport report;
    report.generators = ring.names;

    // ideal generators: restrictions to t of the g-invariant generators
    // p_2..p_N shifted by their value at rho; odd ones vanish identically
    std::vector<WPoly> gens;
    int maxdeg = 0;
    for (int k = 2; (size_t)k <= N; ++k) {
        if (k % 2 != 0) continue;
        WPoly g = restricted_power_sum(pair, &ring, k / 2);
        if (mode == QuotientMode::AT_RHO) g -= WPoly::constant(&ring, power_sum_at_rho(N, k));
        else g = g.top_part();
        maxdeg = std::max(maxdeg, g.degree());
        report.ideal_generators.push_back(g.str());
        gens.push_back(std::move(g));
    }

    std::vector<WPoly> gb = groebner(std::move(gens));
    QuotientInfo info = quotient_info(&ring, gb, 2 * maxdeg + (int)N);
    report.dim = info.dim;
    report.graded = info.graded;
    return report;
}

} // namespace cliffpair

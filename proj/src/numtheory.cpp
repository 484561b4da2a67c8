#include "numtheory.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "errors.hpp"

namespace rtc::numtheory {

namespace {

// Bound on the tetrahedron parameter d.  Keeps every intermediate product
// well inside int64 (3d^2 <= 3e12, squared distances etc. stay below 2^62).
constexpr int64_t kMaxD = 1000000;

// The representation counters gamma2 / gamma3 / hs_total_count take an
// arbitrary integer, in particular 3d^2 from pi_epsilon, so their bound has
// to clear 3 * kMaxD^2.  Trial division is still instant there.
constexpr int64_t kMaxRep = 4000000000000;

void require(bool ok, const std::string& msg) {
    if (!ok) throw std::invalid_argument(msg);
}

void check_d(int64_t d, bool odd_required) {
    require(d >= 1, "d must be positive");
    require(d <= kMaxD, "d out of supported range");
    if (odd_required) require(d % 2 == 1, "d must be odd");
}

void check_rep(int64_t n, bool odd_required) {
    require(n >= 1, "argument must be positive");
    require(n <= kMaxRep, "argument out of supported range");
    if (odd_required) require(n % 2 == 1, "argument must be odd");
}

int64_t gcd3(int64_t a, int64_t b, int64_t c) { return std::gcd(a, std::gcd(b, c)); }

}  // namespace

int64_t isqrt(int64_t n) {
    if (n < 0) throw std::invalid_argument("isqrt of negative value");
    auto r = static_cast<int64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

bool is_square(int64_t n, int64_t* root) {
    if (n < 0) return false;
    int64_t r = isqrt(n);
    if (r * r != n) return false;
    if (root) *root = r;
    return true;
}

std::vector<std::pair<int64_t, int>> factorize(int64_t n) {
    require(n >= 1, "factorize requires n >= 1");
    std::vector<std::pair<int64_t, int>> out;
    for (int64_t p = 2; p * p <= n; p += (p == 2) ? 1 : 2) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) n /= p, ++e;
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

bool is_prime(int64_t n) {
    if (n < 2) return false;
    for (int64_t p = 2; p * p <= n; p += (p == 2) ? 1 : 2)
        if (n % p == 0) return false;
    return true;
}

int legendre_minus3(int64_t p) {
    require(p >= 3 && p % 2 == 1, "legendre_minus3 requires an odd prime");
    require(is_prime(p), "legendre_minus3 requires an odd prime");
    if (p == 3) return 0;
    int64_t r = p % 12;
    return (r == 1 || r == 7) ? 1 : -1;
}

int64_t lambda_count(int64_t d) {
    check_d(d, /*odd=*/true);
    int64_t acc = 8 * d;
    for (auto [p, e] : factorize(d)) {
        (void)e;
        int chi = (p == 3) ? 0 : ((p % 12 == 1 || p % 12 == 7) ? 1 : -1);
        if (acc % p != 0) throw InternalError("lambda_count: non-exact division");
        acc = acc / p * (p - chi);
    }
    return acc;
}

int64_t hs_total_count(int64_t d) {
    check_rep(d, /*odd=*/false);
    int64_t total = 8;
    int gamma = 0;
    for (auto [p, e] : factorize(d)) {
        if (p == 2) continue;  // a^2+b^2+c^2 = 0 (mod 4) forces all even
        if (p == 3) {
            gamma = e;
            continue;
        }
        int64_t pe = 1;
        for (int i = 0; i < e; ++i) pe *= p;
        int64_t r = p % 12;
        if (r == 1 || r == 7) {
            total *= pe;
        } else {
            // geometric sum (p^e - 1)/(p - 1) is exact
            total *= pe + 2 * ((pe - 1) / (p - 1));
        }
    }
    int64_t p3 = 1;
    for (int i = 0; i <= gamma; ++i) p3 *= 3;
    total *= (p3 - 1) / 2;
    return total;
}

int64_t gamma2(int64_t d) {
    check_rep(d, /*odd=*/true);
    int k = 0;
    for (auto [p, e] : factorize(d)) {
        (void)e;
        int64_t r = p % 8;
        if (r == 5 || r == 7) return 0;
        ++k;  // remaining odd primes are 1,3 (mod 8)
    }
    return k == 0 ? 0 : int64_t{1} << (k - 1);
}

int64_t gamma3(int64_t d) {
    check_rep(d, /*odd=*/false);
    if (d % 2 == 0) return 0;
    if (d % 9 == 0) return 0;          // 3 | x and 3 | y, never coprime
    int64_t core = (d % 3 == 0) ? d / 3 : d;
    int k = 0;
    for (auto [p, e] : factorize(core)) {
        (void)e;
        if (p % 3 == 2) return 0;
        ++k;  // p = 1 (mod 3); p = 3 cannot appear in core
    }
    return k == 0 ? 0 : int64_t{1} << (k - 1);
}

int64_t pi_epsilon(int64_t d) {
    check_d(d, /*odd=*/true);
    if (d == 1) return 1;  // (1,1,1); the closed form below is not exact here
    int64_t num = lambda_count(d) + 24 * gamma2(3 * d * d);
    if (num % 48 != 0) throw InternalError("pi_epsilon: 48 does not divide the count");
    return num / 48;
}

std::vector<PrimitiveSolution> three_squares_primitive(int64_t d) {
    check_d(d, /*odd=*/true);
    const int64_t target = 3 * d * d;
    std::vector<PrimitiveSolution> out;
    for (int64_t a = 1; 3 * a * a <= target; ++a) {
        for (int64_t b = a; a * a + 2 * b * b <= target; ++b) {
            int64_t c;
            if (!is_square(target - a * a - b * b, &c)) continue;
            if (c < b) continue;
            if (gcd3(a, b, c) != 1) continue;
            out.push_back({a, b, c, d});
        }
    }
    return out;  // lexicographic by construction
}

std::vector<AcdTriple> acd_param(int64_t l, int64_t k) {
    require(l >= 1 && k >= 1, "acd_param requires l,k >= 1");
    require(k % 2 == 1, "acd_param requires odd k");
    require(std::gcd(k, l) == 1, "acd_param requires gcd(k,l) = 1");
    const int64_t d = 2 * l * l + k * k;
    std::vector<AcdTriple> out;
    auto emit = [&](int64_t a, int64_t c) {
        a = std::abs(a);
        c = std::abs(c);
        if (2 * a * a + c * c != 3 * d * d) throw InternalError("acd_param: not a solution");
        if (gcd3(a, c, d) != 1) throw InternalError("acd_param: solution not primitive");
        out.push_back({a, c, d});
    };
    if ((k - l) % 3 != 0) emit(2 * l * l + 2 * k * l - k * k, k * k + 4 * k * l - 2 * l * l);
    if ((k + l) % 3 != 0) emit(2 * l * l - 2 * k * l - k * k, k * k - 4 * k * l - 2 * l * l);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<int64_t> k_values(int64_t n) {
    require(n >= 1, "k_values requires n >= 1");
    std::vector<int64_t> out;
    for (int64_t k = 1; k <= n; k += 2) {
        bool good = true;
        for (auto [p, e] : factorize(k)) {
            (void)e;
            if (p % 3 != 1) {
                good = false;
                break;
            }
        }
        if (good) out.push_back(k);
    }
    return out;
}

std::vector<MnPair> mn_primitive(int64_t k) {
    require(k >= 1, "mn_primitive requires k >= 1");
    require(k <= 3000000, "mn_primitive: k out of supported range");
    if (k == 1) return {MnPair{0, 1}};  // degenerate seed: the unit pair
    std::vector<MnPair> out;
    const int64_t kk = k * k;
    for (int64_t m = 1; 3 * m * m <= kk; ++m) {
        // norm is increasing in n on n >= 2m, so scan until it passes k^2
        for (int64_t n = 2 * m + 1;; ++n) {
            int64_t norm = m * m - m * n + n * n;
            if (norm > kk) break;
            if (norm == kk && std::gcd(m, n) == 1) out.push_back({m, n});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::pair<int64_t, int64_t>> s3r_solutions(int64_t q) {
    require(q >= 1, "s3r_solutions requires q >= 1");
    std::vector<std::pair<int64_t, int64_t>> out;
    for (int64_t r = -isqrt(2 * q / 3); 3 * r * r <= 2 * q; ++r) {
        int64_t s;
        if (!is_square(2 * q - 3 * r * r, &s)) continue;
        out.emplace_back(r, s);
        if (s != 0) out.emplace_back(r, -s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace rtc::numtheory

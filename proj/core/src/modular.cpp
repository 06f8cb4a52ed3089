#include <touchard/modular.hpp>
#include <touchard/sequences.hpp>

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace touchard {

namespace {

bool trial_division_prime(long p) {
    if (p < 2) return false;
    if (p < 4) return true;
    if (p % 2 == 0) return false;
    for (long d = 3; d * d <= p; d += 2) {
        if (p % d == 0) return false;
    }
    return true;
}

}  // namespace

PrimeModulus::PrimeModulus(long p) : p_(p) {
    if (p < 2 || p > 1000000) {
        throw std::invalid_argument("modulus out of range [2, 10^6]: " + std::to_string(p));
    }
    if (!trial_division_prime(p)) {
        throw std::invalid_argument("modulus is composite: " + std::to_string(p));
    }
}

long mod_inverse(long a, const PrimeModulus& p) {
    long m = p.value();
    a %= m;
    if (a < 0) a += m;
    if (a == 0) {
        throw std::domain_error("no inverse: argument divisible by " + std::to_string(m));
    }
    // Extended Euclid on (a, m); m prime so gcd is 1.
    long old_r = a, r = m;
    long old_s = 1, s = 0;
    while (r != 0) {
        long q = old_r / r;
        long tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
    }
    long inv = old_s % m;
    if (inv < 0) inv += m;
    return inv;
}

ResidueSeq residue_seq(const PrimeModulus& p, long r, long horizon) {
    if (horizon < 0) {
        throw std::invalid_argument("negative horizon");
    }
    ResidueSeq seq;
    seq.p = p.value();
    seq.r = r;
    seq.values.reserve(static_cast<size_t>(horizon));
    long pv = p.value();
    long seed_count = std::min<long>(pv, horizon);
    for (long n = 0; n < seed_count; ++n) {
        seq.values.push_back(static_cast<uint32_t>(mod_floor(rbell(n, r), pv)));
    }
    for (long n = pv; n < horizon; ++n) {
        uint64_t v = seq.values[static_cast<size_t>(n - pv + 1)];
        v += seq.values[static_cast<size_t>(n - pv)];
        seq.values.push_back(static_cast<uint32_t>(v % static_cast<uint64_t>(pv)));
    }
    return seq;
}

std::vector<uint32_t> minimal_recurrence(const ResidueSeq& seq, long max_order) {
    if (max_order < 1) {
        throw std::invalid_argument("max_order must be positive");
    }
    long len = static_cast<long>(seq.values.size());
    if (len < 2 * max_order) {
        throw std::invalid_argument("sequence too short: need >= 2*max_order = " +
                                    std::to_string(2 * max_order) + " terms, have " +
                                    std::to_string(len));
    }
    PrimeModulus pm(seq.p);
    long p = seq.p;
    auto mod = [p](long v) {
        v %= p;
        return v < 0 ? v + p : v;
    };

    // Berlekamp-Massey over GF(p). C and B are connection polynomials with
    // C[0] == 1; on exit deg(C) = L and sum_j C[j]*s[n-j] == 0 for all valid n.
    std::vector<long> C{1}, B{1};
    long L = 0, m = 1;
    long b = 1;
    for (long n = 0; n < len; ++n) {
        long d = 0;
        for (long j = 0; j <= L; ++j) {
            d = mod(d + C[static_cast<size_t>(j)] *
                            static_cast<long>(seq.values[static_cast<size_t>(n - j)]));
        }
        if (d == 0) {
            ++m;
        } else if (2 * L <= n) {
            std::vector<long> T = C;
            long coef = mod(d * mod_inverse(b, pm));
            if (static_cast<long>(C.size()) < static_cast<long>(B.size()) + m) {
                C.resize(B.size() + static_cast<size_t>(m), 0);
            }
            for (size_t j = 0; j < B.size(); ++j) {
                C[j + static_cast<size_t>(m)] = mod(C[j + static_cast<size_t>(m)] - coef * B[j]);
            }
            L = n + 1 - L;
            B = T;
            b = d;
            m = 1;
        } else {
            long coef = mod(d * mod_inverse(b, pm));
            if (static_cast<long>(C.size()) < static_cast<long>(B.size()) + m) {
                C.resize(B.size() + static_cast<size_t>(m), 0);
            }
            for (size_t j = 0; j < B.size(); ++j) {
                C[j + static_cast<size_t>(m)] = mod(C[j + static_cast<size_t>(m)] - coef * B[j]);
            }
            ++m;
        }
    }

    if (L > max_order) {
        throw std::runtime_error("no recurrence of order <= " + std::to_string(max_order) +
                                 " fits; shortest found has order " + std::to_string(L));
    }
    // Convert connection polynomial to coefficient form:
    // s[n] = sum_{i=1}^{L} c_i s[n-i] with c_i = -C[i].
    std::vector<uint32_t> coeffs;
    coeffs.reserve(static_cast<size_t>(L));
    for (long i = 1; i <= L; ++i) {
        long ci = i < static_cast<long>(C.size()) ? C[static_cast<size_t>(i)] : 0;
        coeffs.push_back(static_cast<uint32_t>(mod(-ci)));
    }
    return coeffs;
}

namespace {

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m) {
    uint64_t result = 1;
    a %= m;
    while (e > 0) {
        if (e & 1) result = mulmod_u64(result, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return result;
}

uint64_t pollard_rho(uint64_t n) {
    // Brent's cycle variant; n must be odd, composite, and not a prime power
    // handled elsewhere. Retries with increasing offset until a factor splits.
    for (uint64_t c = 1;; ++c) {
        uint64_t x = 2, y = 2, d = 1;
        auto step = [n, c](uint64_t v) { return (mulmod_u64(v, v, n) + c) % n; };
        while (d == 1) {
            x = step(x);
            y = step(step(y));
            uint64_t diff = x > y ? x - y : y - x;
            d = std::gcd(diff, n);
        }
        if (d != n) return d;
    }
}

void factor_u64(uint64_t n, std::vector<uint64_t>& out) {
    if (n == 1) return;
    if (is_prime_u64(n)) {
        out.push_back(n);
        return;
    }
    uint64_t d = pollard_rho(n);
    factor_u64(d, out);
    factor_u64(n / d, out);
}

}  // namespace

bool is_prime_u64(uint64_t x) {
    if (x < 2) return false;
    for (uint64_t sp : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (x % sp == 0) return x == sp;
    }
    uint64_t d = x - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // Deterministic for all 64-bit inputs with this base set.
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t v = powmod_u64(a, d, x);
        if (v == 1 || v == x - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            v = mulmod_u64(v, v, x);
            if (v == x - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

std::vector<Integer> factorize(const Integer& x) {
    if (x < 1) {
        throw std::invalid_argument("factorize requires a positive integer");
    }
    if (x >= (Integer(1) << 62)) {
        throw std::invalid_argument("factorize supports inputs below 2^62");
    }
    uint64_t n = x.convert_to<uint64_t>();
    std::vector<uint64_t> factors;
    uint64_t rest = n;
    for (uint64_t d = 2; d <= 1000000 && d * d <= rest; d == 2 ? d = 3 : d += 2) {
        while (rest % d == 0) {
            factors.push_back(d);
            rest /= d;
        }
    }
    if (rest > 1) factor_u64(rest, factors);
    std::sort(factors.begin(), factors.end());

    Integer check = 1;
    std::vector<Integer> result;
    result.reserve(factors.size());
    for (uint64_t f : factors) {
        result.emplace_back(f);
        check *= Integer(f);
    }
    if (check != x) {
        throw std::runtime_error("factorization self-check failed");
    }
    return result;
}

}  // namespace touchard

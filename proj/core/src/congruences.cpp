#include <touchard/congruences.hpp>
#include <touchard/modular.hpp>
#include <touchard/sequences.hpp>

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <utility>

namespace touchard {

namespace {

constexpr long kIndexLimit = 1000000;  // largest table index any check may touch

constexpr std::pair<CheckKind, const char*> kKindNames[] = {
    {CheckKind::TOUCHARD, "TOUCHARD"},
    {CheckKind::R_TOUCHARD, "R_TOUCHARD"},
    {CheckKind::R_PERIOD_SHIFT, "R_PERIOD_SHIFT"},
    {CheckKind::SUN_ZAGIER, "SUN_ZAGIER"},
    {CheckKind::SZ_GENERAL, "SZ_GENERAL"},
    {CheckKind::THM_SUMD, "THM_SUMD"},
    {CheckKind::COR1, "COR1"},
    {CheckKind::SZ_NEW, "SZ_NEW"},
    {CheckKind::REC_NM, "REC_NM"},
    {CheckKind::REC_MR, "REC_MR"},
    {CheckKind::BACKWARD_PROP, "BACKWARD_PROP"},
    {CheckKind::BTC, "BTC"},
    {CheckKind::PROP_SUM, "PROP_SUM"},
    {CheckKind::THM_BTD, "THM_BTD"},
    {CheckKind::AUX3, "AUX3"},
};

long norm(long v, long p) {
    v %= p;
    return v < 0 ? v + p : v;
}

// (-1)^e as a residue / as an integer; e may be any nonnegative exponent.
long sign_mod(long e, long p) { return e % 2 == 0 ? 1 : p - 1; }
Integer sign_exact(long e) { return e % 2 == 0 ? Integer(1) : Integer(-1); }

long powmod_l(long base, long e, long p) {
    long result = 1;
    base = norm(base, p);
    while (e > 0) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return result;
}

long ipow_checked(long base, long exp) {
    long v = 1;
    for (long i = 0; i < exp; ++i) {
        if (v > kIndexLimit / base) {
            throw std::invalid_argument("power " + std::to_string(base) + "^" +
                                        std::to_string(exp) + " exceeds the supported horizon");
        }
        v *= base;
    }
    return v;
}

// (inflate ? (k+1)! : k!) mod p.
long factorial_mod(long k, long p, bool inflate) {
    long v = 1;
    long top = inflate ? k + 1 : k;
    for (long i = 2; i <= top; ++i) v = v * (i % p) % p;
    return v;
}

Integer factorial_exact(long k) {
    Integer v = 1;
    for (long i = 2; i <= k; ++i) v *= i;
    return v;
}

// --- residue-table caches -------------------------------------------------
// Snapshots are shared_ptr so concurrent evaluate() calls stay safe while a
// longer table replaces a shorter one.

std::mutex cache_mutex;

std::shared_ptr<const std::vector<long>> bell_mod_cached(long p, long r, long len) {
    static std::map<std::pair<long, long>, std::shared_ptr<const std::vector<long>>> cache;
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto& slot = cache[{p, r}];
    if (!slot || static_cast<long>(slot->size()) < len) {
        long grown = slot ? 2 * static_cast<long>(slot->size()) : 0;
        slot = std::make_shared<const std::vector<long>>(
            detail::rbell_mod_row(p, r, std::max(len, grown)));
    }
    return slot;
}

std::shared_ptr<const std::vector<std::vector<long>>> s2_mod_cached(long p, long r, long nmax) {
    static std::map<std::pair<long, long>,
                    std::shared_ptr<const std::vector<std::vector<long>>>>
        cache;
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto& slot = cache[{p, r}];
    if (!slot || static_cast<long>(slot->size()) < nmax + 1) {
        long grown = slot ? 2 * (static_cast<long>(slot->size()) - 1) : 0;
        slot = std::make_shared<const std::vector<std::vector<long>>>(
            detail::rstirling2_mod_rows(p, r, std::max(nmax, grown)));
    }
    return slot;
}

std::shared_ptr<const std::vector<long>> der_mod_cached(long p, long len) {
    static std::map<long, std::shared_ptr<const std::vector<long>>> cache;
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto& slot = cache[p];
    if (!slot || static_cast<long>(slot->size()) < len) {
        long grown = slot ? 2 * static_cast<long>(slot->size()) : 0;
        slot = std::make_shared<const std::vector<long>>(
            detail::derangement_mod_row(p, std::max(len, grown)));
    }
    return slot;
}

// --- theorem-1 expressions, residue versions -------------------------------

// sum_k {n k}_r (-1)^{k+m+r-1} D_{k+m+r-1} mod p.
long e1_mod(long p, long n, long m, long r) {
    auto s2 = s2_mod_cached(p, r, n);
    auto der = der_mod_cached(p, n + m + r + 1);
    long acc = 0;
    for (long k = 0; k <= n; ++k) {
        long idx = k + m + r - 1;
        long coeff = (*s2)[static_cast<size_t>(n)][static_cast<size_t>(k)];
        if (idx < 0) {
            if (coeff != 0) {
                throw side_condition_error("negative derangement index with nonzero coefficient");
            }
            continue;
        }
        long term = coeff * sign_mod(idx, p) % p * (*der)[static_cast<size_t>(idx)] % p;
        acc = (acc + term) % p;
    }
    return acc;
}

// sum_{k<=m} sum_{i<=r} [m k] [r i] (-1)^{r-i} B_{n+k+i-1,-m} mod p.
long e2_mod(long p, long n, long m, long r) {
    auto bell = bell_mod_cached(p, -m, n + m + r + 1);
    long acc = 0;
    for (long k = 0; k <= m; ++k) {
        Integer smk = rstirling(StirlingKind::FIRST, m, k, 0);
        for (long i = 0; i <= r; ++i) {
            Integer coeff = smk * rstirling(StirlingKind::FIRST, r, i, 0);
            long idx = n + k + i - 1;
            if (idx < 0) {
                if (coeff != 0) {
                    throw side_condition_error("negative index with nonzero coefficient");
                }
                continue;
            }
            long term = mod_floor(coeff, p) * sign_mod(r - i, p) % p *
                        (*bell)[static_cast<size_t>(idx)] % p;
            acc = (acc + term) % p;
        }
    }
    return acc;
}

// sum_{k=0}^{m+r-1} C(m+r-1,k) (-1)^k k! B_{n,r-k-1} mod p.
long e3_mod(long p, long n, long m, long r, bool inflate_factorial) {
    long top = m + r - 1;
    long acc = 0;
    for (long k = 0; k <= top; ++k) {
        auto bell = bell_mod_cached(p, r - k - 1, n + 1);
        long term = mod_floor(binomial(top, k), p) * factorial_mod(k, p, inflate_factorial) % p;
        term = term * sign_mod(k, p) % p * (*bell)[static_cast<size_t>(n)] % p;
        acc = (acc + term) % p;
    }
    return acc;
}

// --- theorem-1 expressions, exact versions ---------------------------------

Integer e1_exact(long n, long m, long r) {
    Integer acc = 0;
    for (long k = 0; k <= n; ++k) {
        long idx = k + m + r - 1;
        Integer coeff = rstirling(StirlingKind::SECOND, n, k, r);
        if (idx < 0) {
            if (coeff != 0) {
                throw side_condition_error("negative derangement index with nonzero coefficient");
            }
            continue;
        }
        acc += coeff * sign_exact(idx) * derangement(idx);
    }
    return acc;
}

Integer e2_exact(long n, long m, long r) {
    Integer acc = 0;
    for (long k = 0; k <= m; ++k) {
        Integer smk = rstirling(StirlingKind::FIRST, m, k, 0);
        for (long i = 0; i <= r; ++i) {
            Integer coeff = smk * rstirling(StirlingKind::FIRST, r, i, 0);
            long idx = n + k + i - 1;
            if (idx < 0) {
                if (coeff != 0) {
                    throw side_condition_error("negative index with nonzero coefficient");
                }
                continue;
            }
            acc += coeff * sign_exact(r - i) * rbell(idx, -m);
        }
    }
    return acc;
}

Integer e3_exact(long n, long m, long r, bool inflate_factorial) {
    long top = m + r - 1;
    Integer acc = 0;
    for (long k = 0; k <= top; ++k) {
        Integer f = factorial_exact(inflate_factorial ? k + 1 : k);
        acc += binomial(top, k) * sign_exact(k) * f * rbell(n, r - k - 1);
    }
    return acc;
}

// --- point evaluation -------------------------------------------------------

long need(const std::optional<long>& v, const char* pname, CheckKind kind) {
    if (!v) {
        throw std::invalid_argument(std::string("missing parameter ") + pname + " for " +
                                    check_kind_name(kind));
    }
    return *v;
}

void require_nonneg(long v, const char* pname) {
    if (v < 0) {
        throw side_condition_error(std::string(pname) + " >= 0 required, got " +
                                   std::to_string(v));
    }
}

// sum over the residues i = 1 .. p^a - 1 of B_{n+i,r} * (-m)^{-i} mod p.
long sz_lhs_mod(long p, long a, long m, long n, long r) {
    long pa = ipow_checked(p, a);
    if (pa - 1 > 2400) {
        throw std::invalid_argument("p^a - 1 exceeds the 2400-term evaluation bound");
    }
    auto bell = bell_mod_cached(p, r, n + pa);
    long inv = mod_inverse(norm(-m, p), PrimeModulus(p));
    long acc = 0;
    long pw = 1;
    for (long i = 1; i <= pa - 1; ++i) {
        pw = pw * inv % p;
        acc = (acc + (*bell)[static_cast<size_t>(n + i)] * pw) % p;
    }
    return acc;
}

EvalResult make_mod_result(long p, std::vector<long> sides) {
    EvalResult res;
    res.exact = false;
    res.sides.reserve(sides.size());
    bool equal = true;
    for (size_t i = 0; i < sides.size(); ++i) {
        res.sides.emplace_back(norm(sides[i], p));
        if (sides[i] % p != sides[0] % p) equal = false;
    }
    res.equal = equal;
    return res;
}

EvalResult make_exact_result(std::vector<Integer> sides) {
    EvalResult res;
    res.exact = true;
    bool equal = true;
    for (const Integer& s : sides) {
        if (s != sides[0]) equal = false;
    }
    res.sides = std::move(sides);
    res.equal = equal;
    return res;
}

EvalResult evaluate_impl(CheckKind kind, const CheckPoint& pt, std::optional<Mutation> mut) {
    const bool ds = mut == Mutation::DROP_SIGN;
    const long off = mut == Mutation::OFF_BY_ONE_INDEX ? 1 : 0;
    const bool wc = mut == Mutation::WRONG_COEFF;

    switch (kind) {
        case CheckKind::TOUCHARD: {
            long p = PrimeModulus(need(pt.p, "p", kind)).value();
            long m = need(pt.m, "m", kind);
            long n = need(pt.n, "n", kind);
            require_nonneg(n, "n");
            if (m < 1) throw side_condition_error("m >= 1 required");
            long pm = ipow_checked(p, m);
            auto bell = bell_mod_cached(p, 0, n + pm + off + 2);
            long lhs = (*bell)[static_cast<size_t>(n + pm + off)];
            long rhs = (norm(wc ? m + 1 : m, p) * (*bell)[static_cast<size_t>(n)] +
                        (*bell)[static_cast<size_t>(n + 1)]) %
                       p;
            if (ds) rhs = (p - rhs) % p;
            return make_mod_result(p, {lhs, rhs});
        }
        case CheckKind::R_TOUCHARD: {
            long p = PrimeModulus(need(pt.p, "p", kind)).value();
            long a = need(pt.a, "a", kind);
            long n = need(pt.n, "n", kind);
            long r = need(pt.r, "r", kind);
            require_nonneg(n, "n");
            if (a < 1) throw side_condition_error("a >= 1 required");
            long pa = ipow_checked(p, a);
            auto bell = bell_mod_cached(p, r, n + pa + off + 2);
            long lhs = (*bell)[static_cast<size_t>(n + pa + off)];
            long rhs = ((*bell)[static_cast<size_t>(n + 1)] +
                        norm(wc ? a + 1 : a, p) * (*bell)[static_cast<size_t>(n)]) %
                       p;
            if (ds) rhs = (p - rhs) % p;
            return make_mod_result(p, {lhs, rhs});
        }
        case CheckKind::R_PERIOD_SHIFT: {
            // Both sides from exact tables: a mod-p table reduces the row
            // parameter r mod p by ring structure, which would make this
            // particular congruence true by construction.
            long p = PrimeModulus(need(pt.p, "p", kind)).value();
            long n = need(pt.n, "n", kind);
            long r = need(pt.r, "r", kind);
            require_nonneg(n, "n");
            long lhs = mod_floor(rbell(n + off, r + p), p);
            long rhs = mod_floor(rbell(n, r), p);
            if (wc) rhs = rhs * 2 % p;
            if (ds) rhs = (p - rhs) % p;
            return make_mod_result(p, {lhs, rhs});
        }
        case CheckKind::SUN_ZAGIER: {
            long p = PrimeModulus(need(pt.p, "p", kind)).value();
            long m = need(pt.m, "m", kind);
            if (m < 1) throw side_condition_error("m >= 1 required");
            if (m % p == 0) throw side_condition_error("p divides m");
            auto bell = bell_mod_cached(p, 0, p);
            auto der = der_mod_cached(p, m + off + 1);
            long inv = mod_inverse(norm(-m, p), PrimeModulus(p));
            long lhs = 0;
            long pw = 1;
            for (long k = 1; k <= p - 1; ++k) {
                pw = pw * inv % p;
                lhs = (lhs + (*bell)[static_cast<size_t>(k)] * pw) % p;
            }
            long rhs = sign_mod(m - 1, p) * (*der)[static_cast<size_t>(m - 1 + off)] % p;
            if (wc) rhs = rhs * 2 % p;
            if (ds) rhs = (p - rhs) % p;
            return make_mod_result(p, {lhs, rhs});
        }
        case CheckKind::SZ_GENERAL: {
            long p = PrimeModulus(need(pt.p, "p", kind)).value();
            long a = need(pt.a, "a", kind);
            long m = need(pt.m, "m", kind);
            long n = need(pt.n, "n", kind);
            long r = need(pt.r, "r", kind);
            require_nonneg(n, "n");
            require_nonneg(r, "r");
            if (a < 1) throw side_condition_error("a >= 1 required");
            if (m < 1) throw side_condition_error("m >= 1 required");
            if (m % p == 0) throw side_condition_error("p divides m");
            long lhs = sz_lhs_mod(p, a, m, n, r);
            long rhs = norm(wc ? a + 1 : a, p) * e1_mod(p, n + off, m, r) % p;
            if (ds) rhs = (p - rhs) % p;
            return make_mod_result(p, {lhs, rhs});
        }
        case CheckKind::THM_SUMD: {
            long m = need(pt.m, "m", kind);
            long n = need(pt.n, "n", kind);
            long r = need(pt.r, "r", kind);
            require_nonneg(n, "n");
            require_nonneg(m, "m");
            require_nonneg(r, "r");
            if (m + r < 1) throw side_condition_error("m + r >= 1 required");
            if (!pt.p) {
                Integer s1 = e1_exact(n + off, m, r);
                Integer s2 = e2_exact(n, m, r);
                Integer s3 = e3_exact(n, m, r, wc);
                if (ds) s3 = -s3;
                return make_exact_result({s1, s2, s3});
            }
            long p = PrimeModulus(*pt.p).value();
            long s1 = e1_mod(p, n + off, m, r);
            long s2 = e2_mod(p, n, m, r);
            long s3 = e3_mod(p, n, m, r, wc);
            if (ds) s3 = (p - s3) % p;
            return make_mod_result(p, {s1, s2, s3});
        }
        case CheckKind::COR1: {
            long n = need(pt.n, "n", kind);
            long r = need(pt.r, "r", kind);
            require_nonneg(r, "r");
            if (n < 1) throw side_condition_error("n >= 1 required");
            Integer lhs = e1_exact(n, 0, r);
            Integer rhs = rbell(n - 1 + off, r);
            if (wc) rhs *= 2;
            if (ds) rhs = -rhs;
            return make_exact_result({lhs, rhs});
        }
        case CheckKind::SZ_NEW: {
            long p = PrimeModulus(need(pt.p, "p", kind)).value();
            long a = need(pt.a, "a", kind);
            long m = need(pt.m, "m", kind);
            long n = need(pt.n, "n", kind);
            long r = need(pt.r, "r", kind);
            require_nonneg(n, "n");
            require_nonneg(r, "r");
            if (a < 1) throw side_condition_error("a >= 1 required");
            if (m < 1) throw side_condition_error("m >= 1 required");
            if (m % p == 0) throw side_condition_error("p divides m");
            long lhs = sz_lhs_mod(p, a, m, n, r);
            long rhs = norm(a, p) * e3_mod(p, n + off, m, r, wc) % p;
            if (ds) rhs = (p - rhs) % p;
            return make_mod_result(p, {lhs, rhs});
        }
        case CheckKind::REC_NM: {
            long n = need(pt.n, "n", kind);
            long m = need(pt.m, "m", kind);
            long r = need(pt.r, "r", kind);
            require_nonneg(n, "n");
            require_nonneg(m, "m");
            require_nonneg(r, "r");
            Integer lhs = rbell(n + m + off, r);
            Integer rhs = 0;
            Integer x_pow = 1;
            for (long k = 0; k <= m; ++k) {
                rhs += rstirling(StirlingKind::SECOND, m, k, r) * x_pow * rbell(n, k + r);
                x_pow *= wc ? 2 : 1;
            }
            if (ds) rhs = -rhs;
            return make_exact_result({lhs, rhs});
        }
        case CheckKind::REC_MR: {
            long n = need(pt.n, "n", kind);
            long m = need(pt.m, "m", kind);
            long r = need(pt.r, "r", kind);
            require_nonneg(n, "n");
            require_nonneg(m, "m");
            require_nonneg(r, "r");
            Integer lhs = rbell(n + off, r + m);
            Integer rhs = 0;
            Integer x_pow = 1;
            for (long k = 0; k <= m; ++k) {
                rhs += sign_exact(m - k) * rstirling(StirlingKind::FIRST, m, k, r) * x_pow *
                       rbell(n + k, r);
                x_pow *= wc ? 2 : 1;
            }
            if (ds) rhs = -rhs;
            return make_exact_result({lhs, rhs});
        }
        case CheckKind::BACKWARD_PROP: {
            long p = PrimeModulus(need(pt.p, "p", kind)).value();
            long n = need(pt.n, "n", kind);
            long r = need(pt.r, "r", kind);
            require_nonneg(n, "n");
            require_nonneg(r, "r");
            long pr = ipow_checked(p, r);
            auto lrow = bell_mod_cached(p, -r, n + pr + off + 1);
            auto rrow = bell_mod_cached(p, -r + 1, n + 1);
            long lhs = (*lrow)[static_cast<size_t>(n + pr + off)];
            long rhs = (*rrow)[static_cast<size_t>(n)];
            if (wc) rhs = rhs * 2 % p;
            if (ds) rhs = (p - rhs) % p;
            return make_mod_result(p, {lhs, rhs});
        }
        case CheckKind::BTC: {
            long p = PrimeModulus(need(pt.p, "p", kind)).value();
            long n = need(pt.n, "n", kind);
            if (n < p) throw side_condition_error("n >= p required");
            auto brow = bell_mod_cached(p, 0, n + off + 1);
            auto vrow = bell_mod_cached(p, -1, n + 1);
            long lhs = (*brow)[static_cast<size_t>(n - p + off)];
            long rhs = (*vrow)[static_cast<size_t>(n)];
            if (wc) rhs = rhs * 2 % p;
            if (ds) rhs = (p - rhs) % p;
            return make_mod_result(p, {lhs, rhs});
        }
        case CheckKind::PROP_SUM: {
            long p = PrimeModulus(need(pt.p, "p", kind)).value();
            long n = need(pt.n, "n", kind);
            long r = need(pt.r, "r", kind);
            require_nonneg(n, "n");
            require_nonneg(r, "r");
            long shift = 0;
            for (long k = 1; k <= r; ++k) {
                shift += ipow_checked(p, k);
                if (shift > kIndexLimit) {
                    throw std::invalid_argument("shift sum exceeds the supported horizon");
                }
            }
            if (n < shift) throw side_condition_error("n >= p + p^2 + ... + p^r required");
            auto brow = bell_mod_cached(p, 0, n - shift + off + 1);
            auto rrow = bell_mod_cached(p, -r, n + 1);
            long lhs = (*brow)[static_cast<size_t>(n - shift + off)];
            long rhs = (*rrow)[static_cast<size_t>(n)];
            if (wc) rhs = rhs * 2 % p;
            if (ds) rhs = (p - rhs) % p;
            return make_mod_result(p, {lhs, rhs});
        }
        case CheckKind::THM_BTD: {
            long p = PrimeModulus(need(pt.p, "p", kind)).value();
            long m = need(pt.m, "m", kind);
            long n = need(pt.n, "n", kind);
            long r = need(pt.r, "r", kind);
            require_nonneg(r, "r");
            if (m < 1) throw side_condition_error("m >= 1 required");
            if (m % p == 0) throw side_condition_error("p divides m");
            long pm = ipow_checked(p, m);
            if (n < pm) throw side_condition_error("n >= p^m required");
            auto bell = bell_mod_cached(p, r, n + off + 1);
            long lhs = (*bell)[static_cast<size_t>(n - pm + off)];
            long s1 = e1_mod(p, n, m, r);
            long s2 = e2_mod(p, n, m, r);
            long s3 = e3_mod(p, n, m, r, wc);
            if (ds) s3 = (p - s3) % p;
            return make_mod_result(p, {lhs, s1, s2, s3});
        }
        case CheckKind::AUX3: {
            long p = PrimeModulus(need(pt.p, "p", kind)).value();
            long m = need(pt.m, "m", kind);
            long n = need(pt.n, "n", kind);
            long r = need(pt.r, "r", kind);
            long N = need(pt.N, "N", kind);
            require_nonneg(n, "n");
            if (m < 1) throw side_condition_error("m >= 1 required");
            if (N < 1) throw side_condition_error("N >= 1 required");
            long pm = ipow_checked(p, m);
            auto bell = bell_mod_cached(p, r, n + pm + N + off + 1);
            long lhs = powmod_l(wc ? m + 1 : m, N, p) * (*bell)[static_cast<size_t>(n + off)] % p;
            long rhs = 0;
            for (long k = 0; k <= N - 1; ++k) {
                long term = sign_mod(k, p) * powmod_l(m, N - 1 - k, p) % p *
                            (*bell)[static_cast<size_t>(n + pm + k)] % p;
                rhs = (rhs + term) % p;
            }
            rhs = (rhs + sign_mod(N, p) * (*bell)[static_cast<size_t>(n + N)]) % p;
            if (ds) rhs = (p - rhs) % p;
            return make_mod_result(p, {lhs, rhs});
        }
    }
    throw std::logic_error("unhandled check kind");
}

// --- grid machinery ----------------------------------------------------------

struct Dims {
    bool p = false, a = false, m = false, n = false, r = false, N = false;
};

Dims dims_for(CheckKind kind) {
    Dims d;
    switch (kind) {
        case CheckKind::TOUCHARD: d.p = d.m = d.n = true; break;
        case CheckKind::R_TOUCHARD: d.p = d.a = d.n = d.r = true; break;
        case CheckKind::R_PERIOD_SHIFT: d.p = d.n = d.r = true; break;
        case CheckKind::SUN_ZAGIER: d.p = d.m = true; break;
        case CheckKind::SZ_GENERAL: d.p = d.a = d.m = d.n = d.r = true; break;
        case CheckKind::THM_SUMD: d.p = d.m = d.n = d.r = true; break;
        case CheckKind::COR1: d.n = d.r = true; break;
        case CheckKind::SZ_NEW: d.p = d.a = d.m = d.n = d.r = true; break;
        case CheckKind::REC_NM: d.n = d.m = d.r = true; break;
        case CheckKind::REC_MR: d.n = d.m = d.r = true; break;
        case CheckKind::BACKWARD_PROP: d.p = d.n = d.r = true; break;
        case CheckKind::BTC: d.p = d.n = true; break;
        case CheckKind::PROP_SUM: d.p = d.n = d.r = true; break;
        case CheckKind::THM_BTD: d.p = d.m = d.n = d.r = true; break;
        case CheckKind::AUX3: d.p = d.m = d.n = d.r = d.N = true; break;
    }
    return d;
}

std::vector<std::optional<long>> dim_values(bool used, long lo, long hi, const char* name) {
    if (!used) return {std::nullopt};
    if (hi < lo) {
        throw std::invalid_argument(std::string("empty range for dimension ") + name);
    }
    std::vector<std::optional<long>> vals;
    vals.reserve(static_cast<size_t>(hi - lo + 1));
    for (long v = lo; v <= hi; ++v) vals.emplace_back(v);
    return vals;
}

CongruenceReport run_check_impl(CheckKind kind, const Grid& grid, bool record_all,
                                std::optional<Mutation> mut) {
    Dims dims = dims_for(kind);

    std::vector<std::optional<long>> pvals;
    if (dims.p) {
        if (grid.ps.empty()) {
            if (kind != CheckKind::THM_SUMD) {
                throw std::invalid_argument(std::string(check_kind_name(kind)) +
                                            " requires a nonempty prime list");
            }
            pvals = {std::nullopt};  // exact-integer mode
        } else {
            for (long p : grid.ps) pvals.emplace_back(PrimeModulus(p).value());
        }
    } else {
        pvals = {std::nullopt};
    }
    auto avals = dim_values(dims.a, grid.a_lo, grid.a_hi, "a");
    auto mvals = dim_values(dims.m, grid.m_lo, grid.m_hi, "m");
    auto rvals = dim_values(dims.r, grid.r_lo, grid.r_hi, "r");
    auto Nvals = dim_values(dims.N, grid.N_lo, grid.N_hi, "N");
    auto nvals = dim_values(dims.n, grid.n_lo, grid.n_hi, "n");

    CongruenceReport report;
    report.kind = kind;
    report.grid_desc = grid.describe(kind);
    if (mut) {
        report.grid_desc += std::string(" [mutation=") + mutation_name(*mut) + "]";
    }

    for (const auto& p : pvals)
        for (const auto& a : avals)
            for (const auto& m : mvals)
                for (const auto& r : rvals)
                    for (const auto& N : Nvals)
                        for (const auto& n : nvals) {
                            CheckPoint pt{p, a, m, n, r, N};
                            EvalResult res;
                            try {
                                res = evaluate_impl(kind, pt, mut);
                            } catch (const side_condition_error&) {
                                ++report.skipped;
                                continue;
                            }
                            ++report.tested;
                            if (!res.equal) {
                                report.failures.push_back({pt, res.sides, false});
                            }
                            if (record_all) {
                                report.all_points.push_back({pt, res.sides, res.equal});
                            }
                        }

    if (report.tested == 0) {
        throw std::runtime_error(std::string("every grid point was skipped for ") +
                                 check_kind_name(kind));
    }
    return report;
}

Grid probe_grid(CheckKind kind) {
    Grid g;
    switch (kind) {
        case CheckKind::TOUCHARD:
            g.ps = {5};
            g.m_lo = 1, g.m_hi = 2;
            g.n_lo = 0, g.n_hi = 30;
            break;
        case CheckKind::R_TOUCHARD:
            g.ps = {5};
            g.a_lo = 1, g.a_hi = 2;
            g.r_lo = -1, g.r_hi = 1;
            g.n_lo = 0, g.n_hi = 20;
            break;
        case CheckKind::R_PERIOD_SHIFT:
            g.ps = {5};
            g.r_lo = -1, g.r_hi = 1;
            g.n_lo = 0, g.n_hi = 30;
            break;
        case CheckKind::SUN_ZAGIER:
            g.ps = {5, 7};
            g.m_lo = 1, g.m_hi = 6;
            break;
        case CheckKind::SZ_GENERAL:
            g.ps = {5};
            g.a_lo = 1, g.a_hi = 1;
            g.m_lo = 1, g.m_hi = 4;
            g.r_lo = 0, g.r_hi = 2;
            g.n_lo = 0, g.n_hi = 8;
            break;
        case CheckKind::THM_SUMD:
            g.ps = {5};
            g.m_lo = 0, g.m_hi = 2;
            g.r_lo = 0, g.r_hi = 2;
            g.n_lo = 0, g.n_hi = 10;
            break;
        case CheckKind::COR1:
            g.n_lo = 1, g.n_hi = 12;
            g.r_lo = 0, g.r_hi = 3;
            break;
        case CheckKind::SZ_NEW:
            g.ps = {5};
            g.a_lo = 1, g.a_hi = 1;
            g.m_lo = 1, g.m_hi = 4;
            g.r_lo = 0, g.r_hi = 2;
            g.n_lo = 0, g.n_hi = 8;
            break;
        case CheckKind::REC_NM:
        case CheckKind::REC_MR:
            g.n_lo = 0, g.n_hi = 8;
            g.m_lo = 1, g.m_hi = 6;
            g.r_lo = 0, g.r_hi = 2;
            break;
        case CheckKind::BACKWARD_PROP:
            g.ps = {5};
            g.r_lo = 0, g.r_hi = 2;
            g.n_lo = 0, g.n_hi = 20;
            break;
        case CheckKind::BTC:
            g.ps = {5};
            g.n_lo = 0, g.n_hi = 60;
            break;
        case CheckKind::PROP_SUM:
            g.ps = {5};
            g.r_lo = 0, g.r_hi = 2;
            g.n_lo = 0, g.n_hi = 70;
            break;
        case CheckKind::THM_BTD:
            g.ps = {5};
            g.m_lo = 1, g.m_hi = 3;
            g.r_lo = 0, g.r_hi = 2;
            g.n_lo = 0, g.n_hi = 60;
            break;
        case CheckKind::AUX3:
            g.ps = {5};
            g.m_lo = 1, g.m_hi = 2;
            g.r_lo = 0, g.r_hi = 1;
            g.n_lo = 0, g.n_hi = 10;
            g.N_lo = 1, g.N_hi = 4;
            break;
    }
    return g;
}

}  // namespace

const char* check_kind_name(CheckKind kind) {
    for (const auto& [k, name] : kKindNames) {
        if (k == kind) return name;
    }
    throw std::logic_error("unknown check kind");
}

std::optional<CheckKind> parse_check_kind(const std::string& name) {
    for (const auto& [k, kname] : kKindNames) {
        if (name == kname) return k;
    }
    return std::nullopt;
}

const std::vector<CheckKind>& all_check_kinds() {
    static const std::vector<CheckKind> kinds = [] {
        std::vector<CheckKind> v;
        for (const auto& [k, name] : kKindNames) v.push_back(k);
        return v;
    }();
    return kinds;
}

std::string CheckPoint::to_string() const {
    std::ostringstream os;
    bool first = true;
    auto put = [&](const char* key, const std::optional<long>& v) {
        if (!v) return;
        if (!first) os << ' ';
        os << key << '=' << *v;
        first = false;
    };
    put("p", p);
    put("a", a);
    put("m", m);
    put("n", n);
    put("r", r);
    put("N", N);
    return os.str();
}

EvalResult evaluate(CheckKind kind, const CheckPoint& point) {
    return evaluate_impl(kind, point, std::nullopt);
}

Integer thm1_stirling_derangement_sum(long n, long m, long r) {
    if (n < 0 || m < 0 || r < 0) throw std::invalid_argument("n, m, r must be nonnegative");
    return e1_exact(n, m, r);
}

Integer thm1_double_stirling_sum(long n, long m, long r) {
    if (n < 0 || m < 0 || r < 0) throw std::invalid_argument("n, m, r must be nonnegative");
    return e2_exact(n, m, r);
}

Integer thm1_binomial_factorial_sum(long n, long m, long r) {
    if (n < 0 || m < 0 || r < 0) throw std::invalid_argument("n, m, r must be nonnegative");
    return e3_exact(n, m, r, false);
}

std::string Grid::describe(CheckKind kind) const {
    Dims dims = dims_for(kind);
    std::ostringstream os;
    bool first = true;
    auto sep = [&] {
        if (!first) os << ' ';
        first = false;
    };
    if (dims.p) {
        sep();
        if (ps.empty()) {
            os << "exact";
        } else {
            os << "p={";
            for (size_t i = 0; i < ps.size(); ++i) {
                if (i) os << ',';
                os << ps[i];
            }
            os << '}';
        }
    }
    auto range = [&](bool used, const char* name, long lo, long hi) {
        if (!used) return;
        sep();
        os << name << "=[" << lo << ',' << hi << ']';
    };
    range(dims.a, "a", a_lo, a_hi);
    range(dims.m, "m", m_lo, m_hi);
    range(dims.n, "n", n_lo, n_hi);
    range(dims.r, "r", r_lo, r_hi);
    range(dims.N, "N", N_lo, N_hi);
    return os.str();
}

Grid canonical_grid(CheckKind kind) {
    Grid g;
    switch (kind) {
        case CheckKind::TOUCHARD:
            g.ps = {2, 3, 5, 7, 11, 13};
            g.m_lo = 1, g.m_hi = 3;
            g.n_lo = 0, g.n_hi = 200;
            break;
        case CheckKind::R_TOUCHARD:
            g.ps = {2, 3, 5, 7, 11, 13};
            g.a_lo = 1, g.a_hi = 2;
            g.r_lo = -3, g.r_hi = 3;
            g.n_lo = 0, g.n_hi = 200;
            break;
        case CheckKind::R_PERIOD_SHIFT:
            g.ps = {2, 3, 5, 7, 11, 13};
            g.r_lo = -3, g.r_hi = 3;
            g.n_lo = 0, g.n_hi = 200;
            break;
        case CheckKind::SUN_ZAGIER:
            g.ps = {2, 3, 5, 7, 11, 13};
            g.m_lo = 1, g.m_hi = 12;
            break;
        case CheckKind::SZ_GENERAL:
            g.ps = {3, 5, 7};
            g.a_lo = 1, g.a_hi = 2;
            g.m_lo = 1, g.m_hi = 6;
            g.r_lo = 0, g.r_hi = 3;
            g.n_lo = 0, g.n_hi = 20;
            break;
        case CheckKind::THM_SUMD:
            g.ps = {2, 3, 5, 7, 11, 13};
            g.m_lo = 0, g.m_hi = 4;
            g.r_lo = 0, g.r_hi = 4;
            g.n_lo = 0, g.n_hi = 20;
            break;
        case CheckKind::COR1:
            g.n_lo = 1, g.n_hi = 40;
            g.r_lo = 0, g.r_hi = 6;
            break;
        case CheckKind::SZ_NEW:
            g.ps = {3, 5, 7};
            g.a_lo = 1, g.a_hi = 2;
            g.m_lo = 1, g.m_hi = 6;
            g.r_lo = 0, g.r_hi = 3;
            g.n_lo = 0, g.n_hi = 20;
            break;
        case CheckKind::REC_NM:
        case CheckKind::REC_MR:
            g.n_lo = 0, g.n_hi = 12;
            g.m_lo = 0, g.m_hi = 12;
            g.r_lo = 0, g.r_hi = 4;
            break;
        case CheckKind::BACKWARD_PROP:
            g.ps = {2, 3, 5};
            g.r_lo = 0, g.r_hi = 3;
            g.n_lo = 0, g.n_hi = 100;
            break;
        case CheckKind::BTC:
            g.ps = {2, 3, 5, 7, 11, 13};
            g.n_lo = 0, g.n_hi = 150;
            break;
        case CheckKind::PROP_SUM:
            g.ps = {2, 3, 5};
            g.r_lo = 0, g.r_hi = 3;
            g.n_lo = 0, g.n_hi = 280;
            break;
        case CheckKind::THM_BTD:
            g.ps = {2, 3, 5, 7};
            g.m_lo = 1, g.m_hi = 4;
            g.r_lo = 0, g.r_hi = 3;
            g.n_lo = 0, g.n_hi = 200;
            break;
        case CheckKind::AUX3:
            g.ps = {2, 3, 5};
            g.m_lo = 1, g.m_hi = 3;
            g.r_lo = -2, g.r_hi = 2;
            g.n_lo = 0, g.n_hi = 20;
            g.N_lo = 1, g.N_hi = 8;
            break;
    }
    return g;
}

CongruenceReport run_check(CheckKind kind, const Grid& grid, bool record_all) {
    return run_check_impl(kind, grid, record_all, std::nullopt);
}

const char* mutation_name(Mutation mutation) {
    switch (mutation) {
        case Mutation::DROP_SIGN: return "DROP_SIGN";
        case Mutation::OFF_BY_ONE_INDEX: return "OFF_BY_ONE_INDEX";
        case Mutation::WRONG_COEFF: return "WRONG_COEFF";
    }
    throw std::logic_error("unknown mutation");
}

const std::vector<Mutation>& all_mutations() {
    static const std::vector<Mutation> muts = {Mutation::DROP_SIGN, Mutation::OFF_BY_ONE_INDEX,
                                               Mutation::WRONG_COEFF};
    return muts;
}

CongruenceReport counterexample_probe(CheckKind kind, Mutation mutation) {
    return run_check_impl(kind, probe_grid(kind), false, mutation);
}

}  // namespace touchard

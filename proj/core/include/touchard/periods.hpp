#pragma once

// Periodicity of B_{n,r} mod p: the candidate period N_p = (p^p - 1)/(p - 1),
// minimal-period search over the divisors of N_p, divisor-form and
// lower-bound properties, the r-shift corollary, falsification of
// low-digit-sum candidate periods, and the chain that recovers B_n from
// B_{n - N_p}.

#include <touchard/integer.hpp>
#include <touchard/modular.hpp>

#include <optional>
#include <vector>

namespace touchard {

struct PeriodAnalysis {
    long p = 0;
    Integer np;
    std::vector<Integer> divisors;              // all divisors of np, ascending
    std::optional<Integer> minimal_period;      // nullopt = UNKNOWN (budget exhausted)
    bool divisor_form_ok = false;               // every divisor > 1 is == 1 (mod 2p)
    Integer lower_bound;                        // C(2p,p)/2 + p
    bool bound_ok = false;                      // minimal_period > lower_bound (when known)
    long horizon = 0;                           // horizon used for period tests; 0 = none

    // Everything claimed holds. With minimal_period known: it equals np and
    // both divisor-form and lower-bound properties hold. UNKNOWN minimal
    // period degrades to the property-based claims alone.
    bool pass() const {
        if (minimal_period) return *minimal_period == np && divisor_form_ok && bound_ok;
        return divisor_form_ok;
    }
};

Integer compute_np(const PrimeModulus& p);

// True iff B_{n+P,r} == B_{n,r} (mod p) for all 0 <= n < horizon - P.
// Requires 1 <= P and horizon >= P + 2p so the comparison window is
// meaningful; P must fit in a long.
bool is_period(const PrimeModulus& p, long r, const Integer& P, long horizon);

// Factors np, tests each divisor as a period of B_n mod p over horizon
// 2*np + 50, and returns the least divisor that is one. When that horizon
// exceeds `budget` the minimal period is left UNKNOWN — never guessed —
// while the divisor and bound properties are still filled in.
PeriodAnalysis minimal_period(const PrimeModulus& p, long budget);

// True iff B_{n,r} == B_{n-K} (mod p) for all K <= n < horizon, where
// K = p + p^2 + ... + p^((-r) mod p). Requires horizon > K.
bool verify_shift_corollary(const PrimeModulus& p, long r, long horizon);

struct DigitSumReport {
    long p = 0;
    bool exhaustive = false;   // false = deterministic sample, clearly labeled
    long candidates = 0;       // candidate periods examined
    long periods_found = 0;    // candidates that survived (expected 0)
    std::vector<long> survivors;
    long horizon = 0;
    bool pass() const { return candidates > 0 && periods_found == 0; }
};

// Checks every P < p^(p-1) with base-p digit sum <= p and asserts none is a
// period of B_n mod p. Exhaustive for p in {2,3,5}; p = 7 tests a
// deterministic stride sample of the candidates; larger p is rejected.
DigitSumReport digit_sum_falsifier(const PrimeModulus& p, long sample_limit = 200);

// Verifies each link of the chain recovering B_n from B_{n-N_p}:
//   (1) N_p = 1 + sum_{k=1}^{p-1} p^k exactly,
//   (2) B_{n-1-sum} == B_{n-1,-(p-1)} (mod p),
//   (3) B_{j,-(p-1)} == B_{j,1} (mod p),
//   (4) B_{j,1} == B_{j+1} (mod p).
// Requires horizon > N_p (practical for p <= 7).
bool hall_recovery_check(const PrimeModulus& p, long horizon);

}  // namespace touchard

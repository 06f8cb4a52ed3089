#pragma once

// Exact integer sequences: binomials, derangements, r-Stirling triangles (both
// kinds, in the shifted convention where the triangle for parameter r starts at
// n = k = 0), and r-Bell numbers for every integer r.
//
// Conventions used throughout:
//   {n k}_r  second kind: partitions of an (n+r)-set into k+r blocks with the
//            r distinguished elements separated.
//            Recurrence: {n k}_r = (k+r){n-1 k}_r + {n-1 k-1}_r.
//   [n k]_r  first kind (unsigned): permutations of an (n+r)-set with k+r
//            cycles, distinguished elements in distinct cycles.
//            Recurrence: [n k]_r = (n+r-1)[n-1 k]_r + [n-1 k-1]_r.
//   B_{n,r}  r-Bell number, defined for all integer r by the EGF
//            exp(e^t - 1 + r t); satisfies B_{n+1,r} = sum_k C(n,k) B_{k,r}
//            + r B_{n,r}. For r >= 0 it equals sum_k {n k}_r. B_{n,0} = B_n,
//            B_{n,-1} = V_n (no-singleton partition count).
//   D_n      derangements, D_n = n D_{n-1} + (-1)^n, D_0 = 1.

#include <touchard/integer.hpp>

#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace touchard {

enum class StirlingKind { FIRST, SECOND };

Integer binomial(long n, long k);
Integer derangement(long n);

// Unsigned r-Stirling number of the given kind; requires r >= 0 and n,k >= 0.
// Returns 0 for k > n.
Integer rstirling(StirlingKind kind, long n, long k, long r);

// r-Bell number B_{n,r} for any integer r.
Integer rbell(long n, long r);

// True iff sum_k C(n,k) B_{k,r} m^{n-k} == B_{n,r+m} exactly.
bool shift_identity_check(long n, long r, long m);

// Memoized table of one sequence family. Entries are append-only: once an
// index is computed its value never changes. Thread safety: appends are
// serialized internally; returned values are copies.
class SeqTable {
  public:
    enum class Kind { RSTIRLING1, RSTIRLING2, RBELL, DERANGEMENT, BINOMIAL };

    // r is meaningful for the Stirling/Bell kinds only (signed for RBELL,
    // nonnegative for the Stirling kinds).
    explicit SeqTable(Kind kind, long r = 0);

    // Triangle kinds (RSTIRLING1/2, BINOMIAL) take (n, k); sequence kinds
    // (RBELL, DERANGEMENT) take n alone.
    Integer get(long n, long k = -1) const;

    Kind kind() const { return kind_; }
    long r() const { return r_; }

  private:
    Kind kind_;
    long r_;
};

namespace detail {

// B_{n,r} mod p rows computed by running the exact triangle recurrence in
// Z/p (a ring homomorphism of the exact computation). Independent of the
// order-p extension in modular.hpp, so congruence checks that use these rows
// do not assume the recurrence under test.
std::vector<long> rbell_mod_row(long p, long r, long count);

// Rows 0..nmax of {n k}_r mod p for the congruence harness.
std::vector<std::vector<long>> rstirling2_mod_rows(long p, long r, long nmax);

std::vector<long> derangement_mod_row(long p, long count);

}  // namespace detail

}  // namespace touchard

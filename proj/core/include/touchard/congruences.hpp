#pragma once

// Verification harness for the congruence/identity catalogue: evaluate a
// single parameter point, sweep a grid, or run a deliberately corrupted
// formula to prove the harness can detect violations.
//
// Congruence kinds compare residues computed from mod-p recurrence tables
// that are ring-homomorphic images of the exact recurrences, so no check
// assumes the congruence it is testing. The one exception forced by that
// rule is R_PERIOD_SHIFT: a mod-p table cannot distinguish r from r + p,
// which would make the check vacuous, so both of its sides are computed
// from exact integer tables and reduced afterwards. Identity kinds (COR1,
// REC_NM, REC_MR, and THM_SUMD with no modulus) compare exact integers.

#include <touchard/integer.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace touchard {

enum class CheckKind {
    TOUCHARD,        // B_{n+p^m} == m*B_n + B_{n+1} (mod p)
    R_TOUCHARD,      // B_{n+p^a,r} == B_{n+1,r} + a*B_{n,r} (mod p), any integer r
    R_PERIOD_SHIFT,  // B_{n,r+p} == B_{n,r} (mod p)
    SUN_ZAGIER,      // sum_{k=1}^{p-1} B_k (-m)^{-k} == (-1)^{m-1} D_{m-1} (mod p), p !| m
    SZ_GENERAL,      // sum_{i=1}^{p^a-1} B_{n+i,r} (-m)^{-i} == a * [thm1 expr 1] (mod p)
    THM_SUMD,        // three-way agreement of the theorem-1 expressions (mod p, or exact)
    COR1,            // [thm1 expr 1 at m=0] == B_{n-1,r} exactly, n >= 1
    SZ_NEW,          // sum_{i=1}^{p^a-1} B_{n+i,r} (-m)^{-i} == a * [thm1 expr 3] (mod p)
    REC_NM,          // B_{n+m,r} == sum_k S2(m,k)_r B_{n,k+r} exactly
    REC_MR,          // B_{n,r+m} == sum_k (-1)^{m-k} S1(m,k)_r B_{n+k,r} exactly
    BACKWARD_PROP,   // B_{n+p^r,-r} == B_{n,-r+1} (mod p)
    BTC,             // B_{n-p} == V_n (mod p), n >= p
    PROP_SUM,        // B_{n-S} == B_{n,-r} (mod p), S = p + p^2 + ... + p^r, n >= S
    THM_BTD,         // B_{n-p^m,r} == each theorem-1 expression (mod p), n >= p^m, p !| m
    AUX3,            // m^N B_{n,r} == sum_{k<N} (-1)^k m^{N-1-k} B_{n+p^m+k,r} + (-1)^N B_{n+N,r}
};

const char* check_kind_name(CheckKind kind);
std::optional<CheckKind> parse_check_kind(const std::string& name);
const std::vector<CheckKind>& all_check_kinds();

// One grid point; only the fields a kind uses are set.
struct CheckPoint {
    std::optional<long> p;
    std::optional<long> a;
    std::optional<long> m;
    std::optional<long> n;
    std::optional<long> r;
    std::optional<long> N;
    std::string to_string() const;
};

// All evaluated expressions for one point: sides[0] is the left-hand side,
// the rest are the right-hand expressions (THM_SUMD and THM_BTD have more
// than two). Residue kinds hold values in [0, p); exact kinds hold signed
// integers. equal is true iff all sides agree.
struct EvalResult {
    std::vector<Integer> sides;
    bool equal = false;
    bool exact = false;
};

// Thrown when a point violates a kind's side conditions (p | m, n below the
// backward shift, ...). run_check counts such points as skipped.
class side_condition_error : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

EvalResult evaluate(CheckKind kind, const CheckPoint& point);

// Exact theorem-1 expressions (signed integers). All three agree for
// n >= 0, m, r >= 0, m + r >= 1; the first with m = 0 also equals
// B_{n-1,r} for n >= 1 (COR1).
Integer thm1_stirling_derangement_sum(long n, long m, long r);
Integer thm1_double_stirling_sum(long n, long m, long r);
Integer thm1_binomial_factorial_sum(long n, long m, long r);

// Inclusive parameter ranges; a kind only reads the dimensions it uses.
// A hi < lo range means "dimension unused". ps empty is allowed only for
// THM_SUMD, where it selects the exact-integer mode.
struct Grid {
    std::vector<long> ps;
    long n_lo = 0, n_hi = -1;
    long m_lo = 0, m_hi = -1;
    long r_lo = 0, r_hi = -1;
    long a_lo = 0, a_hi = -1;
    long N_lo = 0, N_hi = -1;
    std::string describe(CheckKind kind) const;
};

// The pinned grid each kind is verified on by default.
Grid canonical_grid(CheckKind kind);

struct TestedPoint {
    CheckPoint point;
    std::vector<Integer> sides;
    bool pass = false;
};

struct CongruenceReport {
    CheckKind kind;
    std::string grid_desc;
    long tested = 0;
    long skipped = 0;
    std::vector<TestedPoint> failures;
    std::vector<TestedPoint> all_points;  // filled only when record_all
    bool pass() const { return tested > 0 && failures.empty(); }
};

// Sweeps the grid in a fixed order (p, a, m, r, N outer to inner, n last),
// skipping side-condition violations. Throws if the grid is empty for the
// kind's dimensions or if every point was skipped.
CongruenceReport run_check(CheckKind kind, const Grid& grid, bool record_all = false);

// Formula corruptions for the harness self-test. DROP_SIGN negates the
// final right-hand expression; OFF_BY_ONE_INDEX shifts the kind's principal
// index by one; WRONG_COEFF perturbs the kind's characteristic coefficient
// (m, a, the stray x, or a factorial weight; plain doubling where the kind
// has no coefficient).
enum class Mutation { DROP_SIGN, OFF_BY_ONE_INDEX, WRONG_COEFF };

const char* mutation_name(Mutation mutation);
const std::vector<Mutation>& all_mutations();

// Runs `kind` on a small built-in grid with the corrupted formula; a
// healthy harness returns a FAILing report for every kind/mutation pair.
CongruenceReport counterexample_probe(CheckKind kind, Mutation mutation);

}  // namespace touchard

// Acceptance harness: one criterion per invocation (argv[1] = 1..9), one
// summary line per criterion on stdout, exit 0 on PASS / 1 on FAIL. Each
// criterion re-derives its claim from scratch; none consults another's
// output. Budgets are wall-clock and enforced where the claim carries one.

#include <touchard/congruences.hpp>
#include <touchard/enumerate.hpp>
#include <touchard/modular.hpp>
#include <touchard/periods.hpp>
#include <touchard/sequences.hpp>
#include <touchard/series.hpp>
#include <touchard/umbral.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

using namespace touchard;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

bool check(bool ok, const char* what) {
    if (!ok) std::printf("  FAIL: %s\n", what);
    return ok;
}

bool within_budget(double elapsed_ms, double budget_ms) {
    std::printf("  elapsed %.0f ms (budget %.0f ms)\n", elapsed_ms, budget_ms);
    return elapsed_ms < budget_ms;
}

// 1. Enumeration-oracle equivalence for the exact tables.
bool criterion_1() {
    auto start = Clock::now();
    bool ok = true;
    for (long n = 0; n <= 10; ++n) {
        ok &= check(enumerate_oracle(EnumKind::PARTITIONS, n) == rbell(n, 0),
                    "partition count != rbell(n,0)");
        ok &= check(enumerate_oracle(EnumKind::PARTITIONS_NO_SINGLETON, n) == rbell(n, -1),
                    "no-singleton count != rbell(n,-1)");
    }
    for (long n = 0; n <= 9; ++n) {
        ok &= check(enumerate_oracle(EnumKind::DERANGEMENTS, n) == derangement(n),
                    "derangement enumeration mismatch");
    }
    long points2 = 0, points1 = 0;
    for (long r = 0; r <= 3; ++r) {
        for (long n = 0; n + r <= 10; ++n) {
            for (long k = 0; k <= n; ++k) {
                ok &= enumerate_oracle(EnumKind::RSTIRLING2, n, k, r) ==
                      rstirling(StirlingKind::SECOND, n, k, r);
                ++points2;
            }
        }
        for (long n = 0; n + r <= 9; ++n) {
            for (long k = 0; k <= n; ++k) {
                ok &= enumerate_oracle(EnumKind::RSTIRLING1, n, k, r) ==
                      rstirling(StirlingKind::FIRST, n, k, r);
                ++points1;
            }
        }
    }
    ok = check(ok, "an r-Stirling triangle entry disagrees with enumeration");
    std::printf("  triangles: %ld second-kind and %ld first-kind entries enumerated\n",
                points2, points1);
    return within_budget(ms_since(start), 5000) && ok;
}

// 2. EGF-oracle equivalence for rbell and both r-Stirling triangles.
bool criterion_2() {
    auto start = Clock::now();
    bool ok = true;
    for (long r = -3; r <= 3; ++r) {
        PowerSeries f = egf_rbell(r, 25);
        for (long n = 0; n < 25; ++n) {
            ok &= f.egf_coefficient(n) == rbell(n, r);
        }
    }
    ok = check(ok, "egf_rbell disagrees with the exact table");
    bool ok_tri = true;
    for (long r = 0; r <= 4; ++r) {
        for (long k = 0; k <= 4; ++k) {
            PowerSeries s2 = egf_rstirling(StirlingKind::SECOND, k, r, 20);
            PowerSeries s1 = egf_rstirling(StirlingKind::FIRST, k, r, 20);
            for (long n = 0; n < 20; ++n) {
                ok_tri &= s2.egf_coefficient(n) == rstirling(StirlingKind::SECOND, n, k, r);
                ok_tri &= s1.egf_coefficient(n) == rstirling(StirlingKind::FIRST, n, k, r);
            }
        }
    }
    ok &= check(ok_tri, "an r-Stirling column EGF disagrees with the triangle");
    return within_budget(ms_since(start), 5000) && ok;
}

// 3. The full congruence suite on its canonical grids, zero failures.
bool criterion_3() {
    auto start = Clock::now();
    bool ok = true;
    for (CheckKind kind : all_check_kinds()) {
        CongruenceReport report = run_check(kind, canonical_grid(kind));
        std::printf("  %-15s tested=%-6ld skipped=%-5ld %s\n", check_kind_name(kind),
                    report.tested, report.skipped, report.pass() ? "PASS" : "FAIL");
        ok &= report.pass();
    }
    return within_budget(ms_since(start), 60000) && ok;
}

// 4. Exact integer identities: COR1, both recurrences, and the umbral layer.
bool criterion_4() {
    auto start = Clock::now();
    bool ok = true;
    for (CheckKind kind : {CheckKind::COR1, CheckKind::REC_NM, CheckKind::REC_MR}) {
        CongruenceReport report = run_check(kind, canonical_grid(kind));
        std::printf("  %-8s tested=%-4ld %s\n", check_kind_name(kind), report.tested,
                    report.pass() ? "PASS" : "FAIL");
        ok &= report.pass();
    }
    bool lemma = true;
    for (long k = 0; k <= 12; ++k) lemma &= check_umbral_lemma(k);
    ok &= check(lemma, "umbral derangement lemma");
    bool shift = true;
    for (long n = 0; n <= 20; ++n) {
        for (long m = -5; m <= 5; ++m) shift &= check_umbral_shift(n, m);
    }
    ok &= check(shift, "umbral shift identity");
    bool expansion = true;
    for (long n = 0; n <= 12; ++n) {
        for (long r = 0; r <= 4; ++r) {
            expansion &= check_stirling_expansion(ExpansionKind::FALLING, n, r);
            expansion &= check_stirling_expansion(ExpansionKind::RISING, n, r);
        }
    }
    ok &= check(expansion, "Stirling expansion identities");
    bool ortho = true;
    for (long n = 0; n <= 10; ++n) {
        for (long m = 0; m <= n; ++m) {
            for (long r = 0; r <= 3; ++r) ortho &= check_orthogonality(n, m, r);
        }
    }
    ok &= check(ortho, "r-Stirling orthogonality");
    return within_budget(ms_since(start), 10000) && ok;
}

// 5. Three-way expression agreement plus the two pinned probes.
bool criterion_5() {
    bool ok = true;
    CongruenceReport report = run_check(CheckKind::THM_SUMD, canonical_grid(CheckKind::THM_SUMD));
    std::printf("  THM_SUMD mod-p grid: tested=%ld skipped=%ld %s\n", report.tested,
                report.skipped, report.pass() ? "PASS" : "FAIL");
    ok &= report.pass();

    bool exact_grid = true;
    for (long n = 0; n <= 20; ++n) {
        for (long m = 0; m <= 4; ++m) {
            for (long r = 0; r <= 4; ++r) {
                if (m + r < 1) continue;
                Integer e1 = thm1_stirling_derangement_sum(n, m, r);
                exact_grid &= e1 == thm1_double_stirling_sum(n, m, r);
                exact_grid &= e1 == thm1_binomial_factorial_sum(n, m, r);
            }
        }
    }
    ok &= check(exact_grid, "exact three-way agreement on n<=20, m<=4, r<=4");

    Integer e1 = thm1_stirling_derangement_sum(2, 2, 0);
    Integer e2 = thm1_double_stirling_sum(2, 2, 0);
    Integer e3 = thm1_binomial_factorial_sum(2, 2, 0);
    std::printf("  probe n=2 m=2 r=0: %s %s %s (want -1 -1 -1)\n", to_decimal(e1).c_str(),
                to_decimal(e2).c_str(), to_decimal(e3).c_str());
    ok &= check(e1 == -1 && e2 == -1 && e3 == -1, "exact-value probe");

    // congruent-but-not-equal probe: p=2, m=1, r=0, n=4
    CheckPoint pt;
    pt.p = 2;
    pt.m = 1;
    pt.r = 0;
    pt.n = 4;
    EvalResult res = evaluate(CheckKind::THM_BTD, pt);
    Integer lhs = rbell(2, 0);
    Integer rhs = thm1_stirling_derangement_sum(4, 1, 0);
    std::printf("  remark probe: B_2 = %s, expression = %s, mod-2 agreement = %s\n",
                to_decimal(lhs).c_str(), to_decimal(rhs).c_str(), res.equal ? "yes" : "no");
    ok &= check(res.equal, "remark probe congruence mod 2");
    ok &= check(lhs == 2 && rhs == 4 && lhs != rhs, "remark probe integer inequality");
    return ok;
}

// 6. Period properties. The minimal periods match N_p, but two of the
//    stated side claims are false in fact and are reported as failures:
//    the divisor form breaks at p = 2 and the binomial lower bound breaks
//    at p = 2 and p = 3. This criterion is expected to stay red.
bool criterion_6() {
    bool ok = true;
    const std::vector<std::pair<long, long>> expected = {
        {2, 3}, {3, 13}, {5, 781}, {7, 137257}};
    for (auto [p, np] : expected) {
        PeriodAnalysis a = minimal_period(PrimeModulus(p), 300000);
        bool match = a.minimal_period && *a.minimal_period == np;
        std::printf("  p=%ld minimal period %s (want %ld) %s\n", p,
                    a.minimal_period ? to_decimal(*a.minimal_period).c_str() : "UNKNOWN", np,
                    match ? "ok" : "MISMATCH");
        ok &= match;
    }
    for (long p : {2L, 3L, 5L, 7L, 11L}) {
        PeriodAnalysis a = minimal_period(PrimeModulus(p), 300000);
        if (!a.divisor_form_ok) {
            for (const Integer& d : a.divisors) {
                if (d > 1 && mod_floor(d, 2 * p) != 1) {
                    std::printf("  FAIL: divisor form at p=%ld: divisor %s == %ld (mod %ld)\n",
                                p, to_decimal(d).c_str(), mod_floor(d, 2 * p), 2 * p);
                }
            }
        }
        ok &= a.divisor_form_ok;
    }
    for (long p : {2L, 3L, 5L, 7L}) {
        PeriodAnalysis a = minimal_period(PrimeModulus(p), 300000);
        if (!a.bound_ok) {
            std::printf("  FAIL: lower bound at p=%ld: minimal %s is not > C(2p,p)/2 + p = %s\n",
                        p, a.minimal_period ? to_decimal(*a.minimal_period).c_str() : "UNKNOWN",
                        to_decimal(a.lower_bound).c_str());
        }
        ok &= a.bound_ok;
    }
    auto start = Clock::now();
    ResidueSeq seq = residue_seq(PrimeModulus(7), 0, 2 * 137257 + 50);
    double elapsed = ms_since(start);
    std::printf("  p=7 residue generation: %zu terms in %.0f ms (budget 2000 ms)\n",
                seq.values.size(), elapsed);
    ok &= elapsed < 2000;
    return ok;
}

// 7. Exhaustive digit-sum falsification for p in {2,3,5}.
bool criterion_7() {
    auto start = Clock::now();
    bool ok = true;
    for (long p : {2L, 3L, 5L}) {
        DigitSumReport report = digit_sum_falsifier(PrimeModulus(p));
        std::printf("  p=%ld: %ld candidates (%s), %ld periods found\n", p, report.candidates,
                    report.exhaustive ? "exhaustive" : "sampled", report.periods_found);
        ok &= report.exhaustive && report.pass();
    }
    return within_budget(ms_since(start), 5000) && ok;
}

// 8. Berlekamp-Massey recovers order exactly p with x^p - x - 1.
bool criterion_8() {
    bool ok = true;
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
        ResidueSeq seq = residue_seq(PrimeModulus(p), 0, 4 * p + 20);
        std::vector<uint32_t> c = minimal_recurrence(seq, p);
        bool shape = static_cast<long>(c.size()) == p;
        if (shape) {
            for (long i = 1; i <= p; ++i) {
                uint32_t expect = (i == p - 1 || i == p) ? 1 : 0;
                shape &= c[i - 1] == expect;
            }
        }
        std::printf("  p=%-3ld order %zu, characteristic x^p - x - 1: %s\n", p, c.size(),
                    shape ? "yes" : "NO");
        ok &= shape;
    }
    return ok;
}

// 9. Every corrupted formula is caught by its own grid.
bool criterion_9() {
    bool ok = true;
    long caught = 0, total = 0;
    for (CheckKind kind : all_check_kinds()) {
        for (Mutation mutation : all_mutations()) {
            CongruenceReport report = counterexample_probe(kind, mutation);
            ++total;
            bool detected = report.tested > 0 && !report.pass();
            caught += detected;
            if (!detected) {
                std::printf("  FAIL: %s with %s passed the corrupted formula\n",
                            check_kind_name(kind), mutation_name(mutation));
            }
            ok &= detected;
        }
    }
    std::printf("  %ld/%ld corrupted formulas detected\n", caught, total);
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::fprintf(stderr, "usage: acceptance <criterion 1-9>\n");
        return 2;
    }
    long n = std::strtol(argv[1], nullptr, 10);
    bool ok = false;
    switch (n) {
        case 1: ok = criterion_1(); break;
        case 2: ok = criterion_2(); break;
        case 3: ok = criterion_3(); break;
        case 4: ok = criterion_4(); break;
        case 5: ok = criterion_5(); break;
        case 6: ok = criterion_6(); break;
        case 7: ok = criterion_7(); break;
        case 8: ok = criterion_8(); break;
        case 9: ok = criterion_9(); break;
        default:
            std::fprintf(stderr, "usage: acceptance <criterion 1-9>\n");
            return 2;
    }
    std::printf("criterion %ld: %s\n", n, ok ? "PASS" : "FAIL");
    return ok ? 0 : 1;
}

#include <doctest.h>

#include <touchard/integer.hpp>
#include <touchard/sequences.hpp>

#include <stdexcept>
#include <vector>

using namespace touchard;

namespace {

// Frozen reference prefixes (cross-checked against enumeration and the EGF
// oracle in their own suites; pinned here so regressions surface as value
// diffs, not just as oracle disagreements).
const std::vector<long long> kBell = {1, 1, 2, 5, 15, 52, 203, 877, 4140,
                                      21147, 115975, 678570, 4213597};
const std::vector<long long> kNoSingleton = {1, 0, 1, 1, 4, 11, 41, 162, 715,
                                             3425, 17722, 98253, 580317};
const std::vector<long long> kDerangement = {1, 0, 1, 2, 9, 44, 265, 1854,
                                             14833, 133496, 1334961};

}  // namespace

TEST_SUITE("sequences") {

TEST_CASE("binomial matches the Pascal recurrence and symmetry") {
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(10, 10) == 1);
    CHECK(binomial(10, 11) == 0);
    CHECK_THROWS_AS(binomial(5, -1), std::invalid_argument);
    for (long n = 1; n <= 20; ++n) {
        CHECK(binomial(n, 0) == 1);
        for (long k = 1; k <= n; ++k) {
            CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
            CHECK(binomial(n, k) == binomial(n, n - k));
        }
    }
    CHECK(binomial(60, 30) == Integer("118264581564861424"));
}

TEST_CASE("derangement satisfies both classical recurrences") {
    for (size_t n = 0; n < kDerangement.size(); ++n) {
        CHECK(derangement(static_cast<long>(n)) == kDerangement[n]);
    }
    for (long n = 2; n <= 30; ++n) {
        Integer by_sign = n * derangement(n - 1) + (n % 2 == 0 ? 1 : -1);
        Integer by_pair = (n - 1) * (derangement(n - 1) + derangement(n - 2));
        CHECK(derangement(n) == by_sign);
        CHECK(derangement(n) == by_pair);
    }
    CHECK_THROWS_AS(derangement(-1), std::invalid_argument);
}

TEST_CASE("r-Stirling triangles obey their defining recurrences") {
    // {n k}_r = (k+r){n-1 k}_r + {n-1 k-1}_r; [n k]_r = (n+r-1)[n-1 k]_r + [n-1 k-1]_r.
    for (long r = 0; r <= 4; ++r) {
        CHECK(rstirling(StirlingKind::SECOND, 0, 0, r) == 1);
        CHECK(rstirling(StirlingKind::FIRST, 0, 0, r) == 1);
        for (long n = 1; n <= 12; ++n) {
            for (long k = 0; k <= n; ++k) {
                Integer below2 = k > 0 ? rstirling(StirlingKind::SECOND, n - 1, k - 1, r)
                                       : Integer(0);
                Integer s2 = (k + r) * rstirling(StirlingKind::SECOND, n - 1, k, r) + below2;
                CHECK(rstirling(StirlingKind::SECOND, n, k, r) == s2);
                Integer below1 = k > 0 ? rstirling(StirlingKind::FIRST, n - 1, k - 1, r)
                                       : Integer(0);
                Integer s1 = (n + r - 1) * rstirling(StirlingKind::FIRST, n - 1, k, r) + below1;
                CHECK(rstirling(StirlingKind::FIRST, n, k, r) == s1);
            }
            CHECK(rstirling(StirlingKind::SECOND, n, n + 1, r) == 0);
        }
    }
    // r = 0 reduces to the plain triangles.
    CHECK(rstirling(StirlingKind::SECOND, 4, 2, 0) == 7);
    CHECK(rstirling(StirlingKind::FIRST, 4, 2, 0) == 11);
    CHECK(rstirling(StirlingKind::SECOND, 2, 1, 1) == 3);
    CHECK_THROWS_AS(rstirling(StirlingKind::SECOND, 3, 1, -1), std::invalid_argument);
}

TEST_CASE("first-kind rows sum to a rising factorial") {
    // sum_k [n k]_r = (r+1)(r+2)...(r+n): total permutations of the n free
    // elements into cycles around the r distinguished ones.
    for (long r = 0; r <= 3; ++r) {
        for (long n = 0; n <= 10; ++n) {
            Integer total = 0;
            for (long k = 0; k <= n; ++k) total += rstirling(StirlingKind::FIRST, n, k, r);
            Integer rising = 1;
            for (long i = 1; i <= n; ++i) rising *= (r + i);
            CHECK(total == rising);
        }
    }
}

TEST_CASE("rbell matches row sums for r >= 0 and the frozen prefixes") {
    for (size_t n = 0; n < kBell.size(); ++n) {
        CHECK(rbell(static_cast<long>(n), 0) == kBell[n]);
    }
    for (size_t n = 0; n < kNoSingleton.size(); ++n) {
        CHECK(rbell(static_cast<long>(n), -1) == kNoSingleton[n]);
    }
    for (long r = 0; r <= 4; ++r) {
        for (long n = 0; n <= 12; ++n) {
            Integer row_sum = 0;
            for (long k = 0; k <= n; ++k) row_sum += rstirling(StirlingKind::SECOND, n, k, r);
            CHECK(rbell(n, r) == row_sum);
        }
    }
    // B_{n,1} = B_{n+1}: append one distinguished element to every partition.
    for (long n = 0; n <= 11; ++n) CHECK(rbell(n, 1) == rbell(n + 1, 0));
}

TEST_CASE("rbell satisfies the shifted Aitken recurrence for every sign of r") {
    // B_{n+1,r} = sum_k C(n,k) B_{k,r} + r B_{n,r}.
    for (long r = -4; r <= 4; ++r) {
        for (long n = 0; n <= 15; ++n) {
            Integer acc = r * rbell(n, r);
            for (long k = 0; k <= n; ++k) acc += binomial(n, k) * rbell(k, r);
            CHECK(rbell(n + 1, r) == acc);
        }
    }
}

TEST_CASE("shift identity connects the r and r+m tables") {
    for (long r = -3; r <= 3; ++r) {
        for (long m = 0; m <= 3; ++m) {
            for (long n = 0; n <= 12; ++n) {
                CHECK(shift_identity_check(n, r, m));
            }
        }
    }
}

TEST_CASE("SeqTable agrees with the free functions") {
    SeqTable bell(SeqTable::Kind::RBELL, 0);
    SeqTable vn(SeqTable::Kind::RBELL, -1);
    SeqTable der(SeqTable::Kind::DERANGEMENT);
    SeqTable s2(SeqTable::Kind::RSTIRLING2, 2);
    SeqTable s1(SeqTable::Kind::RSTIRLING1, 1);
    SeqTable binom(SeqTable::Kind::BINOMIAL);
    for (long n = 0; n <= 12; ++n) {
        CHECK(bell.get(n) == rbell(n, 0));
        CHECK(vn.get(n) == rbell(n, -1));
        CHECK(der.get(n) == derangement(n));
        for (long k = 0; k <= n; ++k) {
            CHECK(s2.get(n, k) == rstirling(StirlingKind::SECOND, n, k, 2));
            CHECK(s1.get(n, k) == rstirling(StirlingKind::FIRST, n, k, 1));
            CHECK(binom.get(n, k) == binomial(n, k));
        }
    }
    CHECK(bell.kind() == SeqTable::Kind::RBELL);
    CHECK(vn.r() == -1);
}

TEST_CASE("mod-p rows are ring-homomorphic images of the exact tables") {
    for (long p : {2L, 3L, 5L, 7L}) {
        for (long r = -2; r <= 2; ++r) {
            auto row = detail::rbell_mod_row(p, r, 60);
            for (long n = 0; n < 60; ++n) {
                CHECK(row[n] == mod_floor(rbell(n, r), p));
            }
        }
        auto der_row = detail::derangement_mod_row(p, 40);
        for (long n = 0; n < 40; ++n) {
            CHECK(der_row[n] == mod_floor(derangement(n), p));
        }
        for (long r = 0; r <= 2; ++r) {
            auto rows = detail::rstirling2_mod_rows(p, r, 15);
            for (long n = 0; n <= 15; ++n) {
                for (long k = 0; k <= n; ++k) {
                    CHECK(rows[n][k] == mod_floor(rstirling(StirlingKind::SECOND, n, k, r), p));
                }
            }
        }
    }
}

TEST_CASE("mod_floor normalizes negatives into [0, p)") {
    CHECK(mod_floor(Integer(-7), 5) == 3);
    CHECK(mod_floor(Integer(-1), 2) == 1);
    CHECK(mod_floor(Integer(10), 5) == 0);
    CHECK(mod_floor(Integer("123456789012345678901234567890"), 97) ==
          (Integer("123456789012345678901234567890") % 97).convert_to<long>());
}

}  // TEST_SUITE

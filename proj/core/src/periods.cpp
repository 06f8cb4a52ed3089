#include <touchard/periods.hpp>
#include <touchard/sequences.hpp>

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace touchard {

namespace {

// True iff seq.values[n + P] == seq.values[n] for all n < horizon - P.
bool is_period_on(const ResidueSeq& seq, long P, long horizon) {
    for (long n = 0; n + P < horizon; ++n) {
        if (seq.values[static_cast<size_t>(n + P)] != seq.values[static_cast<size_t>(n)]) {
            return false;
        }
    }
    return true;
}

std::vector<Integer> all_divisors(const std::vector<Integer>& prime_factors) {
    std::vector<Integer> divisors{1};
    size_t i = 0;
    while (i < prime_factors.size()) {
        size_t j = i;
        while (j < prime_factors.size() && prime_factors[j] == prime_factors[i]) ++j;
        size_t mult = j - i;
        size_t base_count = divisors.size();
        Integer power = 1;
        for (size_t e = 1; e <= mult; ++e) {
            power *= prime_factors[i];
            for (size_t d = 0; d < base_count; ++d) {
                divisors.push_back(divisors[d] * power);
            }
        }
        i = j;
    }
    std::sort(divisors.begin(), divisors.end());
    return divisors;
}

}  // namespace

Integer compute_np(const PrimeModulus& p) {
    Integer acc = 0;
    Integer power = 1;
    for (long k = 0; k < p.value(); ++k) {
        acc += power;
        power *= p.value();
    }
    return acc;
}

bool is_period(const PrimeModulus& p, long r, const Integer& P, long horizon) {
    if (P < 1) {
        throw std::invalid_argument("period candidate must be positive");
    }
    if (P > std::numeric_limits<long>::max() / 2) {
        throw std::invalid_argument("period candidate too large to test");
    }
    long period = P.convert_to<long>();
    if (horizon < period + 2 * p.value()) {
        throw std::invalid_argument("horizon must be at least P + 2p");
    }
    ResidueSeq seq = residue_seq(p, r, horizon);
    return is_period_on(seq, period, horizon);
}

PeriodAnalysis minimal_period(const PrimeModulus& p, long budget) {
    PeriodAnalysis analysis;
    analysis.p = p.value();
    analysis.np = compute_np(p);
    analysis.divisors = all_divisors(factorize(analysis.np));

    analysis.divisor_form_ok = true;
    for (const Integer& d : analysis.divisors) {
        if (d > 1 && (d - 1) % (2 * p.value()) != 0) {
            analysis.divisor_form_ok = false;
        }
    }
    analysis.lower_bound = binomial(2 * p.value(), p.value()) / 2 + p.value();

    Integer needed = 2 * analysis.np + 50;
    if (needed <= budget) {
        analysis.horizon = needed.convert_to<long>();
        ResidueSeq seq = residue_seq(p, 0, analysis.horizon);
        for (const Integer& d : analysis.divisors) {
            long period = d.convert_to<long>();
            if (is_period_on(seq, period, analysis.horizon)) {
                analysis.minimal_period = d;
                break;
            }
        }
    }
    // else: budget exhausted, minimal period stays UNKNOWN.

    analysis.bound_ok =
        analysis.minimal_period && *analysis.minimal_period > analysis.lower_bound;
    return analysis;
}

bool verify_shift_corollary(const PrimeModulus& p, long r, long horizon) {
    long pv = p.value();
    long digits = ((-r) % pv + pv) % pv;
    long K = 0;
    Integer power = 1;
    for (long k = 1; k <= digits; ++k) {
        power *= pv;
        if (power + K > horizon) {
            throw std::invalid_argument("horizon must exceed K = p + ... + p^((-r) mod p)");
        }
        K += power.convert_to<long>();
    }
    if (horizon <= K) {
        throw std::invalid_argument("horizon must exceed K = p + ... + p^((-r) mod p)");
    }
    ResidueSeq with_r = residue_seq(p, r, horizon);
    ResidueSeq plain = residue_seq(p, 0, horizon);
    for (long n = K; n < horizon; ++n) {
        if (with_r.values[static_cast<size_t>(n)] != plain.values[static_cast<size_t>(n - K)]) {
            return false;
        }
    }
    return true;
}

DigitSumReport digit_sum_falsifier(const PrimeModulus& p, long sample_limit) {
    long pv = p.value();
    if (pv > 7) {
        throw std::invalid_argument(
            "digit-sum falsifier supports p <= 7 (exhaustive for p in {2,3,5})");
    }
    if (sample_limit < 1) {
        throw std::invalid_argument("sample limit must be positive");
    }

    long bound = 1;  // p^(p-1)
    for (long k = 1; k < pv; ++k) bound *= pv;

    std::vector<long> candidates;
    for (long P = 1; P < bound; ++P) {
        long digit_sum = 0;
        for (long v = P; v > 0; v /= pv) digit_sum += v % pv;
        if (digit_sum <= pv) candidates.push_back(P);
    }

    DigitSumReport report;
    report.p = pv;
    report.exhaustive = pv <= 5;
    if (!report.exhaustive && static_cast<long>(candidates.size()) > sample_limit) {
        // Deterministic stride sample: every k-th candidate, ascending.
        std::vector<long> sampled;
        long stride = (static_cast<long>(candidates.size()) + sample_limit - 1) / sample_limit;
        for (size_t i = 0; i < candidates.size(); i += static_cast<size_t>(stride)) {
            sampled.push_back(candidates[i]);
        }
        candidates = std::move(sampled);
    }

    report.horizon = bound + 2 * pv + 50;
    ResidueSeq seq = residue_seq(p, 0, report.horizon);
    for (long P : candidates) {
        ++report.candidates;
        if (is_period_on(seq, P, report.horizon)) {
            ++report.periods_found;
            report.survivors.push_back(P);
        }
    }
    return report;
}

bool hall_recovery_check(const PrimeModulus& p, long horizon) {
    long pv = p.value();
    Integer np = compute_np(p);
    if (np >= horizon) {
        throw std::invalid_argument("horizon must exceed N_p");
    }
    long npl = np.convert_to<long>();

    // Link 1: N_p = 1 + p + p^2 + ... + p^(p-1) exactly.
    Integer tail_sum = 0;
    Integer power = 1;
    for (long k = 1; k <= pv - 1; ++k) {
        power *= pv;
        tail_sum += power;
    }
    if (np != 1 + tail_sum) return false;
    long shift = tail_sum.convert_to<long>();

    ResidueSeq plain = residue_seq(p, 0, horizon);
    ResidueSeq back = residue_seq(p, -(pv - 1), horizon);
    ResidueSeq one = residue_seq(p, 1, horizon);

    for (long n = npl; n < horizon; ++n) {
        // Link 2: B_{n-1-shift} == B_{n-1,-(p-1)} (mod p).
        if (plain.values[static_cast<size_t>(n - 1 - shift)] !=
            back.values[static_cast<size_t>(n - 1)]) {
            return false;
        }
    }
    for (long j = 0; j < horizon - 1; ++j) {
        // Link 3: B_{j,-(p-1)} == B_{j,1} (mod p) — the r-shift by p.
        if (back.values[static_cast<size_t>(j)] != one.values[static_cast<size_t>(j)]) {
            return false;
        }
        // Link 4: B_{j,1} == B_{j+1} (mod p).
        if (one.values[static_cast<size_t>(j)] != plain.values[static_cast<size_t>(j + 1)]) {
            return false;
        }
    }
    return true;
}

}  // namespace touchard

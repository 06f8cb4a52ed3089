#pragma once

// Truncated power series over exact rationals: an independent EGF-based oracle
// for the sequence tables. All arithmetic is exact up to the truncation order;
// floating point is never used.

#include <touchard/integer.hpp>
#include <touchard/sequences.hpp>

#include <vector>

namespace touchard {

class PowerSeries {
  public:
    // Zero series of the given truncation order (coefficients t^0..t^{N-1}).
    explicit PowerSeries(long order);
    PowerSeries(std::vector<Rational> coeffs);

    long order() const { return static_cast<long>(coeffs_.size()); }
    const Rational& operator[](long i) const { return coeffs_.at(i); }
    Rational& operator[](long i) { return coeffs_.at(i); }

    PowerSeries operator+(const PowerSeries& o) const;
    PowerSeries operator-(const PowerSeries& o) const;
    PowerSeries operator*(const PowerSeries& o) const;  // truncated to min order

    // d/dt; result has order N-1 (the top coefficient is unknowable).
    PowerSeries derivative() const;

    // exp(f), requires f(0) = 0. Solved termwise from g' = f' g.
    PowerSeries exp() const;

    // log(f), requires f(0) = 1.
    PowerSeries log() const;

    // f(g), requires g(0) = 0. Horner evaluation in the truncated ring.
    PowerSeries compose(const PowerSeries& g) const;

    // n! * coeffs[n]; throws unless the result is an integer.
    Integer egf_coefficient(long n) const;

  private:
    std::vector<Rational> coeffs_;
};

// exp(t) - 1 truncated to the given order (the basic EGF building block).
PowerSeries expm1_series(long order);

// exp(e^t - 1 + r t); n! [t^n] equals rbell(n, r) for every integer r.
PowerSeries egf_rbell(long r, long order);

// EGF of column k of the r-Stirling triangle:
//   SECOND: e^{rt} (e^t - 1)^k / k!
//   FIRST:  (1/(1-t))^r (log 1/(1-t))^k / k!
// n! [t^n] equals rstirling(kind, n, k, r).
PowerSeries egf_rstirling(StirlingKind kind, long k, long r, long order);

// s-th derivative of e^t/(1+t); n! [t^n] equals (-1)^{n+s} D_{n+s}.
PowerSeries derangement_shifted_egf(long s, long order);

struct StirlingTransformResult {
    std::vector<Integer> values;    // b_n = sum_{k=1}^n {n k}_r a_k
    long first_mismatch = -1;       // -1 when the direct sum and the EGF route agree
};

// Computes the r-Stirling transform of a (a_0 is ignored; the sum starts at
// k = 1) both directly and via the EGF identity B(t) = e^{rt} A(e^t - 1), and
// reports the first index where the two routes disagree (none expected).
StirlingTransformResult stirling_transform(const std::vector<Integer>& a, long r);

}  // namespace touchard

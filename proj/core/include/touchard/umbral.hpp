#pragma once

// Integer polynomials with an umbral evaluation map x^j -> B_j, plus the
// factorial-basis identities the sequence algebra rests on.

#include <touchard/integer.hpp>
#include <touchard/sequences.hpp>

#include <vector>

namespace touchard {

class UmbralPoly {
  public:
    UmbralPoly() : coeffs_{Integer(0)} {}
    UmbralPoly(std::vector<Integer> coeffs);  // normalizes trailing zeros

    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const Integer& coeff(long j) const;  // 0 beyond the degree
    bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == 0; }

    UmbralPoly operator+(const UmbralPoly& o) const;
    UmbralPoly operator-(const UmbralPoly& o) const;
    UmbralPoly operator*(const UmbralPoly& o) const;

    static UmbralPoly constant(Integer c);
    static UmbralPoly x_plus(Integer c);        // x + c
    UmbralPoly pow(long e) const;

  private:
    std::vector<Integer> coeffs_;  // coeffs_[j] multiplies x^j; trailing zeros trimmed
};

// (x+shift)(x+shift-1)...(x+shift-k+1); k = 0 gives the constant 1.
UmbralPoly falling_factorial(long k, long shift);

// (x+shift)(x+shift+1)...(x+shift+k-1).
UmbralPoly rising_factorial(long k, long shift);

// sum_j coeff(j) * B_j over the classical Bell umbra.
Integer umbral_eval(const UmbralPoly& p);

// (B-1)(B-2)...(B-k) = (-1)^k D_k.
bool check_umbral_lemma(long k);

// (B+m)^n = B_{n,m}, any sign of m.
bool check_umbral_shift(long n, long m);

enum class ExpansionKind { FALLING, RISING };

// FALLING: (x+r)^n            = sum_k {n k}_r x^(falling k)
// RISING:  (x+r)^(rising n)   = sum_k [n k]_r x^k
bool check_stirling_expansion(ExpansionKind kind, long n, long r);

// sum_k [n k]_r {k m}_r (-1)^k = sum_k {n k}_r [k m]_r (-1)^k = (-1)^n delta_{mn}.
// Both factors carry the same subscript r; with the inner factor at r = 0 the
// relation is false already at n=1, m=0, r=1.
bool check_orthogonality(long n, long m, long r);

}  // namespace touchard

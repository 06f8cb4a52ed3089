#pragma once

// Prime-field arithmetic, long residue-sequence generation for B_{n,r} mod p,
// shortest-linear-recurrence detection, and integer factorization.

#include <touchard/integer.hpp>

#include <cstdint>
#include <vector>

namespace touchard {

// A verified prime modulus, 2 <= p <= 10^6 (primality checked by trial
// division at construction).
class PrimeModulus {
  public:
    explicit PrimeModulus(long p);
    long value() const { return p_; }

  private:
    long p_;
};

// Modular inverse of a (mod p); rejects a == 0 (mod p).
long mod_inverse(long a, const PrimeModulus& p);

// B_{n,r} mod p for n < horizon. The first min(p, horizon) values are seeded
// from the exact table; the rest extend by values[n+p] = values[n+1] +
// values[n] (mod p), the order-p recurrence. O(1) per term.
struct ResidueSeq {
    long p;
    long r;
    std::vector<uint32_t> values;
};

ResidueSeq residue_seq(const PrimeModulus& p, long r, long horizon);

// Shortest linear recurrence satisfied by the sequence prefix, over GF(p):
// returns c_1..c_L with seq[n] = sum_i c_i seq[n-i] for L <= n < len.
// Berlekamp-Massey; requires len >= 2*max_order and rejects results whose
// order exceeds max_order (prefix too short to certify anything longer).
std::vector<uint32_t> minimal_recurrence(const ResidueSeq& seq, long max_order);

// Prime factorization (ascending, with multiplicity) by trial division to 10^6
// then Pollard rho; the product of the returned factors is verified to equal
// the input. Supports 1 <= x < 2^62.
std::vector<Integer> factorize(const Integer& x);

// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime_u64(uint64_t x);

}  // namespace touchard

#include <touchard/umbral.hpp>

#include <stdexcept>

namespace touchard {

namespace {

void trim(std::vector<Integer>& c) {
    while (c.size() > 1 && c.back() == 0) c.pop_back();
}

}  // namespace

UmbralPoly::UmbralPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.push_back(0);
    trim(coeffs_);
}

const Integer& UmbralPoly::coeff(long j) const {
    static const Integer zero = 0;
    if (j < 0 || j >= static_cast<long>(coeffs_.size())) return zero;
    return coeffs_[j];
}

UmbralPoly UmbralPoly::operator+(const UmbralPoly& o) const {
    std::vector<Integer> out(std::max(coeffs_.size(), o.coeffs_.size()), Integer(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) out[i] += o.coeffs_[i];
    return UmbralPoly(std::move(out));
}

UmbralPoly UmbralPoly::operator-(const UmbralPoly& o) const {
    std::vector<Integer> out(std::max(coeffs_.size(), o.coeffs_.size()), Integer(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) out[i] -= o.coeffs_[i];
    return UmbralPoly(std::move(out));
}

UmbralPoly UmbralPoly::operator*(const UmbralPoly& o) const {
    std::vector<Integer> out(coeffs_.size() + o.coeffs_.size() - 1, Integer(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    return UmbralPoly(std::move(out));
}

UmbralPoly UmbralPoly::constant(Integer c) { return UmbralPoly({std::move(c)}); }

UmbralPoly UmbralPoly::x_plus(Integer c) { return UmbralPoly({std::move(c), Integer(1)}); }

UmbralPoly UmbralPoly::pow(long e) const {
    if (e < 0) throw std::invalid_argument("negative polynomial power");
    UmbralPoly acc = constant(1);
    for (long i = 0; i < e; ++i) acc = acc * *this;
    return acc;
}

UmbralPoly falling_factorial(long k, long shift) {
    if (k < 0) throw std::invalid_argument("falling_factorial: k must be nonnegative");
    UmbralPoly acc = UmbralPoly::constant(1);
    for (long i = 0; i < k; ++i) acc = acc * UmbralPoly::x_plus(shift - i);
    return acc;
}

UmbralPoly rising_factorial(long k, long shift) {
    if (k < 0) throw std::invalid_argument("rising_factorial: k must be nonnegative");
    UmbralPoly acc = UmbralPoly::constant(1);
    for (long i = 0; i < k; ++i) acc = acc * UmbralPoly::x_plus(shift + i);
    return acc;
}

Integer umbral_eval(const UmbralPoly& p) {
    Integer acc = 0;
    for (long j = 0; j <= p.degree(); ++j) {
        if (p.coeff(j) == 0) continue;
        acc += p.coeff(j) * rbell(j, 0);
    }
    return acc;
}

bool check_umbral_lemma(long k) {
    Integer lhs = umbral_eval(falling_factorial(k, -1));
    Integer rhs = (k % 2 == 0 ? 1 : -1) * derangement(k);
    return lhs == rhs;
}

bool check_umbral_shift(long n, long m) {
    return umbral_eval(UmbralPoly::x_plus(m).pow(n)) == rbell(n, m);
}

bool check_stirling_expansion(ExpansionKind kind, long n, long r) {
    if (n < 0 || r < 0) throw std::invalid_argument("check_stirling_expansion: negative input");
    if (kind == ExpansionKind::FALLING) {
        UmbralPoly lhs = UmbralPoly::x_plus(r).pow(n);
        UmbralPoly rhs;
        for (long k = 0; k <= n; ++k)
            rhs = rhs + UmbralPoly::constant(rstirling(StirlingKind::SECOND, n, k, r)) *
                            falling_factorial(k, 0);
        return (lhs - rhs).is_zero();
    }
    UmbralPoly lhs = rising_factorial(n, r);
    UmbralPoly rhs;
    for (long k = 0; k <= n; ++k)
        rhs = rhs + UmbralPoly::constant(rstirling(StirlingKind::FIRST, n, k, r)) *
                        UmbralPoly::x_plus(0).pow(k);
    return (lhs - rhs).is_zero();
}

bool check_orthogonality(long n, long m, long r) {
    if (m > n) throw std::invalid_argument("check_orthogonality requires m <= n");
    Integer first = 0, second = 0;
    for (long k = 0; k <= n; ++k) {
        Integer sign = (k % 2 == 0) ? 1 : -1;
        first += rstirling(StirlingKind::FIRST, n, k, r) *
                 rstirling(StirlingKind::SECOND, k, m, r) * sign;
        second += rstirling(StirlingKind::SECOND, n, k, r) *
                  rstirling(StirlingKind::FIRST, k, m, r) * sign;
    }
    Integer expect = (m == n) ? Integer(n % 2 == 0 ? 1 : -1) : Integer(0);
    return first == expect && second == expect;
}

}  // namespace touchard

#include <touchard/series.hpp>

#include <stdexcept>

namespace touchard {

namespace {

Rational factorial_rat(long n) {
    Rational f = 1;
    for (long i = 2; i <= n; ++i) f *= i;
    return f;
}

}  // namespace

PowerSeries::PowerSeries(long order) : coeffs_(static_cast<size_t>(order)) {
    if (order <= 0) throw std::invalid_argument("series order must be positive");
}

PowerSeries::PowerSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("series order must be positive");
}

PowerSeries PowerSeries::operator+(const PowerSeries& o) const {
    long n = std::min(order(), o.order());
    PowerSeries out(n);
    for (long i = 0; i < n; ++i) out[i] = coeffs_[i] + o.coeffs_[i];
    return out;
}

PowerSeries PowerSeries::operator-(const PowerSeries& o) const {
    long n = std::min(order(), o.order());
    PowerSeries out(n);
    for (long i = 0; i < n; ++i) out[i] = coeffs_[i] - o.coeffs_[i];
    return out;
}

PowerSeries PowerSeries::operator*(const PowerSeries& o) const {
    long n = std::min(order(), o.order());
    PowerSeries out(n);
    for (long i = 0; i < n; ++i) {
        if (coeffs_[i] == 0) continue;
        for (long j = 0; i + j < n; ++j) {
            if (o.coeffs_[j] == 0) continue;
            out[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    return out;
}

PowerSeries PowerSeries::derivative() const {
    if (order() < 2) throw std::invalid_argument("cannot differentiate an order-1 series");
    PowerSeries out(order() - 1);
    for (long i = 1; i < order(); ++i) out[i - 1] = coeffs_[i] * i;
    return out;
}

PowerSeries PowerSeries::exp() const {
    if (coeffs_[0] != 0) throw std::invalid_argument("exp requires zero constant term");
    long n = order();
    PowerSeries out(n);
    out[0] = 1;
    // g_m = (1/m) sum_{k=1}^m k f_k g_{m-k}, from g' = f' g.
    for (long m = 1; m < n; ++m) {
        Rational acc = 0;
        for (long k = 1; k <= m; ++k) {
            if (coeffs_[k] == 0) continue;
            acc += Rational(k) * coeffs_[k] * out[m - k];
        }
        out[m] = acc / m;
    }
    return out;
}

PowerSeries PowerSeries::log() const {
    if (coeffs_[0] != 1) throw std::invalid_argument("log requires constant term 1");
    long n = order();
    // log(f) = integral of f'/f; solved termwise: h_m with
    // f' = h' f  =>  m f_m ... use h_m = f_m - (1/m) sum_{k=1}^{m-1} k h_k f_{m-k}.
    PowerSeries out(n);
    out[0] = 0;
    for (long m = 1; m < n; ++m) {
        Rational acc = coeffs_[m] * m;
        for (long k = 1; k < m; ++k) {
            if (out[k] == 0 || coeffs_[m - k] == 0) continue;
            acc -= Rational(k) * out[k] * coeffs_[m - k];
        }
        out[m] = acc / m;
    }
    return out;
}

PowerSeries PowerSeries::compose(const PowerSeries& g) const {
    if (g.coeffs_[0] != 0) throw std::invalid_argument("compose requires g(0) = 0");
    long n = std::min(order(), g.order());
    // Horner: result = f_0 + g (f_1 + g (f_2 + ...)).
    PowerSeries out(n);
    for (long i = std::min<long>(order(), n) - 1; i >= 0; --i) {
        PowerSeries next = out * g;
        next[0] += coeffs_[i];
        out = std::move(next);
    }
    return out;
}

Integer PowerSeries::egf_coefficient(long n) const {
    Rational v = coeffs_.at(n) * factorial_rat(n);
    if (denominator(v) != 1) throw std::domain_error("EGF coefficient is not an integer");
    return numerator(v);
}

PowerSeries expm1_series(long order) {
    PowerSeries s(order);
    Rational f = 1;
    for (long i = 1; i < order; ++i) {
        f /= i;
        s[i] = f;
    }
    return s;
}

PowerSeries egf_rbell(long r, long order) {
    PowerSeries arg = expm1_series(order);  // e^t - 1
    if (order > 1) arg[1] += r;             // + r t
    return arg.exp();
}

PowerSeries egf_rstirling(StirlingKind kind, long k, long r, long order) {
    if (k < 0 || r < 0) throw std::invalid_argument("egf_rstirling: k, r must be nonnegative");
    PowerSeries acc(order);
    acc[0] = 1;
    if (kind == StirlingKind::SECOND) {
        PowerSeries base = expm1_series(order);
        for (long i = 0; i < k; ++i) acc = acc * base;
        PowerSeries ert(order);  // e^{rt}
        Rational f = 1;
        ert[0] = 1;
        for (long i = 1; i < order; ++i) {
            f = f * r / i;
            ert[i] = f;
        }
        acc = acc * ert;
    } else {
        PowerSeries lg(order);  // log(1/(1-t)) = sum t^j / j
        for (long j = 1; j < order; ++j) lg[j] = Rational(1, j);
        for (long i = 0; i < k; ++i) acc = acc * lg;
        if (r > 0) {
            PowerSeries geo(order);  // (1/(1-t))^r = sum C(r-1+j, j) t^j
            for (long j = 0; j < order; ++j) geo[j] = Rational(binomial(r - 1 + j, j));
            acc = acc * geo;
        }
    }
    Rational kfac = factorial_rat(k);
    for (long i = 0; i < order; ++i) acc[i] /= kfac;
    return acc;
}

PowerSeries derangement_shifted_egf(long s, long order) {
    if (s < 0) throw std::invalid_argument("derangement_shifted_egf: s must be nonnegative");
    long internal = order + s;
    PowerSeries et(internal);  // e^t
    Rational f = 1;
    et[0] = 1;
    for (long i = 1; i < internal; ++i) {
        f /= i;
        et[i] = f;
    }
    PowerSeries inv(internal);  // 1/(1+t)
    for (long j = 0; j < internal; ++j) inv[j] = (j % 2 == 0) ? 1 : -1;
    PowerSeries g = et * inv;
    for (long i = 0; i < s; ++i) g = g.derivative();
    PowerSeries out(order);
    for (long i = 0; i < order; ++i) out[i] = g[i];
    return out;
}

StirlingTransformResult stirling_transform(const std::vector<Integer>& a, long r) {
    if (a.empty()) throw std::invalid_argument("stirling_transform: empty input");
    if (r < 0) throw std::invalid_argument("stirling_transform: r must be nonnegative");
    long n_count = static_cast<long>(a.size());

    StirlingTransformResult res;
    res.values.reserve(n_count);
    for (long n = 0; n < n_count; ++n) {
        Integer b = 0;
        for (long k = 1; k <= n; ++k) b += rstirling(StirlingKind::SECOND, n, k, r) * a[k];
        res.values.push_back(std::move(b));
    }

    // EGF route: B(t) = e^{rt} A(e^t - 1) with A built from a_1.. (a_0 unused).
    PowerSeries A(n_count);
    Rational f = 1;
    for (long k = 1; k < n_count; ++k) {
        f /= k;
        A[k] = Rational(a[k]) * f;
    }
    PowerSeries composed = A.compose(expm1_series(n_count));
    PowerSeries ert(n_count);
    Rational g = 1;
    ert[0] = 1;
    for (long i = 1; i < n_count; ++i) {
        g = g * r / i;
        ert[i] = g;
    }
    PowerSeries B = composed * ert;

    for (long n = 0; n < n_count; ++n) {
        if (B.egf_coefficient(n) != res.values[n]) {
            res.first_mismatch = n;
            break;
        }
    }
    return res;
}

}  // namespace touchard

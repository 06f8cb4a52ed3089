#include <touchard/sequences.hpp>

namespace touchard {

namespace {

std::mutex g_mutex;

void require_nonneg(long v, const char* what) {
    if (v < 0) throw std::invalid_argument(std::string(what) + " must be nonnegative");
}

// ---- binomial -------------------------------------------------------------

std::vector<std::vector<Integer>>& binomial_rows() {
    static std::vector<std::vector<Integer>> rows{{Integer(1)}};
    return rows;
}

Integer binomial_locked(long n, long k) {
    if (k < 0 || k > n) return 0;
    auto& rows = binomial_rows();
    while (static_cast<long>(rows.size()) <= n) {
        const auto& prev = rows.back();
        std::vector<Integer> row(prev.size() + 1);
        row.front() = 1;
        row.back() = 1;
        for (size_t j = 1; j + 1 < row.size(); ++j) row[j] = prev[j - 1] + prev[j];
        rows.push_back(std::move(row));
    }
    return rows[n][k];
}

// ---- derangements ----------------------------------------------------------

std::vector<Integer>& derangement_vals() {
    static std::vector<Integer> vals{Integer(1)};
    return vals;
}

Integer derangement_locked(long n) {
    auto& vals = derangement_vals();
    while (static_cast<long>(vals.size()) <= n) {
        long m = static_cast<long>(vals.size());
        Integer next = m * vals.back() + (m % 2 == 0 ? 1 : -1);
        vals.push_back(std::move(next));
    }
    return vals[n];
}

// ---- r-Stirling triangles ---------------------------------------------------

struct StirlingTable {
    std::vector<std::vector<Integer>> rows{{Integer(1)}};  // row n holds k = 0..n
};

std::map<std::pair<int, long>, StirlingTable>& stirling_tables() {
    static std::map<std::pair<int, long>, StirlingTable> tables;
    return tables;
}

Integer rstirling_locked(StirlingKind kind, long n, long k, long r) {
    if (k > n) return 0;
    auto& table = stirling_tables()[{kind == StirlingKind::FIRST ? 1 : 2, r}];
    auto& rows = table.rows;
    while (static_cast<long>(rows.size()) <= n) {
        long m = static_cast<long>(rows.size());
        const auto& prev = rows.back();
        std::vector<Integer> row(m + 1);
        for (long j = 0; j <= m; ++j) {
            // coeff is (j+r) for the second kind, (m+r-1) for the first.
            Integer coeff = (kind == StirlingKind::SECOND) ? Integer(j + r) : Integer(m + r - 1);
            Integer v = (j < m) ? coeff * prev[j] : Integer(0);
            if (j > 0) v += prev[j - 1];
            row[j] = std::move(v);
        }
        rows.push_back(std::move(row));
    }
    return rows[n][k];
}

// ---- r-Bell ----------------------------------------------------------------
//
// Triangle evaluation of the derivative recurrence. Row n holds
// T(n,k) = sum_{j<=k} C(k,j) B_{n-k+j,r}, so T(n,n) = sum_j C(n,j) B_{j,r}
// and the next value is B_{n+1,r} = T(n,n) + r T(n,0). Each extension costs
// O(n) big-int additions and only the last row is retained.

struct RBellTable {
    std::vector<Integer> vals{Integer(1)};
    std::vector<Integer> last{Integer(1)};  // row T(n, 0..n) for n = vals.size()-1
};

std::map<long, RBellTable>& rbell_tables() {
    static std::map<long, RBellTable> tables;
    return tables;
}

Integer rbell_locked(long n, long r) {
    auto& table = rbell_tables()[r];
    while (static_cast<long>(table.vals.size()) <= n) {
        long m = static_cast<long>(table.vals.size()) - 1;
        Integer next = table.last[m] + r * table.last[0];
        std::vector<Integer> row(m + 2);
        row[0] = next;
        for (long k = 1; k <= m + 1; ++k) row[k] = row[k - 1] + table.last[k - 1];
        table.vals.push_back(std::move(next));
        table.last = std::move(row);
    }
    return table.vals[n];
}

}  // namespace

Integer binomial(long n, long k) {
    require_nonneg(n, "n");
    require_nonneg(k, "k");
    std::lock_guard<std::mutex> lock(g_mutex);
    return binomial_locked(n, k);
}

Integer derangement(long n) {
    require_nonneg(n, "n");
    std::lock_guard<std::mutex> lock(g_mutex);
    return derangement_locked(n);
}

Integer rstirling(StirlingKind kind, long n, long k, long r) {
    require_nonneg(n, "n");
    require_nonneg(k, "k");
    if (r < 0) throw std::invalid_argument("r-Stirling numbers require r >= 0");
    std::lock_guard<std::mutex> lock(g_mutex);
    return rstirling_locked(kind, n, k, r);
}

Integer rbell(long n, long r) {
    require_nonneg(n, "n");
    std::lock_guard<std::mutex> lock(g_mutex);
    return rbell_locked(n, r);
}

bool shift_identity_check(long n, long r, long m) {
    require_nonneg(n, "n");
    std::lock_guard<std::mutex> lock(g_mutex);
    Integer lhs = 0;
    Integer mpow = 1;  // m^{n-k}, built from the top term down
    for (long k = n; k >= 0; --k) {
        lhs += binomial_locked(n, k) * rbell_locked(k, r) * mpow;
        mpow *= m;
    }
    return lhs == rbell_locked(n, r + m);
}

SeqTable::SeqTable(Kind kind, long r) : kind_(kind), r_(r) {
    if ((kind == Kind::RSTIRLING1 || kind == Kind::RSTIRLING2) && r < 0)
        throw std::invalid_argument("Stirling tables require r >= 0");
}

Integer SeqTable::get(long n, long k) const {
    switch (kind_) {
        case Kind::RSTIRLING1: return rstirling(StirlingKind::FIRST, n, k, r_);
        case Kind::RSTIRLING2: return rstirling(StirlingKind::SECOND, n, k, r_);
        case Kind::RBELL: return rbell(n, r_);
        case Kind::DERANGEMENT: return derangement(n);
        case Kind::BINOMIAL: return binomial(n, k);
    }
    throw std::logic_error("unreachable");
}

namespace detail {

std::vector<long> rbell_mod_row(long p, long r, long count) {
    if (p <= 1) throw std::invalid_argument("modulus must be >= 2");
    if (count <= 0) return {};
    long rp = ((r % p) + p) % p;
    std::vector<long> vals{1};
    std::vector<long> last{1};
    vals.reserve(count);
    while (static_cast<long>(vals.size()) < count) {
        long m = static_cast<long>(vals.size()) - 1;
        long next = (last[m] + rp * last[0]) % p;
        std::vector<long> row(m + 2);
        row[0] = next;
        for (long k = 1; k <= m + 1; ++k) row[k] = (row[k - 1] + last[k - 1]) % p;
        vals.push_back(next);
        last = std::move(row);
    }
    return vals;
}

std::vector<std::vector<long>> rstirling2_mod_rows(long p, long r, long nmax) {
    if (p <= 1) throw std::invalid_argument("modulus must be >= 2");
    long rp = ((r % p) + p) % p;
    std::vector<std::vector<long>> rows{{1}};
    for (long n = 1; n <= nmax; ++n) {
        const auto& prev = rows.back();
        std::vector<long> row(n + 1);
        for (long k = 0; k <= n; ++k) {
            long v = (k < n) ? ((k + rp) % p) * prev[k] % p : 0;
            if (k > 0) v = (v + prev[k - 1]) % p;
            row[k] = v;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<long> derangement_mod_row(long p, long count) {
    if (p <= 1) throw std::invalid_argument("modulus must be >= 2");
    std::vector<long> vals{1 % p};
    for (long n = 1; n < count; ++n) {
        long v = (n % p) * vals.back() % p;
        v = (v + (n % 2 == 0 ? 1 : p - 1)) % p;
        vals.push_back(v);
    }
    return vals;
}

}  // namespace detail

}  // namespace touchard

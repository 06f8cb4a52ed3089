#include <touchard/enumerate.hpp>

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace touchard {

namespace {

std::mutex g_mutex;

// Walk all set partitions of {0..total-1} as restricted-growth strings:
// block[i] <= 1 + max(block[0..i-1]). visit receives (block assignment,
// number of blocks).
template <typename Visit>
void for_each_partition(long total, Visit&& visit) {
    std::vector<long> block(total, 0);
    // Recursive lambda over element index with current block count.
    auto rec = [&](auto&& self, long i, long used) -> void {
        if (i == total) {
            visit(block, used);
            return;
        }
        for (long b = 0; b <= used; ++b) {
            block[i] = b;
            self(self, i + 1, std::max(used, b + 1));
        }
    };
    if (total == 0) {
        visit(block, 0);
    } else {
        rec(rec, 0, 0);
    }
}

bool distinguished_separated(const std::vector<long>& block, long r) {
    for (long i = 0; i < r; ++i)
        for (long j = i + 1; j < r; ++j)
            if (block[i] == block[j]) return false;
    return true;
}

long cycle_count(const std::vector<long>& perm, std::vector<long>& scratch) {
    std::fill(scratch.begin(), scratch.end(), 0);
    long cycles = 0;
    for (size_t i = 0; i < perm.size(); ++i) {
        if (scratch[i]) continue;
        ++cycles;
        for (long j = static_cast<long>(i); !scratch[j]; j = perm[j]) scratch[j] = 1;
    }
    return cycles;
}

bool distinguished_in_distinct_cycles(const std::vector<long>& perm, long r) {
    // Element i's cycle is identified by the minimal element reachable from i.
    std::vector<long> rep(r, -1);
    for (long i = 0; i < r; ++i) {
        long min_el = i;
        for (long j = perm[i]; j != i; j = perm[j]) min_el = std::min(min_el, j);
        rep[i] = min_el;
    }
    std::sort(rep.begin(), rep.end());
    return std::adjacent_find(rep.begin(), rep.end()) == rep.end();
}

// Full count vector over k for one (kind, n, r): index k holds the count of
// objects with k+r blocks/cycles (or the single total for non-k kinds at 0).
std::vector<Integer> count_all(EnumKind kind, long n, long r) {
    long total = n + r;
    std::vector<Integer> counts(static_cast<size_t>(std::max<long>(total, 0)) + 1, Integer(0));

    switch (kind) {
        case EnumKind::PARTITIONS:
        case EnumKind::PARTITIONS_NO_SINGLETON: {
            for_each_partition(n, [&](const std::vector<long>& block, long used) {
                if (kind == EnumKind::PARTITIONS_NO_SINGLETON) {
                    std::vector<long> size(used, 0);
                    for (long b : block) ++size[b];
                    if (std::find(size.begin(), size.end(), 1L) != size.end()) return;
                }
                counts[0] += 1;
            });
            break;
        }
        case EnumKind::DERANGEMENTS: {
            std::vector<long> perm(n);
            std::iota(perm.begin(), perm.end(), 0);
            do {
                bool fixed = false;
                for (long i = 0; i < n; ++i)
                    if (perm[i] == i) { fixed = true; break; }
                if (!fixed) counts[0] += 1;
            } while (std::next_permutation(perm.begin(), perm.end()));
            break;
        }
        case EnumKind::RSTIRLING2: {
            for_each_partition(total, [&](const std::vector<long>& block, long used) {
                if (used < r || used - r > static_cast<long>(counts.size()) - 1) return;
                if (!distinguished_separated(block, r)) return;
                counts[used - r] += 1;
            });
            break;
        }
        case EnumKind::RSTIRLING1: {
            std::vector<long> perm(total);
            std::iota(perm.begin(), perm.end(), 0);
            std::vector<long> scratch(total, 0);
            if (total == 0) { counts[0] = 1; break; }
            do {
                long cycles = cycle_count(perm, scratch);
                if (cycles < r) continue;
                if (!distinguished_in_distinct_cycles(perm, r)) continue;
                counts[cycles - r] += 1;
            } while (std::next_permutation(perm.begin(), perm.end()));
            break;
        }
    }
    return counts;
}

std::map<std::tuple<int, long, long>, std::vector<Integer>>& cache() {
    static std::map<std::tuple<int, long, long>, std::vector<Integer>> c;
    return c;
}

}  // namespace

Integer enumerate_oracle(EnumKind kind, long n, long k, long r) {
    bool stirling = kind == EnumKind::RSTIRLING1 || kind == EnumKind::RSTIRLING2;
    if (!stirling) r = 0;
    if (n < 0 || r < 0) throw std::invalid_argument("enumerate_oracle: negative input");
    if (stirling && k < 0) throw std::invalid_argument("enumerate_oracle: k required");
    if (n + r > 12) throw std::invalid_argument("enumerate_oracle: n + r exceeds the enumeration bound 12");

    std::lock_guard<std::mutex> lock(g_mutex);
    auto key = std::make_tuple(static_cast<int>(kind), n, r);
    auto it = cache().find(key);
    if (it == cache().end()) it = cache().emplace(key, count_all(kind, n, r)).first;

    if (!stirling) return it->second[0];
    if (k > static_cast<long>(it->second.size()) - 1) return 0;
    return it->second[k];
}

}  // namespace touchard

#include "qmr/prefs.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace qmr {

std::uint32_t factorial(int m) {
    static constexpr std::uint32_t table[] = {1, 1, 2, 6, 24, 120, 720};
    if (m < 0 || m > kMaxAlternatives) throw std::out_of_range("factorial: m out of [0,6]");
    return table[m];
}

std::string alternative_label(int index) {
    if (index < 0 || index >= kMaxAlternatives) throw std::out_of_range("alternative index");
    return std::string(1, static_cast<char>('A' + index));
}

bool is_valid_ranking(const Ranking& r) {
    const int m = r.size();
    if (m < 1 || m > kMaxAlternatives) return false;
    std::vector<bool> seen(m, false);
    for (int v : r.order) {
        if (v < 0 || v >= m || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

std::vector<Ranking> enumerate_rankings(int m) {
    if (m < 1 || m > kMaxAlternatives) throw std::out_of_range("enumerate_rankings: 1 <= m <= 6");
    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::vector<Ranking> out;
    out.reserve(factorial(m));
    do {
        out.push_back(Ranking{order});
    } while (std::next_permutation(order.begin(), order.end()));
    return out;
}

std::uint32_t lehmer_encode(const Ranking& r) {
    if (!is_valid_ranking(r)) throw std::invalid_argument("lehmer_encode: not a permutation");
    const int m = r.size();
    std::uint32_t index = 0;
    for (int i = 0; i < m; ++i) {
        int smaller_after = 0;
        for (int j = i + 1; j < m; ++j)
            if (r.order[j] < r.order[i]) ++smaller_after;
        index += static_cast<std::uint32_t>(smaller_after) * factorial(m - 1 - i);
    }
    return index;
}

Ranking lehmer_decode(std::uint32_t index, int m) {
    if (m < 1 || m > kMaxAlternatives) throw std::out_of_range("lehmer_decode: 1 <= m <= 6");
    if (index >= factorial(m))
        throw InvalidLabelError("lehmer_decode: index " + std::to_string(index) +
                                " is not a ranking for m=" + std::to_string(m));
    std::vector<int> pool(m);
    std::iota(pool.begin(), pool.end(), 0);
    Ranking r;
    r.order.reserve(m);
    for (int i = 0; i < m; ++i) {
        const std::uint32_t f = factorial(m - 1 - i);
        const std::uint32_t digit = index / f;
        index %= f;
        r.order.push_back(pool[digit]);
        pool.erase(pool.begin() + digit);
    }
    return r;
}

Ranking reverse_ranking(const Ranking& r) {
    if (!is_valid_ranking(r)) throw std::invalid_argument("reverse_ranking: invalid ranking");
    Ranking out = r;
    std::reverse(out.order.begin(), out.order.end());
    return out;
}

bool prefers(const Ranking& r, int a, int b) {
    if (a == b) throw std::domain_error("prefers: a == b");
    for (int v : r.order) {
        if (v == a) return true;
        if (v == b) return false;
    }
    throw std::invalid_argument("prefers: alternative not in ranking");
}

std::string ranking_to_string(const Ranking& r) {
    std::string s;
    s.reserve(r.order.size());
    for (int v : r.order) s += static_cast<char>('A' + v);
    return s;
}

Ranking ranking_from_string(const std::string& text) {
    Ranking r;
    r.order.reserve(text.size());
    for (char c : text) {
        if (c < 'A' || c >= 'A' + kMaxAlternatives)
            throw std::invalid_argument("ranking_from_string: bad label character");
        r.order.push_back(c - 'A');
    }
    if (!is_valid_ranking(r)) throw std::invalid_argument("ranking_from_string: not a permutation");
    return r;
}

int qubit_count(int m) {
    const std::uint32_t fact = factorial(m);
    int q = 0;
    while ((1u << q) < fact) ++q;
    return q;
}

QubitLabel encode_label(std::uint32_t ranking_index, int m) {
    if (ranking_index >= factorial(m)) throw InvalidLabelError("encode_label: index >= m!");
    return QubitLabel{ranking_index, qubit_count(m)};
}

std::optional<std::uint32_t> decode_with_policy(const QubitLabel& label,
                                                InvalidLabelPolicy policy, int m) {
    const std::uint32_t fact = factorial(m);
    if (label.value < fact) return label.value;
    switch (policy) {
        case InvalidLabelPolicy::kDiscard:
            return std::nullopt;
        case InvalidLabelPolicy::kModulo:
            return label.value % fact;
        case InvalidLabelPolicy::kNearest: {
            std::uint32_t best = 0;
            int best_dist = label.bits + 1;
            for (std::uint32_t v = 0; v < fact; ++v) {
                const int d = std::popcount(v ^ label.value);
                if (d < best_dist) {  // ties keep the lowest index
                    best_dist = d;
                    best = v;
                }
            }
            return best;
        }
    }
    throw std::logic_error("decode_with_policy: unknown policy");
}

}  // namespace qmr

// Alternatives, strict rankings and their Lehmer-code indexing.
//
// A ranking over m alternatives is a permutation of {0,..,m-1}, best first.
// Rankings are numbered by lexicographic order of their sequences, which
// coincides with the Lehmer code: for m=3 index 0 is ABC, ..., index 5 is
// CBA. All modules rely on that numbering.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qmr {

inline constexpr int kMaxAlternatives = 6;  // m! <= 720 keeps everything enumerable

/// m! for m <= 6.
std::uint32_t factorial(int m);

/// Candidate labels "A", "B", ... for logs and CSV headers.
std::string alternative_label(int index);

struct Ranking {
    std::vector<int> order;  // permutation of [0, m); order[0] is the top choice

    int size() const { return static_cast<int>(order.size()); }
    bool operator==(const Ranking&) const = default;
};

/// True iff order is a permutation of [0, m).
bool is_valid_ranking(const Ranking& r);

/// All m! rankings in lexicographic order; position equals Lehmer index.
/// Throws std::out_of_range unless 1 <= m <= 6.
std::vector<Ranking> enumerate_rankings(int m);

/// Lexicographic rank of r in [0, m!). Throws std::invalid_argument on a
/// non-permutation input.
std::uint32_t lehmer_encode(const Ranking& r);

/// Inverse of lehmer_encode. Throws InvalidLabelError for index >= m!.
Ranking lehmer_decode(std::uint32_t index, int m);

struct InvalidLabelError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

/// (a_1,..,a_m) -> (a_m,..,a_1). An involution; fixed-point-free for m >= 2.
Ranking reverse_ranking(const Ranking& r);

/// True iff a appears before b in r. Throws std::domain_error when a == b.
bool prefers(const Ranking& r, int a, int b);

/// "ACB"-style text form (the canonical log representation).
std::string ranking_to_string(const Ranking& r);

/// Parse "ACB" back into a ranking. Throws std::invalid_argument.
Ranking ranking_from_string(const std::string& text);

// --- physical label encoding -------------------------------------------

/// Width of the ranking register: minimal q with 2^q >= m!.
int qubit_count(int m);

/// A q-bit measurement outcome; value < m! encodes a ranking, the rest are
/// redundant labels that carry no preference.
struct QubitLabel {
    std::uint32_t value = 0;
    int bits = 0;

    bool valid_for(int m) const { return value < factorial(m); }
    bool operator==(const QubitLabel&) const = default;
};

QubitLabel encode_label(std::uint32_t ranking_index, int m);

enum class InvalidLabelPolicy { kDiscard, kModulo, kNearest };

/// Map a (possibly corrupted) label back to a ranking index.
/// kDiscard: nullopt for invalid labels. kModulo: value mod m!.
/// kNearest: valid label at minimal Hamming distance, lowest index on ties.
std::optional<std::uint32_t> decode_with_policy(const QubitLabel& label,
                                                InvalidLabelPolicy policy, int m);

}  // namespace qmr

// Probability vectors over the m! rankings — the shared currency of the
// classical baseline, the constitution and the samplers.

#pragma once

#include <cstdint>
#include <vector>

#include "qmr/prefs.hpp"

namespace qmr {

struct RankingDistribution {
    int m = 0;
    std::vector<double> probs;  // length m!, entrywise >= 0, sums to 1

    static RankingDistribution zeros(int m);
    static RankingDistribution uniform(int m);
    static RankingDistribution point_mass(int m, std::uint32_t ranking_index);

    std::uint32_t size() const { return static_cast<std::uint32_t>(probs.size()); }

    /// Clamp entries below -1e-12 is an error; [-1e-12, 0) clamps to 0.
    /// Rescales to unit sum. Throws on non-positive total mass.
    void normalize();

    /// Throws unless entries >= -1e-12 and the sum is within 1e-9 of 1.
    void validate() const;

    bool operator==(const RankingDistribution&) const = default;
};

/// One voter's dephased ballot: a distribution over rankings.
using VoterDistribution = RankingDistribution;

/// The dephased profile: one distribution per voter.
using Profile = std::vector<VoterDistribution>;

/// Probability that a ranks above b under d. Complementary in (a,b) exactly.
/// Throws std::domain_error when a == b.
double pair_probability(const RankingDistribution& d, int a, int b);

/// mask[L] = prefers(L, a, b) over the Lehmer enumeration; popcount m!/2.
std::vector<bool> pair_mask(int m, int a, int b);

}  // namespace qmr

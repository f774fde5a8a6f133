#pragma once

#include "tilecalc/tileset.hpp"

#include <string>
#include <vector>

namespace tilecalc::atam {

struct DeterminismViolation {
    std::string first;
    std::string second;
    std::uint8_t shared_sides = 0;
};

struct DeterminismReport {
    std::vector<DeterminismViolation> violations;
    bool ok() const { return violations.empty(); }
    std::string describe() const;
};

// Flags pairs of tiles that would both bind in some neighbourhood: the input
// glues of one tile all reappear on the same sides of the other.
DeterminismReport validate_determinism(const TileSet& tileset);

}  // namespace tilecalc::atam

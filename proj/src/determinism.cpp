#include "tilecalc/determinism.hpp"

#include <set>
#include <sstream>

namespace tilecalc::atam {

namespace {

// Strength `other` would collect in a neighbourhood built to attach `t`.
int strength_in_context(const Tile& t, const Tile& other) {
    int total = 0;
    for (Direction d : all_directions) {
        if (!(t.input_sides & side_bit(d))) continue;
        const Glue& g = t.glue(d);
        const Glue& h = other.glue(d);
        if (!g.is_null() && g.label == h.label) total += std::min(g.strength, h.strength);
    }
    return total;
}

std::uint8_t shared_sides(const Tile& a, const Tile& b) {
    std::uint8_t out = 0;
    for (Direction d : all_directions)
        if (!a.glue(d).is_null() && a.glue(d).label == b.glue(d).label) out |= side_bit(d);
    return out;
}

}  // namespace

std::string DeterminismReport::describe() const {
    if (violations.empty()) return "tile set is locally deterministic";
    std::ostringstream out;
    out << violations.size() << " determinism violation(s):";
    for (auto& v : violations)
        out << "\n  " << v.first << " / " << v.second << " share " << sides_to_string(v.shared_sides);
    return out.str();
}

DeterminismReport validate_determinism(const TileSet& tileset) {
    DeterminismReport report;
    std::set<std::pair<TileIndex, TileIndex>> seen;
    const auto& tiles = tileset.tiles();
    for (TileIndex i = 0; i < tiles.size(); ++i) {
        if (tiles[i].input_sides == 0) continue;
        for (TileIndex j = 0; j < tiles.size(); ++j) {
            if (i == j) continue;
            if (strength_in_context(tiles[i], tiles[j]) < tileset.tau()) continue;
            auto key = std::minmax(i, j);
            if (!seen.insert(key).second) continue;
            report.violations.push_back(
                {tiles[key.first].id, tiles[key.second].id, shared_sides(tiles[i], tiles[j])});
        }
    }
    return report;
}

}  // namespace tilecalc::atam

#include "tilecalc/tileset.hpp"

#include <algorithm>

namespace tilecalc::atam {

TileSet::TileSet(std::string name, int tau, std::vector<Tile> tiles)
    : name_(std::move(name)), tau_(tau), tiles_(std::move(tiles)) {
    if (tau_ < 0) throw TileSetError("temperature must be non-negative");
    for (TileIndex i = 0; i < tiles_.size(); ++i) {
        const Tile& t = tiles_[i];
        if (t.id.empty()) throw TileSetError("tile with empty id");
        if (!by_id_.emplace(t.id, i).second) throw TileSetError("duplicate tile id '" + t.id + "'");
        for (const Glue& g : t.glues) {
            if (g.is_null()) {
                if (g.strength != 0) throw TileSetError("null glue with non-zero strength on '" + t.id + "'");
                continue;
            }
            if (g.strength < 0 || g.strength > 2)
                throw TileSetError("glue strength out of range on '" + t.id + "'");
            auto [it, inserted] = strengths_.emplace(g.label, g.strength);
            if (!inserted && it->second != g.strength)
                throw TileSetError("glue '" + g.label + "' used with strengths " + std::to_string(it->second) +
                                   " and " + std::to_string(g.strength));
        }
    }
    for (auto& [label, s] : strengths_) {
        glue_ids_.emplace(label, static_cast<GlueId>(glue_strength_by_id_.size()));
        glue_strength_by_id_.push_back(s);
    }
    for (auto& per_dir : index_) per_dir.assign(glue_strength_by_id_.size(), {});
    tile_glue_ids_.reserve(tiles_.size());
    for (TileIndex i = 0; i < tiles_.size(); ++i) {
        std::array<GlueId, 4> ids{};
        for (Direction d : all_directions) {
            const Glue& g = tiles_[i].glue(d);
            GlueId id = g.is_null() ? no_glue : glue_ids_.at(g.label);
            ids[static_cast<int>(d)] = id;
            if (id != no_glue) index_[static_cast<int>(d)][static_cast<std::size_t>(id)].push_back(i);
        }
        tile_glue_ids_.push_back(ids);
    }
}

TileSet TileSet::combine(std::string name, int tau, std::initializer_list<const TileSet*> parts) {
    std::vector<Tile> tiles;
    std::unordered_map<std::string, std::size_t> seen;
    for (const TileSet* part : parts) {
        for (const Tile& t : part->tiles()) {
            auto it = seen.find(t.id);
            if (it != seen.end()) {
                if (!(tiles[it->second] == t))
                    throw TileSetError("conflicting definitions of tile '" + t.id + "'");
                continue;
            }
            seen.emplace(t.id, tiles.size());
            tiles.push_back(t);
        }
    }
    return TileSet(std::move(name), tau, std::move(tiles));
}

std::optional<TileIndex> TileSet::find(std::string_view id) const {
    auto it = by_id_.find(std::string(id));
    if (it == by_id_.end()) return std::nullopt;
    return it->second;
}

std::vector<std::string> TileSet::glue_alphabet() const {
    std::vector<std::string> out;
    out.reserve(strengths_.size());
    for (auto& [label, s] : strengths_) out.push_back(label);
    return out;
}

GlueId TileSet::glue_id(std::string_view label) const {
    if (label.empty()) return no_glue;
    auto it = glue_ids_.find(std::string(label));
    return it == glue_ids_.end() ? no_glue : it->second;
}

std::span<const TileIndex> TileSet::tiles_with(Direction d, GlueId g) const {
    if (g == no_glue) return {};
    return index_[static_cast<int>(d)][static_cast<std::size_t>(g)];
}

}  // namespace tilecalc::atam

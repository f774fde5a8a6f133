#pragma once

#include "tilecalc/tile.hpp"

#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace tilecalc::atam {

using TileIndex = std::uint32_t;
using GlueId = std::int32_t;
inline constexpr GlueId no_glue = -1;

class TileSetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class TileSet {
public:
    TileSet() = default;
    TileSet(std::string name, int tau, std::vector<Tile> tiles);

    // Union of several sets; tiles sharing an id must be identical.
    static TileSet combine(std::string name, int tau, std::initializer_list<const TileSet*> parts);

    const std::string& name() const { return name_; }
    int tau() const { return tau_; }
    std::size_t size() const { return tiles_.size(); }
    bool empty() const { return tiles_.empty(); }
    const std::vector<Tile>& tiles() const { return tiles_; }
    const Tile& tile(TileIndex i) const { return tiles_[i]; }

    std::optional<TileIndex> find(std::string_view id) const;

    // Sorted glue labels with their strengths.
    const std::map<std::string, int>& glue_strengths() const { return strengths_; }
    std::vector<std::string> glue_alphabet() const;

    GlueId glue_id(std::string_view label) const;
    GlueId glue_id(TileIndex t, Direction d) const { return tile_glue_ids_[t][static_cast<int>(d)]; }
    int strength(GlueId g) const { return glue_strength_by_id_[static_cast<std::size_t>(g)]; }

    // Tiles whose side d carries glue g.
    std::span<const TileIndex> tiles_with(Direction d, GlueId g) const;

    bool operator==(const TileSet& other) const {
        return name_ == other.name_ && tau_ == other.tau_ && tiles_ == other.tiles_;
    }

private:
    std::string name_;
    int tau_ = 2;
    std::vector<Tile> tiles_;
    std::map<std::string, int> strengths_;
    std::unordered_map<std::string, TileIndex> by_id_;
    std::unordered_map<std::string, GlueId> glue_ids_;
    std::vector<int> glue_strength_by_id_;
    std::vector<std::array<GlueId, 4>> tile_glue_ids_;
    std::array<std::vector<std::vector<TileIndex>>, 4> index_;
};

}  // namespace tilecalc::atam

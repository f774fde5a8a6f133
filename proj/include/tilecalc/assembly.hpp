#pragma once

#include "tilecalc/tileset.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace tilecalc::atam {

class OccupiedPositionError : public std::logic_error {
public:
    explicit OccupiedPositionError(Position p);
    Position position;
};

class AmbiguityError : public std::runtime_error {
public:
    AmbiguityError(Position p, std::vector<std::string> tile_ids);
    Position position;
    std::vector<std::string> tile_ids;
};

class ReplayError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SeedConfiguration {
    std::map<Position, Tile> placements;

    void place(Position p, Tile t);
    bool operator==(const SeedConfiguration&) const = default;
};

struct AttachmentEvent {
    Position position;
    std::string tile_id;
    std::size_t step_index = 0;
    bool operator==(const AttachmentEvent&) const = default;
};

struct Attachment {
    Position position;
    const Tile* tile = nullptr;
};

enum class AssemblyStatus { growing, halted, step_limit_exceeded, extent_limit_exceeded };

std::string_view to_string(AssemblyStatus s);

struct GrowthLimits {
    std::size_t max_steps = 1'000'000;
    // Largest |x| or |y| any placed tile may reach.
    int max_extent = 1 << 20;
};

struct Bounds {
    int min_x = 0, max_x = -1, min_y = 0, max_y = -1;
    int width() const { return max_x - min_x + 1; }
    int height() const { return max_y - min_y + 1; }
};

class Assembly {
public:
    Assembly(std::shared_ptr<const TileSet> tileset, SeedConfiguration seed);

    const TileSet& tileset() const { return *tileset_; }
    std::shared_ptr<const TileSet> tileset_ptr() const { return tileset_; }
    const SeedConfiguration& seed() const { return seed_; }
    AssemblyStatus status() const { return status_; }
    const std::vector<AttachmentEvent>& trace() const { return trace_; }
    std::size_t size() const { return placed_.size(); }
    Bounds bounds() const { return bounds_; }

    const Tile* tile_at(Position p) const;
    bool occupied(Position p) const { return placed_.count(key(p)) != 0; }

    // Every placed tile, ordered by position.
    std::vector<std::pair<Position, const Tile*>> placed() const;

    // Sum of bond strengths the given tile would receive at p.
    int binding_strength(Position p, const Tile& tile) const;

    std::vector<Attachment> frontier_attachments() const;
    bool has_ambiguity() const { return !ambiguous_.empty(); }
    // Position the next deterministic step would fill.
    std::optional<Position> next_position() const;

    // Places the first frontier tile; nullopt once halted.
    std::optional<AttachmentEvent> step();
    // Places a uniformly chosen frontier tile.
    std::optional<AttachmentEvent> step_random(std::mt19937_64& rng);

    // Places a specific tile; it must currently be attachable.
    AttachmentEvent attach(Position p, std::string_view tile_id);

    void set_status(AssemblyStatus s) { status_ = s; }

private:
    using Key = std::uint64_t;
    static Key key(Position p) {
        return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(p.x)) << 32) |
               static_cast<std::uint32_t>(p.y);
    }

    struct PaletteEntry {
        const Tile* tile;
        std::array<GlueId, 4> glue_ids;
    };

    void place(Position p, std::uint32_t palette_index);
    void refresh(Position p);
    std::vector<TileIndex> candidates(Position p) const;
    AttachmentEvent place_tile(Position p, TileIndex t);

    std::shared_ptr<const TileSet> tileset_;
    SeedConfiguration seed_;
    std::shared_ptr<const std::vector<Tile>> extra_tiles_;
    std::vector<PaletteEntry> palette_;
    std::unordered_map<Key, std::uint32_t> placed_;
    std::map<Position, TileIndex> attachable_;
    std::set<Position> ambiguous_;
    std::vector<AttachmentEvent> trace_;
    AssemblyStatus status_ = AssemblyStatus::growing;
    Bounds bounds_;
};

bool attachable(const Assembly& assembly, Position pos, const Tile& tile, int tau);
std::vector<Attachment> frontier_attachments(const Assembly& assembly);
std::optional<AttachmentEvent> step(Assembly& assembly);

Assembly run_to_completion(const SeedConfiguration& seed, std::shared_ptr<const TileSet> tileset,
                           const GrowthLimits& limits = {});
// Continues an existing assembly.
void run(Assembly& assembly, const GrowthLimits& limits = {});
Assembly run_randomized(const SeedConfiguration& seed, std::shared_ptr<const TileSet> tileset,
                        std::uint64_t rng_seed, const GrowthLimits& limits = {});

Assembly replay(const SeedConfiguration& seed, std::shared_ptr<const TileSet> tileset,
                const std::vector<AttachmentEvent>& trace);

// Tiles and positions equal (trace order ignored).
bool same_configuration(const Assembly& a, const Assembly& b);

}  // namespace tilecalc::atam

#include "tilecalc/assembly.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace tilecalc::atam {

namespace {

std::string position_text(Position p) {
    return "(" + std::to_string(p.x) + ", " + std::to_string(p.y) + ")";
}

std::string ambiguity_text(Position p, const std::vector<std::string>& ids) {
    std::string msg = "ambiguous attachment at " + position_text(p) + ":";
    for (auto& id : ids) msg += " " + id;
    return msg;
}

}  // namespace

OccupiedPositionError::OccupiedPositionError(Position p)
    : std::logic_error("position " + position_text(p) + " is already occupied"), position(p) {}

AmbiguityError::AmbiguityError(Position p, std::vector<std::string> ids)
    : std::runtime_error(ambiguity_text(p, ids)), position(p), tile_ids(std::move(ids)) {}

void SeedConfiguration::place(Position p, Tile t) {
    if (!placements.emplace(p, std::move(t)).second) throw OccupiedPositionError(p);
}

std::string_view to_string(AssemblyStatus s) {
    switch (s) {
        case AssemblyStatus::growing: return "growing";
        case AssemblyStatus::halted: return "halted";
        case AssemblyStatus::step_limit_exceeded: return "step-limit-exceeded";
        case AssemblyStatus::extent_limit_exceeded: return "extent-limit-exceeded";
    }
    return "?";
}

Assembly::Assembly(std::shared_ptr<const TileSet> tileset, SeedConfiguration seed)
    : tileset_(std::move(tileset)), seed_(std::move(seed)) {
    if (!tileset_) throw std::invalid_argument("assembly needs a tile set");
    if (seed_.placements.empty()) throw std::invalid_argument("seed configuration is empty");

    palette_.reserve(tileset_->size() + seed_.placements.size());
    for (TileIndex i = 0; i < tileset_->size(); ++i)
        palette_.push_back({&tileset_->tile(i), {
            tileset_->glue_id(i, Direction::north), tileset_->glue_id(i, Direction::east),
            tileset_->glue_id(i, Direction::south), tileset_->glue_id(i, Direction::west)}});

    auto extras = std::make_shared<std::vector<Tile>>();
    std::vector<std::pair<Position, std::uint32_t>> seed_refs;
    std::vector<std::pair<Position, std::size_t>> extra_refs;
    for (auto& [pos, tile] : seed_.placements) {
        auto idx = tileset_->find(tile.id);
        if (idx && tileset_->tile(*idx) == tile) {
            seed_refs.emplace_back(pos, *idx);
        } else {
            extra_refs.emplace_back(pos, extras->size());
            extras->push_back(tile);
        }
    }
    extra_tiles_ = extras;
    for (const Tile& t : *extra_tiles_) {
        std::array<GlueId, 4> ids{};
        for (Direction d : all_directions) ids[static_cast<int>(d)] = tileset_->glue_id(t.glue(d).label);
        palette_.push_back({&t, ids});
    }
    for (auto& [pos, e] : extra_refs)
        seed_refs.emplace_back(pos, static_cast<std::uint32_t>(tileset_->size() + e));

    placed_.reserve(seed_refs.size() * 4);
    for (auto& [pos, idx] : seed_refs) place(pos, idx);
    for (auto& [pos, idx] : seed_refs)
        for (Direction d : all_directions) refresh(neighbor(pos, d));
    if (attachable_.empty() && ambiguous_.empty()) status_ = AssemblyStatus::halted;
}

const Tile* Assembly::tile_at(Position p) const {
    auto it = placed_.find(key(p));
    return it == placed_.end() ? nullptr : palette_[it->second].tile;
}

std::vector<std::pair<Position, const Tile*>> Assembly::placed() const {
    std::vector<std::pair<Position, const Tile*>> out;
    out.reserve(placed_.size());
    for (auto& [k, idx] : placed_) {
        Position p{static_cast<int>(static_cast<std::uint32_t>(k >> 32)),
                   static_cast<int>(static_cast<std::uint32_t>(k & 0xffffffffu))};
        out.emplace_back(p, palette_[idx].tile);
    }
    std::sort(out.begin(), out.end(), [](auto& a, auto& b) { return a.first < b.first; });
    return out;
}

int Assembly::binding_strength(Position p, const Tile& tile) const {
    int total = 0;
    for (Direction d : all_directions) {
        const Glue& mine = tile.glue(d);
        if (mine.is_null() || mine.strength == 0) continue;
        const Tile* other = tile_at(neighbor(p, d));
        if (!other) continue;
        const Glue& theirs = other->glue(opposite(d));
        if (theirs.label == mine.label) total += std::min(mine.strength, theirs.strength);
    }
    return total;
}

std::vector<TileIndex> Assembly::candidates(Position p) const {
    // Accumulated bond strength per candidate tile.
    std::vector<std::pair<TileIndex, int>> acc;
    for (Direction d : all_directions) {
        auto it = placed_.find(key(neighbor(p, d)));
        if (it == placed_.end()) continue;
        GlueId g = palette_[it->second].glue_ids[static_cast<int>(opposite(d))];
        if (g == no_glue) continue;
        int s = tileset_->strength(g);
        if (s == 0) continue;
        for (TileIndex t : tileset_->tiles_with(d, g)) {
            auto found = std::find_if(acc.begin(), acc.end(), [t](auto& e) { return e.first == t; });
            if (found == acc.end())
                acc.emplace_back(t, s);
            else
                found->second += s;
        }
    }
    std::vector<TileIndex> out;
    for (auto& [t, s] : acc)
        if (s >= tileset_->tau()) out.push_back(t);
    if (tileset_->tau() == 0 && out.empty()) {
        bool adjacent = false;
        for (Direction d : all_directions) adjacent = adjacent || occupied(neighbor(p, d));
        if (adjacent)
            for (TileIndex t = 0; t < tileset_->size(); ++t) out.push_back(t);
    }
    std::sort(out.begin(), out.end(),
              [this](TileIndex a, TileIndex b) { return tileset_->tile(a).id < tileset_->tile(b).id; });
    return out;
}

void Assembly::refresh(Position p) {
    if (occupied(p)) {
        attachable_.erase(p);
        ambiguous_.erase(p);
        return;
    }
    auto c = candidates(p);
    if (c.empty()) {
        attachable_.erase(p);
        ambiguous_.erase(p);
    } else if (c.size() == 1) {
        attachable_[p] = c.front();
        ambiguous_.erase(p);
    } else {
        attachable_.erase(p);
        ambiguous_.insert(p);
    }
}

void Assembly::place(Position p, std::uint32_t palette_index) {
    if (!placed_.emplace(key(p), palette_index).second) throw OccupiedPositionError(p);
    if (bounds_.max_x < bounds_.min_x) {
        bounds_ = {p.x, p.x, p.y, p.y};
    } else {
        bounds_.min_x = std::min(bounds_.min_x, p.x);
        bounds_.max_x = std::max(bounds_.max_x, p.x);
        bounds_.min_y = std::min(bounds_.min_y, p.y);
        bounds_.max_y = std::max(bounds_.max_y, p.y);
    }
}

AttachmentEvent Assembly::place_tile(Position p, TileIndex t) {
    place(p, t);
    refresh(p);
    for (Direction d : all_directions) refresh(neighbor(p, d));
    AttachmentEvent ev{p, tileset_->tile(t).id, trace_.size()};
    trace_.push_back(ev);
    if (attachable_.empty() && ambiguous_.empty()) status_ = AssemblyStatus::halted;
    return ev;
}

std::vector<Attachment> Assembly::frontier_attachments() const {
    std::vector<Attachment> out;
    auto a = attachable_.begin();
    auto b = ambiguous_.begin();
    while (a != attachable_.end() || b != ambiguous_.end()) {
        if (b == ambiguous_.end() || (a != attachable_.end() && a->first < *b)) {
            out.push_back({a->first, &tileset_->tile(a->second)});
            ++a;
        } else {
            for (TileIndex t : candidates(*b)) out.push_back({*b, &tileset_->tile(t)});
            ++b;
        }
    }
    return out;
}

std::optional<Position> Assembly::next_position() const {
    if (attachable_.empty() && ambiguous_.empty()) return std::nullopt;
    if (attachable_.empty()) return *ambiguous_.begin();
    if (ambiguous_.empty()) return attachable_.begin()->first;
    return std::min(attachable_.begin()->first, *ambiguous_.begin());
}

std::optional<AttachmentEvent> Assembly::step() {
    if (status_ != AssemblyStatus::growing) return std::nullopt;
    if (!ambiguous_.empty()) {
        Position p = *ambiguous_.begin();
        std::vector<std::string> ids;
        for (TileIndex t : candidates(p)) ids.push_back(tileset_->tile(t).id);
        throw AmbiguityError(p, std::move(ids));
    }
    if (attachable_.empty()) {
        status_ = AssemblyStatus::halted;
        return std::nullopt;
    }
    auto [p, t] = *attachable_.begin();
    return place_tile(p, t);
}

std::optional<AttachmentEvent> Assembly::step_random(std::mt19937_64& rng) {
    if (status_ != AssemblyStatus::growing) return std::nullopt;
    if (!ambiguous_.empty()) return step();
    if (attachable_.empty()) {
        status_ = AssemblyStatus::halted;
        return std::nullopt;
    }
    std::uniform_int_distribution<std::size_t> pick(0, attachable_.size() - 1);
    auto it = attachable_.begin();
    std::advance(it, static_cast<std::ptrdiff_t>(pick(rng)));
    auto [p, t] = *it;
    return place_tile(p, t);
}

AttachmentEvent Assembly::attach(Position p, std::string_view tile_id) {
    if (occupied(p)) throw OccupiedPositionError(p);
    auto t = tileset_->find(tile_id);
    if (!t) throw ReplayError("tile '" + std::string(tile_id) + "' is not in the tile set");
    if (binding_strength(p, tileset_->tile(*t)) < tileset_->tau())
        throw ReplayError("tile '" + std::string(tile_id) + "' cannot attach at " + position_text(p));
    return place_tile(p, *t);
}

bool attachable(const Assembly& assembly, Position pos, const Tile& tile, int tau) {
    if (assembly.occupied(pos)) throw OccupiedPositionError(pos);
    return assembly.binding_strength(pos, tile) >= tau;
}

std::vector<Attachment> frontier_attachments(const Assembly& assembly) {
    return assembly.frontier_attachments();
}

std::optional<AttachmentEvent> step(Assembly& assembly) { return assembly.step(); }

void run(Assembly& assembly, const GrowthLimits& limits) {
    std::size_t steps = 0;
    while (assembly.status() == AssemblyStatus::growing) {
        auto next_pos = assembly.next_position();
        if (!next_pos) {
            assembly.set_status(AssemblyStatus::halted);
            break;
        }
        if (steps >= limits.max_steps) {
            assembly.set_status(AssemblyStatus::step_limit_exceeded);
            break;
        }
        Position next = *next_pos;
        if (std::abs(next.x) > limits.max_extent || std::abs(next.y) > limits.max_extent) {
            assembly.set_status(AssemblyStatus::extent_limit_exceeded);
            break;
        }
        assembly.step();
        ++steps;
    }
}

Assembly run_to_completion(const SeedConfiguration& seed, std::shared_ptr<const TileSet> tileset,
                           const GrowthLimits& limits) {
    Assembly a(std::move(tileset), seed);
    run(a, limits);
    return a;
}

Assembly run_randomized(const SeedConfiguration& seed, std::shared_ptr<const TileSet> tileset,
                        std::uint64_t rng_seed, const GrowthLimits& limits) {
    Assembly a(std::move(tileset), seed);
    std::mt19937_64 rng(rng_seed);
    std::size_t steps = 0;
    while (a.status() == AssemblyStatus::growing) {
        if (steps >= limits.max_steps) {
            a.set_status(AssemblyStatus::step_limit_exceeded);
            break;
        }
        if (!a.step_random(rng)) break;
        ++steps;
    }
    return a;
}

Assembly replay(const SeedConfiguration& seed, std::shared_ptr<const TileSet> tileset,
                const std::vector<AttachmentEvent>& trace) {
    Assembly a(std::move(tileset), seed);
    for (std::size_t i = 0; i < trace.size(); ++i) {
        if (trace[i].step_index != i) throw ReplayError("trace step indices are not consecutive");
        a.attach(trace[i].position, trace[i].tile_id);
    }
    return a;
}

bool same_configuration(const Assembly& a, const Assembly& b) {
    auto pa = a.placed();
    auto pb = b.placed();
    if (pa.size() != pb.size()) return false;
    for (std::size_t i = 0; i < pa.size(); ++i)
        if (pa[i].first != pb[i].first || !(*pa[i].second == *pb[i].second)) return false;
    return true;
}

}  // namespace tilecalc::atam

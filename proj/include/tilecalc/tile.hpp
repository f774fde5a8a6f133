#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace tilecalc::atam {

enum class Direction : std::uint8_t { north = 0, east = 1, south = 2, west = 3 };

inline constexpr std::array<Direction, 4> all_directions{
    Direction::north, Direction::east, Direction::south, Direction::west};

constexpr Direction opposite(Direction d) {
    return static_cast<Direction>((static_cast<int>(d) + 2) % 4);
}

constexpr std::uint8_t side_bit(Direction d) {
    return static_cast<std::uint8_t>(1u << static_cast<int>(d));
}

struct Position {
    int x = 0;
    int y = 0;
    auto operator<=>(const Position&) const = default;
};

constexpr Position neighbor(Position p, Direction d) {
    switch (d) {
        case Direction::north: return {p.x, p.y + 1};
        case Direction::east: return {p.x + 1, p.y};
        case Direction::south: return {p.x, p.y - 1};
        case Direction::west: return {p.x - 1, p.y};
    }
    return p;
}

// An empty label is the null glue.
struct Glue {
    std::string label;
    int strength = 0;

    bool is_null() const { return label.empty(); }
    bool operator==(const Glue&) const = default;
};

inline Glue null_glue() { return {}; }

enum class Category : std::uint8_t { compare, shift, subshift, insert, boundary, input, dot, adder };

// Finer grouping used for tile-count reports and rendering.
enum class Role : std::uint8_t {
    computational,
    input,
    corner,
    left_frame,
    right_frame,
    top_frame,
};

std::string_view to_string(Category c);
std::optional<Category> parse_category(std::string_view s);
std::string_view to_string(Role r);
std::optional<Role> parse_role(std::string_view s);

// input_sides records which sides a tile uses to attach; seed-only tiles have none.
std::string sides_to_string(std::uint8_t sides);
std::optional<std::uint8_t> parse_sides(std::string_view s);

struct Tile {
    std::string id;
    std::array<Glue, 4> glues;
    Category category = Category::boundary;
    Role role = Role::computational;
    std::uint8_t input_sides = 0;

    const Glue& glue(Direction d) const { return glues[static_cast<int>(d)]; }
    Glue& glue(Direction d) { return glues[static_cast<int>(d)]; }
    bool operator==(const Tile&) const = default;
};

// Glue order follows the usual N, E, S, W listing.
Tile make_tile(std::string id, Category category, Role role, std::uint8_t input_sides,
               Glue north, Glue east, Glue south, Glue west);

}  // namespace tilecalc::atam

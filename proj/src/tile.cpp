#include "tilecalc/tile.hpp"

#include <utility>

namespace tilecalc::atam {

namespace {

constexpr std::array<std::pair<Category, std::string_view>, 8> category_names{{
    {Category::compare, "compare"},
    {Category::shift, "shift"},
    {Category::subshift, "subshift"},
    {Category::insert, "insert"},
    {Category::boundary, "boundary"},
    {Category::input, "input"},
    {Category::dot, "dot"},
    {Category::adder, "adder"},
}};

constexpr std::array<std::pair<Role, std::string_view>, 6> role_names{{
    {Role::computational, "computational"},
    {Role::input, "input"},
    {Role::corner, "corner"},
    {Role::left_frame, "left-frame"},
    {Role::right_frame, "right-frame"},
    {Role::top_frame, "top-frame"},
}};

constexpr std::array<char, 4> side_letters{'N', 'E', 'S', 'W'};

}  // namespace

std::string_view to_string(Category c) {
    for (auto& [k, v] : category_names)
        if (k == c) return v;
    return "?";
}

std::optional<Category> parse_category(std::string_view s) {
    for (auto& [k, v] : category_names)
        if (v == s) return k;
    return std::nullopt;
}

std::string_view to_string(Role r) {
    for (auto& [k, v] : role_names)
        if (k == r) return v;
    return "?";
}

std::optional<Role> parse_role(std::string_view s) {
    for (auto& [k, v] : role_names)
        if (v == s) return k;
    return std::nullopt;
}

std::string sides_to_string(std::uint8_t sides) {
    std::string out;
    // S first so the common cases read "SW" and "SE".
    for (int d : {2, 0, 1, 3})
        if (sides & (1u << d)) out += side_letters[d];
    return out.empty() ? "-" : out;
}

std::optional<std::uint8_t> parse_sides(std::string_view s) {
    if (s == "-") return std::uint8_t{0};
    std::uint8_t out = 0;
    for (char c : s) {
        bool found = false;
        for (int d = 0; d < 4; ++d) {
            if (side_letters[d] == c) {
                if (out & (1u << d)) return std::nullopt;
                out |= static_cast<std::uint8_t>(1u << d);
                found = true;
            }
        }
        if (!found) return std::nullopt;
    }
    return out;
}

Tile make_tile(std::string id, Category category, Role role, std::uint8_t input_sides, Glue north,
               Glue east, Glue south, Glue west) {
    Tile t;
    t.id = std::move(id);
    t.category = category;
    t.role = role;
    t.input_sides = input_sides;
    t.glues = {std::move(north), std::move(east), std::move(south), std::move(west)};
    return t;
}

}  // namespace tilecalc::atam

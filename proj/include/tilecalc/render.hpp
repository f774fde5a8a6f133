#pragma once

#include "tilecalc/assembly.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tilecalc::io {

enum class RenderFormat { ascii, svg };

std::optional<RenderFormat> parse_render_format(std::string_view s);

struct RenderedCell {
    atam::Position position;
    std::string tile_id;
    std::string color;
    std::array<std::string, 4> glues;
};

struct RenderedAssembly {
    atam::Bounds bounds;
    std::vector<RenderedCell> cells;
};

std::string_view category_color(atam::Category c);

RenderedAssembly layout(const atam::Assembly& assembly);
std::string render_assembly(const atam::Assembly& assembly, RenderFormat format);

// Four-character ASCII glyph for one tile.
std::string ascii_glyph(const atam::Tile& tile);

}  // namespace tilecalc::io

#include "tilecalc/render.hpp"

#include <sstream>

namespace tilecalc::io {

using atam::Category;

std::optional<RenderFormat> parse_render_format(std::string_view s) {
    if (s == "ascii") return RenderFormat::ascii;
    if (s == "svg") return RenderFormat::svg;
    return std::nullopt;
}

std::string_view category_color(Category c) {
    switch (c) {
        case Category::compare: return "#d62728";
        case Category::shift: return "#ff8c00";
        case Category::subshift: return "#1f77b4";
        case Category::insert: return "#2ca02c";
        case Category::boundary: return "#f4f1e8";
        case Category::input: return "#9e9e9e";
        case Category::dot: return "#ffd700";
        case Category::adder: return "#6ab04c";
    }
    return "#ffffff";
}

namespace {

char category_letter(Category c) {
    switch (c) {
        case Category::compare: return 'C';
        case Category::shift: return 'H';
        case Category::subshift: return 'S';
        case Category::insert: return 'I';
        case Category::boundary: return 'B';
        case Category::input: return 'D';
        case Category::dot: return '.';
        case Category::adder: return 'A';
    }
    return '?';
}

std::string xml_escape(std::string_view s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

std::string ascii_glyph(const atam::Tile& tile) {
    // Answer-carrying boundary tiles show their bit, the point shows '.'.
    if (tile.category == Category::dot) return "[.] ";
    if (tile.role == atam::Role::left_frame) {
        if (tile.id.rfind("SSL", 0) == 0) return "[1] ";
        if (tile.id.rfind("SL", 0) == 0) return "[0] ";
    }
    std::string summary;
    for (char c : tile.glue(atam::Direction::north).label)
        if (c != '|') summary += c;
    if (summary.empty()) summary = "-";
    summary = summary.substr(0, 3);
    std::string out(1, category_letter(tile.category));
    out += summary;
    out.resize(4, ' ');
    return out;
}

RenderedAssembly layout(const atam::Assembly& assembly) {
    RenderedAssembly r;
    r.bounds = assembly.bounds();
    for (auto& [pos, tile] : assembly.placed()) {
        RenderedCell cell;
        cell.position = pos;
        cell.tile_id = tile->id;
        cell.color = std::string(category_color(tile->category));
        for (int d = 0; d < 4; ++d) cell.glues[static_cast<std::size_t>(d)] = tile->glues[static_cast<std::size_t>(d)].label;
        r.cells.push_back(std::move(cell));
    }
    return r;
}

std::string render_assembly(const atam::Assembly& assembly, RenderFormat format) {
    RenderedAssembly r = layout(assembly);
    const atam::Bounds& b = r.bounds;
    std::ostringstream out;
    if (format == RenderFormat::ascii) {
        for (int y = b.max_y; y >= b.min_y; --y) {
            std::string line;
            for (int x = b.min_x; x <= b.max_x; ++x) {
                const atam::Tile* t = assembly.tile_at({x, y});
                line += t ? ascii_glyph(*t) : "    ";
                if (x < b.max_x) line += ' ';
            }
            while (!line.empty() && line.back() == ' ') line.pop_back();
            out << line << '\n';
        }
        return out.str();
    }
    constexpr int cell = 40;
    int width = b.width() * cell;
    int height = b.height() * cell;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
        << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    for (auto& c : r.cells) {
        int px = (c.position.x - b.min_x) * cell;
        int py = (b.max_y - c.position.y) * cell;
        out << "<g class=\"tile\" data-x=\"" << c.position.x << "\" data-y=\"" << c.position.y << "\">"
            << "<rect x=\"" << px << "\" y=\"" << py << "\" width=\"" << cell << "\" height=\"" << cell << "\" fill=\""
            << c.color << "\" stroke=\"#333\"/>"
            << "<text x=\"" << px + cell / 2 << "\" y=\"" << py + cell / 2 + 4
            << "\" font-size=\"9\" text-anchor=\"middle\" font-family=\"monospace\">" << xml_escape(c.tile_id)
            << "</text><title>" << xml_escape(c.tile_id) << " N=" << xml_escape(c.glues[0])
            << " E=" << xml_escape(c.glues[1]) << " S=" << xml_escape(c.glues[2]) << " W=" << xml_escape(c.glues[3])
            << "</title></g>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace tilecalc::io

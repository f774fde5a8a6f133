#include "tilecalc/tilefile.hpp"

#include "tilecalc/determinism.hpp"

#include "json.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace tilecalc::io {

using atam::Tile;

namespace {

constexpr std::string_view header = "tilecalc-tiles 1";

std::string glue_text(const atam::Glue& g) { return g.is_null() ? "-" : g.label; }

void check_label(const std::string& label) {
    if (label == "-" || label.find_first_of(" \t\r\n") != std::string::npos)
        throw std::invalid_argument("glue label '" + label + "' cannot be serialized");
}

std::string tile_fields(const Tile& t) {
    std::ostringstream out;
    out << t.id << ' ' << atam::to_string(t.category) << ' ' << atam::to_string(t.role) << ' '
        << atam::sides_to_string(t.input_sides);
    for (atam::Direction d : atam::all_directions) out << ' ' << glue_text(t.glue(d));
    return out.str();
}

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string w;
    while (in >> w) out.push_back(w);
    return out;
}

int parse_int(const std::string& s, std::size_t line) {
    try {
        std::size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw FormatError(line, "expected an integer, got '" + s + "'");
    }
}

Tile parse_tile(const std::vector<std::string>& f, std::size_t first, std::size_t line,
                const std::map<std::string, int>& strengths) {
    if (f.size() != first + 8) throw FormatError(line, "tile record needs 8 fields");
    auto cat = atam::parse_category(f[first + 1]);
    if (!cat) throw FormatError(line, "unknown category '" + f[first + 1] + "'");
    auto role = atam::parse_role(f[first + 2]);
    if (!role) throw FormatError(line, "unknown role '" + f[first + 2] + "'");
    auto sides = atam::parse_sides(f[first + 3]);
    if (!sides) throw FormatError(line, "bad input sides '" + f[first + 3] + "'");
    std::array<atam::Glue, 4> glues;
    for (int d = 0; d < 4; ++d) {
        const std::string& label = f[first + 4 + static_cast<std::size_t>(d)];
        if (label == "-") continue;
        auto it = strengths.find(label);
        if (it == strengths.end()) throw FormatError(line, "glue '" + label + "' has no strength entry");
        glues[static_cast<std::size_t>(d)] = {label, it->second};
    }
    return atam::make_tile(f[first], *cat, *role, *sides, glues[0], glues[1], glues[2], glues[3]);
}

}  // namespace

FormatError::FormatError(std::size_t l, const std::string& what)
    : std::runtime_error("line " + std::to_string(l) + ": " + what), line(l) {}

std::string serialize_tilefile(const atam::TileSet& tileset, const atam::SeedConfiguration& seed) {
    std::map<std::string, int> strengths = tileset.glue_strengths();
    for (auto& [pos, t] : seed.placements)
        for (auto& g : t.glues)
            if (!g.is_null()) strengths.emplace(g.label, g.strength);
    std::ostringstream out;
    out << header << '\n';
    out << "name " << (tileset.name().empty() ? "-" : tileset.name()) << '\n';
    out << "tau " << tileset.tau() << '\n';
    for (auto& [label, s] : strengths) {
        check_label(label);
        out << "glue " << label << ' ' << s << '\n';
    }
    for (const Tile& t : tileset.tiles()) out << "tile " << tile_fields(t) << '\n';
    for (auto& [pos, t] : seed.placements) out << "seed " << pos.x << ' ' << pos.y << ' ' << tile_fields(t) << '\n';
    out << "end\n";
    return out.str();
}

TileFileDocument parse_tilefile(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t n = 0;
    bool seen_header = false, seen_end = false;
    std::string name;
    int tau = 2;
    std::map<std::string, int> strengths;
    std::vector<Tile> tiles;
    atam::SeedConfiguration seed;
    while (std::getline(in, line)) {
        ++n;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto f = split(line);
        if (f.empty() || f[0][0] == '#') continue;
        if (seen_end) throw FormatError(n, "content after 'end'");
        if (!seen_header) {
            if (line != header) throw FormatError(n, "missing '" + std::string(header) + "' header");
            seen_header = true;
            continue;
        }
        const std::string& kw = f[0];
        if (kw == "name" && f.size() == 2) {
            name = f[1] == "-" ? "" : f[1];
        } else if (kw == "tau" && f.size() == 2) {
            tau = parse_int(f[1], n);
        } else if (kw == "glue" && f.size() == 3) {
            if (!strengths.emplace(f[1], parse_int(f[2], n)).second) throw FormatError(n, "glue '" + f[1] + "' repeated");
        } else if (kw == "tile") {
            tiles.push_back(parse_tile(f, 1, n, strengths));
        } else if (kw == "seed") {
            if (f.size() < 3) throw FormatError(n, "seed record needs a position");
            atam::Position p{parse_int(f[1], n), parse_int(f[2], n)};
            try {
                seed.place(p, parse_tile(f, 3, n, strengths));
            } catch (const atam::OccupiedPositionError& e) {
                throw FormatError(n, e.what());
            }
        } else if (kw == "end" && f.size() == 1) {
            seen_end = true;
        } else {
            throw FormatError(n, "unrecognized record '" + kw + "'");
        }
    }
    if (!seen_header) throw FormatError(n, "empty document");
    if (!seen_end) throw FormatError(n, "missing 'end'");
    try {
        return {atam::TileSet(name, tau, std::move(tiles)), std::move(seed)};
    } catch (const atam::TileSetError& e) {
        throw FormatError(n, e.what());
    }
}

std::string export_tilefile(const atam::TileSet& tileset, const atam::SeedConfiguration& seed, ExportFormat format) {
    auto report = atam::validate_determinism(tileset);
    if (!report.ok()) throw ExportRefused(report.describe());
    return format == ExportFormat::xgrow ? export_xgrow(tileset, seed) : serialize_tilefile(tileset, seed);
}

namespace {

std::string_view xgrow_color(atam::Category c) {
    switch (c) {
        case atam::Category::compare: return "red";
        case atam::Category::shift: return "orange";
        case atam::Category::subshift: return "blue";
        case atam::Category::insert: return "green";
        case atam::Category::boundary: return "tan";
        case atam::Category::input: return "gray";
        case atam::Category::dot: return "yellow";
        case atam::Category::adder: return "seagreen";
    }
    return "white";
}

}  // namespace

std::string export_xgrow(const atam::TileSet& tileset, const atam::SeedConfiguration& seed) {
    std::vector<const Tile*> types;
    for (const Tile& t : tileset.tiles()) types.push_back(&t);
    for (auto& [pos, t] : seed.placements) {
        auto idx = tileset.find(t.id);
        if (!idx || !(tileset.tile(*idx) == t)) types.push_back(&t);
    }
    std::map<std::string, int> strengths;
    for (const Tile* t : types)
        for (auto& g : t->glues)
            if (!g.is_null()) strengths.emplace(g.label, g.strength);
    std::map<std::string, int> number;
    for (auto& [label, s] : strengths) number.emplace(label, static_cast<int>(number.size()) + 1);

    std::ostringstream out;
    out << "% " << (tileset.name().empty() ? "tiles" : tileset.name()) << " tile set, xgrow tiles format\n";
    for (auto& [label, i] : number) out << "% binding " << i << " = " << label << '\n';
    out << "tile edges matches {{N E S W}*}\n";
    out << "num tile types=" << types.size() << '\n';
    out << "num binding types=" << number.size() << '\n';
    out << "binding type names={";
    for (auto& [label, i] : number) out << (i == 1 ? "" : " ") << 'g' << i;
    out << "}\n";
    out << "tile edges={\n";
    for (const Tile* t : types) {
        out << '{';
        for (int d = 0; d < 4; ++d) {
            const auto& g = t->glues[static_cast<std::size_t>(d)];
            out << (d ? " " : "") << (g.is_null() ? 0 : number.at(g.label));
        }
        out << "}[1](" << xgrow_color(t->category) << ")  % " << t->id << '\n';
    }
    out << "}\n";
    out << "binding strengths={";
    bool first = true;
    for (auto& [label, s] : strengths) {
        out << (first ? "" : " ") << s;
        first = false;
    }
    out << "}\n";
    // xgrow seeds a single tile; the full seed row is listed for reference.
    std::map<const Tile*, std::size_t> type_index;
    for (std::size_t i = 0; i < types.size(); ++i) type_index[types[i]] = i + 1;
    for (auto& [pos, t] : seed.placements) {
        auto idx = tileset.find(t.id);
        std::size_t ti = (idx && tileset.tile(*idx) == t) ? *idx + 1 : type_index.at(&t);
        out << "% seed " << pos.x << ' ' << pos.y << ' ' << ti << ' ' << t.id << '\n';
    }
    if (!seed.placements.empty()) {
        auto& [pos, t] = *seed.placements.begin();
        auto idx = tileset.find(t.id);
        std::size_t ti = (idx && tileset.tile(*idx) == t) ? *idx + 1 : type_index.at(&t);
        out << "seed=" << pos.y << ',' << pos.x << ',' << ti << '\n';
    }
    out << "T=2\n";
    return out.str();
}

TraceFile make_trace_file(const atam::Assembly& assembly) {
    return {{assembly.tileset(), assembly.seed()}, assembly.trace(), std::string(atam::to_string(assembly.status()))};
}

std::string serialize_trace(const TraceFile& trace) {
    nlohmann::ordered_json j;
    j["format"] = "tilecalc-trace";
    j["version"] = 1;
    j["status"] = trace.status;
    j["tiles"] = serialize_tilefile(trace.document.tileset, trace.document.seed);
    auto events = nlohmann::ordered_json::array();
    for (auto& ev : trace.events) events.push_back({ev.position.x, ev.position.y, ev.tile_id});
    j["events"] = std::move(events);
    return j.dump(1) + "\n";
}

TraceFile parse_trace(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(0, std::string("trace is not valid JSON: ") + e.what());
    }
    try {
        if (j.at("format") != "tilecalc-trace" || j.at("version") != 1) throw FormatError(0, "not a tilecalc trace");
        TraceFile out;
        out.document = parse_tilefile(j.at("tiles").get<std::string>());
        out.status = j.at("status").get<std::string>();
        for (auto& ev : j.at("events")) {
            atam::AttachmentEvent e;
            e.position = {ev.at(0).get<int>(), ev.at(1).get<int>()};
            e.tile_id = ev.at(2).get<std::string>();
            e.step_index = out.events.size();
            out.events.push_back(std::move(e));
        }
        return out;
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(0, std::string("malformed trace: ") + e.what());
    }
}

atam::Assembly replay_trace(const TraceFile& trace) {
    auto tileset = std::make_shared<const atam::TileSet>(trace.document.tileset);
    atam::Assembly a = atam::replay(trace.document.seed, tileset, trace.events);
    for (auto s : {atam::AssemblyStatus::growing, atam::AssemblyStatus::halted, atam::AssemblyStatus::step_limit_exceeded,
                   atam::AssemblyStatus::extent_limit_exceeded})
        if (atam::to_string(s) == trace.status) a.set_status(s);
    return a;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << content;
}

}  // namespace tilecalc::io

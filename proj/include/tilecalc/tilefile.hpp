#pragma once

#include "tilecalc/assembly.hpp"
#include "tilecalc/tileset.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tilecalc::io {

class FormatError : public std::runtime_error {
public:
    FormatError(std::size_t line, const std::string& what);
    std::size_t line;
};

class ExportRefused : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct TileFileDocument {
    atam::TileSet tileset;
    atam::SeedConfiguration seed;
    bool operator==(const TileFileDocument&) const = default;
};

// Canonical text form; parse_tilefile(serialize_tilefile(t, s)) reproduces both.
std::string serialize_tilefile(const atam::TileSet& tileset, const atam::SeedConfiguration& seed);
TileFileDocument parse_tilefile(std::string_view text);

enum class ExportFormat { canonical, xgrow };

// Refuses tile sets with a non-empty determinism report.
std::string export_tilefile(const atam::TileSet& tileset, const atam::SeedConfiguration& seed,
                            ExportFormat format = ExportFormat::canonical);

std::string export_xgrow(const atam::TileSet& tileset, const atam::SeedConfiguration& seed);

struct TraceFile {
    TileFileDocument document;
    std::vector<atam::AttachmentEvent> events;
    std::string status;
    bool operator==(const TraceFile&) const = default;
};

TraceFile make_trace_file(const atam::Assembly& assembly);
std::string serialize_trace(const TraceFile& trace);
TraceFile parse_trace(std::string_view text);
atam::Assembly replay_trace(const TraceFile& trace);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace tilecalc::io

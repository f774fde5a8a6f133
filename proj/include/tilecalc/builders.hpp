#pragma once

#include "tilecalc/assembly.hpp"
#include "tilecalc/fixed_point.hpp"
#include "tilecalc/relation.hpp"
#include "tilecalc/tileset.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace tilecalc::tiles {

using atam::Category;
using atam::Glue;
using atam::Role;
using atam::SeedConfiguration;
using atam::Tile;
using atam::TileSet;

// Concrete glue labels. Labels on vertical edges never meet labels on
// horizontal edges, but every label is still distinct per meaning.
namespace glue {
Glue pair(int a, int b);            // "a|b"
Glue relation(Relation r);          // "<", "=", ">"
Glue shift_carry(int c);            // "sh<c>"
Glue sub_carry(int c, int borrow);  // "ss<c>|<borrow>"
Glue marker(int i, int c);          // "#i|c"
Glue add_carry(int c);              // "+c"
Glue sub_borrow(int d);             // "-d"
Glue level_state(int level);        // "$L|s"
Glue level_bit(int level, int c);   // "$L|c", strength 2
Glue level_link(int level);         // "XL", strength 2
Glue top_link();                    // "top", strength 2
Glue right_up();                    // "e"
Glue right_turn(Relation r);        // "r:sh" or "r:ss", strength 2
Glue top_row();                     // "T"
Glue row_start();                   // "$x", corner glue for single-row tasks
}  // namespace glue

enum class CoreKind { compare, shift, subshift };

Relation compare_step(Relation in, int a, int b);
struct SubStep {
    int diff;
    int borrow;
};
SubStep subtract_step(int a, int b, int borrow);

TileSet build_core_tileset(CoreKind kind);

// Insert tiles for a width-n square root: counters #0..#(n/2-1), 4n tiles.
TileSet build_insert_tileset(int n);
// Insert tiles with counters #0..#(counters-1), 8 per counter.
TileSet build_insert_counter_tileset(int counters);

enum class BoundaryContext { compare, shift, subshift, insert, division, sqrt };

struct BoundaryOptions {
    // division: number of quotient levels; sqrt: padded input width (even).
    int size = 8;
    // Level whose compare starter is marked as the binary point.
    std::optional<int> dot_level;
};

TileSet build_boundary_tileset(BoundaryContext context, const BoundaryOptions& options = {});

// Compare/shift/subshift extensions for the east-unbounded rational assembly,
// including its three left-boundary tiles and the zero-fill tiles.
TileSet build_rational_extension_tileset();

TileSet build_adder_tileset();

// D00, D01, D10, D11.
TileSet build_input_tileset();

struct TileCountReport {
    std::map<Category, int> by_category;
    std::map<Role, int> by_role;
    int category(Category c) const;
    int role(Role r) const;
};

TileCountReport count_tiles(const TileSet& tileset);

// Complete tile sets as used by the arithmetic tasks.
TileSet compare_tileset();
TileSet shift_tileset();
TileSet subshift_tileset();
TileSet insert_tileset(int width);
TileSet division_tileset(int levels, std::optional<int> dot_level);
TileSet sqrt_tileset(int padded_width, std::optional<int> dot_level);
TileSet rational_tileset();
TileSet adder_tileset();

enum class Task { compare, shift, subshift, insert, division, sqrt, rational, adder };

std::string_view to_string(Task t);
std::optional<Task> parse_task(std::string_view s);

struct SeedParams {
    // division and sqrt: fraction bits of the answer.
    unsigned frac_bits = 0;
    // insert: position counted from 1 at the MSB, and the inserted bit.
    std::size_t insert_position = 1;
    int insert_bit = 0;
    // adder: subtract instead of add.
    bool subtract = false;
};

// A seed plus the geometry needed to build the matching tile set and read results.
struct RowPlan {
    Task task = Task::compare;
    SeedConfiguration seed;
    int width = 0;
    int levels = 0;
    int int_bits = 0;
    std::optional<int> dot_level;
    Bits left;
    Bits right;
};

// Standard layout: input pairs at (0..width-1, 0), S0 at (-1, 0), right
// terminator at (width, 0), starter tile one row up.
SeedConfiguration input_row(const Bits& left, const Bits& right);

RowPlan plan_row(Task task, const std::vector<FixedPointBinary>& operands, int width,
                 const SeedParams& params = {});
SeedConfiguration seed_row(Task task, const std::vector<FixedPointBinary>& operands, int width,
                           const SeedParams& params = {});

// Row-level plans on raw bit strings (left and right operands of equal width).
RowPlan plan_bits(Task task, const Bits& left, const Bits& right, const SeedParams& params = {});

TileSet tileset_for(const RowPlan& plan);

}  // namespace tilecalc::tiles

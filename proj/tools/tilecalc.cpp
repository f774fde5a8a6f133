#include "tilecalc/arithmetic.hpp"
#include "tilecalc/builders.hpp"
#include "tilecalc/determinism.hpp"
#include "tilecalc/render.hpp"
#include "tilecalc/tilefile.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <iostream>

using namespace tilecalc;

namespace {

struct Common {
    std::string trace_path;
    std::size_t max_steps = 0;
};

void add_common(CLI::App* cmd, Common& common) {
    cmd->add_option("--trace", common.trace_path, "Write the attachment trace (JSON) to this file");
    cmd->add_option("--max-steps", common.max_steps, "Step limit (overrides TILECALC_MAX_STEPS)");
}

void apply_common(const Common& common) {
    if (common.max_steps > 0) setenv("TILECALC_MAX_STEPS", std::to_string(common.max_steps).c_str(), 1);
}

void finish(const Common& common, const atam::Assembly& assembly) {
    if (!common.trace_path.empty())
        io::write_file(common.trace_path, io::serialize_trace(io::make_trace_file(assembly)));
}

std::string answer(const FixedPointBinary& v, const atam::Assembly& a) {
    return v.to_binary_string() + "b (" + v.to_decimal_string() + ") steps=" + std::to_string(a.trace().size());
}

// Division operands may be any exact decimal; non-dyadic ones are scaled to integers.
std::pair<FixedPointBinary, FixedPointBinary> division_operands(const std::string& p, const std::string& q) {
    auto [pn, pd] = parse_exact_rational(p);
    auto [qn, qd] = parse_exact_rational(q);
    bool dyadic = (pd & (pd - 1)) == 0 && (qd & (qd - 1)) == 0;
    if (dyadic) return {FixedPointBinary::parse(p), FixedPointBinary::parse(q)};
    return {FixedPointBinary::from_integer(pn * qd), FixedPointBinary::from_integer(pd * qn)};
}

BigUint parse_integer(const std::string& s) {
    auto [n, d] = parse_exact_rational(s);
    if (d != 1) throw std::invalid_argument("'" + s + "' is not an integer");
    return n;
}

atam::TileSet tileset_for_task(tiles::Task task, int size, std::optional<int> dot) {
    switch (task) {
        case tiles::Task::compare: return tiles::compare_tileset();
        case tiles::Task::shift: return tiles::shift_tileset();
        case tiles::Task::subshift: return tiles::subshift_tileset();
        case tiles::Task::insert: return tiles::insert_tileset(size);
        case tiles::Task::division: return tiles::division_tileset(size, dot);
        case tiles::Task::sqrt: return tiles::sqrt_tileset(size, dot);
        case tiles::Task::rational: return tiles::rational_tileset();
        case tiles::Task::adder: return tiles::adder_tileset();
    }
    throw std::invalid_argument("unknown task");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Arithmetic by tile self-assembly"};
    app.require_subcommand(1);

    Common common;
    std::string a_text, b_text, out_path, format = "ascii";
    unsigned frac_bits = 4, terms = 10;
    std::size_t max_bits = 8, position = 1;
    int bit = 0, size = 8, dot = -1;
    bool xgrow = false;

    auto* divide = app.add_subcommand("divide", "Quotient p/q with a fixed number of fraction bits");
    divide->add_option("p", a_text)->required();
    divide->add_option("q", b_text)->required();
    divide->add_option("--frac-bits,-f", frac_bits, "Fraction bits of the quotient");
    add_common(divide, common);

    auto* sqrt = app.add_subcommand("sqrt", "Square root with a fixed number of fraction bits");
    sqrt->add_option("n", a_text)->required();
    sqrt->add_option("--frac-bits,-f", frac_bits, "Fraction bits of the root");
    add_common(sqrt, common);

    auto* rational = app.add_subcommand("rational", "Binary expansion of p/q");
    rational->add_option("p", a_text)->required();
    rational->add_option("q", b_text)->required();
    rational->add_option("--max-bits,-m", max_bits, "Digits to grow after the point");
    add_common(rational, common);

    auto* pi = app.add_subcommand("pi", "Partial Gregory-Leibniz sum for pi");
    pi->add_option("--terms,-n", terms, "Number of series terms");
    pi->add_option("--frac-bits,-f", frac_bits, "Fraction bits per term");
    add_common(pi, common);

    auto* compare = app.add_subcommand("compare", "Compare two equal-width bit strings");
    compare->add_option("a", a_text)->required();
    compare->add_option("b", b_text)->required();
    add_common(compare, common);

    auto* shift = app.add_subcommand("shift", "Shift a bit string right by one place");
    shift->add_option("a", a_text)->required();
    add_common(shift, common);

    auto* subshift = app.add_subcommand("subshift", "Subtract b from a and shift b right");
    subshift->add_option("a", a_text)->required();
    subshift->add_option("b", b_text)->required();
    add_common(subshift, common);

    auto* insert = app.add_subcommand("insert", "Insert a bit into a bit string");
    insert->add_option("q", a_text)->required();
    insert->add_option("position", position, "Position counted from 1 at the left")->required();
    insert->add_option("bit", bit)->required()->check(CLI::Range(0, 1));
    add_common(insert, common);

    std::string task_name;
    auto* tiles_cmd = app.add_subcommand("tiles", "Export a task's tile set");
    tiles_cmd->add_option("task", task_name, "compare|shift|subshift|insert|division|sqrt|rational|adder")->required();
    tiles_cmd->add_option("--export,-o", out_path, "Output file")->required();
    tiles_cmd->add_flag("--xgrow", xgrow, "Write the xgrow-style format");
    tiles_cmd->add_option("--size", size, "Insert width, division levels, or sqrt input width");
    tiles_cmd->add_option("--dot", dot, "Level carrying the binary point");

    std::string file;
    auto* validate = app.add_subcommand("validate", "Check a tile file for determinism");
    validate->add_option("tilefile", file)->required();

    auto* render = app.add_subcommand("render", "Render a trace file");
    render->add_option("trace", file)->required();
    render->add_option("--format", format, "ascii or svg");
    render->add_option("--output,-o", out_path, "Write to a file instead of stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        apply_common(common);
        if (divide->parsed()) {
            auto [p, q] = division_operands(a_text, b_text);
            auto [v, a] = arith::divide_decimal(p, q, frac_bits);
            std::cout << answer(v, a) << '\n';
            finish(common, a);
        } else if (sqrt->parsed()) {
            auto [v, a] = arith::sqrt_assembly(FixedPointBinary::parse(a_text), frac_bits);
            std::cout << answer(v, a) << '\n';
            finish(common, a);
        } else if (rational->parsed()) {
            BigUint p = parse_integer(a_text), q = parse_integer(b_text);
            if (q == 0) throw std::domain_error("division by zero");
            std::string whole = "0";
            std::size_t steps = 0;
            if (p >= q) {
                auto [ip, ia] = arith::divide_decimal(FixedPointBinary::from_integer(p),
                                                      FixedPointBinary::from_integer(q), 0);
                whole = ip.to_binary_string();
                steps += ia.trace().size();
                p %= q;
            }
            auto [e, a] = arith::rational_expand(p, q, max_bits);
            steps += a.trace().size();
            std::cout << whole << '.' << format_bits(e.digits) << 'b';
            if (e.terminated)
                std::cout << " terminated";
            else if (e.period_length) {
                std::cout << " period=" << *e.period_length;
                if (*e.period_start > 0) std::cout << " start=" << *e.period_start;
            } else
                std::cout << " period=none";
            std::cout << " steps=" << steps << '\n';
            finish(common, a);
        } else if (pi->parsed()) {
            auto [v, a] = arith::compute_pi(terms, frac_bits);
            std::cout << answer(v, a) << '\n';
            finish(common, a);
        } else if (compare->parsed()) {
            auto [r, a] = arith::compare_assembly(parse_bits(a_text), parse_bits(b_text));
            std::cout << relation_symbol(r) << " (" << to_string(r) << ") steps=" << a.trace().size() << '\n';
            finish(common, a);
        } else if (shift->parsed()) {
            auto [r, a] = arith::shift_assembly(parse_bits(a_text));
            std::cout << format_bits(r) << " steps=" << a.trace().size() << '\n';
            finish(common, a);
        } else if (subshift->parsed()) {
            auto [r, a] = arith::subshift_assembly(parse_bits(a_text), parse_bits(b_text));
            std::cout << format_bits(r.diff) << ' ' << format_bits(r.shifted) << " steps=" << a.trace().size() << '\n';
            finish(common, a);
        } else if (insert->parsed()) {
            auto [r, a] = arith::insert_assembly(parse_bits(a_text), position, bit);
            std::cout << format_bits(r) << " steps=" << a.trace().size() << '\n';
            finish(common, a);
        } else if (tiles_cmd->parsed()) {
            auto task = tiles::parse_task(task_name);
            if (!task) throw std::invalid_argument("unknown task '" + task_name + "'");
            auto ts = tileset_for_task(*task, size, dot >= 0 ? std::optional<int>(dot) : std::nullopt);
            io::write_file(out_path, io::export_tilefile(ts, {}, xgrow ? io::ExportFormat::xgrow
                                                                       : io::ExportFormat::canonical));
            std::cout << ts.size() << " tiles written to " << out_path << '\n';
        } else if (validate->parsed()) {
            auto doc = io::parse_tilefile(io::read_file(file));
            auto report = atam::validate_determinism(doc.tileset);
            std::cout << report.describe() << '\n';
            return report.ok() ? 0 : 1;
        } else if (render->parsed()) {
            auto fmt = io::parse_render_format(format);
            if (!fmt) throw std::invalid_argument("unknown format '" + format + "'");
            auto assembly = io::replay_trace(io::parse_trace(io::read_file(file)));
            std::string text = io::render_assembly(assembly, *fmt);
            if (out_path.empty())
                std::cout << text;
            else
                io::write_file(out_path, text);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

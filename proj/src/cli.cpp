#include "wallchamber/cli.hpp"

#include "wallchamber/errors.hpp"
#include "wallchamber/json_io.hpp"
#include "wallchamber/slice.hpp"

#include "CLI11.hpp"

#include <filesystem>
#include <fstream>
#include <ostream>

namespace wallchamber {

namespace {

DimVector parse_dimension_vector(const std::string& text) {
    return DimVector(parse_int_list(text));
}

Weight parse_weight(const std::string& text) {
    return Weight{parse_rational_vector(text)};
}

std::string sidecar_path(const std::string& svg_path) {
    std::filesystem::path p(svg_path);
    if (p.extension() == ".svg")
        p.replace_extension(".json");
    else
        p += ".json";
    return p.string();
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw PreconditionError("cannot write '" + path + "'");
    f << contents;
    if (!f)
        throw PreconditionError("failed writing '" + path + "'");
}

Json read_json_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f)
        throw ParseError("cannot open '" + path + "'");
    try {
        return Json::parse(f);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("'" + path + "': " + e.what());
    }
}

void check_bound(long bound) {
    if (bound < 1)
        throw PreconditionError("--bound must be a positive integer");
}

struct Options {
    std::string quiver;
    std::string d;
    long bound = 0;
    std::string theta, theta2;
    long m = 0;
    std::vector<std::string> plane;
    std::string output;
};

int cmd_wall(const Options& o, CLI::App& sub, std::ostream& out) {
    WallTable table(load_quiver(o.quiver));
    auto d = parse_dimension_vector(o.d);
    if (sub.count("--bound")) {
        check_bound(o.bound);
        table.sweep(o.bound);
    }
    Json j;
    j["d"] = d.entries();
    const Json cone = to_json(table.wall(d));
    for (const auto& [key, value] : cone.items())
        j[key] = value;
    out << dump(j);
    return exit_code::ok;
}

int cmd_schur(const Options& o, std::ostream& out) {
    WallTable table(load_quiver(o.quiver));
    out << dump(to_json(table.classify_schur(parse_dimension_vector(o.d))));
    return exit_code::ok;
}

int cmd_tf(const Options& o, std::ostream& out) {
    WallTable table(load_quiver(o.quiver));
    check_bound(o.bound);
    out << dump(to_json(tf_equivalent_bounded(table, parse_weight(o.theta), parse_weight(o.theta2), o.bound)));
    return exit_code::ok;
}

int cmd_chambers(const Options& o, std::ostream& out) {
    WallTable table(load_quiver(o.quiver));
    auto chambers = enumerate_chambers(table);
    auto report = chamber_report_json(chambers);
    out << dump(report);
    if (report["summary"]["coverage"] != "pass" || report["summary"]["unimodular"] != "pass")
        return exit_code::internal;
    return exit_code::ok;
}

int cmd_oracle_kronecker(const Options& o, std::ostream& out) {
    if (o.m < 0)
        throw PreconditionError("-m must be non-negative");
    check_bound(o.bound);
    WallTable table(Quiver(2, std::vector<Quiver::Arrow>(static_cast<std::size_t>(o.m), {0, 1})));
    auto results = Json::array();
    std::size_t failed = 0;
    const auto walls = table.sweep(o.bound);
    for (const auto& [d, wall] : walls) {
        const bool pass = cones_equal(wall, kronecker_wall_oracle(o.m, d));
        failed += pass ? 0 : 1;
        Json r;
        r["d"] = d.entries();
        r["result"] = pass ? "pass" : "fail";
        results.push_back(std::move(r));
    }
    Json j;
    j["m"] = o.m;
    j["bound"] = o.bound;
    j["results"] = std::move(results);
    j["summary"] = {{"checked", walls.size()}, {"failed", failed}};
    out << dump(j);
    return failed == 0 ? exit_code::ok : exit_code::internal;
}

int cmd_slice(const Options& o, std::ostream& out) {
    WallTable table(load_quiver(o.quiver));
    check_bound(o.bound);
    const auto n = table.quiver().vertex_count();
    if (!o.plane.empty() && o.plane.size() != 3)
        throw ParseError("--plane takes exactly three corners");
    SlicePlane plane = o.plane.empty()
                           ? default_plane(n)
                           : SlicePlane{parse_rational_vector(o.plane[0]), parse_rational_vector(o.plane[1]),
                                        parse_rational_vector(o.plane[2])};
    auto pieces = slice_walls(table, plane, o.bound);
    const std::string json_path = sidecar_path(o.output);
    write_file(o.output, slice_svg(pieces, plane, o.bound));
    write_file(json_path, dump(slice_json(pieces, plane, o.bound)));

    const std::size_t failures = check_slice_sidecar(table, read_json_file(json_path));
    Json j;
    j["svg"] = o.output;
    j["sidecar"] = json_path;
    j["bound"] = o.bound;
    j["walls"] = pieces.size();
    j["round_trip"] = failures == 0 ? "pass" : "fail";
    out << dump(j);
    return failures == 0 ? exit_code::ok : exit_code::internal;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Wall and chamber structures for quiver path algebras", "wallchamber"};
    app.require_subcommand(1);
    Options o;

    auto* wall = app.add_subcommand("wall", "Print the wall of a dimension vector");
    wall->add_option("-q,--quiver", o.quiver, "Quiver file")->required();
    wall->add_option("-d", o.d, "Dimension vector, e.g. 1,1,0")->required();
    wall->add_option("--bound", o.bound, "Precompute every wall up to this total degree");

    auto* schur = app.add_subcommand("schur", "Classify a dimension vector as a Schur root");
    schur->add_option("-q,--quiver", o.quiver, "Quiver file")->required();
    schur->add_option("-d", o.d, "Dimension vector")->required();

    auto* tf = app.add_subcommand("tf", "Bounded TF-equivalence test for two weights");
    tf->add_option("-q,--quiver", o.quiver, "Quiver file")->required();
    tf->add_option("--theta", o.theta, "First weight, e.g. 2,-1")->required();
    tf->add_option("--theta2", o.theta2, "Second weight")->required();
    tf->add_option("--bound", o.bound, "Total degree bound")->required();

    auto* chambers = app.add_subcommand("chambers", "Enumerate the chambers of a representation-finite quiver");
    chambers->add_option("-q,--quiver", o.quiver, "Quiver file")->required();

    auto* oracle = app.add_subcommand("oracle-kronecker", "Check Kronecker walls against the closed form");
    oracle->add_option("-m", o.m, "Number of arrows")->required();
    oracle->add_option("--bound", o.bound, "Total degree bound")->required();

    auto* slice = app.add_subcommand("slice", "Draw the walls meeting a triangle as SVG");
    slice->add_option("-q,--quiver", o.quiver, "Quiver file")->required();
    slice->add_option("--bound", o.bound, "Total degree bound")->required();
    slice->add_option("--plane", o.plane, "Triangle corners P0 P1 P2")
        ->type_size(1)
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
    slice->add_option("-o", o.output, "Output SVG path; the sidecar goes next to it as .json")->required();

    // Corners such as -1,0,0 look like flags to the parser, so the three
    // words after --plane are bound to it explicitly.
    std::vector<std::string> argv_storage{"wallchamber"};
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--plane") {
            std::size_t k = 0;
            for (; k < 3 && i + 1 < args.size(); ++k)
                argv_storage.push_back("--plane=" + args[++i]);
            if (k < 3)
                argv_storage.push_back("--plane");
            continue;
        }
        argv_storage.push_back(args[i]);
    }
    std::vector<const char*> argv;
    for (const auto& a : argv_storage)
        argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_code::ok : exit_code::parse;
    }

    try {
        if (*wall)
            return cmd_wall(o, *wall, out);
        if (*schur)
            return cmd_schur(o, out);
        if (*tf)
            return cmd_tf(o, out);
        if (*chambers)
            return cmd_chambers(o, out);
        if (*oracle)
            return cmd_oracle_kronecker(o, out);
        return cmd_slice(o, out);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::parse;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::precondition;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << "\n";
        return exit_code::internal;
    }
}

} // namespace wallchamber

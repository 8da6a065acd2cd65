// Command-line front end: generate graphs, color them, verify colorings,
// run exact searches and lift colorings to subdivisions.

#include "packcolor/packcolor.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

using namespace packcolor;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitDiagnostic = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot read " + path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Graph load_graph(const std::string& path) { return parse_graph(read_file(path)); }

SColoring load_coloring(const std::string& path, std::size_t n) {
    return coloring_from_json(json::parse(read_file(path)), n);
}

PackingSequence parse_sequence(const std::string& text) {
    std::vector<unsigned> s;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ','))
        s.push_back(static_cast<unsigned>(std::stoul(item)));
    return PackingSequence(std::move(s));
}

std::string format_graph(const Graph& g, const std::string& format) {
    if (format == "g6" || (format == "auto" && g.order() < 63))
        return write_graph6(g) + "\n";
    return write_edge_list(g);
}

void print(const json& j) { std::cout << j.dump() << "\n"; }

/// Trace lines go to --trace PATH, or to stderr when PACKING_TRACE=1.
Engine::TraceSink make_trace(const std::string& path, std::unique_ptr<std::ofstream>& file) {
    if (!path.empty()) {
        file = std::make_unique<std::ofstream>(path);
        if (!*file)
            throw std::runtime_error("cannot write " + path);
        return [out = file.get()](const json& line) { *out << line.dump() << "\n"; };
    }
    if (const char* env = std::getenv("PACKING_TRACE"); env && std::string(env) == "1")
        return [](const json& line) { std::cerr << line.dump() << "\n"; };
    return {};
}

json stress_record(std::size_t index, std::size_t n, std::uint64_t seed) {
    const Graph g = random_cubic(n, seed);
    json rec{{"index", index}, {"n", n}, {"seed", seed}};
    try {
        auto result = solve(g);
        rec["status"] = "SOLVED";
        rec["moves"] = result.stats.composites;
        rec["conflicts_repaired"] = result.stats.conflicts_repaired;
        rec["class5"] = result.coloring.class_size(5);
    } catch (const Diagnostic& d) {
        rec["status"] = "DIAGNOSTIC";
        rec["error"] = d.what();
        rec["graph"] = write_edge_list(g);
    }
    return rec;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Packing (1,1,2,2,3)-colorings of subcubic graphs"};
    app.require_subcommand(1);

    auto* gen = app.add_subcommand("gen", "Generate a graph: petersen | k4 | cycle N | prism N | random-cubic N");
    std::vector<std::string> gen_args;
    std::uint64_t gen_seed = 1;
    std::string gen_format = "auto";
    gen->add_option("family", gen_args, "family and size")->required()->expected(1, 2);
    gen->add_option("--seed", gen_seed, "seed for random-cubic");
    gen->add_option("--format", gen_format, "auto | g6 | edges")->check(CLI::IsMember({"auto", "g6", "edges"}));

    auto* color = app.add_subcommand("color", "Compute a verified packing (1,1,2,2,3)-coloring");
    std::string color_file, trace_path;
    color->add_option("file", color_file)->required();
    color->add_option("--trace", trace_path, "write one JSON line per committed move");

    auto* ver = app.add_subcommand("verify", "Verify a packing coloring");
    std::string verify_file, verify_coloring;
    ver->add_option("file", verify_file)->required();
    ver->add_option("--coloring", verify_coloring)->required();

    auto* ex = app.add_subcommand("exact", "Exact packing S-colorability search");
    std::string exact_file, exact_seq;
    double exact_cap = 60;
    ex->add_option("file", exact_file)->required();
    ex->add_option("--seq", exact_seq, "comma-separated sequence, e.g. 1,1,2,2")->required();
    ex->add_option("--time-cap", exact_cap, "seconds");

    auto* sub = app.add_subcommand("subdivide", "Print the 1-subdivision D(G)");
    std::string sub_file, sub_format = "auto";
    sub->add_option("file", sub_file)->required();
    sub->add_option("--format", sub_format)->check(CLI::IsMember({"auto", "g6", "edges"}));

    auto* lift_cmd = app.add_subcommand("lift", "Lift a coloring of G to D(G)");
    std::string lift_file, lift_coloring;
    lift_cmd->add_option("file", lift_file)->required();
    lift_cmd->add_option("--coloring", lift_coloring)->required();

    auto* chi = app.add_subcommand("chi-p", "Packing chromatic number of a small graph");
    std::string chi_file;
    unsigned chi_max = 8;
    double chi_cap = 60;
    chi->add_option("file", chi_file)->required();
    chi->add_option("--max", chi_max);
    chi->add_option("--time-cap", chi_cap, "seconds");

    auto* max2 = app.add_subcommand("max2is", "Maximum union of two disjoint independent sets");
    std::string max2_file;
    max2->add_option("file", max2_file)->required();

    auto* stress = app.add_subcommand("stress", "Color random connected cubic graphs");
    std::size_t stress_count = 50, stress_min = 10, stress_max = 60;
    std::uint64_t stress_seed = 7;
    stress->add_option("--count", stress_count);
    stress->add_option("--min-n", stress_min);
    stress->add_option("--max-n", stress_max);
    stress->add_option("--seed", stress_seed);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*gen) {
            const std::string& family = gen_args[0];
            auto size = [&]() -> std::size_t {
                if (gen_args.size() < 2)
                    throw std::invalid_argument("gen " + family + " needs a size");
                return std::stoul(gen_args[1]);
            };
            Graph g;
            if (family == "petersen")
                g = petersen();
            else if (family == "k4")
                g = complete(4);
            else if (family == "cycle")
                g = cycle(size());
            else if (family == "prism")
                g = prism(size());
            else if (family == "random-cubic")
                g = random_cubic(size(), gen_seed);
            else
                throw std::invalid_argument("unknown family '" + family + "'");
            std::cout << format_graph(g, gen_format);
            return kExitOk;
        }

        if (*color) {
            const Graph g = load_graph(color_file);
            std::unique_ptr<std::ofstream> trace_file;
            SolveOptions options{make_trace(trace_path, trace_file)};
            try {
                auto result = solve(g, options);
                // Independent re-check before reporting success.
                if (!verify(g, result.coloring).ok()) {
                    print({{"status", "DIAGNOSTIC"}, {"error", "coloring failed re-verification"}});
                    return kExitDiagnostic;
                }
                json out = coloring_to_json(result.coloring);
                out["status"] = "SUCCESS";
                out["moves"] = result.stats.composites;
                print(out);
                return kExitOk;
            } catch (const Diagnostic& d) {
                print({{"status", "DIAGNOSTIC"}, {"error", d.what()}, {"dump", d.dump()}});
                return kExitDiagnostic;
            }
        }

        if (*ver) {
            const Graph g = load_graph(verify_file);
            const auto report = verify(g, load_coloring(verify_coloring, g.order()));
            print(report_to_json(report));
            return report.ok() ? kExitOk : kExitFail;
        }

        if (*ex) {
            const Graph g = load_graph(exact_file);
            const auto r = exact::solve(g, parse_sequence(exact_seq), std::chrono::duration<double>(exact_cap));
            json out{{"status", exact::to_string(r.status)},
                     {"nodes_expanded", r.nodes_expanded},
                     {"elapsed_ms", static_cast<std::uint64_t>(r.elapsed_ms)}};
            if (r.coloring)
                out["coloring"] = coloring_to_json(*r.coloring);
            print(out);
            return kExitOk;
        }

        if (*sub) {
            std::cout << format_graph(subdivide(load_graph(sub_file)).graph, sub_format);
            return kExitOk;
        }

        if (*lift_cmd) {
            const Graph g = load_graph(lift_file);
            const SColoring f = load_coloring(lift_coloring, g.order());
            const auto d = subdivide(g);
            const SColoring lifted = lift(g, f, d);
            const auto report = verify(d.graph, lifted);
            const auto target = PackingSequence::prefix(static_cast<unsigned>(lifted.seq.size()));
            const bool weak = weakening_implies(lifted.seq, target);
            print({{"coloring", coloring_to_json(lifted)},
                   {"valid", report.ok()},
                   {"weakening", {{"target", target.values()}, {"implied", weak}}}});
            return report.ok() && weak ? kExitOk : kExitFail;
        }

        if (*chi) {
            const auto r = exact::chi_p(load_graph(chi_file), chi_max, std::chrono::duration<double>(chi_cap));
            if (r.value)
                print({{"chi_p", *r.value}});
            else
                print({{"chi_p", "UNKNOWN"}});
            return kExitOk;
        }

        if (*max2) {
            const auto r = exact::max_two_disjoint_independent(load_graph(max2_file));
            print({{"size", r.size}, {"I1", r.first}, {"I2", r.second}});
            return kExitOk;
        }

        if (*stress) {
            if (stress_min < 4 || stress_max < stress_min)
                throw std::invalid_argument("stress: need 4 <= min-n <= max-n");
            const auto t0 = std::chrono::steady_clock::now();
            Rng rng(stress_seed);
            const std::size_t lo = (stress_min + 1) / 2;
            const std::size_t hi = stress_max / 2;
            if (hi < lo)
                throw std::invalid_argument("stress: no even n in range");
            std::size_t solved = 0, failed = 0, max_moves = 0;
            json results = json::array();
            for (std::size_t i = 0; i < stress_count; ++i) {
                const std::size_t n = 2 * (lo + rng.below(hi - lo + 1));
                const std::uint64_t seed = rng.next();
                json rec = stress_record(i, n, seed);
                if (rec["status"] == "SOLVED") {
                    ++solved;
                    max_moves = std::max<std::size_t>(max_moves, rec["moves"].get<std::size_t>());
                } else {
                    ++failed;
                }
                results.push_back(std::move(rec));
            }
            const auto wall =
                std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0);
            print({{"results", std::move(results)},
                   {"summary",
                    {{"solved", solved}, {"failed", failed}, {"max_moves", max_moves}, {"wall_ms", wall.count()}}}});
            return failed == 0 ? kExitOk : kExitFail;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitOk;
}

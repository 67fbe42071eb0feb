#include "strahler/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <iostream>
#include <iterator>
#include <json.hpp>
#include <sstream>

#include "strahler/bijection.hpp"
#include "strahler/dyck.hpp"
#include "strahler/enumerate.hpp"
#include "strahler/tree.hpp"

namespace strahler::cli {

namespace {

// Insertion-ordered keys.
using json = nlohmann::ordered_json;

enum class Format { text, json };

struct Context {
    std::istream& in;
    std::ostream& out;
    Format format = Format::text;
};

std::string resolve(Context& ctx, const std::string& arg) {
    if (arg != "-") return arg;
    return {std::istreambuf_iterator<char>(ctx.in), std::istreambuf_iterator<char>()};
}

json spinal_json(const SpinalDecomposition& dec) {
    json spine = json::array();
    for (const auto& e : dec.spine) spine.push_back({{"side", letter(e.side)}, {"tree", to_string(e.tree)}});
    return {{"h", dec.h}, {"fix", to_string(dec.fix)}, {"free", to_string(dec.free)}, {"spine", spine}};
}

json path_dec_json(const PathDecomposition& dec) {
    json spine = json::array();
    for (const auto& e : dec.spine) spine.push_back({{"eps", e.eps}, {"path", to_string(e.path)}});
    return {{"h", dec.h}, {"fix", to_string(dec.fix)}, {"free", to_string(dec.free)}, {"spine", spine}};
}

void print_spinal_text(std::ostream& out, const SpinalDecomposition& dec) {
    out << "h " << dec.h << '\n' << "fix " << to_string(dec.fix) << '\n' << "free " << to_string(dec.free) << '\n';
    for (const auto& e : dec.spine) out << "spine " << letter(e.side) << ' ' << to_string(e.tree) << '\n';
}

void print_path_dec_text(std::ostream& out, const PathDecomposition& dec) {
    out << "h " << dec.h << '\n' << "fix " << to_string(dec.fix) << '\n' << "free " << to_string(dec.free) << '\n';
    for (const auto& e : dec.spine) out << "spine " << (e.eps > 0 ? "+1" : "-1") << ' ' << to_string(e.path) << '\n';
}

// Pieces left as text; read_decomposition accepts either the JSON object or
// the line format printed by decompose-*.
struct RawDecomposition {
    int h = 0;
    std::string fix;
    std::string free;
    std::vector<std::pair<int, std::string>> spine;
};

RawDecomposition read_decomposition(const std::string& text, const char* piece_key, const char* label_key) {
    RawDecomposition raw;
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        try {
            const json j = json::parse(text);
            raw.h = j.at("h").get<int>();
            raw.fix = j.at("fix").get<std::string>();
            raw.free = j.at("free").get<std::string>();
            for (const auto& e : j.at("spine")) {
                raw.spine.emplace_back(e.at(label_key).get<int>(), e.at(piece_key).get<std::string>());
            }
        } catch (const json::exception& e) {
            throw Error(Errc::parse_error, std::string("decomposition JSON: ") + e.what());
        }
        return raw;
    }
    std::istringstream lines(text);
    std::string line;
    bool have_h = false;
    while (std::getline(lines, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        std::istringstream fields(line);
        std::string key;
        fields >> key;
        std::string rest;
        auto read_rest = [&] {
            std::getline(fields >> std::ws, rest);
            return rest;
        };
        if (key == "h") {
            if (!(fields >> raw.h)) throw Error(Errc::parse_error, "bad h line: " + line);
            have_h = true;
        } else if (key == "fix") {
            raw.fix = read_rest();
        } else if (key == "free") {
            raw.free = read_rest();
        } else if (key == "spine") {
            int label = 0;
            if (!(fields >> label)) throw Error(Errc::parse_error, "bad spine line: " + line);
            raw.spine.emplace_back(label, read_rest());
        } else {
            throw Error(Errc::parse_error, "unknown decomposition field '" + key + "'");
        }
    }
    if (!have_h) throw Error(Errc::parse_error, "decomposition lacks an h line");
    return raw;
}

void emit_histogram(Context& ctx, const Histogram& hist, const char* key) {
    if (ctx.format == Format::json) {
        for (const auto& [k, count] : hist.counts) {
            ctx.out << json{{"n", hist.n}, {key, k}, {"count", count}}.dump() << '\n';
        }
        return;
    }
    ctx.out << "n " << key << " count\n";
    for (const auto& [k, count] : hist.counts) ctx.out << hist.n << ' ' << k << ' ' << count << '\n';
}

int emit_report(Context& ctx, const TheoremReport& report) {
    if (ctx.format == Format::json) {
        for (const auto& size : report.sizes) {
            for (const auto& c : size.refined) {
                ctx.out << json{{"n", size.n},           {"h", c.h},
                                {"paths", c.paths},      {"trees", c.trees},
                                {"phi_image", c.phi_image}, {"match", c.match()}}
                               .dump()
                        << '\n';
            }
            for (const auto& c : size.classical) {
                ctx.out << json{{"n", size.n},         {"s", c.s},
                                {"paths", c.paths},    {"trees", c.trees},
                                {"aggregated", c.aggregated}, {"match", c.match()}}
                               .dump()
                        << '\n';
            }
        }
        ctx.out << json{{"max_n", report.max_n},
                        {"cells", report.cells()},
                        {"mismatches", report.mismatches()},
                        {"pass", report.pass()}}
                       .dump()
                << '\n';
    } else {
        ctx.out << "refined: n h paths trees phi_image status\n";
        for (const auto& size : report.sizes) {
            for (const auto& c : size.refined) {
                ctx.out << size.n << ' ' << c.h << ' ' << c.paths << ' ' << c.trees << ' ' << c.phi_image << ' '
                        << (c.match() ? "ok" : "MISMATCH") << '\n';
            }
        }
        ctx.out << "classical: n s paths trees aggregated status\n";
        for (const auto& size : report.sizes) {
            for (const auto& c : size.classical) {
                ctx.out << size.n << ' ' << c.s << ' ' << c.paths << ' ' << c.trees << ' ' << c.aggregated << ' '
                        << (c.match() ? "ok" : "MISMATCH") << '\n';
            }
        }
        ctx.out << "max_n " << report.max_n << " cells " << report.cells() << " mismatches " << report.mismatches()
                << ' ' << (report.pass() ? "PASS" : "FAIL") << '\n';
    }
    return report.pass() ? kOk : kMismatch;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Refined Horton-Strahler numbers and the height-preserving path/tree bijection", "strahler"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format_name = "text";
    app.add_option("--format", format_name, "Output format")->check(CLI::IsMember({"text", "json"}));

    std::uint64_t tau_r = 0;
    auto* tau_cmd = app.add_subcommand("tau", "Print tau_R");
    tau_cmd->add_option("R", tau_r)->required();

    std::string object;
    auto* hs_cmd = app.add_subcommand("hs", "Refined and classical Horton-Strahler numbers of TREE");
    hs_cmd->add_option("TREE", object)->required();
    auto* d2t_cmd = app.add_subcommand("d2t", "Map PATH to its tree");
    d2t_cmd->add_option("PATH", object)->required();
    auto* t2d_cmd = app.add_subcommand("t2d", "Map TREE to its path");
    t2d_cmd->add_option("TREE", object)->required();
    auto* dt_cmd = app.add_subcommand("decompose-tree", "Spinal decomposition of TREE");
    dt_cmd->add_option("TREE", object)->required();
    auto* dp_cmd = app.add_subcommand("decompose-path", "Decomposition of PATH");
    dp_cmd->add_option("PATH", object)->required();
    auto* ct_cmd = app.add_subcommand("compose-tree", "Rebuild a tree from decompose-tree output");
    ct_cmd->add_option("DECOMPOSITION", object)->required();
    auto* cp_cmd = app.add_subcommand("compose-path", "Rebuild a path from decompose-path output");
    cp_cmd->add_option("DECOMPOSITION", object)->required();

    std::size_t n = 0;
    std::string side = "paths";
    bool as_histogram = false;
    auto* enum_cmd = app.add_subcommand("enumerate", "List every path or tree of size N");
    enum_cmd->add_option("--n", n)->required();
    enum_cmd->add_option("--side", side)->check(CLI::IsMember({"trees", "paths"}));
    enum_cmd->add_flag("--histogram", as_histogram, "Print counts per statistic value instead");

    std::size_t max_n = 0;
    unsigned threads = default_parallelism();
    auto* verify_cmd = app.add_subcommand("verify", "Check |B_{n,h}| = |D_{n,h}| for all n <= N");
    verify_cmd->add_option("--max-n", max_n)->required();
    verify_cmd->add_option("--threads", threads, "Worker threads (STRAHLER_MAX_THREADS caps the default)")
        ->check(CLI::PositiveNumber);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kOk;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsage;
    }

    Context ctx{in, out, format_name == "json" ? Format::json : Format::text};
    const bool as_json = ctx.format == Format::json;
    try {
        if (*tau_cmd) {
            const auto t = to_string(tau(tau_r));
            out << (as_json ? json{{"r", tau_r}, {"tree", t}}.dump() : t) << '\n';
        } else if (*hs_cmd) {
            const auto t = parse_tree(resolve(ctx, object));
            const int refined = refined_hs(t);
            const int classical = classical_hs(t);
            if (as_json) {
                out << json{{"tree", to_string(t)}, {"refined", refined}, {"classical", classical}}.dump() << '\n';
            } else {
                out << "refined " << refined << '\n' << "classical " << classical << '\n';
            }
        } else if (*d2t_cmd) {
            const auto d = parse_path(resolve(ctx, object));
            const auto t = to_string(phi(d));
            out << (as_json ? json{{"path", to_string(d)}, {"tree", t}}.dump() : t) << '\n';
        } else if (*t2d_cmd) {
            const auto t = parse_tree(resolve(ctx, object));
            const auto d = to_string(phi_inverse(t));
            out << (as_json ? json{{"tree", to_string(t)}, {"path", d}}.dump() : d) << '\n';
        } else if (*dt_cmd) {
            const auto dec = decompose_tree(parse_tree(resolve(ctx, object)));
            if (as_json) {
                out << spinal_json(dec).dump() << '\n';
            } else {
                print_spinal_text(out, dec);
            }
        } else if (*dp_cmd) {
            const auto dec = decompose_path(parse_path(resolve(ctx, object)));
            if (as_json) {
                out << path_dec_json(dec).dump() << '\n';
            } else {
                print_path_dec_text(out, dec);
            }
        } else if (*ct_cmd) {
            const auto raw = read_decomposition(resolve(ctx, object), "tree", "side");
            SpinalDecomposition dec{raw.h, parse_tree(raw.fix), parse_tree(raw.free), {}};
            for (const auto& [label, piece] : raw.spine) {
                if (label != 1 && label != 2) throw Error(Errc::parse_error, "spine side must be 1 or 2");
                dec.spine.push_back({static_cast<Side>(label), parse_tree(piece)});
            }
            const auto t = to_string(compose_tree(raw.h, dec));
            out << (as_json ? json{{"tree", t}}.dump() : t) << '\n';
        } else if (*cp_cmd) {
            const auto raw = read_decomposition(resolve(ctx, object), "path", "eps");
            PathDecomposition dec{raw.h, parse_path(raw.fix), parse_path(raw.free), {}};
            for (const auto& [label, piece] : raw.spine) dec.spine.push_back({label, parse_path(piece)});
            const auto d = to_string(compose_path(raw.h, dec));
            out << (as_json ? json{{"path", d}}.dump() : d) << '\n';
        } else if (*enum_cmd) {
            if (n > 30) throw Error(Errc::overflow_range, "enumerate refuses n above 30");
            if (side == "paths") {
                if (as_histogram) {
                    emit_histogram(ctx, histogram_by_height(n), "h");
                } else {
                    DyckPathStream stream(n);
                    while (auto d = stream.next()) {
                        if (as_json) {
                            out << json{{"n", n}, {"path", to_string(*d)}, {"h", d->height()}}.dump() << '\n';
                        } else {
                            out << to_string(*d) << ' ' << d->height() << '\n';
                        }
                    }
                }
            } else if (as_histogram) {
                emit_histogram(ctx, histogram_by_refined_hs(n), "h");
            } else {
                FullBinaryTreeStream stream(n);
                while (auto t = stream.next()) {
                    const int h = refined_hs(*t);
                    if (as_json) {
                        out << json{{"n", n}, {"tree", to_string(*t)}, {"h", h}}.dump() << '\n';
                    } else {
                        out << to_string(*t) << ' ' << h << '\n';
                    }
                }
            }
        } else if (*verify_cmd) {
            return emit_report(ctx, verify_theorem(max_n, threads));
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kOk;
}

}  // namespace strahler::cli

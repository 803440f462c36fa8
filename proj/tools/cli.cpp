#include "cli.hpp"

#include "ramsey/arrow.hpp"
#include "ramsey/embedding.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/extract.hpp"
#include "ramsey/json_io.hpp"
#include "ramsey/selftest.hpp"
#include "ramsey/triples.hpp"

#include <CLI11.hpp>
#include <omp.h>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>

namespace ramsey::cli {

namespace {

constexpr int kOk = 0;
constexpr int kDomain = 1;
constexpr int kResource = 2;

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw DomainError("cannot read file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Newick text, or @path for a file holding it.
PlaneTree tree_arg(const std::string& arg)
{
    if (!arg.empty() && arg.front() == '@')
        return parse_newick(read_file(arg.substr(1)));
    return parse_newick(arg);
}

Json json_file(const std::string& path) { return parse_json(read_file(path)); }

struct SearchFlags {
    std::uint64_t budget_nodes = SearchLimits{}.max_nodes;
    std::int64_t budget_ms = SearchLimits{}.max_time.count();
    int threads = 0;
    bool serial = false;

    void add_to(CLI::App* app)
    {
        app->add_option("--budget-nodes", budget_nodes, "Search node budget")->check(CLI::PositiveNumber);
        app->add_option("--budget-ms", budget_ms, "Wall-clock budget in milliseconds")->check(CLI::PositiveNumber);
        app->add_option("--threads", threads, "OpenMP threads (0 = runtime default)")->check(CLI::NonNegativeNumber);
        app->add_flag("--serial", serial, "Use the serial search kernel");
    }

    SearchLimits limits() const { return {budget_nodes, std::chrono::milliseconds(budget_ms)}; }

    Exec exec() const
    {
        if (threads > 0)
            omp_set_num_threads(threads);
        return serial ? Exec::serial : Exec::automatic;
    }
};

void apply_environment()
{
    if (const char* env = std::getenv("RAMSEY_MAX_LEAVES")) {
        char* end = nullptr;
        const unsigned long long n = std::strtoull(env, &end, 10);
        if (end == env || *end != '\0' || n == 0)
            throw DomainError(std::string("RAMSEY_MAX_LEAVES must be a positive integer, got '") + env + "'");
        set_max_leaves(static_cast<std::size_t>(n));
    }
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Ramsey theory for finite rooted binary plane trees", "treeramsey"};
    app.require_subcommand(1);

    std::function<int()> action;

    // gen
    auto* gen = app.add_subcommand("gen", "Build trees: perfect, substitute, iterate");
    gen->require_subcommand(1);
    int perfect_c = 0;
    auto* gen_perfect = gen->add_subcommand("perfect", "Perfect binary tree T(c)");
    gen_perfect->add_option("c", perfect_c, "Height")->required()->check(CLI::NonNegativeNumber);
    gen_perfect->callback([&] { action = [&] { out << to_newick(perfect_tree(perfect_c)) << '\n'; return kOk; }; });

    std::string sub_g, sub_h;
    auto* gen_sub = gen->add_subcommand("substitute", "Leaf substitution G[H]");
    gen_sub->add_option("outer", sub_g, "Outer tree")->required();
    gen_sub->add_option("inner", sub_h, "Tree replacing each leaf")->required();
    gen_sub->callback([&] {
        action = [&] { out << to_newick(substitute(tree_arg(sub_g), tree_arg(sub_h))) << '\n'; return kOk; };
    });

    std::string iter_h;
    int iter_i = 1;
    auto* gen_iter = gen->add_subcommand("iterate", "Iterated substitution H^(i)");
    gen_iter->add_option("tree", iter_h, "Tree")->required();
    gen_iter->add_option("i", iter_i, "Exponent")->required()->check(CLI::PositiveNumber);
    gen_iter->callback([&] { action = [&] { out << to_newick(iterate(tree_arg(iter_h), iter_i)) << '\n'; return kOk; }; });

    // copies
    std::string copies_host, copies_pattern;
    bool count_only = false;
    auto* copies = app.add_subcommand("copies", "List or count topological copies of a pattern");
    copies->add_option("host", copies_host, "Host tree")->required();
    copies->add_option("pattern", copies_pattern, "Pattern tree")->required();
    copies->add_flag("--count-only", count_only, "Print only the exact number of copies");
    copies->callback([&] {
        action = [&] {
            const PlaneTree t = tree_arg(copies_host);
            const PlaneTree p = tree_arg(copies_pattern);
            if (count_only) {
                out << count_copies(t, p).str() << '\n';
            } else {
                for (const CopyRef& s : enumerate_copies(t, p))
                    out << to_string(s) << '\n';
            }
            return kOk;
        };
    });

    // induce
    std::string induce_host, induce_leaves;
    auto* induce = app.add_subcommand("induce", "Subtree induced by a leaf set");
    induce->add_option("host", induce_host, "Host tree")->required();
    induce->add_option("leafset", induce_leaves, "Leaf set such as [0,1,3]")->required();
    induce->callback([&] {
        action = [&] {
            out << to_newick(induced_subtree(tree_arg(induce_host), parse_copy_ref(induce_leaves))) << '\n';
            return kOk;
        };
    });

    // encode / decode
    std::string encode_tree;
    auto* encode = app.add_subcommand("encode", "Rooted-triple structure of a tree as JSON");
    encode->add_option("tree", encode_tree, "Tree")->required();
    encode->callback([&] { action = [&] { out << to_json(structure_of(tree_arg(encode_tree))).dump() << '\n'; return kOk; }; });

    std::string decode_file;
    auto* decode = app.add_subcommand("decode", "Tree realizing a rooted-triple structure");
    decode->add_option("structure", decode_file, "Structure JSON file")->required();
    decode->callback([&] {
        action = [&] {
            out << to_newick(reconstruct(triple_structure_from_json(json_file(decode_file)))) << '\n';
            return kOk;
        };
    });

    // check-arrow / find-bad
    std::string arrow_t, arrow_h, arrow_p;
    int arrow_k = 2;
    bool no_timing = false;
    SearchFlags arrow_flags;
    auto add_arrow_args = [&](CLI::App* cmd) {
        cmd->add_option("host", arrow_t, "Host tree")->required();
        cmd->add_option("target", arrow_h, "Target tree")->required();
        cmd->add_option("pattern", arrow_p, "Pattern tree")->required();
        cmd->add_option("k", arrow_k, "Number of colors")->required()->check(CLI::PositiveNumber);
        arrow_flags.add_to(cmd);
    };
    auto run_arrow = [&] {
        const ArrowQuery q{tree_arg(arrow_t), tree_arg(arrow_h), tree_arg(arrow_p), arrow_k, arrow_flags.limits(),
                           arrow_flags.exec()};
        ArrowVerdict v = check_arrow(q);
        err << "verdict " << to_string(v.verdict) << " after " << v.nodes << " search nodes\n";
        return v;
    };

    auto* check = app.add_subcommand("check-arrow", "Decide T -> (H)^P_k");
    add_arrow_args(check);
    check->add_flag("--no-timing", no_timing, "Report millis as 0 for byte-identical output");
    check->callback([&] {
        action = [&] {
            const ArrowVerdict v = run_arrow();
            out << to_json(v, !no_timing).dump() << '\n';
            return v.verdict == Verdict::unknown ? kResource : kOk;
        };
    });

    auto* find_bad = app.add_subcommand("find-bad", "Print a coloring with no monochromatic H-copy, or none");
    add_arrow_args(find_bad);
    find_bad->callback([&] {
        action = [&] {
            const ArrowVerdict v = run_arrow();
            if (v.verdict == Verdict::unknown) {
                err << "budget exhausted before the search finished\n";
                return kResource;
            }
            if (v.witness)
                out << to_json(*v.witness).dump() << '\n';
            else
                out << "none\n";
            return kOk;
        };
    });

    // min-height
    std::string mh_h, mh_p;
    int mh_k = 2;
    int max_height = 6;
    SearchFlags mh_flags;
    auto* min_height = app.add_subcommand("min-height", "Smallest d with T(d) -> (H)^P_k");
    min_height->add_option("target", mh_h, "Target tree")->required();
    min_height->add_option("pattern", mh_p, "Pattern tree")->required();
    min_height->add_option("k", mh_k, "Number of colors")->required()->check(CLI::PositiveNumber);
    min_height->add_option("--max-height", max_height, "Largest height to scan")->check(CLI::NonNegativeNumber);
    mh_flags.add_to(min_height);
    min_height->callback([&] {
        action = [&] {
            const MinHeightResult r =
                min_arrow_height(tree_arg(mh_h), tree_arg(mh_p), mh_k, mh_flags.limits(), max_height, mh_flags.exec());
            Json scan = Json::array();
            for (const HeightScanStep& step : r.scan) {
                Json s;
                s["height"] = step.height;
                s["verdict"] = to_string(step.verdict.verdict);
                s["nodes"] = step.verdict.nodes;
                scan.push_back(std::move(s));
            }
            Json report;
            report["height"] = r.height ? Json(*r.height) : Json(nullptr);
            report["scan"] = std::move(scan);
            out << report.dump() << '\n';
            return r.height ? kOk : kResource;
        };
    });

    // extract-mono
    std::string em_h, em_coloring;
    int em_j = 1;
    auto* extract_mono = app.add_subcommand("extract-mono", "Monochromatic copy of H in H^(j) under a leaf coloring");
    extract_mono->add_option("target", em_h, "Tree")->required();
    extract_mono->add_option("j", em_j, "Iteration count, at least the number of colors used")
        ->required()
        ->check(CLI::PositiveNumber);
    extract_mono->add_option("coloring", em_coloring, "Coloring JSON file")->required();
    extract_mono->callback([&] {
        action = [&] {
            const Coloring chi = coloring_from_json(json_file(em_coloring));
            out << to_json(extract_mono_leafcolor(tree_arg(em_h), em_j, chi)).dump() << '\n';
            return kOk;
        };
    });

    // chain / extract-k
    std::string chain_h, chain_p;
    int chain_k = 2;
    int chain_max_height = 6;
    SearchFlags chain_flags;
    auto* chain = app.add_subcommand("chain", "Build and certify the k -> 2 color reduction chain");
    chain->add_option("target", chain_h, "Target tree")->required();
    chain->add_option("pattern", chain_p, "Pattern tree")->required();
    chain->add_option("k", chain_k, "Number of colors (>= 2)")->required()->check(CLI::Range(2, 64));
    chain->add_option("--max-height", chain_max_height, "Largest perfect tree height per link");
    chain_flags.add_to(chain);
    chain->callback([&] {
        action = [&] {
            const ReductionChain c = build_reduction_chain(tree_arg(chain_h), tree_arg(chain_p), chain_k,
                                                           chain_flags.limits(), chain_max_height, chain_flags.exec());
            out << to_json(c).dump() << '\n';
            return kOk;
        };
    });

    std::string ek_chain, ek_coloring;
    bool skip_certify = false;
    SearchFlags ek_flags;
    auto* extract_k = app.add_subcommand("extract-k", "Monochromatic base copy under a k-coloring of the chain top");
    extract_k->add_option("chain", ek_chain, "Chain JSON file")->required();
    extract_k->add_option("coloring", ek_coloring, "Coloring JSON file")->required();
    extract_k->add_flag("--no-certify", skip_certify, "Trust the chain without re-checking its links");
    ek_flags.add_to(extract_k);
    extract_k->callback([&] {
        action = [&] {
            const ReductionChain c = chain_from_json(json_file(ek_chain));
            if (!skip_certify)
                c.certify(ek_flags.limits(), ek_flags.exec());
            const Coloring chi = coloring_from_json(json_file(ek_coloring));
            out << to_json(extract_mono_k(c, chi)).dump() << '\n';
            return kOk;
        };
    });

    auto* selftest = app.add_subcommand("selftest", "Cross-check kernels against brute force on small instances");
    selftest->callback([&] {
        action = [&] { return run_selftest(err).ok() ? kOk : kDomain; };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kDomain;
    }

    struct LeafGuardRestore {
        std::size_t saved = max_leaves();
        ~LeafGuardRestore() { set_max_leaves(saved); }
    } restore;

    try {
        apply_environment();
        return action ? action() : kDomain;
    } catch (const ResourceError& e) {
        err << "resource limit: " << e.what() << '\n';
        return kResource;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kDomain;
    }
}

} // namespace ramsey::cli

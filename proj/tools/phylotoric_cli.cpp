// Command-line surface of the phylotoric pipeline: catalog listing, per-entry
// computation, database builds, and verification against reference tables.
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage error,
// 3 step budget exhausted.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "phylotoric/database.hpp"
#include "phylotoric/version.hpp"

using namespace phylotoric;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

std::optional<std::uint64_t> resolve_step_budget(std::uint64_t flag_value) {
    if (flag_value > 0) return flag_value;
    if (const char* env = std::getenv("PHYLOTORIC_STEP_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
        std::cerr << "warning: ignoring malformed PHYLOTORIC_STEP_BUDGET='" << env << "'\n";
    }
    return std::nullopt;
}

// catalog id, inline newick, or a path to a .nwk file (first line)
PhyloTree resolve_tree(const std::string& selector, int& tree_id_out) {
    tree_id_out = 0;
    if (!selector.empty() && selector.find_first_not_of("0123456789") == std::string::npos) {
        int id = std::stoi(selector);
        for (const auto& entry : catalog(5))
            if (entry.tree_id == id) {
                tree_id_out = id;
                return entry.shape;
            }
        throw DomainError("catalog has no tree with id " + selector);
    }
    std::string newick = selector;
    if (selector.find('(') == std::string::npos) {
        std::ifstream in(selector, std::ios::binary);
        if (!in) throw DomainError("cannot read tree file '" + selector + "'");
        std::getline(in, newick);
    }
    PhyloTree t = parse_newick(newick);
    tree_id_out = catalog_id_of(t);
    return t;
}

int run_list(std::ostream& out) {
    for (const auto& entry : catalog(5))
        out << entry.tree_id << "\t" << entry.shape.n_leaves() << "\t" << entry.newick << "\n";
    return kExitOk;
}

int run_compute(const std::string& tree_sel, const std::string& model_id,
                const std::string& out_dir, const PipelineOptions& options) {
    int tree_id = 0;
    PhyloTree tree = resolve_tree(tree_sel, tree_id);
    const GroupBasedModel& model = model_by_id(model_id);
    PipelineResult result = compute_entry(tree, model, options, tree_id);
    std::cout << result.record.to_yaml().emit();
    if (!out_dir.empty()) {
        auto files = emit_entry(result, out_dir);
        std::cerr << "wrote " << files.size() << " files to " << out_dir << "\n";
    }
    return kExitOk;
}

int run_build_db(int max_leaves, const std::string& models, const std::string& out_dir, int jobs,
                 const PipelineOptions& options) {
    std::vector<std::string> ids;
    if (models != "all") ids.push_back(models);
    BuildReport report = build_database(max_leaves, ids, out_dir, jobs, options);
    bool budget_hit = false;
    int failed = 0;
    for (const auto& e : report.entries) {
        if (e.status != "ok") {
            ++failed;
            if (e.error.find("budget") != std::string::npos) budget_hit = true;
            std::cerr << "entry " << e.tree_id << "-" << e.model_id << " failed: " << e.error
                      << "\n";
        }
    }
    std::cerr << "wrote " << (report.entries.size() - static_cast<std::size_t>(failed))
              << " entries and " << report.manifest_path << "\n";
    if (budget_hit) return kExitBudget;
    return failed > 0 ? kExitMismatch : kExitOk;
}

int run_verify(const std::string& db, const std::string& reference) {
    VerifyReport report = verify_reference(db, reference);
    std::cout << report.text();
    return report.any_mismatch ? kExitMismatch : kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{std::string(kToolName) +
                 " - algebraic invariants of group-based phylogenetic models"};
    app.require_subcommand(1);

    std::string tree_sel, model = "JC", models = "all", out_dir, db_dir, reference;
    int max_leaves = 4, jobs = 1;
    std::uint64_t step_budget = 0;

    CLI::App* list = app.add_subcommand("list", "print the tree catalog (id, leaves, newick)");

    CLI::App* compute =
        app.add_subcommand("compute", "compute invariants for one tree and model");
    compute->add_option("--tree", tree_sel, "catalog id, inline newick, or newick file")
        ->required();
    compute->add_option("--model", model, "one of CFN, JC, K2P, K3P");
    compute->add_option("--out", out_dir, "also write the entry files here");
    compute->add_option("--step-budget", step_budget,
                        "abort Groebner runs after this many steps");

    CLI::App* build = app.add_subcommand("build-db", "emit the catalog database");
    build->add_option("--max-leaves", max_leaves, "catalog size, 3..5")->required();
    build->add_option("--models", models, "a model id or 'all'");
    build->add_option("--out", out_dir, "output directory")->required();
    build->add_option("--jobs", jobs, "parallel workers");
    build->add_option("--step-budget", step_budget,
                      "abort Groebner runs after this many steps");

    CLI::App* verify = app.add_subcommand("verify", "compare a database to a reference table");
    verify->add_option("--db", db_dir, "database directory")->required();
    verify->add_option("--reference", reference, "reference table yaml")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e, std::cout, std::cerr);
        return kExitUsage;
    }

    PipelineOptions options;
    options.step_budget = resolve_step_budget(step_budget);

    try {
        if (list->parsed()) return run_list(std::cout);
        if (compute->parsed()) {
            if (model == "all") {
                std::cerr << "compute takes a single model id; see build-db for 'all'\n";
                return kExitUsage;
            }
            return run_compute(tree_sel, model, out_dir, options);
        }
        if (build->parsed()) return run_build_db(max_leaves, models, out_dir, jobs, options);
        if (verify->parsed()) return run_verify(db_dir, reference);
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMismatch;
    }
    return kExitUsage;
}

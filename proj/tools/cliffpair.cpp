#include "cliffpair/catalog.hpp"
#include "cliffpair/json_io.hpp"
#include "cliffpair/transgress.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <string>

using namespace cliffpair;

namespace {

struct RunConfig {
    std::string command;
    std::string pairId;
    std::string format = "text";
    int threads = 1;
    bool confirmLarge = false;
};

void print_dims(const SymmetricPair& pr) {
    std::cout << "pair " << pair_id(pr) << " ("
              << (pr.family() == PairFamily::AI ? "AI" : "AII") << ")\n"
              << "dims: g=" << pr.g().dim() << " k=" << pr.dim_k() << " p=" << pr.dim_p()
              << " t=" << pr.dim_t() << " a=" << pr.dim_a() << "\n"
              << "rank g=" << pr.rank_g() << " rank k=" << pr.rank_k()
              << " positive systems=" << pr.pos_systems().size()
              << " group generators=" << pr.group_generators().size() << "\n";
}

int run_info(const RunConfig& cfg, const SymmetricPair& pr) {
    if (cfg.format == "json")
        std::cout << info_json(pr);
    else
        print_dims(pr);
    return 0;
}

int run_primitives(const RunConfig& cfg, const SymmetricPair& pr) {
    PairContext ctx(pr);
    std::vector<Multivector> prims = primitives_p(ctx);
    if (cfg.format == "json") {
        std::cout << primitives_json(ctx, prims);
    } else {
        std::cout << "pair " << pair_id(pr) << ": " << prims.size() << " primitive(s)\n";
        for (const Multivector& p : prims)
            std::cout << "degree " << p.degree() << " (" << p.term_count() << " term"
                      << (p.term_count() == 1 ? "" : "s") << "): " << p.str() << "\n";
    }
    return 0;
}

int run_invariants(const RunConfig& cfg, const SymmetricPair& pr) {
    PairContext ctx(pr);
    InvariantBasis inv = invariants_cl(ctx, InvariantFlavor::CL_K_GROUP);
    if (cfg.format == "json") {
        std::cout << invariants_json(ctx, inv);
    } else {
        std::cout << "pair " << pair_id(pr) << ": dim Cl(p)^K = " << inv.elements.size()
                  << "\ngraded dims:";
        for (size_t d : inv.gradedDims) std::cout << " " << d;
        std::cout << "\n";
    }
    return 0;
}

int run_hc(const RunConfig& cfg, const SymmetricPair& pr) {
    PairContext ctx(pr);
    if (cfg.format == "json") {
        std::cout << hc_json(ctx);
        return 0;
    }
    std::vector<Multivector> prims = primitives_p(ctx);
    for (size_t w = 0; w < pr.pos_systems().size(); ++w) {
        HCMap hc = build_hc(ctx, w);
        std::cout << "positive system " << w << ", weight shift:";
        for (const Scalar& c : pr.half_weight_sum(w)) std::cout << " " << c.str();
        std::cout << "\n";
        for (const Multivector& p : prims) {
            bool exact = false;
            Multivector img = hc.apply(p, &exact);
            std::cout << "  primitive degree " << p.degree() << " -> " << img.str()
                      << (exact ? "" : " (inexact)") << "\n";
        }
    }
    return 0;
}

int run_verify_main(const RunConfig& cfg, const SymmetricPair& pr) {
    PairContext ctx(pr);
    MainTheoremReport rep = verify_main_theorem(ctx);
    if (cfg.format == "json") {
        std::cout << main_theorem_json(rep);
    } else {
        std::cout << "pair " << rep.pair_id << "\n"
                  << "(a) primitive products span Cl(p)^K:   " << (rep.a_pass ? "pass" : "FAIL") << "\n"
                  << "(b) products times projections span Cl(p)^k: " << (rep.b_pass ? "pass" : "FAIL") << "\n"
                  << "(c) coinvariant dimension at rho:      " << (rep.c_pass ? "pass" : "FAIL") << "\n"
                  << "(d) graded dimensions factorize:       " << (rep.d_pass ? "pass" : "FAIL") << "\n";
        for (const std::string& n : rep.notes) std::cout << "note: " << n << "\n";
    }
    return rep.all_pass() ? 0 : 1;
}

int run_verify_kostant(const RunConfig& cfg, const SymmetricPair& pr) {
    PairContext ctx(pr);
    FiltrationReport rep = verify_kostant(ctx);
    if (cfg.format == "json") {
        std::cout << filtration_json(rep);
    } else {
        std::cout << "pair " << pair_id(pr) << ", filtrations on a\n" << "kernel jumps:";
        for (const auto& [m, d] : rep.jumpsScriptF) std::cout << " (" << m << "," << d << ")";
        std::cout << "\nprojection jumps:";
        for (const auto& [m, d] : rep.jumpsF) std::cout << " (" << m << "," << d << ")";
        std::cout << "\nfiltrations " << (rep.equal ? "coincide" : "DIFFER") << "\n";
    }
    return rep.equal ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    if (const char* env = std::getenv("CLIFFPAIR_THREADS")) cfg.threads = std::atoi(env);

    CLI::App app{"exact Clifford-algebra invariants of classical symmetric pairs"};
    app.require_subcommand(1);
    std::vector<CLI::App*> subs;
    for (const char* name : {"info", "primitives", "invariants", "hc", "verify-main",
                             "verify-kostant", "verify-all"}) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("--pair", cfg.pairId, "catalog pair id")->required();
        sub->add_option("--format", cfg.format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--threads", cfg.threads, "worker threads")->check(CLI::PositiveNumber);
        sub->add_flag("--confirm-large", cfg.confirmLarge, "allow long-running catalog pairs");
        subs.push_back(sub);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    cfg.command = app.get_subcommands().front()->get_name();
    if (cfg.threads < 1) {
        std::cerr << "CLIFFPAIR_THREADS must be a positive integer\n";
        return 2;
    }

    const CatalogEntry* entry = find_pair(cfg.pairId);
    if (!entry) {
        std::cerr << "unknown pair '" << cfg.pairId << "'; catalog:";
        for (const CatalogEntry& e : catalog()) std::cerr << " " << e.id;
        std::cerr << "\n" << app.help();
        return 2;
    }
    if (entry->stretch && cfg.command != "info" && !cfg.confirmLarge) {
        std::cerr << "pair '" << cfg.pairId
                  << "' runs for a long time; pass --confirm-large to proceed\n";
        return 2;
    }

    SymmetricPair pr = build_catalog_pair(cfg.pairId);
    if (cfg.command == "info") return run_info(cfg, pr);
    if (cfg.command == "primitives") return run_primitives(cfg, pr);
    if (cfg.command == "invariants") return run_invariants(cfg, pr);
    if (cfg.command == "hc") return run_hc(cfg, pr);
    if (cfg.command == "verify-main") return run_verify_main(cfg, pr);
    if (cfg.command == "verify-kostant") return run_verify_kostant(cfg, pr);
    int rc = run_verify_main(cfg, pr);
    return run_verify_kostant(cfg, pr) || rc ? 1 : 0;
}

#include <cstdint>
#include <iostream>
#include <optional>
#include <thread>

#include <CLI11.hpp>

#include "starpht/generators.hpp"
#include "starpht/io.hpp"
#include "starpht/monodromy.hpp"

namespace {

using namespace starpht;

constexpr int kExitOk = 0;
constexpr int kExitPredicate = 1;
constexpr int kExitError = 2;

struct Shared {
    double tol = 1e-9;
    int refine = 0;
    std::uint64_t seed = 0;
    int jobs = static_cast<int>(std::thread::hardware_concurrency());
};

void add_shared(CLI::App* cmd, Shared& sh) {
    cmd->add_option("--tol", sh.tol, "numeric tolerance");
    cmd->add_option("--refine", sh.refine, "extra samples per arc");
    cmd->add_option("--seed", sh.seed, "RNG seed");
    cmd->add_option("--jobs", sh.jobs, "parallel fan-out over angles");
}

int cmd_check(const std::string& shape_path, const Shared& sh, bool require_gp,
              bool require_simple, bool require_star) {
    const Polygon p = read_polygon(shape_path);
    const KernelPolygon ker = kernel(p);
    const bool star = !ker.empty();
    auto [gp, gp_witness] = is_general_position(p);
    const DirectionPlan plan = plan_directions(p, sh.refine);
    auto [simple, simple_witness] = is_simple_dgm0(p, plan, sh.tol);

    std::cout << "{\n  \"star_shaped\": " << (star ? "true" : "false") << ",\n";
    if (star) {
        const Point c = choose_center(ker);
        std::cout << "  \"center\": [" << c.x << ", " << c.y << "],\n";
        std::cout << "  \"kernel_vertices\": " << ker.vertices.size() << ",\n";
    }
    std::cout << "  \"general_position\": " << (gp ? "true" : "false");
    if (!gp && gp_witness)
        std::cout << ",\n  \"parallel_witness\": [[" << gp_witness->pair_a.first << ", "
                  << gp_witness->pair_a.second << "], [" << gp_witness->pair_b.first << ", "
                  << gp_witness->pair_b.second << "]]";
    std::cout << ",\n  \"simple_dgm0\": " << (simple ? "true" : "false");
    if (!simple && simple_witness)
        std::cout << ",\n  \"simplicity_witness\": {\"angle\": " << simple_witness->angle
                  << ", \"birth\": " << simple_witness->point.birth
                  << ", \"death\": " << simple_witness->point.death << "}";
    std::cout << "\n}\n";

    if (require_star && !star) return kExitPredicate;
    if (require_gp && !gp) return kExitPredicate;
    if (require_simple && !simple) return kExitPredicate;
    return kExitOk;
}

int cmd_pht(const std::string& shape_path, const Shared& sh, const std::string& out_path,
            const std::string& svg_path, bool use_center) {
    const Polygon p = read_polygon(shape_path);
    const DirectionPlan plan = plan_directions(p, sh.refine);
    std::optional<Point> center;
    if (use_center) center = choose_center(kernel(p));
    const PHTSample s = pht(p, plan, center, sh.jobs);
    if (!out_path.empty()) write_text(pht_json(s), out_path);
    else std::cout << pht_json(s);
    if (!svg_path.empty()) {
        std::vector<Section> sections;
        try {
            sections = build_sections(p, plan).sections;
        } catch (const NotSimple&) {
            // shape panel only; no vines when the bundle is not simple
        }
        write_text(pht_svg(p, center, sections, plan), svg_path);
    }
    return kExitOk;
}

int cmd_decompose(const std::string& shape_path, const Shared& sh, const std::string& out_path) {
    const Polygon p = read_polygon(shape_path);
    const KernelPolygon ker = kernel(p);
    if (ker.empty()) throw EmptyKernel{};
    const Point c = choose_center(ker);
    const DirectionPlan plan = plan_directions(p, sh.refine);
    const DecompositionReport report = decompose_check(p, c, plan, sh.tol);
    if (!out_path.empty()) write_text(decomposition_json(report), out_path);
    else std::cout << decomposition_json(report);
    if (!report.verdict) {
        std::cerr << "non-sectorial at tolerance " << sh.tol << " (max gap " << report.max_gap
                  << "); this should not happen in the plane and indicates a bug\n";
        return kExitPredicate;
    }
    return kExitOk;
}

int cmd_monodromy(const std::string& shape_path, const Shared& sh, const std::string& out_path,
                  const std::string& verdict_path) {
    const Polygon p = read_polygon(shape_path);
    const DirectionPlan plan = plan_directions(p, sh.refine);
    MonodromyVerdict verdict;
    try {
        verdict = monodromy(p, plan, sh.tol);
    } catch (const NotSimple& e) {
        std::cerr << "diagram bundle is not simple: multiplicity at angle " << e.witness.angle
                  << ", point (" << e.witness.point.birth << ", " << e.witness.point.death
                  << ")\n";
        return kExitPredicate;
    }
    if (!out_path.empty())
        write_text(vines_csv(export_vines(verdict.sections, p, plan)), out_path);
    if (!verdict_path.empty()) write_text(verdict_json(verdict), verdict_path);
    else std::cout << verdict_json(verdict);
    return kExitOk;
}

int cmd_generate(const std::string& kind, int n, double turns, const Shared& sh,
                 const std::string& out_path) {
    Polygon p;
    if (kind == "regular_ngon") p = regular_ngon(n);
    else if (kind == "random_star") p = random_star(n, sh.seed);
    else if (kind == "spiral") p = spiral(turns, n);
    else if (kind == "convex") p = random_convex(n, sh.seed);
    else throw IoError("unknown generator kind: " + kind);
    if (!out_path.empty()) write_polygon(p, out_path);
    else std::cout << polygon_json(p);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"degree-0 persistent homology transform for planar polygons"};
    app.require_subcommand(1);

    std::string shape_path, out_path, svg_path, verdict_path, kind;
    bool require_gp = false, require_simple = false, require_star = false, use_center = false;
    int gen_n = 12;
    double gen_turns = 1.5;
    Shared sh;

    CLI::App* check = app.add_subcommand("check", "validate a shape and report its predicates");
    check->add_option("shape", shape_path)->required();
    check->add_flag("--require-general-position", require_gp);
    check->add_flag("--require-simple", require_simple);
    check->add_flag("--require-star", require_star);
    add_shared(check, sh);

    CLI::App* phtc = app.add_subcommand("pht", "sample the persistent homology transform");
    phtc->add_option("shape", shape_path)->required();
    phtc->add_option("--out", out_path);
    phtc->add_option("--svg", svg_path);
    phtc->add_flag("--center", use_center, "use the boundary-sweep fast path via a center");
    add_shared(phtc, sh);

    CLI::App* dec = app.add_subcommand("decompose", "verify the sector decomposition identity");
    dec->add_option("shape", shape_path)->required();
    dec->add_option("--out", out_path);
    add_shared(dec, sh);

    CLI::App* mon = app.add_subcommand("monodromy", "decide geometric monodromy");
    mon->add_option("shape", shape_path)->required();
    mon->add_option("--out", out_path, "vines CSV path");
    mon->add_option("--verdict", verdict_path, "verdict JSON path");
    add_shared(mon, sh);

    CLI::App* gen = app.add_subcommand("generate", "emit a corpus shape");
    gen->add_option("kind", kind, "regular_ngon | random_star | spiral | convex")->required();
    gen->add_option("--n", gen_n, "vertex count (or n for regular_ngon)");
    gen->add_option("--turns", gen_turns, "spiral revolutions");
    gen->add_option("--out", out_path);
    add_shared(gen, sh);

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed())
            return cmd_check(shape_path, sh, require_gp, require_simple, require_star);
        if (phtc->parsed()) return cmd_pht(shape_path, sh, out_path, svg_path, use_center);
        if (dec->parsed()) return cmd_decompose(shape_path, sh, out_path);
        if (mon->parsed()) return cmd_monodromy(shape_path, sh, out_path, verdict_path);
        if (gen->parsed()) return cmd_generate(kind, gen_n, gen_turns, sh, out_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}

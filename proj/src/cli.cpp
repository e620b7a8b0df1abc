#include "aqn/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "aqn/acceptance.hpp"
#include "aqn/cache.hpp"
#include "aqn/census.hpp"
#include "aqn/connectivity.hpp"
#include "aqn/cuts.hpp"
#include "aqn/io.hpp"
#include "aqn/report.hpp"

namespace aqn {

namespace {

constexpr const char* kCacheEnvVar = "AQCUBE_CACHE_DIR";

struct CommonOpts {
    int n = 0;
    int extra = 0;
    std::string kind = "vertex";
    std::string method = "flow";
    std::string format;
    std::string output;
    double timeout = 300.0;
    std::string cache_dir;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool needs_n = true) {
    auto* n = cmd->add_option("-n,--dim", o.n, "dimension of the augmented cube");
    if (needs_n) n->required();
    cmd->add_option("-o,--output", o.output, "write output to this path instead of stdout");
    cmd->add_option("--timeout", o.timeout, "per-call time budget in seconds");
    cmd->add_option("--cache-dir", o.cache_dir, "directory for cached reports")
        ->envname(kCacheEnvVar);
}

void write_text(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::trunc);
    if (!file) throw std::runtime_error("cannot open output file: " + path);
    file << text;
}

int finish_report(Report report, const CommonOpts& opts, const std::string& cache_key,
                  std::ostream& out) {
    if (!opts.cache_dir.empty()) ResultCache(opts.cache_dir).store(cache_key, report);
    const auto format =
        opts.format.empty() ? ReportFormat::structured : parse_report_format(opts.format);
    write_text(emit_report(report, format), opts.output, out);
    return report.pass() ? 0 : 1;
}

// Serves a cached report when one exists; otherwise computes, stores, emits.
template <typename Compute>
int with_cache(const std::string& check, const CommonOpts& opts, const nlohmann::json& params,
               std::ostream& out, Compute&& compute) {
    const std::string key = ResultCache::key_for(check, opts.n, params);
    if (!opts.cache_dir.empty()) {
        if (auto cached = ResultCache(opts.cache_dir).lookup(key)) {
            const auto format =
                opts.format.empty() ? ReportFormat::structured : parse_report_format(opts.format);
            write_text(emit_report(*cached, format), opts.output, out);
            return cached->pass() ? 0 : 1;
        }
    }
    return finish_report(compute(), opts, key, out);
}

int cmd_gen(const CommonOpts& opts, std::ostream& out) {
    const auto g = AugCube::build(Dimension(opts.n));
    const auto format =
        opts.format.empty() ? GraphFormat::edgelist : parse_graph_format(opts.format);
    write_text(export_graph(g, format), opts.output, out);
    return 0;
}

int cmd_conn(const CommonOpts& opts, std::ostream& out) {
    const Dimension d(opts.n);
    const ConnKind kind = parse_conn_kind(opts.kind);
    const Method method = parse_method(opts.method);
    const SearchLimits limits{opts.timeout, 0};

    nlohmann::json params{{"n", opts.n},
                          {"kind", opts.kind},
                          {"method", opts.method},
                          {"extra", opts.extra}};
    return with_cache("connectivity", opts, params, out, [&] {
        const auto g = AugCube::build(d);
        ConnectivityResult res;
        switch (method) {
            case Method::flow:
                if (opts.extra != 0)
                    throw std::invalid_argument(
                        "the flow method computes classical (h=0) connectivity; use "
                        "--method exhaustive or fragment for h > 0");
                res = kind == ConnKind::vertex ? vertex_connectivity(g, limits)
                                               : edge_connectivity(g, limits);
                break;
            case Method::exhaustive:
                res = extra_conn_exhaustive(g, opts.extra, kind, limits);
                break;
            case Method::fragment:
                if (kind != ConnKind::edge)
                    throw std::invalid_argument("the fragment method is edge-kind only");
                res = extra_conn_fragment(g, opts.extra, 0, limits);
                break;
        }
        return make_report(res, opts.n, g.num_vertices(), g.num_edges(), params);
    });
}

int cmd_census(const CommonOpts& opts, const std::string& target, std::ostream& out) {
    if (target != "path2") throw std::invalid_argument("unknown census target: " + target);
    nlohmann::json params{{"n", opts.n}, {"target", target}};
    return with_cache("path2-census", opts, params, out, [&] {
        return make_report(census_path2(AugCube::build(Dimension(opts.n))), params);
    });
}

int cmd_verify(const CommonOpts& opts, const std::string& target, std::ostream& out) {
    nlohmann::json params{{"n", opts.n}, {"target", target}};
    return with_cache("verify-" + target, opts, params, out, [&] {
        const auto g = AugCube::build(Dimension(opts.n));
        if (target == "edge-neighbors") return make_report(verify_edge_common_neighbors(g), params);
        if (target == "pair-neighbors") return make_report(verify_pair_common_neighbors(g), params);
        if (target == "quad-bound") return make_report(verify_quad_bound(g), params);
        throw std::invalid_argument("unknown verify target: " + target);
    });
}

struct CutOpts {
    std::uint32_t base = 0;
    int dim_index = 2;
    std::string edge_type = "complement";
};

int cmd_cut(const CommonOpts& opts, const CutOpts& cut_opts, const std::string& family,
            std::ostream& out) {
    const Dimension d(opts.n);
    nlohmann::json params{{"n", opts.n},
                          {"family", family},
                          {"base", cut_opts.base},
                          {"extra", opts.extra}};
    if (family == "kappa2" || family == "super-vertex" || family == "super-edge")
        params["i"] = cut_opts.dim_index;
    if (family == "super-edge") params["edge_type"] = cut_opts.edge_type;

    return with_cache("cut-" + family, opts, params, out, [&] {
        const auto g = AugCube::build(d);
        if (family == "kappa2") {
            const auto cut = kappa2_candidate_cut(d, cut_opts.base, cut_opts.dim_index);
            auto report = make_report(validate_cut(g, cut.members), "cut-kappa2", opts.n,
                                      opts.extra, params);
            report.result["path"] = {cut.path.y, cut.path.center, cut.path.z};
            return report;
        }
        if (family == "lambda2") {
            const auto cut = lambda2_candidate_cut(d, cut_opts.base);
            auto report = make_report(validate_cut(g, cut.members), "cut-lambda2", opts.n,
                                      opts.extra, params);
            report.result["triangle"] = cut.triangle;
            return report;
        }
        if (family == "super-vertex") {
            const auto members = super_vertex_cut(d, cut_opts.base, cut_opts.dim_index);
            return make_report(validate_cut(g, members), "cut-super-vertex", opts.n, opts.extra,
                               params);
        }
        if (family == "super-edge") {
            const EdgeKind kind = cut_opts.edge_type == "hypercube"
                                      ? EdgeKind::hypercube(cut_opts.dim_index)
                                      : EdgeKind::complement(cut_opts.dim_index);
            const auto members = super_edge_cut(d, cut_opts.base, kind);
            return make_report(validate_cut(g, members), "cut-super-edge", opts.n, opts.extra,
                               params);
        }
        throw std::invalid_argument("unknown cut family: " + family);
    });
}

int cmd_all(const std::string& output, std::ostream& out) {
    const auto results = run_acceptance(&out);
    nlohmann::json index;
    index["schema_version"] = Report::kSchemaVersion;
    bool all_pass = true;
    nlohmann::json items = nlohmann::json::array();
    for (const auto& r : results) {
        items.push_back({{"id", r.id},
                         {"name", r.name},
                         {"pass", r.pass},
                         {"detail", r.detail},
                         {"runtime_ms", r.runtime_ms}});
        all_pass &= r.pass;
    }
    index["criteria"] = std::move(items);
    index["pass"] = all_pass;
    write_text(index.dump(2) + "\n", output, out);
    return all_pass ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"augmented-cube construction, neighborhood censuses, and h-extra "
                 "connectivity engines"};
    app.require_subcommand(0, 1);

    bool all = false;
    std::string all_output;
    app.add_flag("--all", all, "run the full acceptance checklist and write an index document");
    app.add_option("-o,--output", all_output,
                   "index output path (with --all)");

    CommonOpts gen_opts;
    auto* gen = app.add_subcommand("gen", "emit AQ_n in edgelist or dimacs format");
    add_common(gen, gen_opts);
    gen->add_option("--format", gen_opts.format, "edgelist|dimacs")
        ->default_val("edgelist");

    CommonOpts conn_opts;
    auto* conn = app.add_subcommand("conn", "compute classical or h-extra connectivity");
    add_common(conn, conn_opts);
    conn->add_option("--kind", conn_opts.kind, "vertex|edge")->default_val("vertex");
    conn->add_option("--extra", conn_opts.extra, "h-extra level (default 0)");
    conn->add_option("--method", conn_opts.method, "flow|exhaustive|fragment")
        ->default_val("flow");
    conn->add_option("--format", conn_opts.format, "structured|table");

    CommonOpts census_opts;
    std::string census_target;
    auto* census = app.add_subcommand("census", "exhaustive 2-path neighborhood census");
    census->add_option("target", census_target, "path2")->required();
    add_common(census, census_opts);
    census->add_option("--format", census_opts.format, "structured|table");

    CommonOpts verify_opts;
    std::string verify_target;
    auto* verify = app.add_subcommand("verify", "exhaustive common-neighbor verifiers");
    verify->add_option("target", verify_target, "edge-neighbors|pair-neighbors|quad-bound")
        ->required();
    add_common(verify, verify_opts);
    verify->add_option("--format", verify_opts.format, "structured|table");

    CommonOpts cut_common;
    CutOpts cut_opts;
    std::string cut_family;
    auto* cut = app.add_subcommand("cut", "construct and certify an optimal cut family");
    cut->add_option("family", cut_family, "kappa2|lambda2|super-vertex|super-edge")->required();
    add_common(cut, cut_common);
    cut->add_option("--base", cut_opts.base, "base vertex label (default 0)");
    cut->add_option("--index", cut_opts.dim_index, "dimension index parameter (default 2)");
    cut->add_option("--edge-type", cut_opts.edge_type, "hypercube|complement (super-edge)");
    cut->add_option("--extra", cut_common.extra, "h level to certify against (default 2)")
        ->default_val(2);
    cut->add_option("--format", cut_common.format, "structured|table");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return 2;
    }

    try {
        if (all) return cmd_all(all_output, out);
        if (gen->parsed()) return cmd_gen(gen_opts, out);
        if (conn->parsed()) return cmd_conn(conn_opts, out);
        if (census->parsed()) return cmd_census(census_opts, census_target, out);
        if (verify->parsed()) return cmd_verify(verify_opts, verify_target, out);
        if (cut->parsed()) return cmd_cut(cut_common, cut_opts, cut_family, out);
        err << app.help();
        return 2;
    } catch (const CapacityError& e) {
        err << "capacity error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace aqn

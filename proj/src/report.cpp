#include "aqn/report.hpp"

#include <iomanip>
#include <sstream>

namespace aqn {

using nlohmann::json;

ReportFormat parse_report_format(std::string_view name) {
    if (name == "structured") return ReportFormat::structured;
    if (name == "table") return ReportFormat::table;
    throw std::invalid_argument("unknown report format: " + std::string(name));
}

json Report::to_json() const {
    json j;
    j["schema_version"] = schema_version;
    j["graph"] = {{"n", n}, {"vertices", vertices}, {"edges", edges}};
    j["check"] = {{"name", check}, {"params", params}};
    j["result"] = result;
    j["violations"] = violations;
    j["runtime_ms"] = runtime_ms;
    j["method"] = method;
    return j;
}

namespace {

const json& require_field(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end())
        throw ParseError("report is missing field '" + std::string(key) + "'", 1);
    return *it;
}

}  // namespace

Report Report::from_json(const json& j) {
    Report r;
    r.schema_version = require_field(j, "schema_version").get<int>();
    if (r.schema_version != kSchemaVersion)
        throw ParseError("unsupported schema_version " + std::to_string(r.schema_version) +
                             " in field 'schema_version'",
                         1);
    const json& graph = require_field(j, "graph");
    r.n = require_field(graph, "n").get<int>();
    r.vertices = require_field(graph, "vertices").get<std::uint64_t>();
    r.edges = require_field(graph, "edges").get<std::uint64_t>();
    const json& check = require_field(j, "check");
    r.check = require_field(check, "name").get<std::string>();
    r.params = require_field(check, "params");
    r.result = require_field(j, "result");
    r.violations = require_field(j, "violations");
    r.runtime_ms = require_field(j, "runtime_ms").get<double>();
    r.method = require_field(j, "method").get<std::string>();
    return r;
}

std::string Report::digest() const {
    json j = to_json();
    j.erase("runtime_ms");
    const std::string canon = j.dump();
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : canon) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    std::ostringstream out;
    out << std::hex << std::setw(16) << std::setfill('0') << h;
    return out.str();
}

namespace {

std::string render_table(const Report& r) {
    std::ostringstream out;
    out << "check    : " << r.check << "\n";
    out << "graph    : n=" << r.n << " vertices=" << r.vertices << " edges=" << r.edges << "\n";
    out << "method   : " << r.method << "\n";
    if (!r.params.empty()) out << "params   : " << r.params.dump() << "\n";
    out << "result   :\n";
    for (auto it = r.result.begin(); it != r.result.end(); ++it) {
        if (it.key() == "classes" || it.key() == "histogram") continue;
        out << "  " << std::left << std::setw(22) << it.key() << " " << it->dump() << "\n";
    }
    if (r.result.contains("classes")) {
        out << "classes  :\n";
        const json& classes = r.result["classes"];
        for (auto it = classes.begin(); it != classes.end(); ++it) {
            const json& c = *it;
            out << "  " << std::left << std::setw(42) << it.key() << " count="
                << std::setw(9) << c["count"].get<std::uint64_t>()
                << " size=" << c["expected"].get<int>();
            if (c["observed_min"] != c["expected"] || c["observed_max"] != c["expected"])
                out << " observed=[" << c["observed_min"].get<int>() << ","
                    << c["observed_max"].get<int>() << "]";
            out << "\n";
        }
    }
    if (r.result.contains("histogram")) {
        out << "histogram:\n";
        const json& hist = r.result["histogram"];
        for (auto it = hist.begin(); it != hist.end(); ++it)
            out << "  " << std::setw(6) << it.key() << " x " << it->get<std::uint64_t>() << "\n";
    }
    out << "pass     : " << (r.pass() ? "yes" : "no") << "\n";
    if (!r.violations.empty()) {
        out << "violations (" << r.violations.size() << "):\n";
        std::size_t shown = 0;
        for (const json& v : r.violations) {
            if (++shown > 20) {
                out << "  ... " << r.violations.size() - 20 << " more\n";
                break;
            }
            out << "  " << v.dump() << "\n";
        }
    }
    out << "runtime  : " << std::fixed << std::setprecision(1) << r.runtime_ms << " ms\n";
    return out.str();
}

}  // namespace

std::string emit_report(const Report& report, ReportFormat format) {
    if (format == ReportFormat::structured) return report.to_json().dump(2) + "\n";
    return render_table(report);
}

Report load_report(std::string_view bytes) {
    json j = json::parse(bytes, nullptr, false);
    if (j.is_discarded()) throw ParseError("report is not valid structured text", 1);
    return Report::from_json(j);
}

namespace {

json violations_to_json(const std::vector<Violation>& violations) {
    json arr = json::array();
    for (const Violation& v : violations) {
        arr.push_back({{"witness", v.witness},
                       {"what", v.what},
                       {"observed", v.observed},
                       {"expected", v.expected}});
    }
    return arr;
}

}  // namespace

Report make_report(const CensusReport& census, const json& params) {
    Report r;
    r.check = census.check;
    r.n = census.n;
    Dimension d(census.n);
    r.vertices = d.vertex_count();
    r.edges = d.edge_count();
    r.method = "exhaustive";
    r.params = params;
    r.runtime_ms = census.elapsed_ms;
    r.violations = violations_to_json(census.violations);

    json result;
    result["pass"] = census.pass();
    result["instances"] = census.instances;
    if (census.observed_min) result["observed_min"] = *census.observed_min;
    if (census.observed_max) result["observed_max"] = *census.observed_max;
    if (census.subfamily_min) result["subfamily_min"] = *census.subfamily_min;
    if (!census.classes.empty()) {
        json classes = json::object();
        for (const auto& [key, stat] : census.classes)
            classes[key] = {{"count", stat.count},
                            {"expected", stat.expected},
                            {"observed_min", stat.observed_min},
                            {"observed_max", stat.observed_max}};
        result["classes"] = std::move(classes);
    }
    if (!census.histogram.empty()) {
        json hist = json::object();
        for (const auto& [value, count] : census.histogram)
            hist[std::to_string(value)] = count;
        result["histogram"] = std::move(hist);
    }
    r.result = std::move(result);
    return r;
}

Report make_report(const ConnectivityResult& res, int n, std::uint64_t vertices,
                   std::uint64_t edges, const json& params) {
    Report r;
    r.check = "connectivity";
    r.n = n;
    r.vertices = vertices;
    r.edges = edges;
    r.method = method_name(res.method);
    r.params = params;
    r.runtime_ms = res.elapsed_ms;

    json result;
    result["kind"] = conn_kind_name(res.kind);
    if (res.value)
        result["value"] = *res.value;
    else
        result["value"] = nullptr;
    result["exact"] = res.exact;
    if (res.complete_graph) result["complete_graph_convention"] = true;
    if (!res.vertex_cut.empty()) result["cut"] = res.vertex_cut;
    if (!res.edge_cut.empty()) {
        json cut = json::array();
        for (auto [u, v] : res.edge_cut) cut.push_back({u, v});
        result["cut"] = std::move(cut);
    }
    result["nodes_explored"] = res.nodes_explored;
    r.result = std::move(result);
    return r;
}

Report make_report(const CutCertificate& cert, const std::string& check, int n, int h,
                   const json& params) {
    Report r;
    r.check = check;
    r.n = n;
    Dimension d(n);
    r.vertices = d.vertex_count();
    r.edges = d.edge_count();
    r.method = "construction";
    r.params = params;

    json result;
    result["kind"] = conn_kind_name(cert.kind);
    result["size"] = cert.size();
    if (cert.kind == ConnKind::vertex) {
        result["members"] = cert.vertex_members;
    } else {
        json members = json::array();
        for (auto [u, v] : cert.edge_members) members.push_back({u, v});
        result["members"] = std::move(members);
    }
    result["component_sizes"] = cert.component_sizes;
    result["disconnected"] = cert.disconnected;
    result["min_component"] = cert.min_component;
    result["h"] = h;
    result["h_extra_valid"] = cert.h_extra_valid(h);
    r.result = std::move(result);
    if (!cert.h_extra_valid(h))
        r.violations.push_back({{"what", "constructed cut fails the h-extra condition"},
                                {"observed", cert.min_component},
                                {"expected", h + 1}});
    return r;
}

}  // namespace aqn

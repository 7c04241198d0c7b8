#include "ktdom/cli.hpp"

#include "ktdom/atlas.hpp"
#include "ktdom/classic_bounds.hpp"
#include "ktdom/domination.hpp"
#include "ktdom/errors.hpp"
#include "ktdom/exact.hpp"
#include "ktdom/generators.hpp"
#include "ktdom/io.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace ktdom::cli {

namespace {

using Json = nlohmann::ordered_json;

struct InputGraph {
    std::size_t index = 0;
    std::string graph6;
    std::optional<Graph> graph;
    std::string error; // set iff !graph
};

struct Options {
    std::string input = "-";
    std::string format_in; // graph6 | dimacs, empty = sniff
    std::string format;    // text | json | csv, empty = by terminal
    std::string variant;
    std::size_t k = 0;
    std::uint64_t budget = kDefaultNodeBudget;
    std::string set;
    // gen
    std::size_t n = 0, r = 0, count = 1;
    std::uint64_t seed = 1;
    std::vector<std::string> atlas;
    std::string out_path, meta_path;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

bool is_dimacs_path(const std::string& path)
{
    for (const char* ext : {".dimacs", ".col", ".dim", ".edges"})
        if (path.ends_with(ext))
            return true;
    return false;
}

std::string read_all(std::istream& in)
{
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<InputGraph> load_inputs(const Options& opt, Streams& io)
{
    std::string text;
    if (opt.input == "-") {
        text = read_all(io.in);
    } else {
        std::ifstream file(opt.input, std::ios::binary);
        if (!file)
            throw UsageError("cannot open input file '" + opt.input + "'");
        text = read_all(file);
    }

    std::string format = opt.format_in;
    if (format.empty())
        format = is_dimacs_path(opt.input) ? "dimacs" : "graph6";

    std::vector<InputGraph> out;
    if (format == "dimacs") {
        InputGraph item;
        try {
            item.graph = io::parse_dimacs(text);
            item.graph6 = io::write_graph6(*item.graph);
        } catch (const ParseError& e) {
            throw UsageError(std::string("DIMACS parse error: ") + e.what());
        } catch (const InputError& e) {
            throw UsageError(std::string("DIMACS parse error: ") + e.what());
        }
        out.push_back(std::move(item));
        return out;
    }
    std::size_t index = 0;
    for (auto& record : io::graph6_records(text)) {
        InputGraph item;
        item.index = index++;
        item.graph6 = record;
        try {
            item.graph = io::parse_graph6(record);
        } catch (const ParseError& e) {
            item.error = std::string("graph6 parse error: ") + e.what() + " (offset "
                         + std::to_string(e.position()) + ")";
        }
        out.push_back(std::move(item));
    }
    return out;
}

std::string resolve_format(const Options& opt, const Streams& io)
{
    if (!opt.format.empty())
        return opt.format;
    return io.out_is_terminal ? "text" : "json";
}

std::string cell(const Json& v)
{
    if (v.is_null())
        return "n/a";
    if (v.is_string())
        return v.get<std::string>();
    if (v.is_array()) {
        std::string s;
        for (const auto& x : v) {
            if (!s.empty())
                s += ' ';
            s += cell(x);
        }
        return s;
    }
    if (v.is_number_float()) {
        std::ostringstream os;
        os << std::fixed << std::setprecision(4) << v.get<double>();
        return os.str();
    }
    return v.dump();
}

std::string csv_escape(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

void emit(const std::vector<Json>& records, const std::vector<std::string>& columns,
          const std::string& format, std::ostream& out)
{
    if (format == "json") {
        for (const auto& rec : records)
            out << rec.dump() << '\n';
        return;
    }
    std::vector<std::string> cols(columns);
    if (format == "csv")
        cols.insert(cols.begin() + 1, "graph6");
    std::vector<std::vector<std::string>> rows;
    for (const auto& rec : records) {
        std::vector<std::string> row;
        for (const auto& col : cols)
            row.push_back(rec.contains(col) ? cell(rec[col]) : "");
        rows.push_back(std::move(row));
    }
    if (format == "csv") {
        for (std::size_t i = 0; i < cols.size(); ++i)
            out << (i ? "," : "") << cols[i];
        out << '\n';
        for (const auto& row : rows) {
            for (std::size_t i = 0; i < row.size(); ++i)
                out << (i ? "," : "") << csv_escape(row[i]);
            out << '\n';
        }
        return;
    }
    std::vector<std::size_t> width(columns.size());
    for (std::size_t i = 0; i < columns.size(); ++i) {
        width[i] = columns[i].size();
        for (const auto& row : rows)
            width[i] = std::max(width[i], row[i].size());
    }
    auto line = [&](const std::vector<std::string>& row) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            out << (i ? "  " : "") << row[i];
            if (i + 1 < row.size())
                out << std::string(width[i] - row[i].size(), ' ');
        }
        out << '\n';
    };
    line(columns);
    for (const auto& row : rows)
        line(row);
}

Json bound_json(const Bound& b)
{
    return b.value ? Json(*b.value) : Json(nullptr);
}

Json base_record(const InputGraph& item)
{
    Json rec;
    rec["index"] = item.index;
    rec["graph6"] = item.graph6;
    return rec;
}

Json members_json(const VertexSet& s)
{
    Json arr = Json::array();
    for (Vertex v : s.members())
        arr.push_back(v);
    return arr;
}

Variant require_variant(const Options& opt)
{
    auto v = parse_variant(opt.variant);
    if (!v)
        throw UsageError("--variant must be 'total' or 'closed'");
    return *v;
}

int cmd_dominate(const Options& opt, Streams& io)
{
    const Variant variant = require_variant(opt);
    int status = kSuccess;
    std::vector<Json> records;
    for (const auto& item : load_inputs(opt, io)) {
        Json rec = base_record(item);
        if (!item.graph) {
            rec["error"] = item.error;
            status = kUsage;
            records.push_back(std::move(rec));
            continue;
        }
        const Graph& g = *item.graph;
        rec["n"] = g.order();
        auto r = regularity(g);
        rec["r"] = r ? Json(*r) : Json(nullptr);
        rec["variant"] = to_string(variant);
        try {
            auto cert = variant == Variant::total ? total_dominating_r_minus_1(g) : dominating_r(g);
            const bool verified = verify(g, cert.set, cert.k, cert.variant);
            rec["k"] = cert.k;
            rec["branch"] = to_string(cert.branch);
            rec["size"] = cert.size();
            rec["bound"] = cert.bound_value();
            rec["bound_floor"] = cert.bound_floor();
            rec["colors_used"] = cert.colors_used;
            rec["verified"] = verified;
            rec["set"] = members_json(cert.set);
            if (!verified && status == kSuccess)
                status = kFailure;
        } catch (const PreconditionError& e) {
            rec["error"] = e.what();
            if (status == kSuccess)
                status = kFailure;
        } catch (const std::logic_error& e) {
            rec["verified"] = false;
            rec["error"] = e.what();
            if (status == kSuccess)
                status = kFailure;
        }
        records.push_back(std::move(rec));
    }
    emit(records,
         {"index", "n", "r", "variant", "k", "branch", "size", "bound", "bound_floor",
          "colors_used", "verified", "set", "error"},
         resolve_format(opt, io), io.out);
    return status;
}

int cmd_exact(const Options& opt, Streams& io)
{
    const Variant variant = require_variant(opt);
    if (opt.k < 1)
        throw UsageError("--k must be at least 1");
    int status = kSuccess;
    std::vector<Json> records;
    for (const auto& item : load_inputs(opt, io)) {
        Json rec = base_record(item);
        if (!item.graph) {
            rec["error"] = item.error;
            status = kUsage;
            records.push_back(std::move(rec));
            continue;
        }
        auto res = exact_gamma(*item.graph, opt.k, variant, opt.budget);
        rec["n"] = item.graph->order();
        rec["variant"] = to_string(variant);
        rec["k"] = opt.k;
        switch (res.status) {
        case ExactStatus::optimal:
            rec["status"] = "optimal";
            rec["size"] = res.size;
            rec["witness"] = members_json(res.witness);
            break;
        case ExactStatus::infeasible:
            rec["status"] = "infeasible";
            rec["size"] = nullptr;
            if (status == kSuccess)
                status = kFailure;
            break;
        case ExactStatus::budget_exhausted:
            rec["status"] = "unknown (budget)";
            rec["size"] = nullptr;
            rec["incumbent"] = res.size;
            if (status == kSuccess)
                status = kFailure;
            break;
        }
        rec["nodes"] = res.nodes;
        records.push_back(std::move(rec));
    }
    emit(records, {"index", "n", "variant", "k", "status", "size", "nodes", "witness", "error"},
         resolve_format(opt, io), io.out);
    return status;
}

int cmd_bounds(const Options& opt, Streams& io)
{
    int status = kSuccess;
    std::vector<Json> records;
    for (const auto& item : load_inputs(opt, io)) {
        Json rec = base_record(item);
        if (!item.graph) {
            rec["error"] = item.error;
            status = kUsage;
            records.push_back(std::move(rec));
            continue;
        }
        auto rep = compare_report(*item.graph);
        auto opt_count = [](const std::optional<std::size_t>& v) {
            return v ? Json(*v) : Json(nullptr);
        };
        rec["n"] = rep.n;
        rec["r"] = opt_count(rep.r);
        rec["k_total"] = opt_count(rep.k_total);
        rec["k_closed"] = opt_count(rep.k_closed);
        rec["d_tilde"] = rep.d_tilde;
        rec["d_hat"] = rep.d_hat;
        rec["regular_total"] = bound_json(rep.regular_total);
        rec["regular_closed"] = bound_json(rep.regular_closed);
        rec["prob_closed"] = bound_json(rep.prob_closed);
        rec["prob_total"] = bound_json(rep.prob_total);
        rec["prob_closed_vacuous"] = rep.prob_closed.vacuous;
        rec["prob_total_vacuous"] = rep.prob_total.vacuous;
        Json notes = Json::object();
        for (auto [key, b] : {std::pair{"regular_total", &rep.regular_total},
                              std::pair{"regular_closed", &rep.regular_closed},
                              std::pair{"prob_closed", &rep.prob_closed},
                              std::pair{"prob_total", &rep.prob_total}})
            if (!b->applicable())
                notes[key] = b->inapplicable_reason;
        rec["inapplicable"] = notes;
        records.push_back(std::move(rec));
    }
    emit(records,
         {"index", "n", "r", "regular_total", "regular_closed", "prob_closed", "prob_total",
          "prob_closed_vacuous", "prob_total_vacuous", "error"},
         resolve_format(opt, io), io.out);
    return status;
}

std::vector<Vertex> parse_id_list(const std::string& text, std::size_t n)
{
    std::vector<Vertex> ids;
    std::stringstream in(text);
    std::string token;
    while (std::getline(in, token, ',')) {
        auto first = token.find_first_not_of(' ');
        if (first == std::string::npos)
            continue;
        token = token.substr(first, token.find_last_not_of(' ') - first + 1);
        long long id = -1;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), id);
        if (ec != std::errc{} || ptr != token.data() + token.size())
            throw UsageError("bad vertex id '" + token + "' in --set");
        if (id < 0 || static_cast<std::size_t>(id) >= n)
            throw UsageError("vertex id " + token + " out of range 0.." + std::to_string(n - 1));
        ids.push_back(static_cast<Vertex>(id));
    }
    return ids;
}

int cmd_verify(const Options& opt, Streams& io)
{
    const Variant variant = require_variant(opt);
    if (opt.k < 1)
        throw UsageError("--k must be at least 1");
    auto inputs = load_inputs(opt, io);
    if (inputs.size() != 1)
        throw UsageError("verify expects exactly one input graph, got "
                         + std::to_string(inputs.size()));
    const auto& item = inputs.front();
    if (!item.graph)
        throw UsageError(item.error);
    const Graph& g = *item.graph;
    auto ids = parse_id_list(opt.set, g.order());
    auto set = VertexSet::of(g.order(), ids);
    auto deficient = first_deficient_vertex(g, set, opt.k, variant);

    Json rec = base_record(item);
    rec["n"] = g.order();
    rec["variant"] = to_string(variant);
    rec["k"] = opt.k;
    rec["set"] = members_json(set);
    rec["pass"] = !deficient;
    rec["deficient_vertex"] = deficient ? Json(*deficient) : Json(nullptr);
    if (deficient) {
        std::size_t have = set.count_in(g.neighbors(*deficient));
        if (variant == Variant::closed && set.contains(*deficient))
            ++have;
        rec["deficient_count"] = have;
    }
    const auto format = resolve_format(opt, io);
    if (format == "text") {
        if (!deficient)
            io.out << "pass\n";
        else
            io.out << "fail: vertex " << *deficient << " has " << rec["deficient_count"].get<std::size_t>()
                   << " of the required " << opt.k << " neighbours in the set\n";
    } else {
        emit({rec}, {"index", "n", "variant", "k", "pass", "deficient_vertex", "deficient_count"},
             format, io.out);
    }
    return deficient ? kFailure : kSuccess;
}

int cmd_gen(const Options& opt, Streams& io)
{
    std::vector<std::string> lines;
    std::ostringstream meta;
    if (!opt.atlas.empty()) {
        std::string spec = opt.atlas.front();
        if (opt.atlas.size() == 2)
            spec += ":" + opt.atlas[1];
        Graph g = atlas::named(spec);
        lines.push_back(io::write_graph6(g));
        meta << "# atlas=" << spec << " n=" << g.order();
        if (auto r = regularity(g))
            meta << " r=" << *r;
        meta << '\n';
    } else {
        if (opt.n == 0 || opt.r == 0)
            throw UsageError("gen needs --atlas or both --n and --r");
        meta << "# generator=" << kGeneratorId << " n=" << opt.n << " r=" << opt.r
             << " count=" << opt.count << " seed=" << opt.seed << '\n';
        for (std::size_t i = 0; i < opt.count; ++i) {
            const std::uint64_t seed = opt.seed + i;
            lines.push_back(io::write_graph6(random_regular(opt.n, opt.r, seed)));
            meta << "# line=" << i << " seed=" << seed << '\n';
        }
    }

    if (opt.out_path.empty() || opt.out_path == "-") {
        for (const auto& l : lines)
            io.out << l << '\n';
    } else {
        std::ofstream file(opt.out_path, std::ios::binary);
        if (!file)
            throw UsageError("cannot write '" + opt.out_path + "'");
        for (const auto& l : lines)
            file << l << '\n';
    }
    if (!opt.meta_path.empty()) {
        std::ofstream file(opt.meta_path, std::ios::binary);
        if (!file)
            throw UsageError("cannot write '" + opt.meta_path + "'");
        file << meta.str();
    }
    return kSuccess;
}

void add_input_flags(CLI::App* sub, Options& opt)
{
    sub->add_option("input", opt.input, "graph file (graph6 lines or DIMACS); '-' for stdin");
    sub->add_option("--format-in", opt.format_in, "input format override")
        ->check(CLI::IsMember({"graph6", "dimacs"}));
    sub->add_option("--format", opt.format, "output format (default: text on a terminal, json otherwise)")
        ->check(CLI::IsMember({"text", "json", "csv"}));
}

} // namespace

int run(const std::vector<std::string>& args, Streams io)
{
    CLI::App app{"k-tuple (total) domination of regular graphs"};
    app.require_subcommand(1);
    Options opt;

    auto* gen = app.add_subcommand("gen", "generate random regular graphs or named graphs as graph6");
    gen->add_option("--n", opt.n, "vertex count");
    gen->add_option("--r", opt.r, "degree");
    gen->add_option("--count", opt.count, "number of graphs")->capture_default_str();
    gen->add_option("--seed", opt.seed, "seed of the first graph; graph i uses seed+i")
        ->capture_default_str();
    gen->add_option("--atlas", opt.atlas,
                    "named graph: heawood | petersen | pg2 <q> | moore <r> | cycle <n> | path <n> | "
                    "complete <n> | kbip <a>,<b> | hypercube <d> | prism <n>")
        ->expected(1, 2);
    gen->add_option("--out", opt.out_path, "output file (default stdout)");
    gen->add_option("--meta", opt.meta_path, "sidecar file for generation metadata");

    auto* dominate = app.add_subcommand("dominate", "construct and certify a dominating set");
    dominate->add_option("--variant", opt.variant, "total | closed")->required();
    add_input_flags(dominate, opt);

    auto* exact = app.add_subcommand("exact", "exact minimum by branch and bound");
    exact->add_option("--variant", opt.variant, "total | closed")->required();
    exact->add_option("--k", opt.k, "tuple size")->required();
    exact->add_option("--budget", opt.budget, "search node budget")->capture_default_str();
    add_input_flags(exact, opt);

    auto* bounds = app.add_subcommand("bounds", "compare upper bounds");
    add_input_flags(bounds, opt);

    auto* verify_cmd = app.add_subcommand("verify", "check a candidate set");
    verify_cmd->add_option("--variant", opt.variant, "total | closed")->required();
    verify_cmd->add_option("--k", opt.k, "tuple size")->required();
    verify_cmd->add_option("--set", opt.set, "comma-separated vertex ids")->required();
    add_input_flags(verify_cmd, opt);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, io.out, io.err) == 0 ? kSuccess : kUsage;
    }

    try {
        if (gen->parsed())
            return cmd_gen(opt, io);
        if (dominate->parsed())
            return cmd_dominate(opt, io);
        if (exact->parsed())
            return cmd_exact(opt, io);
        if (bounds->parsed())
            return cmd_bounds(opt, io);
        return cmd_verify(opt, io);
    } catch (const UsageError& e) {
        io.err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const InputError& e) {
        io.err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const GenerationError& e) {
        io.err << "error: " << e.what() << '\n';
        return kFailure;
    }
}

} // namespace ktdom::cli

#include "graphcode/cli.hpp"

#include <cctype>
#include <cstdio>

#include "CLI11.hpp"
#include "json.hpp"

#include "graphcode/clique_search.hpp"
#include "graphcode/code_model.hpp"
#include "graphcode/composite.hpp"
#include "graphcode/families.hpp"
#include "graphcode/io.hpp"
#include "graphcode/kl_oracle.hpp"

namespace graphcode {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string fmt_sci(double v) {
    char b[40];
    std::snprintf(b, sizeof b, "%.3e", v);
    return b;
}

std::string lower(std::string s) {
    for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

std::string join_degrees(const std::vector<i64>& degrees) {
    std::string out;
    for (std::size_t i = 0; i < degrees.size(); ++i) {
        if (i) out += "·"; // middle dot
        out += std::to_string(degrees[i]);
    }
    return out;
}

ordered_json vec_json(const ZpVec& v) {
    ordered_json a = ordered_json::array();
    for (std::size_t i = 0; i < v.size(); ++i) a.push_back(v[i]);
    return a;
}

ordered_json pauli_json(const PauliOp& e) {
    ordered_json j;
    j["phase"] = e.phase;
    j["x"] = vec_json(e.x);
    j["z"] = vec_json(e.z);
    j["text"] = pauli_str(e);
    return j;
}

ordered_json code_json(const GraphCode& code) {
    ordered_json j;
    j["p"] = code.p();
    j["n"] = code.n();
    j["d"] = code.d;
    j["K"] = code.K();
    j["classification"] = classification_name(code.classification);
    j["clique"] = ordered_json::array();
    for (const auto& v : code.clique) j["clique"].push_back(vec_json(v));
    j["stabilizer_generators"] = ordered_json::array();
    for (const auto& e : stabilizer_generators(code)) j["stabilizer_generators"].push_back(pauli_json(e));
    j["stabilizer_size"] = code.stabilizer.size();
    if (!code.degrees.empty()) j["degrees"] = code.degrees;
    return j;
}

ordered_json graph_json(const WeightedGraph& g) {
    ordered_json j;
    j["p"] = g.p;
    j["n"] = g.n;
    ordered_json edges = ordered_json::array();
    for (int a = 1; a <= g.n; ++a)
        for (int b = a + 1; b <= g.n; ++b)
            if (g.at(a - 1, b - 1) != 0) edges.push_back({a, b, g.at(a - 1, b - 1)});
    j["edges"] = edges;
    return j;
}

ordered_json kl_json(const KlReport& r) {
    ordered_json j;
    j["mode"] = r.mode == KlMode::Exhaustive ? "exhaustive" : "sampled";
    j["tolerance"] = r.tol;
    j["max_deviation"] = r.worst_dev;
    if (r.mode == KlMode::Sampled) j["seed"] = r.seed;
    j["max_weight"] = r.max_weight;
    j["errors_checked"] = r.errors_checked;
    j["classes_checked"] = r.classes_checked;
    j["f_nonzero"] = r.f_nonzero_count;
    j["pass"] = r.ok;
    if (r.counterexample) {
        ordered_json c;
        c["error"] = pauli_str(r.counterexample->error);
        c["bra"] = r.counterexample->bra;
        c["ket"] = r.counterexample->ket;
        c["value"] = {r.counterexample->value.real(), r.counterexample->value.imag()};
        c["expected"] = {r.counterexample->expected.real(), r.counterexample->expected.imag()};
        c["dev"] = r.counterexample->dev;
        c["message"] = r.counterexample->message;
        j["counterexample"] = c;
    }
    return j;
}

std::string kl_text(const KlReport& r) {
    std::string line = std::string("oracle: ") + (r.ok ? "PASS" : "FAIL") + " mode=" +
                       (r.mode == KlMode::Exhaustive ? "exhaustive" : "sampled");
    if (r.mode == KlMode::Sampled) line += " seed=" + std::to_string(r.seed);
    line += " max_weight=" + std::to_string(r.max_weight) +
            " errors=" + std::to_string(r.errors_checked) +
            " worst_dev=" + fmt_sci(r.worst_dev);
    if (r.counterexample)
        line += "\n  counterexample: E=" + pauli_str(r.counterexample->error) + " <" +
                std::to_string(r.counterexample->bra + 1) + "|E|" +
                std::to_string(r.counterexample->ket + 1) + "> " + r.counterexample->message;
    return line;
}

std::string summary_line(const GraphCode& code) {
    std::string line = code_label(code) + " " + lower(classification_name(code.classification)) +
                       " K=" + std::to_string(code.K()) +
                       " |S|=" + std::to_string(code.stabilizer.size());
    if (!code.degrees.empty()) line += " degrees=" + join_degrees(code.degrees);
    return line;
}

struct SearchArgs {
    std::string file;
    int d = 2;
    int k = 0;
    bool all = false;
    double time_limit = 0.0;
    int threads = 0;
    bool json = false;
};

int cmd_search(const SearchArgs& a, std::ostream& out) {
    const WeightedGraph g = parse_graph_file(a.file);
    const SuperGraph sg = build_super_graph(g, a.d);
    if (a.all && a.k <= 0) throw InputError("--all requires --max-k");
    const CliqueMode mode =
        a.all ? CliqueMode::AllOfSize : (a.k > 0 ? CliqueMode::FirstOfSize : CliqueMode::Max);
    const auto cliques = find_cliques(sg, mode, a.k, nullptr, a.time_limit);

    std::vector<GraphCode> codes;
    for (const auto& cl : cliques) {
        GraphCode code = make_code(g, cl, a.d);
        classify(code);
        codes.push_back(std::move(code));
    }

    if (a.json) {
        ordered_json j;
        j["command"] = "search";
        j["graph"] = graph_json(g);
        j["d"] = a.d;
        j["super_graph_vertices"] = sg.vertices.size();
        j["codes"] = ordered_json::array();
        for (const auto& c : codes) j["codes"].push_back(code_json(c));
        out << j.dump(2) << "\n";
    } else {
        out << "graph: p=" << g.p << " n=" << g.n << ", super graph has " << sg.vertices.size()
            << " vertices\n";
        out << "found " << codes.size() << " code(s) at d=" << a.d << "\n";
        for (const auto& c : codes) {
            out << summary_line(c) << "\n";
            out << "  clique:";
            for (const auto& v : c.clique) out << " " << v.str();
            out << "\n";
        }
    }
    return codes.empty() ? 1 : 0;
}

struct VerifyArgs {
    std::string file;
    bool oracle = false;
    std::size_t sampled = 0;
    std::uint64_t seed = 1;
    int threads = 0;
    std::size_t bound = 0;
    bool json = false;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
    const ParsedCode pc = parse_code_file(a.file);
    CliqueViolation viol;
    const bool symbolic_ok = is_coding_clique(pc.graph, pc.d, pc.clique, &viol);

    ordered_json j;
    j["command"] = "verify";
    int rc = symbolic_ok ? 0 : 1;

    if (!symbolic_ok) {
        if (a.json) {
            j["symbolic"] = {{"pass", false},
                             {"condition", viol.condition},
                             {"message", viol.message}};
            out << j.dump(2) << "\n";
        } else {
            out << "symbolic: FAIL condition " << viol.condition << ": " << viol.message << "\n";
        }
        return rc;
    }

    GraphCode code = make_code(pc.graph, pc.clique, pc.d, /*validate=*/false);
    classify(code);

    std::string oracle_text;
    ordered_json oracle_json;
    bool ran_oracle = false;
    if (a.oracle || a.sampled > 0) {
        KlOptions opts;
        opts.mode = a.sampled > 0 ? KlMode::Sampled : KlMode::Exhaustive;
        opts.samples = a.sampled > 0 ? a.sampled : opts.samples;
        opts.seed = a.seed;
        opts.threads = a.threads;
        opts.state_bound = a.bound;
        const KlReport rep = kl_verify(code, opts);
        ran_oracle = true;
        if (!rep.ok) rc = 1;
        oracle_text = kl_text(rep);
        oracle_json = kl_json(rep);
    }

    if (a.json) {
        j.update(code_json(code));
        j["symbolic"] = {{"pass", true}, {"d", code.d}};
        if (ran_oracle) j["verification"] = oracle_json;
        out << j.dump(2) << "\n";
    } else {
        out << "symbolic: PASS (coding clique at d=" << code.d << ")\n";
        out << summary_line(code) << "\n";
        if (ran_oracle) out << oracle_text << "\n";
    }
    return rc;
}

struct FamilyArgs {
    std::string name;
    i64 p = 0;
    int n = -1;
    bool has_p = false, has_n = false;
    std::string out_file;
    bool list = false;
    bool json = false;
};

int cmd_family(const FamilyArgs& a, std::ostream& out) {
    if (a.list) {
        if (a.json) {
            ordered_json j;
            j["command"] = "family";
            j["families"] = ordered_json::array();
            for (const auto& fs : family_catalog())
                j["families"].push_back({{"name", fs.name},
                                         {"summary", fs.summary},
                                         {"takes_p", fs.takes_p},
                                         {"takes_n", fs.takes_n}});
            j["families"].push_back({{"name", "composite_6"},
                                     {"summary", "((6,2p^2,3))_{2p} on the combined graph H_6, odd p"},
                                     {"takes_p", true},
                                     {"takes_n", false}});
            out << j.dump(2) << "\n";
        } else {
            for (const auto& fs : family_catalog()) out << fs.name << "  " << fs.summary << "\n";
            out << "composite_6  ((6,2p^2,3))_{2p} on the combined graph H_6, odd p\n";
        }
        return 0;
    }
    if (a.name.empty()) throw InputError("family name required (or use --list)");

    GraphCode code;
    std::string label;
    if (a.name == "composite_6") {
        if (!a.has_p) throw InputError("family 'composite_6' needs a modulus p");
        if (a.has_n) throw InputError("family 'composite_6' takes no size parameter");
        code = family_6_2p2_3(a.p);
        label = "((6,2·" + std::to_string(a.p * a.p) + ",3))_" + std::to_string(2 * a.p);
    } else {
        code = make_family(a.name, a.has_p ? std::optional<i64>(a.p) : std::nullopt,
                           a.has_n ? std::optional<int>(a.n) : std::nullopt);
        label = code_label(code);
    }

    if (!a.out_file.empty()) write_text_file(a.out_file, serialize_code(code));

    if (a.json) {
        ordered_json j;
        j["command"] = "family";
        j["name"] = a.name;
        j["label"] = label;
        j.update(code_json(code));
        out << j.dump(2) << "\n";
    } else {
        std::string line = label + " " + lower(classification_name(code.classification));
        // Generic-form labels ((n,K,d))_p carry the group structure explicitly.
        if (label.rfind("((", 0) == 0 && !code.degrees.empty())
            line += ", degrees " + join_degrees(code.degrees);
        out << line << "\n";
    }
    return 0;
}

struct Table1Args {
    int threads = 0;
    bool json = false;
};

int cmd_table1(const Table1Args& a, std::ostream& out) {
    const std::vector<GraphCode> codes = table1_codes();
    bool all_pass = true;
    ordered_json rows = ordered_json::array();
    for (const auto& code : codes) {
        KlOptions opts;
        opts.threads = a.threads;
        const KlReport rep = kl_verify(code, opts);
        const bool pass = rep.ok;
        all_pass = all_pass && pass;
        if (a.json) {
            ordered_json row;
            row["label"] = code_label(code);
            row["classification"] = classification_name(code.classification);
            row["K"] = code.K();
            row["d"] = code.d;
            row["stabilizer_size"] = code.stabilizer.size();
            row["verification"] = kl_json(rep);
            rows.push_back(row);
        } else {
            out << code_label(code) << "  " << classification_name(code.classification)
                << "  K=" << code.K() << "  |S|=" << code.stabilizer.size()
                << "  errors=" << rep.errors_checked << "  worst_dev=" << fmt_sci(rep.worst_dev)
                << "  " << (pass ? "PASS" : "FAIL") << "\n";
        }
    }
    if (a.json) {
        ordered_json j;
        j["command"] = "table1";
        j["rows"] = rows;
        j["pass"] = all_pass;
        out << j.dump(2) << "\n";
    } else {
        out << "table1: " << (all_pass ? "PASS" : "FAIL") << " (" << codes.size() << " codes)\n";
    }
    return all_pass ? 0 : 1;
}

struct ComposeArgs {
    std::string file_a, file_b;
    bool no_certify = false;
    std::size_t bound = 0;
    std::string out_file;
    bool json = false;
};

GraphCode load_code(const std::string& path) {
    const ParsedCode pc = parse_code_file(path);
    GraphCode code = make_code(pc.graph, pc.clique, pc.d);
    classify(code);
    return code;
}

int cmd_compose(const ComposeArgs& a, std::ostream& out) {
    const GraphCode ca = load_code(a.file_a);
    const GraphCode cb = load_code(a.file_b);
    GraphCode prod = product_code(ca, cb, !a.no_certify, a.bound);
    if (!a.out_file.empty()) write_text_file(a.out_file, serialize_code(prod));
    if (a.json) {
        ordered_json j;
        j["command"] = "compose";
        j.update(code_json(prod));
        out << j.dump(2) << "\n";
    } else {
        out << summary_line(prod) << "\n";
    }
    return 0;
}

struct SplitArgs {
    std::string file;
    i64 p = 0, q = 0;
    bool json = false;
};

int cmd_split(const SplitArgs& a, std::ostream& out) {
    const WeightedGraph g = parse_graph_file(a.file);
    const auto [gp, gq] = crt_split(g, a.p, a.q);
    if (a.json) {
        ordered_json j;
        j["command"] = "split";
        j["p_factor"] = graph_json(gp);
        j["q_factor"] = graph_json(gq);
        out << j.dump(2) << "\n";
    } else {
        out << serialize_graph(gp) << serialize_graph(gq);
    }
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"nonbinary graph-state quantum code toolkit"};
    app.require_subcommand(1);

    SearchArgs sa;
    auto* search = app.add_subcommand("search", "search a graph for coding cliques");
    search->add_option("graph-file", sa.file, "graph file")->required();
    search->add_option("-d,--d", sa.d, "code distance")->required()->check(CLI::PositiveNumber);
    search->add_option("--max-k", sa.k, "target clique size K");
    search->add_flag("--all", sa.all, "enumerate every clique of size K (needs --max-k)");
    search->add_option("--time-limit", sa.time_limit, "wall-clock limit in seconds");
    search->add_option("--threads", sa.threads, "worker threads");
    search->add_flag("--json", sa.json, "structured output");

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "verify a code file");
    verify->add_option("code-file", va.file, "code file")->required();
    verify->add_flag("--oracle", va.oracle, "run the exhaustive numeric oracle");
    verify->add_option("--sampled", va.sampled, "run the sampled oracle with this many errors");
    verify->add_option("--seed", va.seed, "sampling seed");
    verify->add_option("--threads", va.threads, "worker threads");
    verify->add_option("--bound", va.bound, "amplitude-count bound override");
    verify->add_flag("--json", va.json, "structured output");

    FamilyArgs fa;
    auto* family = app.add_subcommand("family", "generate an analytic code family member");
    family->add_option("name", fa.name, "family name");
    auto* popt = family->add_option("--p", fa.p, "modulus p");
    auto* nopt = family->add_option("--n", fa.n, "size parameter n");
    family->add_option("--out", fa.out_file, "write the code file here");
    family->add_flag("--list", fa.list, "list the family catalog");
    family->add_flag("--json", fa.json, "structured output");

    Table1Args ta;
    auto* table1 = app.add_subcommand("table1", "regenerate and verify the qutrit catalogue");
    table1->add_option("--threads", ta.threads, "worker threads");
    table1->add_flag("--json", ta.json, "structured output");

    ComposeArgs coa;
    auto* compose = app.add_subcommand("compose", "direct product of two coprime-modulus codes");
    compose->add_option("code-file-p", coa.file_a, "first factor")->required();
    compose->add_option("code-file-q", coa.file_b, "second factor")->required();
    compose->add_flag("--no-certify", coa.no_certify, "skip the numeric product certification");
    compose->add_option("--bound", coa.bound, "amplitude-count bound override");
    compose->add_option("--out", coa.out_file, "write the product code file here");
    compose->add_flag("--json", coa.json, "structured output");

    SplitArgs spa;
    auto* split = app.add_subcommand("split", "split a composite-modulus graph into factors");
    split->add_option("graph-file", spa.file, "graph file")->required();
    split->add_option("--p", spa.p, "first factor modulus")->required();
    split->add_option("--q", spa.q, "second factor modulus")->required();
    split->add_flag("--json", spa.json, "structured output");

    std::vector<const char*> argv;
    argv.push_back("graphcode");
    for (const auto& s : args) argv.push_back(s.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (search->parsed()) return cmd_search(sa, out);
        if (verify->parsed()) return cmd_verify(va, out);
        if (family->parsed()) {
            fa.has_p = popt->count() > 0;
            fa.has_n = nopt->count() > 0;
            return cmd_family(fa, out);
        }
        if (table1->parsed()) return cmd_table1(ta, out);
        if (compose->parsed()) return cmd_compose(coa, out);
        if (split->parsed()) return cmd_split(spa, out);
        err << "error: no command\n";
        return 2;
    } catch (const ResourceError& e) {
        err << "resource bound: " << e.what() << "\n";
        return 3;
    } catch (const ValidationError& e) {
        err << "validation failure: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace graphcode

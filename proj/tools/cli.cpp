#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "cvpg/builders.hpp"
#include "cvpg/class_contact.hpp"
#include "cvpg/io.hpp"
#include "cvpg/oracle.hpp"
#include "cvpg/patterns.hpp"

namespace cvpg::cli {

namespace {

namespace fs = std::filesystem;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_all(std::istream& in) {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Graph load_graph(const std::string& path, std::istream& in) {
    if (path.empty() || path == "-") return parse_graph(read_all(in));
    std::ifstream f(path);
    if (!f) throw UsageError("cannot open " + path);
    return parse_graph(read_all(f));
}

GraphClass class_from_flag(const std::string& s) {
    if (s == "auto") return GraphClass::Auto;
    if (auto c = parse_class(s)) return *c;
    throw UsageError("unsupported class '" + s + "'");
}

std::string map_str(const std::vector<Vertex>& m) {
    std::string s = "[";
    for (std::size_t i = 0; i < m.size(); ++i) s += (i ? "," : "") + std::to_string(m[i]);
    return s + "]";
}

std::string witness_line(const Witness& w) { return "NO " + pattern_name(w.pattern) + " " + map_str(w.map); }

void write_output(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path);
    if (!f) throw UsageError("cannot write " + path);
    f << text;
}

// "path3", "star4", or an edge list such as "0-1,1-2,1-3".
Graph parse_base_tree(const std::string& desc) {
    auto number_after = [&](const std::string& prefix) -> std::optional<int> {
        if (desc.rfind(prefix, 0) != 0 || desc.size() == prefix.size()) return std::nullopt;
        std::string rest = desc.substr(prefix.size());
        if (!std::all_of(rest.begin(), rest.end(), ::isdigit)) return std::nullopt;
        return std::stoi(rest);
    };
    if (auto n = number_after("path")) return path_graph(*n);
    if (auto n = number_after("P")) return path_graph(*n);
    if (auto n = number_after("star")) return star_graph(*n);
    std::vector<Edge> edges;
    int n = 0;
    std::stringstream ss(desc);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        auto dash = tok.find('-');
        if (dash == std::string::npos) throw UsageError("bad base tree '" + desc + "'");
        try {
            int u = std::stoi(tok.substr(0, dash)), v = std::stoi(tok.substr(dash + 1));
            edges.emplace_back(u, v);
            n = std::max({n, u + 1, v + 1});
        } catch (const std::logic_error&) {
            throw UsageError("bad base tree '" + desc + "'");
        }
    }
    return graph_from_edges(n, edges);
}

std::vector<int> parse_sizes(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        try {
            out.push_back(std::stoi(tok));
        } catch (const std::logic_error&) {
            throw UsageError("bad size list '" + s + "'");
        }
    }
    return out;
}

// ---- recognize ----------------------------------------------------------------

struct RecognizeArgs {
    std::string input;
    std::string cls = "auto";
    bool witness = false;
    bool json = false;
};

int cmd_recognize(const RecognizeArgs& a, std::istream& in, std::ostream& out) {
    Graph g = load_graph(a.input, in);
    Decision d = decide_contact(g, class_from_flag(a.cls));
    const bool yes = d.verdict == Verdict::Yes;
    if (a.json) {
        nlohmann::json j{{"verdict", yes ? "YES" : "NO"}, {"class", class_name(d.decided_class)}};
        if (!yes) j["witness"] = nlohmann::json::parse(witness_to_json(*d.witness));
        out << j.dump() << "\n";
        return yes ? kYes : kNo;
    }
    out << (yes ? std::string("YES") : witness_line(*d.witness)) << "\n";
    if (a.witness) {
        out << "class " << class_name(d.decided_class) << "\n";
        if (!yes) {
            const auto& m = d.witness->map;
            for (std::size_t i = 0; i < m.size(); ++i) out << "  " << i << " -> " << m[i] << "\n";
        }
    }
    return yes ? kYes : kNo;
}

// ---- represent ----------------------------------------------------------------

struct RepresentArgs {
    std::string input;
    std::string cls = "auto";
    std::string format = "json";
    std::string out;
};

int cmd_represent(const RepresentArgs& a, std::istream& in, std::ostream& out) {
    Graph g = load_graph(a.input, in);
    Decision d = decide_contact(g, class_from_flag(a.cls));
    if (d.verdict == Verdict::No) {
        out << witness_line(*d.witness) << "\n";
        return kNo;
    }
    GridRepresentation rep = represent_contact(g, d.decided_class);
    auto v = validate(g, rep);
    if (!v.empty()) throw std::logic_error("representation failed validation: " + v.front().message);
    std::string text;
    if (a.format == "json")
        text = rep_to_json(rep);
    else if (a.format == "ascii")
        text = render_ascii(rep);
    else
        text = render_svg(rep);
    write_output(text, a.out, out);
    return kYes;
}

// ---- generate -----------------------------------------------------------------

struct GenerateArgs {
    std::string family;
    std::string name;
    std::string base_tree = "path2";
    int k = 3;
    int r = 0;
    int index = 0;
    bool in_c = false;
    bool true_twin = false;
    int sa = 0, sb = 0, kab = 0, sv = 0, sw = 0, variant = 1, m = 3, n = 4;
    std::string ka, kb, ku;
    std::string format = "graph6";
    std::string out;
};

Graph generate(const GenerateArgs& a) {
    const std::string& f = a.family;
    if (f == "pattern") {
        if (a.name.empty()) throw UsageError("generate pattern needs a pattern name");
        auto id = parse_pattern_id(a.name);
        if (!id || *id == PatternId::TMember) throw UsageError("unknown pattern '" + a.name + "'");
        return make_pattern(*id);
    }
    if (f == "T") {
        try {
            return make_T_member(parse_base_tree(a.base_tree)).graph;
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }
    if (a.r < 0) throw UsageError("-r must be >= 0");
    Graph r = complete_graph(a.r);
    try {
        if (f == "thin-spider") return make_thin_spider(a.k, r);
        if (f == "thick-spider") return make_thick_spider(a.k, r);
        if (f == "fat-spider") return make_fat_spider(a.k, a.index, a.in_c, a.true_twin, r);
        if (f == "w1") return make_w1({a.sa, a.sb, parse_sizes(a.ka), parse_sizes(a.kb), a.kab});
        if (f == "l") return make_l({a.variant, a.sv, a.sw, parse_sizes(a.ku)});
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (a.n < 0 || a.m < 0) throw UsageError("sizes must be >= 0");
    if (f == "k2m") return complete_bipartite(2, a.m);
    if (f == "path") return path_graph(a.n);
    if (f == "cycle") {
        if (a.n < 3) throw UsageError("cycle needs n >= 3");
        return cycle_graph(a.n);
    }
    if (f == "complete") return complete_graph(a.n);
    if (f == "star") return star_graph(a.n);
    throw UsageError("unknown family '" + f + "'");
}

int cmd_generate(const GenerateArgs& a, std::ostream& out) {
    Graph g = generate(a);
    write_output(a.format == "edges" ? to_edge_list(g) : to_graph6(g) + "\n", a.out, out);
    return kYes;
}

// ---- certify ------------------------------------------------------------------

struct CertifyArgs {
    std::string corpus;
    int enumerate = -1;
    std::string cls = "auto";
    bool verbose = false;
    bool json = false;
};

struct Tally {
    long scanned = 0, in_class = 0, yes = 0, no = 0, disagree = 0, unknown = 0, bad_cert = 0;
};

class Certifier {
public:
    Certifier(const CertifyArgs& a, std::ostream& out) : a_(a), out_(out), cls_(class_from_flag(a.cls)) {}

    void check(const std::string& id, const Graph& g, bool report) {
        ++t_.scanned;
        const bool member = cls_ == GraphClass::Auto ? detect_class(g).has_value() : in_class(g, cls_);
        if (!member) {
            if (report) emit(id, "-", "skip", "", "", 0.0);
            return;
        }
        ++t_.in_class;
        auto t0 = std::chrono::steady_clock::now();
        Decision d = decide_contact(g, cls_);
        const bool yes = d.verdict == Verdict::Yes;
        (yes ? t_.yes : t_.no)++;
        std::string cert;
        bool cert_ok;
        if (yes) {
            try {
                cert_ok = is_valid(g, represent_contact(g, d.decided_class));
            } catch (const std::exception&) {
                cert_ok = false;
            }
            cert = cert_ok ? "representation ok" : "representation INVALID";
        } else {
            cert_ok = validate_witness(g, *d.witness);
            cert = pattern_name(d.witness->pattern) + " " + map_str(d.witness->map) + (cert_ok ? "" : " INVALID");
        }
        if (!cert_ok) ++t_.bad_cert;
        OracleVerdict o = oracle(g);
        const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        bool agree = o == OracleVerdict::Unknown || (o == OracleVerdict::Yes) == yes;
        if (o == OracleVerdict::Unknown) ++t_.unknown;
        if (!agree) ++t_.disagree;
        if (report || !agree || !cert_ok || o == OracleVerdict::Unknown)
            emit(id, class_name(d.decided_class), yes ? "YES" : "NO", cert, oracle_verdict_name(o), ms);
    }

    int finish() {
        if (a_.json) {
            out_ << nlohmann::json{{"summary",
                                     {{"scanned", t_.scanned},
                                      {"in_class", t_.in_class},
                                      {"yes", t_.yes},
                                      {"no", t_.no},
                                      {"disagreements", t_.disagree},
                                      {"invalid_certificates", t_.bad_cert},
                                      {"unknown", t_.unknown}}}}
                        .dump()
                 << "\n";
        } else {
            out_ << "scanned " << t_.scanned << " graphs, in class " << t_.in_class << ", YES " << t_.yes << ", NO "
                 << t_.no << ", disagreements " << t_.disagree << ", invalid certificates " << t_.bad_cert
                 << ", unknown " << t_.unknown << "\n";
        }
        if (t_.disagree > 0 || t_.bad_cert > 0) return kNo;
        if (t_.unknown > 0) return kIncomplete;
        return kYes;
    }

private:
    OracleVerdict oracle(const Graph& g) {
        if (g.order() > 8) return is_contact_b0vpg_small(g);
        auto key = std::make_pair(g.order(), canonical_code(g));
        auto it = cache_.find(key);
        if (it == cache_.end()) it = cache_.emplace(key, is_contact_b0vpg_small(g)).first;
        return it->second;
    }

    void emit(const std::string& id, const std::string& cls, const std::string& verdict, const std::string& cert,
              const std::string& oracle, double ms) {
        if (a_.json) {
            out_ << nlohmann::json{{"input", id}, {"class", cls},       {"verdict", verdict},
                                   {"certificate", cert}, {"oracle", oracle}, {"ms", ms}}
                        .dump()
                 << "\n";
        } else {
            out_ << id << "  " << cls << "  " << verdict;
            if (!cert.empty()) out_ << "  " << cert;
            if (!oracle.empty()) out_ << "  oracle " << oracle;
            out_ << "\n";
        }
    }

    const CertifyArgs& a_;
    std::ostream& out_;
    GraphClass cls_;
    Tally t_;
    std::map<std::pair<int, std::uint64_t>, OracleVerdict> cache_;
};

int cmd_certify(const CertifyArgs& a, std::ostream& out) {
    if ((a.enumerate >= 0) == !a.corpus.empty()) throw UsageError("certify needs exactly one of a corpus directory or --enumerate");
    Certifier c(a, out);
    if (a.enumerate >= 0) {
        if (a.enumerate > 7) throw UsageError("--enumerate supports n <= 7");
        const int n = a.enumerate;
        const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
        for (std::uint64_t code = 0; code < total; ++code) {
            Graph g = graph_from_code(n, code);
            c.check(to_graph6(g), g, a.verbose);
        }
        return c.finish();
    }
    if (!fs::is_directory(a.corpus)) throw UsageError("not a directory: " + a.corpus);
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(a.corpus))
        if (e.is_regular_file()) files.push_back(e.path());
    std::sort(files.begin(), files.end());
    for (const auto& p : files) {
        std::ifstream f(p);
        if (p.extension() == ".g6") {
            std::string line;
            int k = 0;
            while (std::getline(f, line)) {
                if (line.empty() || line[0] == '#') continue;
                c.check(p.filename().string() + ":" + std::to_string(++k), parse_graph6(line), true);
            }
        } else {
            c.check(p.filename().string(), parse_graph(read_all(f)), true);
        }
    }
    return c.finish();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Contact B0-VPG recognition with certificates", "vpg"};
    app.require_subcommand(1);
    const std::vector<std::string> classes{"auto", "chordal", "tree-cograph", "p4-tidy", "p5-free"};

    RecognizeArgs ra;
    auto* rec = app.add_subcommand("recognize", "Decide membership; prints YES or NO with a forbidden subgraph");
    rec->add_option("input", ra.input, "graph6 or edge-list file ('-' for stdin)");
    rec->add_option("--class", ra.cls, "Input class")->check(CLI::IsMember(classes));
    rec->add_flag("--witness", ra.witness, "Print the class and the witness vertex map");
    rec->add_flag("--json", ra.json, "JSON output");

    RepresentArgs pa;
    auto* rep = app.add_subcommand("represent", "Emit a validated grid representation");
    rep->add_option("input", pa.input, "graph6 or edge-list file ('-' for stdin)");
    rep->add_option("--class", pa.cls, "Input class")->check(CLI::IsMember(classes));
    rep->add_option("--format", pa.format, "json, ascii or svg")->check(CLI::IsMember({"json", "ascii", "svg"}));
    rep->add_option("--out", pa.out, "Output file (default stdout)");

    GenerateArgs ga;
    auto* gen = app.add_subcommand("generate", "Emit a member of a graph family");
    gen->add_option("family", ga.family,
                    "pattern, T, thin-spider, thick-spider, fat-spider, w1, l, k2m, path, cycle, complete, star")
        ->required();
    gen->add_option("name", ga.name, "Pattern name (family 'pattern')");
    gen->add_option("--base-tree", ga.base_tree, "Base tree for T: pathN, starN or edges like 0-1,1-2");
    gen->add_option("-k", ga.k, "Spider size");
    gen->add_option("-r", ga.r, "Spider: R is a clique of this size");
    gen->add_option("--index", ga.index, "Fat spider: index of the duplicated vertex");
    gen->add_flag("--in-c", ga.in_c, "Fat spider: duplicate c_index instead of s_index");
    gen->add_flag("--true-twin", ga.true_twin, "Fat spider: adjacent twin");
    gen->add_option("--sa", ga.sa);
    gen->add_option("--sb", ga.sb);
    gen->add_option("--ka", ga.ka, "Comma-separated clique sizes hanging on a1");
    gen->add_option("--kb", ga.kb, "Comma-separated clique sizes hanging on b1");
    gen->add_option("--kab", ga.kab);
    gen->add_option("--variant", ga.variant, "L variant 1, 2 or 3");
    gen->add_option("--sv", ga.sv);
    gen->add_option("--sw", ga.sw);
    gen->add_option("--ku", ga.ku, "Comma-separated clique sizes hanging on u");
    gen->add_option("-m", ga.m, "k2m: size of the large side");
    gen->add_option("-n", ga.n, "path/cycle/complete/star size");
    gen->add_option("--format", ga.format, "graph6 or edges")->check(CLI::IsMember({"graph6", "edges"}));
    gen->add_option("--out", ga.out, "Output file (default stdout)");

    CertifyArgs ca;
    auto* cert = app.add_subcommand("certify", "Check recognizer verdicts and certificates against the exhaustive oracle");
    cert->add_option("corpus", ca.corpus, "Directory of .g6 (one graph per line) or edge-list files");
    cert->add_option("--enumerate", ca.enumerate, "Scan all labeled graphs on n vertices");
    cert->add_option("--class", ca.cls, "Class filter")->check(CLI::IsMember(classes));
    cert->add_flag("--verbose", ca.verbose, "Report every graph, not only problems");
    cert->add_flag("--json", ca.json, "JSON lines output");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : kUsage;
    }
    try {
        if (rec->parsed()) return cmd_recognize(ra, in, out);
        if (rep->parsed()) return cmd_represent(pa, in, out);
        if (gen->parsed()) return cmd_generate(ga, out);
        if (cert->parsed()) return cmd_certify(ca, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::domain_error& e) {
        err << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kInternal;
    }
    return kUsage;
}

}  // namespace cvpg::cli

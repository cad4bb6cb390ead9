#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "cvpg/builders.hpp"
#include "cvpg/grid_rep.hpp"
#include "cvpg/io.hpp"

using namespace cvpg;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run vpg(const std::vector<std::string>& args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    int code = cli::run_cli(args, in, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, RecognizeYes) {
    auto r = vpg({"recognize"}, "3 2\n0 1\n1 2\n");
    EXPECT_EQ(r.code, cli::kYes);
    EXPECT_EQ(r.out, "YES\n");
    EXPECT_EQ(vpg({"recognize", "-"}, to_graph6(cycle_graph(5))).out, "YES\n");
}

TEST(Cli, RecognizeNoPrintsWitness) {
    auto r = vpg({"recognize"}, "4 5\n0 1\n0 2\n0 3\n1 2\n1 3\n");
    EXPECT_EQ(r.code, cli::kNo);
    EXPECT_EQ(r.out, "NO K4-e [0,1,2,3]\n");
    auto w = vpg({"recognize", "--witness"}, "4 5\n0 1\n0 2\n0 3\n1 2\n1 3\n");
    EXPECT_NE(w.out.find("class chordal"), std::string::npos);
    EXPECT_NE(w.out.find("  3 -> 3"), std::string::npos);
    auto j = vpg({"recognize", "--json"}, to_graph6(complete_graph(5)));
    EXPECT_EQ(j.code, cli::kNo);
    EXPECT_NE(j.out.find("\"pattern\":\"K5\""), std::string::npos);
}

TEST(Cli, ClassViolation) {
    auto r = vpg({"recognize", "--class", "chordal"}, to_graph6(cycle_graph(4)));
    EXPECT_EQ(r.code, cli::kUsage);
    EXPECT_NE(r.err.find("input not chordal"), std::string::npos);
    EXPECT_EQ(vpg({"recognize", "--class", "nonsense"}, "@").code, cli::kUsage);
    EXPECT_EQ(vpg({"recognize"}, "3 1\n0 7\n").code, cli::kUsage);
    EXPECT_EQ(vpg({}).code, cli::kUsage);
    EXPECT_EQ(vpg({"recognize", "/nonexistent/file"}).code, cli::kUsage);
}

TEST(Cli, RepresentFormats) {
    std::string spider = vpg({"generate", "thin-spider", "-k", "4"}).out;
    auto j = vpg({"represent", "--format", "json"}, spider);
    ASSERT_EQ(j.code, cli::kYes) << j.err;
    EXPECT_TRUE(is_valid(parse_graph6(spider), rep_from_json(j.out)));
    auto a = vpg({"represent", "--format", "ascii"}, spider);
    EXPECT_EQ(a.code, cli::kYes);
    EXPECT_NE(a.out.find('+'), std::string::npos);
    auto s = vpg({"represent", "--format", "svg"}, spider);
    EXPECT_NE(s.out.find("<svg"), std::string::npos);
    auto no = vpg({"represent"}, to_graph6(make_pattern(PatternId::K33)));
    EXPECT_EQ(no.code, cli::kNo);
    EXPECT_EQ(no.out.rfind("NO K3,3", 0), 0u);
}

TEST(Cli, RepresentToFile) {
    auto path = std::filesystem::temp_directory_path() / "vpg_cli_rep.json";
    auto r = vpg({"represent", "--out", path.string()}, to_graph6(path_graph(6)));
    ASSERT_EQ(r.code, cli::kYes);
    std::ifstream f(path);
    std::stringstream ss;
    ss << f.rdbuf();
    EXPECT_TRUE(is_valid(path_graph(6), rep_from_json(ss.str())));
    std::filesystem::remove(path);
}

TEST(Cli, Generate) {
    auto t = vpg({"generate", "T", "--base-tree", "path3"});
    ASSERT_EQ(t.code, cli::kYes);
    EXPECT_EQ(parse_graph6(t.out).order(), 18);
    auto p = vpg({"generate", "pattern", "G_P2"});
    EXPECT_EQ(parse_graph6(p.out), make_pattern(PatternId::GP2));
    auto e = vpg({"generate", "k2m", "-m", "4", "--format", "edges"});
    EXPECT_EQ(parse_edge_list(e.out), complete_bipartite(2, 4));
    EXPECT_EQ(parse_graph6(vpg({"generate", "w1", "--ka", "1,2"}).out), make_w1({0, 0, {1, 2}, {}, 0}));
    EXPECT_EQ(vpg({"generate", "T", "--base-tree", "star4"}).code, cli::kUsage);
    EXPECT_EQ(vpg({"generate", "pattern", "nope"}).code, cli::kUsage);
    EXPECT_EQ(vpg({"generate", "dragon"}).code, cli::kUsage);
}

TEST(Cli, CertifyEnumerate) {
    auto r = vpg({"certify", "--enumerate", "5"});
    EXPECT_EQ(r.code, cli::kYes) << r.out;
    EXPECT_NE(r.out.find("scanned 1024 graphs"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("disagreements 0, invalid certificates 0, unknown 0"), std::string::npos) << r.out;
    auto c = vpg({"certify", "--enumerate", "4", "--class", "chordal"});
    EXPECT_EQ(c.code, cli::kYes);
    EXPECT_NE(c.out.find("scanned 64 graphs"), std::string::npos);
    EXPECT_EQ(vpg({"certify", "--enumerate", "9"}).code, cli::kUsage);
    EXPECT_EQ(vpg({"certify"}).code, cli::kUsage);
}

TEST(Cli, CertifyCorpus) {
    auto dir = std::filesystem::temp_directory_path() / "vpg_cli_corpus";
    std::filesystem::create_directories(dir);
    {
        std::ofstream g6(dir / "small.g6");
        g6 << to_graph6(cycle_graph(5)) << "\n" << to_graph6(complete_graph(5)) << "\n";
        std::ofstream el(dir / "p4.txt");
        el << to_edge_list(path_graph(4));
    }
    auto r = vpg({"certify", dir.string()});
    EXPECT_EQ(r.code, cli::kYes) << r.out;
    EXPECT_NE(r.out.find("scanned 3 graphs, in class 3, YES 2, NO 1"), std::string::npos) << r.out;
    std::filesystem::remove_all(dir);
}

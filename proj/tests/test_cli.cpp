#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "spreadbent/cli.hpp"
#include "spreadbent/sweep.hpp"

using namespace spreadbent;
using namespace spreadbent::cli;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run_with(RunConfig cfg) {
    cfg.quiet = true;
    std::ostringstream out, err;
    const int code = run(cfg, out, err);
    return {code, out.str(), err.str()};
}

RunConfig config(std::string command, unsigned l = 0, int b = 0) {
    RunConfig c;
    c.command = std::move(command);
    c.l = l;
    c.b = b;
    return c;
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

std::size_t data_lines(const std::string& text) {
    std::size_t n = 0;
    for (const auto& l : lines(text)) n += !l.starts_with("#");
    return n;
}

}  // namespace

TEST_CASE("polys listing") {
    const auto r = run_with(config("polys", 2, 2));
    CHECK(r.code == kOk);
    CHECK(data_lines(r.out) == 14);
    CHECK(r.out.find("irreducible-deg-b=6") != std::string::npos);
    CHECK(r.out.find("square-of-linear=3") != std::string::npos);
    CHECK(r.out.find("product-of-linears=3") != std::string::npos);
    CHECK(data_lines(run_with(config("polys", 4, 1)).out) == 16);
    CHECK(data_lines(run_with(config("polys", 1, 3)).out) == 5);
    CHECK(lines(run_with(config("polys", 2, 2)).out)[0] == "0 [1] constant-one");
}

TEST_CASE("bad parameters exit 2") {
    CHECK(run_with(config("polys", 5, 2)).code == kBadArguments);
    CHECK(run_with(config("polys", 0, 2)).code == kBadArguments);
    CHECK(run_with(config("polys", 2, 3)).code == kBadArguments);
    const auto r = run_with(config("families", 3, 3));
    CHECK(r.code == kBadArguments);
    CHECK(r.err.find("capacity") != std::string::npos);
    CHECK(run_with(config("nonsense", 1, 1)).code == kBadArguments);
    auto c = config("build", 1, 2);
    CHECK(run_with(c).code == kBadArguments);
    c.polys = "[1,0,1];[1,1";
    CHECK(run_with(c).code == kBadArguments);
    c.polys.clear();
    c.family_id = 99;
    CHECK(run_with(c).code == kBadArguments);
}

TEST_CASE("families manifest") {
    auto c = config("families", 2, 2);
    const auto r = run_with(c);
    CHECK(r.code == kOk);
    const auto ls = lines(r.out);
    CHECK(ls.size() == 174);
    CHECK(ls[0].starts_with("id=0; l=2; b=2; type=PS-; polys="));
    c.type = SpreadType::Plus;
    CHECK(lines(run_with(c).out).size() == 64);
    c.scope = FamilyScope::AllCoprime;
    CHECK(lines(run_with(c).out).size() == 82);
}

TEST_CASE("build records") {
    auto c = config("build", 1, 2);
    c.polys = "[1,0,1];[1,1,1]";
    const auto r = run_with(c);
    CHECK(r.code == kOk);
    CHECK(r.out.find("tt: 0635\n") != std::string::npos);
    CHECK(r.out.find("degree: 2\n") != std::string::npos);
    CHECK(r.out.find("bent: true\n") != std::string::npos);
    CHECK(r.out.find("weight: 6\n") != std::string::npos);

    c.polys = "[1,0,1];[1,1,1];[0,0,1]";
    c.type = SpreadType::Plus;
    const auto h = run_with(c);
    CHECK(h.code == kOk);
    CHECK(h.out.find("tt: f635\n") != std::string::npos);
    CHECK(h.out.find("weight: 10\n") != std::string::npos);

    c.type = SpreadType::Minus;
    c.polys = "[1,0,1];[1,0,1]";
    const auto bad = run_with(c);
    CHECK(bad.code == kConstructionRejected);
    CHECK(bad.err.find("[1,0,1]") != std::string::npos);

    c.polys = "[1,0,1]";
    CHECK(run_with(c).code == kConstructionRejected);

    auto byid = config("build", 2, 2);
    byid.family_id = 0;
    byid.format = Format::Csv;
    const auto csv = run_with(byid);
    CHECK(csv.code == kOk);
    CHECK(lines(csv.out)[0] == csv_header());
    CHECK(lines(csv.out)[1].starts_with("0,PS-,2,2,\""));
}

TEST_CASE("table2 histograms") {
    auto c = config("table2");
    c.jobs = 2;
    const auto r = run_with(c);
    CHECK(r.code == kOk);
    const std::string minus = "rank count\n36 20\n40 24\n42 10\n44 60\n46 60\ntotal 174\n";
    const std::string plus = "rank count\n40 45\n44 19\ntotal 64\n";
    CHECK(r.out.find(minus) != std::string::npos);
    CHECK(r.out.find(plus) != std::string::npos);
}

TEST_CASE("CSV records re-parse and re-analyze") {
    auto c = config("table2");
    c.format = Format::Csv;
    c.jobs = 2;
    const auto r = run_with(c);
    REQUIRE(r.code == kOk);
    const auto ls = lines(r.out);
    REQUIRE(ls.size() == 1 + 174 + 64);
    CHECK(ls[0] == "family_id,type,l,b,polys,tt_hex,weight,degree,nonlinearity,rank,classification");
    for (std::size_t i = 1; i < ls.size(); ++i) {
        const auto rec = parse_csv(ls[i]);
        const auto again = analyze_table(rec.tt);
        REQUIRE(again.rank == rec.rank);
        REQUIRE(again.degree == rec.degree);
        REQUIRE(again.weight == rec.weight);
        REQUIRE(again.nonlinearity == rec.nonlinearity);
        REQUIRE(to_string(again.classification) == to_string(rec.classification));
        REQUIRE(to_csv(rec) == ls[i]);
    }
}

TEST_CASE("output is identical across worker counts") {
    auto c = config("table2");
    c.format = Format::Csv;
    c.jobs = 1;
    const auto one = run_with(c).out;
    c.jobs = 3;
    const auto three = run_with(c).out;
    c.jobs = 0;
    const auto autoj = run_with(c).out;
    CHECK(one == three);
    CHECK(one == autoj);
}

TEST_CASE("--out writes the same bytes as standard output") {
    const auto path = std::filesystem::temp_directory_path() / "spreadbent_cli_test.txt";
    auto c = config("families", 1, 3);
    const auto direct = run_with(c).out;
    c.out_path = path.string();
    const auto r = run_with(c);
    CHECK(r.code == kOk);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str() == direct);
    std::filesystem::remove(path);
    c.out_path = "/nonexistent-dir/x.txt";
    CHECK(run_with(c).code == kBadArguments);
}

TEST_CASE("verify passes") {
    const auto r = run_with(config("verify"));
    CHECK(r.code == kOk);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(r.out.find("lemma2 m=4: PASS") != std::string::npos);
    CHECK(r.out.find("thm3 q=4 b=2 m=4: closed-form 12 == brute 12") != std::string::npos);
}

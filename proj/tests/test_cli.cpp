#include "dualpoly/cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

using namespace dualpoly;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = cli::run(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name)
{
    auto dir = std::filesystem::temp_directory_path() / "dualpoly_cli_tests";
    std::filesystem::create_directories(dir);
    return dir / name;
}

std::string slurp(const std::filesystem::path& p)
{
    std::ifstream f(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(f), {}};
}

void spit(const std::filesystem::path& p, const std::string& text)
{
    std::ofstream f(p, std::ios::binary);
    f << text;
}

bool has_line(const std::string& text, const std::string& line)
{
    return ("\n" + text).find("\n" + line + "\n") != std::string::npos;
}

} // namespace

TEST(CliOrCert, SmallCases)
{
    auto r4 = run({"or-cert", "--n", "4"});
    EXPECT_EQ(r4.code, 0);
    EXPECT_TRUE(has_line(r4.out, "ratio 3/1"));
    EXPECT_TRUE(has_line(r4.out, "phd 3"));
    EXPECT_TRUE(has_line(r4.out, "dualpoly-or-certificate v1"));

    auto r2 = run({"or-cert", "--n", "2"});
    EXPECT_EQ(r2.code, 0);
    EXPECT_TRUE(has_line(r2.out, "ratio 2/1"));
    EXPECT_TRUE(has_line(r2.out, "phd 2"));

    EXPECT_EQ(run({"or-cert", "--n", "1"}).code, 2);
    EXPECT_EQ(run({"or-cert", "--n", "x"}).code, 2);
    EXPECT_EQ(run({"or-cert"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"bogus"}).code, 2);
}

TEST(CliOrCert, CsvFormat)
{
    auto r = run({"or-cert", "--n", "4", "--format", "csv"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.substr(0, cli::or_csv_header().size()), cli::or_csv_header());
    EXPECT_EQ(r.out.find("dualpoly-or-certificate"), std::string::npos);
}

TEST(CliVerify, ValidTamperedTruncated)
{
    auto path = scratch("cert9.txt");
    ASSERT_EQ(run({"or-cert", "--n", "9", "--out", path.string()}).code, 0);
    const std::string text = slurp(path);

    auto ok = run({"verify", path.string()});
    EXPECT_EQ(ok.code, 0) << ok.out << ok.err;
    EXPECT_TRUE(has_line(ok.out, "verdict accepted"));

    // Perturb P(1) = 1/3 by 1/1000000.
    auto bad_path = scratch("cert9_bad.txt");
    std::string exact = text;
    exact.replace(exact.find("1/3", exact.find("\nP ")), 3, (Rat(1, 3) + Rat(1, 1000000)).str());
    spit(bad_path, exact);
    auto rej = run({"verify", bad_path.string()});
    EXPECT_EQ(rej.code, 1);
    EXPECT_TRUE(has_line(rej.out, "verdict rejected"));

    auto trunc_path = scratch("cert9_trunc.txt");
    spit(trunc_path, text.substr(0, text.size() / 2));
    EXPECT_EQ(run({"verify", trunc_path.string()}).code, 2);

    EXPECT_EQ(run({"verify", scratch("does_not_exist.txt").string()}).code, 2);
    EXPECT_EQ(run({"verify", path.string(), "--eps", "1/7"}).code, 0);
    EXPECT_EQ(run({"verify", path.string(), "--eps", "1"}).code, 2);
}

TEST(CliDegree, Examples)
{
    auto a = run({"degree", "--func", "or", "--n", "1", "--eps", "1/3"});
    EXPECT_EQ(a.code, 0);
    EXPECT_TRUE(has_line(a.out, "degree 1"));

    auto b = run({"degree", "--func", "or", "--n", "9", "--eps", "1/14"});
    EXPECT_EQ(b.code, 0);
    EXPECT_TRUE(has_line(b.out, "degree 6"));
    EXPECT_TRUE(has_line(b.out, "witness_verdict accepted"));

    auto c = run({"degree", "--func", "parity", "--n", "6", "--eps", "1/3"});
    EXPECT_EQ(c.code, 0);
    EXPECT_TRUE(has_line(c.out, "degree 6"));

    auto t = run({"degree", "--func", "threshold", "--t", "2", "--n", "5", "--eps", "1/3", "--degree", "5"});
    EXPECT_EQ(t.code, 0);
    EXPECT_TRUE(has_line(t.out, "eps_star(d=5) 0/1"));

    EXPECT_EQ(run({"degree", "--func", "or", "--n", "9", "--eps", "0.1"}).code, 2);
    EXPECT_EQ(run({"degree", "--func", "or", "--n", "9", "--eps", "1"}).code, 2);
    EXPECT_EQ(run({"degree", "--func", "and", "--n", "9", "--eps", "1/3"}).code, 2);
    EXPECT_EQ(run({"degree", "--func", "or", "--n", "17", "--eps", "1/3"}).code, 2);
    EXPECT_EQ(run({"degree", "--func", "threshold", "--n", "4", "--eps", "1/3"}).code, 2);
}

TEST(CliDegree, WitnessFileVerifies)
{
    auto path = scratch("witness.txt");
    ASSERT_EQ(run({"degree", "--func", "or", "--n", "6", "--eps", "1/14", "--out", path.string()}).code, 0);
    auto r = run({"verify", path.string()});
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_TRUE(has_line(r.out, "kind dualpoly-witness"));
}

TEST(CliSweep, RowsAndDeterminism)
{
    auto a = run({"sweep", "--n", "2..10"});
    EXPECT_EQ(a.code, 0);
    std::istringstream is(a.out);
    std::string line;
    std::getline(is, line);
    EXPECT_EQ(line + "\n", cli::or_csv_header());
    int rows = 0;
    while (std::getline(is, line)) {
        ++rows;
        EXPECT_EQ(std::count(line.begin(), line.end(), ','), 6);
    }
    EXPECT_EQ(rows, 9);
    EXPECT_EQ(run({"sweep", "--n", "2..10"}).out, a.out);

    auto text = run({"sweep", "--n", "2..4", "--format", "text"});
    EXPECT_EQ(text.code, 0);

    EXPECT_EQ(run({"sweep", "--n", "10..2"}).code, 2);
    EXPECT_EQ(run({"sweep", "--n", "1..5"}).code, 2);
    EXPECT_EQ(run({"sweep", "--n", "a..b"}).code, 2);
    EXPECT_EQ(run({"sweep", "--n", "2..10", "--format", "xml"}).code, 2);
}

TEST(CliThreshold, Examples)
{
    auto a = run({"threshold", "--n", "4", "--t", "1"});
    EXPECT_EQ(a.code, 0);
    EXPECT_TRUE(has_line(a.out, "phd 1"));
    EXPECT_TRUE(has_line(a.out, "|T| 2"));
    EXPECT_TRUE(has_line(a.out, "or_certificate_ratio 3/1"));

    auto b = run({"threshold", "--n", "9", "--t", "0"});
    EXPECT_EQ(b.code, 0);
    EXPECT_TRUE(has_line(b.out, "squares_only yes"));

    EXPECT_EQ(run({"threshold", "--n", "9", "--t", "10"}).code, 2);

    auto grid = run({"threshold", "--n", "1..5", "--format", "csv"});
    EXPECT_EQ(grid.code, 0);
    EXPECT_EQ(std::count(grid.out.begin(), grid.out.end(), '\n'), 1 + 2 + 3 + 4 + 5 + 6);
}

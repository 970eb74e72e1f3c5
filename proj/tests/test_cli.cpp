#include "harper/cli.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <string>
#include <unistd.h>
#include <vector>

namespace fs = std::filesystem;

namespace {

int run_cli(const std::vector<std::string>& args)
{
    std::vector<const char*> argv{"harper"};
    for (const auto& a : args) argv.push_back(a.c_str());
    return harper::cli::run(int(argv.size()), argv.data());
}

std::string slurp(const fs::path& p)
{
    std::ifstream is(p, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(is), {});
}

struct TempDir {
    fs::path path;
    TempDir()
    {
        path = fs::temp_directory_path() /
               ("harper_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

} // namespace

TEST_CASE("dos subcommand writes the expected CSV")
{
    TempDir tmp;
    const auto out = tmp.path / "dos.csv";
    CHECK(run_cli({"dos", "--method", "elliptic", "--a", "3", "--b", "5",
                   "--steps", "401", "--out", out.string()}) == 0);
    const std::string text = slurp(out);
    std::size_t lines = 0;
    for (char c : text)
        if (c == '\n') ++lines;
    CHECK(lines == 402); // header + 401 rows
    CHECK(text.find("0,inf,divergent") != std::string::npos);

    // identical invocations are byte-identical
    const auto out2 = tmp.path / "dos2.csv";
    CHECK(run_cli({"dos", "--method", "elliptic", "--a", "3", "--b", "5",
                   "--steps", "401", "--out", out2.string()}) == 0);
    CHECK(slurp(out2) == text);
}

TEST_CASE("butterfly subcommand writes a PGM with the Farey flux count")
{
    TempDir tmp;
    const auto out = tmp.path / "b.pgm";
    CHECK(run_cli({"butterfly", "--qmax", "5", "--bins", "32", "--out",
                   out.string()}) == 0);
    const std::string pgm = slurp(out);
    // fluxes: 0/1, 1/1 plus interior Farey(5): phi(2)+..+phi(5) = 9 -> 11
    const std::string header = "P5\n11 32\n255\n";
    CHECK(pgm.rfind(header, 0) == 0);
    CHECK(pgm.size() == header.size() + 11u * 32u);

    // thread count does not change the bytes
    const auto out4 = tmp.path / "b4.pgm";
    CHECK(run_cli({"--threads", "4", "butterfly", "--qmax", "5", "--bins", "32",
                   "--out", out4.string()}) == 0);
    CHECK(slurp(out4) == pgm);
}

TEST_CASE("bands, zeta and partition subcommands")
{
    TempDir tmp;
    const auto bands = tmp.path / "bands.csv";
    CHECK(run_cli({"bands", "--model", "harper2d", "--grid", "2", "--out",
                   bands.string()}) == 0);
    std::size_t rows = 0;
    for (char c : slurp(bands))
        if (c == '\n') ++rows;
    CHECK(rows == 1 + 4 * 15); // header + grid^2 * ab

    const auto zeta = tmp.path / "zeta.csv";
    CHECK(run_cli({"zeta", "--model", "harper", "--max-order", "4", "--a", "1",
                   "--b", "1", "--out", zeta.string()}) == 0);
    const std::string ztext = slurp(zeta);
    CHECK(ztext.find("s,value,method,component") == 0);
    CHECK(ztext.find("1,0,harper_elliptic") != std::string::npos);

    CHECK(run_cli({"partition", "--t", "1", "--order", "12"}) == 0);
}

TEST_CASE("usage and validation failures exit 1")
{
    CHECK(run_cli({"dos", "--method", "nonsense", "--out", "x.csv"}) == 1);
    CHECK(run_cli({"no-such-command"}) == 1);
    TempDir tmp;
    const auto out = tmp.path / "x.csv";
    // a = 4 is not an odd prime
    CHECK(run_cli({"dos", "--method", "counting", "--a", "4", "--n", "2",
                   "--out", out.string()}) == 1);
    CHECK(run_cli({"butterfly", "--qmax", "100", "--out", out.string()}) == 1);
}

TEST_CASE("verify --quick passes")
{
    CHECK(run_cli({"verify", "--quick"}) == 0);
}

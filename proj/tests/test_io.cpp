#include <doctest.h>

#include "paircorr/io.hpp"
#include "paircorr/rng.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace paircorr;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir()
{
    auto dir = fs::temp_directory_path() / "paircorr_test_io";
    fs::create_directories(dir);
    return dir;
}

} // namespace

TEST_CASE("parse_points reduces values and skips blank lines")
{
    std::istringstream in("0.25\n\n   1.5  \n-0.25\r\n+0.125\n1e-3\n\t\n");
    const auto ps = parse_points(in);
    REQUIRE(ps.size() == 5);
    CHECK(ps[0] == 0.25);
    CHECK(ps[1] == 0.5);
    CHECK(ps[2] == 0.75);
    CHECK(ps[3] == 0.125);
    CHECK(ps[4] == 0.001);
}

TEST_CASE("parse_points names the offending line")
{
    std::istringstream in("0.1\n\n0.2\nbanana\n");
    try {
        parse_points(in);
        FAIL("expected LoadError");
    } catch (const LoadError& e) {
        CHECK(std::string(e.what()).find("line 4") != std::string::npos);
    }

    std::istringstream trailing("0.1 0.2\n");
    CHECK_THROWS_AS(parse_points(trailing), LoadError);
    std::istringstream inf("inf\n");
    CHECK_THROWS_AS(parse_points(inf), LoadError);
    std::istringstream empty("\n\n");
    CHECK_THROWS_AS(parse_points(empty), LoadError);
}

TEST_CASE("load_points reports missing files")
{
    CHECK_THROWS_AS(load_points(scratch_dir() / "does_not_exist.txt"), LoadError);
}

TEST_CASE("format_real uses 17 significant digits")
{
    CHECK(format_real(0.1) == "0.10000000000000001");
    CHECK(format_real(0.5) == "0.5");
    CHECK(format_real(1234567.0) == "1234567");
}

TEST_CASE("property: written points read back bit-identically")
{
    Rng rng(3);
    std::vector<double> pts(1000);
    for (auto& p : pts) p = rng.uniform01();
    pts[0] = 0.0;
    pts[1] = std::nextafter(1.0, 0.0);
    pts[2] = 5e-324;
    const PointSet ps(pts);

    std::ostringstream out;
    write_points(out, ps);
    std::istringstream in(out.str());
    CHECK(parse_points(in) == ps);
}

TEST_CASE("write_file_atomic replaces the target and leaves no temporaries")
{
    const auto dir = scratch_dir() / "atomic";
    fs::remove_all(dir);
    fs::create_directories(dir);
    const auto target = dir / "out.txt";

    write_file_atomic(target, "first\n");
    write_file_atomic(target, "second\n");
    std::ifstream in(target);
    std::string content((std::istreambuf_iterator<char>(in)), {});
    CHECK(content == "second\n");

    std::size_t files = 0;
    for ([[maybe_unused]] const auto& entry : fs::directory_iterator(dir)) ++files;
    CHECK(files == 1);

    CHECK_THROWS(write_file_atomic(dir / "missing_subdir" / "x.txt", "data"));
    CHECK_FALSE(fs::exists(dir / "missing_subdir" / "x.txt"));
}

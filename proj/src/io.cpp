#include "paircorr/io.hpp"

#include <cerrno>
#include <cmath>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <system_error>
#include <unistd.h>
#include <vector>

namespace paircorr {

namespace {

std::string_view trim(std::string_view s)
{
    constexpr std::string_view ws = " \t\r\n\f\v";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

} // namespace

PointSet parse_points(std::istream& in)
{
    std::vector<double> values;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view body = trim(line);
        if (line_no == 1 && body.starts_with("\xEF\xBB\xBF")) body = trim(body.substr(3));
        if (body.empty()) continue;
        // from_chars rejects a leading '+', which is a valid decimal literal.
        std::string_view digits = body.front() == '+' ? body.substr(1) : body;
        double v = 0.0;
        const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
        if (ec != std::errc{} || ptr != digits.data() + digits.size() || !std::isfinite(v)) {
            throw LoadError("line " + std::to_string(line_no) + ": cannot parse '" + std::string(body) +
                            "' as a real number");
        }
        values.push_back(v);
    }
    if (in.bad()) throw LoadError("read error after line " + std::to_string(line_no));
    if (values.empty()) throw LoadError("point file contains no points");
    return PointSet::reduced(values);
}

PointSet load_points(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) throw LoadError("cannot open point file " + path.string());
    try {
        return parse_points(in);
    } catch (const LoadError& e) {
        throw LoadError(path.string() + ": " + e.what());
    }
}

std::string format_real(double v)
{
    char buf[64];
    const int len = std::snprintf(buf, sizeof buf, "%.17g", v);
    return std::string(buf, static_cast<std::size_t>(len));
}

void write_points(std::ostream& out, const PointSet& ps)
{
    for (double p : ps) out << format_real(p) << '\n';
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content)
{
    auto tmp = path;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        out.flush();
        if (!out) {
            std::error_code ignored;
            std::filesystem::remove(tmp, ignored);
            throw std::runtime_error("write to " + tmp.string() + " failed");
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::error_code ignored;
        std::filesystem::remove(tmp, ignored);
        throw std::runtime_error("cannot rename " + tmp.string() + " to " + path.string() + ": " + ec.message());
    }
}

} // namespace paircorr

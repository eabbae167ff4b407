#include "spinstar/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace spinstar {

namespace {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::ofstream open_out(const std::string& path, std::ios::openmode mode) {
    std::ofstream os(path, mode);
    if (!os) throw IoError("cannot open for writing: " + path);
    return os;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace

std::string format_double(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

void write_csv(const QRaster& raster, const std::string& path) {
    auto os = open_out(path, std::ios::out | std::ios::binary);
    os << raster.axis0_label;
    for (double phi : raster.axis1) os << ',' << format_double(phi);
    os << '\n';
    for (std::size_t r = 0; r < raster.rows; ++r) {
        os << format_double(raster.axis0[r]);
        for (std::size_t c = 0; c < raster.cols; ++c)
            os << ',' << format_double(raster.at(r, c));
        os << '\n';
    }
    if (!os) throw IoError("write failed: " + path);
}

void write_pgm(const QRaster& raster, const std::string& path) {
    auto os = open_out(path, std::ios::out | std::ios::binary);
    os << "P5\n" << raster.cols << ' ' << raster.rows << "\n65535\n";
    std::vector<unsigned char> row(2 * raster.cols);
    for (std::size_t r = 0; r < raster.rows; ++r) {
        for (std::size_t c = 0; c < raster.cols; ++c) {
            const double q = std::clamp(raster.at(r, c), 0.0, 1.0);
            const auto v = static_cast<uint16_t>(std::lround(q * 65535.0));
            row[2 * c] = static_cast<unsigned char>(v >> 8);
            row[2 * c + 1] = static_cast<unsigned char>(v & 0xff);
        }
        os.write(reinterpret_cast<const char*>(row.data()),
                 static_cast<std::streamsize>(row.size()));
    }
    if (!os) throw IoError("write failed: " + path);
}

void write_text(const std::string& content, const std::string& path) {
    auto os = open_out(path, std::ios::out | std::ios::binary);
    os << content;
    if (!os) throw IoError("write failed: " + path);
}

std::string file_checksum(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw IoError("cannot open for reading: " + path);
    uint64_t h = 0xcbf29ce484222325ull;
    char buf[1 << 14];
    while (is.read(buf, sizeof buf) || is.gcount() > 0) {
        const auto n = is.gcount();
        for (std::streamsize i = 0; i < n; ++i) {
            h ^= static_cast<unsigned char>(buf[i]);
            h *= 0x100000001b3ull;
        }
        if (is.eof()) break;
    }
    std::ostringstream os;
    os << std::hex;
    os.width(16);
    os.fill('0');
    os << h;
    return os.str();
}

std::map<std::string, std::string> parse_config_text(const std::string& text) {
    std::map<std::string, std::string> kv;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const std::string t = trim(line);
        if (t.empty()) continue;
        const auto eq = t.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": expected key = value");
        const std::string key = trim(t.substr(0, eq));
        const std::string value = trim(t.substr(eq + 1));
        if (key.empty())
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": empty key");
        kv[key] = value;
    }
    return kv;
}

std::map<std::string, std::string> parse_config_file(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw IoError("cannot open config file: " + path);
    std::ostringstream os;
    os << is.rdbuf();
    return parse_config_text(os.str());
}

}  // namespace spinstar

#include "riordan/oeis.hpp"

#include <sys/file.h>
#include <unistd.h>

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#ifdef RIORDAN_HAVE_OPENSSL
#define CPPHTTPLIB_OPENSSL_SUPPORT
#endif
#include <httplib.h>

namespace riordan::oeis {

namespace {

namespace fs = std::filesystem;

void validate_id(const std::string& id) {
    bool ok = id.size() == 7 && id[0] == 'A';
    for (size_t i = 1; ok && i < id.size(); ++i)
        ok = std::isdigit(static_cast<unsigned char>(id[i])) != 0;
    if (!ok) throw std::invalid_argument("sequence id must match A followed by six digits: " + id);
}

std::string bfile_name(const std::string& id) { return "b" + id.substr(1) + ".txt"; }

std::optional<std::string> read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Write-through with an exclusive advisory lock; readers just open.
void write_locked(const fs::path& p, const std::string& body) {
    fs::create_directories(p.parent_path().empty() ? fs::path(".") : p.parent_path());
    FILE* f = std::fopen(p.c_str(), "wb");
    if (!f) throw std::runtime_error("cannot open cache file " + p.string());
    flock(fileno(f), LOCK_EX);
    std::fwrite(body.data(), 1, body.size(), f);
    flock(fileno(f), LOCK_UN);
    std::fclose(f);
}

std::optional<std::string> default_http_get(const std::string& url) {
    auto scheme_end = url.find("://");
    if (scheme_end == std::string::npos) return std::nullopt;
    auto host_start = scheme_end + 3;
    auto path_start = url.find('/', host_start);
    std::string origin = url.substr(0, path_start);
    std::string path = path_start == std::string::npos ? "/" : url.substr(path_start);
    httplib::Client cli(origin);
    cli.set_follow_location(true);
    cli.set_connection_timeout(10);
    cli.set_read_timeout(30);
    auto res = cli.Get(path);
    if (!res || res->status != 200) return std::nullopt;
    return res->body;
}

}  // namespace

BFile parse_bfile(const std::string& id, const std::string& body) {
    BFile out;
    out.id = id;
    std::istringstream in(body);
    std::string line;
    long long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t i = 0;
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i >= line.size() || line[i] == '#') continue;
        std::istringstream ls(line.substr(i));
        long long index;
        std::string value;
        if (!(ls >> index >> value))
            throw std::runtime_error(id + " b-file: malformed line " + std::to_string(lineno));
        std::string trailing;
        if (ls >> trailing && !trailing.empty() && trailing[0] != '#')
            throw std::runtime_error(id + " b-file: malformed line " + std::to_string(lineno));
        Rational v;
        try {
            v = Rational::from_string(value);
        } catch (const std::exception&) {
            throw std::runtime_error(id + " b-file: malformed line " + std::to_string(lineno));
        }
        if (!v.is_integer())
            throw std::runtime_error(id + " b-file: non-integer value at line " + std::to_string(lineno));
        if (!out.entries.empty() && index <= out.entries.back().first)
            throw std::runtime_error(id + " b-file: indices not increasing at line " +
                                     std::to_string(lineno));
        out.entries.emplace_back(index, std::move(v));
    }
    return out;
}

BFile fetch_bfile(const std::string& id, const FetchOptions& opts) {
    validate_id(id);
    const std::string fname = bfile_name(id);

    if (opts.offline) {
        fs::path p = fs::path(opts.fixture_dir) / fname;
        auto body = read_file(p);
        if (!body) throw std::runtime_error("missing offline fixture " + p.string());
        return parse_bfile(id, *body);
    }

    std::string cache_dir = opts.cache_dir;
    if (cache_dir.empty()) {
        if (const char* env = std::getenv("RIORDAN_OEIS_CACHE")) cache_dir = env;
    }
    fs::path cache = fs::path(cache_dir.empty() ? "." : cache_dir) / (id + ".txt");
    if (!cache_dir.empty()) {
        if (auto body = read_file(cache)) return parse_bfile(id, *body);
    }

    const std::string url = "https://oeis.org/" + id + "/" + fname;
    HttpGet get = opts.http_get ? opts.http_get : default_http_get;
    auto body = get(url);
    if (!body)
        throw std::runtime_error("fetching " + url +
                                 " failed; retry later or use the offline fixture mode");
    BFile parsed = parse_bfile(id, *body);
    if (!cache_dir.empty()) write_locked(cache, *body);
    return parsed;
}

CrosscheckReport crosscheck_triangle(const Triangle<Rational>& tri, const BFile& bfile,
                                     std::optional<long long> start_index) {
    std::vector<Rational> linear;
    for (const auto& row : tri.rows)
        for (const auto& v : row) {
            if (!v.is_integer()) throw std::domain_error("triangle entry is not an integer");
            linear.push_back(v);
        }
    CrosscheckReport rep;
    if (bfile.entries.empty()) return rep;
    long long start = start_index.value_or(bfile.entries.front().first);
    for (const auto& [idx, val] : bfile.entries) {
        long long pos = idx - start;
        if (pos < 0 || pos >= static_cast<long long>(linear.size())) continue;
        ++rep.compared;
        if (!(linear[static_cast<size_t>(pos)] == val)) {
            rep.first_mismatch = pos;
            break;
        }
    }
    return rep;
}

}  // namespace riordan::oeis

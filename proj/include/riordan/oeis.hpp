#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "riordan/rational.hpp"
#include "riordan/riordan_array.hpp"

namespace riordan::oeis {

// Parsed b-file: (index, value) pairs with strictly increasing indices and
// exact integer values.
struct BFile {
    std::string id;
    std::vector<std::pair<long long, Rational>> entries;
};

// Returns the response body for a URL, or nullopt on failure. Injectable
// so tests can count fetches or run hermetically.
using HttpGet = std::function<std::optional<std::string>(const std::string& url)>;

struct FetchOptions {
    std::string cache_dir;    // on-disk cache, one file per id
    bool offline = false;     // read the vendored fixture, never the network
    std::string fixture_dir;  // where vendored b-files live
    HttpGet http_get;         // defaults to a real HTTP client
};

BFile parse_bfile(const std::string& id, const std::string& body);

// Fetches b<digits>.txt for the sequence. Offline mode reads
// fixture_dir/b<digits>.txt. Online mode consults the cache first, then
// the network, and writes the cache under an exclusive advisory lock.
BFile fetch_bfile(const std::string& id, const FetchOptions& opts);

struct CrosscheckReport {
    long long compared = 0;                  // overlapping positions checked
    std::optional<long long> first_mismatch;  // linear index of the first mismatch
    bool full_match() const { return compared > 0 && !first_mismatch; }
};

// Compares the row-major linearization of the triangle against the b-file
// values. start_index says which b-file index lines up with linear
// position 0; by default the fixture's first index.
CrosscheckReport crosscheck_triangle(const Triangle<Rational>& tri, const BFile& bfile,
                                     std::optional<long long> start_index = std::nullopt);

}  // namespace riordan::oeis

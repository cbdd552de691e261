#pragma once

// Network retrieval of OEIS b-files. Kept apart from the parser so that
// offline builds and tests never touch a socket. The base URL comes from
// the OEIS_BASE_URL environment variable (default: the public site);
// fetch errors are distinct from parse errors and never fall back to a
// bundled fixture.

#include "umbra/oeis.hpp"

#include <httplib.h>

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace umbra {

class FetchError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class OfflineError : public FetchError {
public:
    explicit OfflineError(const std::string& id)
        : FetchError("offline mode: refusing to fetch " + id + " from the network") {}
};

inline std::string oeis_base_url() {
    if (const char* env = std::getenv("OEIS_BASE_URL")) {
        return env;
    }
    return "https://oeis.org";
}

// Path of the b-file for an id, e.g. "A000217" -> "/A000217/b000217.txt".
inline std::string bfile_path(const std::string& id) {
    return "/" + id + "/b" + id.substr(1) + ".txt";
}

inline std::string fetch_bfile(const std::string& id, bool offline = false) {
    if (!valid_id(id)) {
        throw std::invalid_argument("fetch_bfile: malformed OEIS id '" + id +
                                    "' (expected A followed by 6 digits)");
    }
    if (offline) {
        throw OfflineError(id);
    }
    const std::string base = oeis_base_url();
    try {
        httplib::Client client(base);
        client.set_follow_location(true);
        auto res = client.Get(bfile_path(id));
        if (!res) {
            throw FetchError("fetch_bfile: network error for " + id + " via " + base + ": " +
                             httplib::to_string(res.error()));
        }
        if (res->status != 200) {
            throw FetchError("fetch_bfile: HTTP " + std::to_string(res->status) + " for " + id +
                             " via " + base);
        }
        return res->body;
    } catch (const std::invalid_argument& e) {
        // httplib rejects URLs whose scheme this build cannot speak.
        throw FetchError("fetch_bfile: unsupported base URL '" + base + "': " + e.what());
    }
}

}  // namespace umbra

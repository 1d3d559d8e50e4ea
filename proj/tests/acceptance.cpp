// Acceptance suite: runs every criterion and prints one pass/fail line each,
// then compares the rendered golden corpus byte-for-byte against the files
// under goldens/ (or $MODP_SATAKE_GOLDENS).

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "modp/json_io.hpp"
#include "modp/verify.hpp"

namespace fs = std::filesystem;

static bool check_goldens(std::string* detail) {
    fs::path dir = "goldens";
    if (const char* env = std::getenv("MODP_SATAKE_GOLDENS")) dir = env;
    if (!fs::exists(dir)) {
        *detail = "golden directory " + dir.string() + " not found";
        return false;
    }
    for (const auto& [rel, content] : modp::golden_corpus()) {
        std::ifstream is(dir / rel, std::ios::binary);
        if (!is) {
            *detail = "missing golden " + (dir / rel).string();
            return false;
        }
        std::stringstream buf;
        buf << is.rdbuf();
        if (buf.str() != content) {
            *detail = "golden mismatch at " + (dir / rel).string();
            return false;
        }
    }
    return true;
}

int main(int argc, char** argv) {
    unsigned seed = 12345;
    bool goldens = true;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc) seed = std::atoi(argv[i + 1]);
        if (std::strcmp(argv[i], "--no-goldens") == 0) goldens = false;
    }

    bool all_ok = true;
    for (const auto& r : modp::run_acceptance(seed)) {
        std::printf("[%s] %2d. %s (%.2fs)%s%s\n", r.passed ? "PASS" : "FAIL", r.index,
                    r.name.c_str(), r.seconds, r.detail.empty() ? "" : " -- ",
                    r.detail.c_str());
        all_ok = all_ok && r.passed;
    }
    if (goldens) {
        std::string detail;
        bool ok = check_goldens(&detail);
        std::printf("[%s] 12. golden files byte-identical%s%s\n", ok ? "PASS" : "FAIL",
                    detail.empty() ? "" : " -- ", detail.c_str());
        all_ok = all_ok && ok;
    }
    return all_ok ? 0 : 1;
}

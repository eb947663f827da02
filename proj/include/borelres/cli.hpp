#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace borelres {

inline constexpr const char* kToolVersion = "0.1.0";

/// Environment variable holding the default field (`q` or `p:<prime>`).
inline constexpr const char* kFieldEnv = "BORELRES_FIELD";

struct RunConfig {
    std::string command;  ///< gen | min | complex | verify | betti | lattice
    std::string target;   ///< complex: P or Q
    std::size_t vars = 0;
    std::optional<std::uint64_t> degree;
    std::string borel;    ///< ideal spec
    std::string with;     ///< min: second ideal
    std::string field = "q";
    std::string method;
    std::string check;
    std::string interval;
    std::string complex_path;
    std::string out_path;
    std::string report_path;
    bool random = false;
    std::size_t gens = 1;
    std::uint64_t seed = 0;
    unsigned jobs = 1;
};

/// FNV-1a over the result-affecting fields (not jobs or output paths); an
/// input complex contributes its file contents rather than its path.
std::string config_hash(const RunConfig& cfg);

/// Exit codes: 0 success, 1 a check failed, 2 input error.
int run_command(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Parses argv with CLI11 and runs; usage errors exit 2.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace borelres

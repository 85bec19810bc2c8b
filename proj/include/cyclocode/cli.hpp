#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace cyclocode {

/// Flat result record for one constructed code, as printed by the CLI
/// (one line of text, or one JSON object with this field order).
struct CodeReport {
    std::uint32_t p = 0, q = 0, l = 0;
    std::string kind;                   // "pure" or "bordered"
    std::optional<std::string> alpha;   // border token, bordered codes only
    std::string m;                      // comma-joined mask tokens
    std::size_t N = 0, k = 0;
    std::optional<unsigned> d;
    std::optional<std::string> method;  // distance method actually used
    bool self_dual = false;
    unsigned bound = 0;
    bool extremal = false;
    std::uint64_t elapsed_ms = 0;       // stays 0 unless --timing was given

    std::string to_json() const;
    std::string to_text() const;
};

/// Runs one CLI invocation (args without the program name). Returns the
/// process exit code: 0 success, 1 verification failure or exhausted
/// budget, 2 usage or domain errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cyclocode

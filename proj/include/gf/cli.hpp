#ifndef GF_CLI_HPP
#define GF_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gf
{

/// Everything besides the inputs that a run depends on.
struct RunConfig {
    long precision = 256;
    int extra_degree = 0;
    std::uint64_t seed = 0x5eed;
    std::string format = "json"; // json | csv | text
    std::string output;          // empty = standard output
    std::size_t max_steps = 64;
    std::string unit_order = "maximal"; // maximal | pell
    int max_field_degree = 40;
    bool include_infinity = false;
    std::uint64_t twist = 0; // 0 = q

    /// key=value lines in a fixed key order.
    std::string to_kv() const;
    /// Throws SyntaxError for an unknown key or malformed value.
    void set(const std::string &key, const std::string &value);
    /// Reads a key=value file; '#' starts a comment.
    void load_file(const std::string &path);
    std::vector<std::string> keys() const;
};

/// Built-in defaults, then GF_PRECISION from the environment.
RunConfig default_config();

/// Runs the command line (args excludes the program name). Returns the exit
/// code: 0 success, 1 domain error, 2 usage or syntax error.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace gf

#endif

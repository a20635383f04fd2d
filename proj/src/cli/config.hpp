#pragma once

#include <istream>
#include <map>
#include <stdexcept>
#include <string>

namespace eqsteenrod::cli {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Flat `key = value` lines; `#` starts a comment, blank lines are skipped.
/// Later duplicates are an error.
std::map<std::string, std::string> parse_config(std::istream& in);
std::map<std::string, std::string> load_config(const std::string& path);

}  // namespace eqsteenrod::cli

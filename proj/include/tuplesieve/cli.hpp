// cli.hpp
//
// Command-line front end. Subcommands: tuples, series, weights, verify,
// matrix, e2, identities. Reports are JSON by default (CSV where noted),
// and every run carries its parameters, a content hash of them, and a
// timestamp, so reruns are comparable. Exit codes: 0 success, 1 usage
// error, 2 assertion failure (identity mismatch or a ratio outside its
// calibration band).

#pragma once

#include <string>
#include <vector>

namespace tuplesieve::cli {

int run(const std::vector<std::string>& args);
int run(int argc, char** argv);

// hex SHA-256 of a string (content hashes in reports)
std::string sha256_hex(const std::string& payload);

}  // namespace tuplesieve::cli

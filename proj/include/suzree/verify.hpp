#pragma once

#include "suzree/report.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace suzree::cli {

struct RunConfig {
    std::vector<std::string> case_names;
    std::string data_dir = "data";
    std::string out_dir;  // empty = stdout only
    std::vector<std::string> formats = {"text"};
    bool parallel = false;
    std::vector<std::string> models = {"z4", "s3", "d8", "q8", "a4", "sp42"};
};

/// `run` command: executes the named cases (or the model suite for "models")
/// and emits reports. Returns the verify-style exit status.
int run_command(const RunConfig& config, std::ostream& log);

/// `verify` command: runs b2, g2, f4, b2-disconnected and the model suite;
/// also emits the conjectural f4-disconnected table, which never affects the
/// status. Exit 0 iff every comparison passes, 1 on a mismatch (with a cell
/// listing), 2 on data or I/O errors.
int verify_all(const RunConfig& config, std::ostream& log);

}  // namespace suzree::cli

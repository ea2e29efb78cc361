#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "cycroots/common.hpp"
#include "cycroots/spectral.hpp"

namespace cycroots {

/// A matrix read from CSV or JSON. Dense formats fill `matrix`; the
/// jordan-pair format fills Z, blocks and h, and `matrix` holds Z J Z^{-1}.
struct MatrixDocument {
    std::string format;  // dense-real, dense-complex or jordan-pair
    std::string name;
    MatrixXc matrix;
    bool real = true;
    MatrixXc Z;
    std::vector<JordanBlock> blocks;
    std::optional<int> h;
};

/// Parses CSV (rows of comma separated reals, '#' comments) or a JSON
/// document. Throws InputError naming the offending field. A JSON object
/// with a "roots" array (the output of `roots`) yields roots[index].matrix.
MatrixDocument parse_matrix_document(const std::string& text, std::size_t index = 0);
MatrixDocument load_matrix_document(const std::string& path, std::size_t index = 0);

/// Command-line entry point. Returns the process exit code: 0 on success,
/// 1 on precondition or numerical failures, 2 on I/O, parse and flag errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cycroots

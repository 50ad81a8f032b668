#pragma once

#include <string>
#include <vector>

#include "wdecomp/coord_tensor.hpp"
#include "wdecomp/indexing.hpp"

namespace wdecomp {

inline constexpr const char* kToolVersion = "wdecomp 0.1.0";

struct FileMeta {
    std::string tool = kToolVersion;
    std::vector<MultiIndex> anchors;  // t^{(s)} for s = 0..d; may be empty
    double tolerance = 0.0;
    double residual = 0.0;
};

struct DecompositionFile {
    Decomposition<Complex> decomposition;
    FileMeta meta;
};

[[nodiscard]] std::string serialize_decomposition(const DecompositionFile& file);
[[nodiscard]] DecompositionFile parse_decomposition(const std::string& json_text);

void write_decomposition_file(const std::string& path, const DecompositionFile& file);
[[nodiscard]] DecompositionFile read_decomposition_file(const std::string& path);

}  // namespace wdecomp

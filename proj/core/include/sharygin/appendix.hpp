#pragma once

// Parsed view of the versioned reference point table shipped in
// core/data/appendix_points.txt: twenty points (O, D, A, A+D, ..., 9A+D) in
// all three coordinate forms, plus the errata whitelist for cells that are
// known not to reproduce (currently none).

#include <optional>
#include <string>
#include <vector>

#include "sharygin/curve.hpp"

namespace sharygin {

struct AppendixRow {
    std::string label;  // "O", "D", "A", "A+D", "2A", ...
    int n;              // multiple of A (0 for O and D)
    bool with_d;
    ProjectiveTriple minimal;
    ProjectiveTriple weierstrass;
    ProjectiveTriple cubic;
};

const std::vector<AppendixRow>& appendix_rows();

struct AppendixErratum {
    std::string label;
    Form form;
    std::string note;
};

const std::vector<AppendixErratum>& appendix_errata();

/// "O" -> (0, false), "D" -> (0, true), "kA"/"kA+D" -> (k, false/true).
std::pair<int, bool> parse_point_label(const std::string& label);
std::string point_label(int n, bool with_d);

}  // namespace sharygin

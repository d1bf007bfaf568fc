#pragma once

// Walks the two cosets {nA} and {nA + D}, classifies every point against the
// triangle region, reproduces the reference point table and the printed
// triangle factorizations, and writes a resumable catalog.

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sharygin/appendix.hpp"
#include "sharygin/curve.hpp"
#include "sharygin/triangle.hpp"

namespace sharygin {

struct PointRecord {
    int n;
    bool with_d;
    std::string label;
    WeierstrassPoint weierstrass;
    ProjectiveTriple cubic;
    ProjectiveTriple minimal;
    std::optional<TriangleTriple> triangle;  // primitive integer sides, point order
    bool sharygin;
};

/// Full record for nA (+D). Every extracted triangle is re-verified against
/// the exact bisectral predicate; a triangle that failed it would be a
/// broken invariant and throws std::logic_error.
PointRecord make_record(int n, bool with_d, const WeierstrassPoint& point);

/// Records for (1,-), (1,D), (2,-), ..., (n_max, D). Points advance by
/// incremental addition of A, cross-checked against double-and-add every 16
/// steps; record assembly is farmed out to `threads` workers and merged in
/// order.
std::vector<PointRecord> walk(int n_max, unsigned threads = 1);

/// The (n, with_d) indices of walk records that carry a triangle.
std::vector<std::pair<int, bool>> triangle_indices(int n_max, unsigned threads = 1);

enum class CellStatus { match, match_negated, whitelisted, mismatch };

struct AppendixCell {
    std::string label;
    Form form;
    CellStatus status;
    std::string note;
};

struct AppendixReport {
    std::vector<AppendixCell> cells;
    size_t matches = 0;
    size_t negated = 0;
    size_t whitelisted = 0;
    size_t mismatches = 0;
    bool ok() const { return mismatches == 0; }
};

/// Recomputes all twenty table rows in all three forms and diffs them
/// against the embedded fixture on canonical representatives, falling back
/// to the negated point and then to the errata whitelist.
AppendixReport verify_appendix();

struct FactorGroup {
    std::vector<std::pair<Integer, unsigned>> factors;
    Integer product() const;
    std::string to_string() const;
};

struct CatalogEntry {
    std::string label;
    std::array<FactorGroup, 3> groups;
};

/// The five factored triangles printed in the reference catalog
/// (9A+D, 16A, 23A+D, 30A, 37A+D).
const std::vector<CatalogEntry>& printed_factorizations();

struct FactorizationCheck {
    std::string label;
    std::array<Integer, 3> products;  // printed groups multiplied out
    std::array<Integer, 3> sides;     // recomputed primitive sides, point order
    bool sides_match = false;         // equal as multisets
    std::vector<Integer> nonprime_small_factors;  // printed factors < 10^6 failing primality
    bool ok() const { return sides_match && nonprime_small_factors.empty(); }
};

struct FactorizationReport {
    std::vector<FactorizationCheck> checks;
    bool ok() const {
        for (const FactorizationCheck& c : checks)
            if (!c.ok()) return false;
        return true;
    }
};

/// Multiplies out each printed factor group exactly and compares with the
/// recomputed sides; factors are never re-derived. Printed factors below
/// 10^6 are additionally primality-checked.
FactorizationReport verify_factorizations();

enum class CatalogFormat { json, csv };

std::string record_to_json(const PointRecord& record);
std::string record_to_csv(const PointRecord& record);
std::string csv_header();

struct EmitSummary {
    int first_n = 1;
    int last_n = 0;
    size_t records_written = 0;
    size_t sharygin_count = 0;
    bool resumed = false;
};

/// One-shot emission of records for n = 1..n_max.
EmitSummary emit_catalog(int n_max, CatalogFormat format, std::ostream& out, unsigned threads = 1);

/// Checkpointed emission: continues from checkpoint_path when it exists
/// (appending to output_path), otherwise starts fresh; the checkpoint is
/// rewritten atomically after the output is flushed, so a failed run leaves
/// the previous checkpoint intact.
EmitSummary emit_catalog_resumable(int n_max, CatalogFormat format,
                                   const std::string& output_path,
                                   const std::string& checkpoint_path, unsigned threads = 1);

/// Generator A = (-4,-12) and torsion point D = (0,0) as group-law carriers.
WeierstrassPoint generator_point();
WeierstrassPoint torsion_point();

}  // namespace sharygin

#pragma once

// Bundled example knots and CSV import of polynomial-level entries.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "knotdist/seifert.hpp"

namespace knotdist {

struct BundledEntry {
    std::string label;
    std::optional<SeifertMatrix> matrix;  // absent for polynomial-only entries
    KnotInvariants expected;
    std::string note;
};

class KnotTable {
public:
    // The built-in entries 3_1, 4_1, 9_25, already self-checked.
    static KnotTable bundled();

    const std::vector<BundledEntry>& entries() const { return entries_; }

    // Throws UnknownLabel.
    const BundledEntry& find(const std::string& label) const;
    bool contains(const std::string& label) const;

    // Rows `label,polynomial,signature,determinant`; '#' lines and a header row
    // starting with "label" are skipped. Each row is checked: the polynomial must
    // satisfy Seifert's conditions, the signature must be even and the determinant
    // must equal |delta(-1)|. Throws Parse naming the row. Existing labels are replaced.
    std::size_t import_csv(std::string_view text);

    void add(BundledEntry entry);

private:
    std::vector<BundledEntry> entries_;
};

// Recomputes the invariants of every entry with a matrix; throws std::logic_error on mismatch.
void self_check(const std::vector<BundledEntry>& entries);

std::string describe(const BundledEntry& entry);

}  // namespace knotdist

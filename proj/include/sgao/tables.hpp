#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

namespace sgao {

// One compared cell of a reproduction table.
struct TableCheck {
    std::string label;     // e.g. "f(3)" or "zbar(d=3,m=1)"
    std::string expected;  // frozen decimal string
    std::string got;       // computed value (empty when skipped)
    bool ok = false;
    bool skipped = false;
    std::string note;      // skip reason or tolerance remark
};

// A rendered table plus the cell-by-cell comparison against the frozen
// expected values.  Entries whose computation would exceed a resource cap
// are marked skipped instead of failing the whole table.
struct TableReport {
    std::string id;  // catalog id: "I" .. "VI"
    std::string title;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    std::vector<TableCheck> checks;
    std::vector<std::string> notes;  // rendered as footnotes

    int failures() const;
    int skips() const;
    bool ok(bool allow_skip = false) const;
    std::string render(bool with_checks = true) const;
};

struct TableOptions {
    // Run multi-second enumerations (brute-force sweeps) for cells that
    // have no cheap path.  Off by default so table commands stay snappy.
    bool heavy = false;
    // Consult the derived-system cache for the (3,2) and (2,4) columns.
    bool use_cache = true;
    std::filesystem::path cache_dir;  // empty -> default_cache_dir()
    int threads = 1;
    int digits = 30;  // working precision of bound columns
};

// The six reproduction tables:
//   I  (b=2) / II (b=3): class counts f,a,b,c,d by stage.
//   III: upper bounds by stage for the d=2 and d=3 gaskets, with the
//        ratio z/upper for d=2.
//   IV:  Hausdorff dimension and stage-0 upper bound for d=2..10.
//   V:   upper bounds by stage for the b=3 and b=4 gaskets, with ratio.
//   VI:  Hausdorff dimension and stage-0 upper bound for b=3..10 and the
//        b->infinity limit.
TableReport table_class_counts(int b, const TableOptions& opt = {});
TableReport table_upper_by_stage_d(const TableOptions& opt = {});
TableReport table_stage0_by_dim(const TableOptions& opt = {});
TableReport table_upper_by_stage_b(const TableOptions& opt = {});
TableReport table_stage0_by_side(const TableOptions& opt = {});

// id: a catalog number ("I".."VI", or "1".."6") or one of the names
// counts-b2, counts-b3, upper-d, stage0-d, upper-b, stage0-b.
TableReport build_table(const std::string& id, const TableOptions& opt = {});

// {id, title} pairs, in catalog order.
std::vector<std::pair<std::string, std::string>> table_catalog();

}  // namespace sgao

#pragma once

#include <string>
#include <vector>

namespace twistkit {

/// One validation failure (or warning): a stable condition code, where it
/// happened, bidegree when meaningful, and the number of nonzero residual
/// entries.
struct Record {
    std::string condition;
    std::string where;
    int p = 0;
    int q = 0;
    int residual_norm = 0;
    bool warning = false;
    std::string detail;
};

struct Report {
    std::vector<Record> records;

    bool ok(bool treat_warnings_as_errors = false) const {
        for (const auto& r : records)
            if (!r.warning || treat_warnings_as_errors) return false;
        return true;
    }
    void add(Record r) { records.push_back(std::move(r)); }
    void merge(const Report& o) {
        records.insert(records.end(), o.records.begin(), o.records.end());
    }
    std::size_t error_count() const {
        std::size_t n = 0;
        for (const auto& r : records)
            if (!r.warning) ++n;
        return n;
    }
};

} // namespace twistkit

#pragma once

#include <string>
#include <vector>

namespace lie4 {

// One verified claim in a table replay.
struct CheckItem {
    std::string id;
    std::string subject;
    std::string claim;
    bool ok = false;
    std::string detail;
    // Set when the printed item fails and a pinned correction verifies instead.
    std::string erratum;
};

struct TableReport {
    std::string table;
    std::vector<CheckItem> items;

    bool passed() const {
        for (auto& i : items)
            if (!i.ok) return false;
        return true;
    }
    size_t failures() const {
        size_t n = 0;
        for (auto& i : items) n += !i.ok;
        return n;
    }
    size_t errata() const {
        size_t n = 0;
        for (auto& i : items) n += !i.erratum.empty();
        return n;
    }
    void add(CheckItem c) { items.push_back(std::move(c)); }
};

// Printed item fails, correction verifies: counts as ok only in that exact combination.
inline CheckItem with_erratum(CheckItem base, bool printed_ok, const std::string& printed_detail, bool corrected_ok,
                              const std::string& corrected_detail, const std::string& erratum) {
    base.erratum = erratum;
    base.ok = !printed_ok && corrected_ok;
    base.detail = "printed: " + printed_detail + "; corrected: " + corrected_detail;
    if (printed_ok) base.detail += " (stale erratum: printed item verifies)";
    return base;
}

}  // namespace lie4

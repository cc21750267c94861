#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace pathalg {

struct CheckItem {
    std::string label;
    bool passed = false;
    std::string detail;
};

// Itemized pass/fail result shared by the verification suites.
struct CheckReport {
    std::string name;
    std::vector<CheckItem> items;

    void add(std::string label, bool passed, std::string detail = {})
    {
        items.push_back({std::move(label), passed, std::move(detail)});
    }
    bool passed() const
    {
        return std::all_of(items.begin(), items.end(), [](const CheckItem& i) { return i.passed; });
    }
    std::vector<CheckItem> failures() const
    {
        std::vector<CheckItem> out;
        std::copy_if(items.begin(), items.end(), std::back_inserter(out),
                     [](const CheckItem& i) { return !i.passed; });
        return out;
    }
};

}  // namespace pathalg

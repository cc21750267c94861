#pragma once

// Command-line front end. Everything lives in the library so tests can drive
// it in-process.

#include <iosfwd>
#include <string>
#include <vector>

#include "pathalg/homology.hpp"

namespace pathalg::cli {

enum ExitCode : int { kPass = 0, kDiscrepancy = 1, kUsage = 2 };

// argv-style arguments without the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Golden transcription of one column block of the generator table.
struct GoldenTable {
    int n = 0;
    std::vector<GeneratorCell> cells;
    int max_level() const;
};

GoldenTable read_golden(const std::string& path, int n);
std::string golden_path(const std::string& dir, int n);
// Generated table cut to the golden window (degree <= 9, golden levels).
std::vector<GeneratorCell> golden_window(int n, int levels);
// Human-readable differences; empty on agreement.
std::vector<std::string> golden_mismatches(const GoldenTable& golden, const std::vector<GeneratorCell>& generated);

inline constexpr int kGoldenMaxDegree = 9;

}  // namespace pathalg::cli

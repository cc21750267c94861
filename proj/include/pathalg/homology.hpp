#pragma once

// Additive homology of RP^n, ST RP^n and the path space P_n, assembled from
// closed-form ingredients.

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "pathalg/report.hpp"
#include "pathalg/rewrite.hpp"

namespace pathalg {

// Finitely generated abelian group Z^rank + sum Z/t. Torsion orders are prime
// powers kept sorted; Z/4 is one entry 4. Over F2 only `rank` is used and
// means the dimension.
struct AbelianGroup {
    int rank = 0;
    std::vector<int> torsion;

    static AbelianGroup free(int rank) { return {rank, {}}; }
    static AbelianGroup cyclic(int order);
    static AbelianGroup zero() { return {}; }

    bool is_zero() const { return rank == 0 && torsion.empty(); }
    bool has_torsion() const { return !torsion.empty(); }
    int two_torsion_count() const;  // summands Z/2^j
    void canonicalize();
    std::string str() const;  // "Z+Z/2", "Z^2", "0"

    friend AbelianGroup operator+(AbelianGroup a, const AbelianGroup& b);  // direct sum
    friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

enum class Coefficients { ZTrivial, ZTwistedO, ZPullbackO, F2 };

std::string to_string(Coefficients c);
Coefficients parse_coefficients(const std::string& text);
inline bool is_integral(Coefficients c) { return c != Coefficients::F2; }

class UnsupportedCoefficients : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct GradedGroupTable {
    std::string space;
    Coefficients coeff = Coefficients::ZTrivial;
    int degree_bound = 0;
    std::map<int, AbelianGroup> groups;  // absent degree = 0
    // (degree, level) -> block contribution, filled for path-space tables.
    std::map<Cell, AbelianGroup> by_level;

    AbelianGroup at(int degree) const;
    int f2_dim(int degree) const;  // F2 tables only
    void set(int degree, AbelianGroup g);

    friend bool operator==(const GradedGroupTable& a, const GradedGroupTable& b)
    {
        return a.coeff == b.coeff && a.degree_bound == b.degree_bound && a.groups == b.groups;
    }
};

GradedGroupTable rpn_homology(int n, Coefficients coeff);

// Two-row computation for the sphere bundle S^{n-1} -> ST RP^n -> RP^n.
GradedGroupTable st_rpn_homology(int n, Coefficients coeff);

// Orientation system of the negative bundle of the level-k critical manifold.
Coefficients block_local_system(int n, int k);

// coeff is ZTrivial (integral, with the block local systems) or F2.
GradedGroupTable assemble_pn_homology(int n, Coefficients coeff, int degree_bound);

GradedGroupTable uct_f2(const GradedGroupTable& integral);

// F2 path-space table as (degree, level) dimensions.
BigradedDimTable to_bigraded(const GradedGroupTable& f2_table);
BigradedDimTable homology_dims(int n, int degree_bound);

CheckReport consistency_checks(int n);
// Checks (i)-(iii) of the consistency suite on arbitrary tables.
CheckReport table_consistency(int n, const GradedGroupTable& integral, const GradedGroupTable& f2);

struct GeneratorCell {
    int degree;
    int level;
    std::vector<std::string> names;
};

// Named generators per (unshifted degree, level) for levels 0..max_level,
// sorted by level then descending degree.
std::vector<GeneratorCell> generator_table(int n, int max_level);

int stable_ranks(int degree);
// Levels 0 and 1 of the F2 table of P_n at each degree 0..max_degree.
std::vector<int> first_two_columns(int n, int max_degree);

}  // namespace pathalg

#include "pathalg/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "pathalg/geom_checks.hpp"
#include "pathalg/geometry.hpp"

#ifndef PATHALG_GOLDEN_DIR
#define PATHALG_GOLDEN_DIR "tests/golden"
#endif

namespace pathalg::cli {

using nlohmann::json;

namespace {

// ---- document model shared by the three writers --------------------------

json group_json(const AbelianGroup& g) { return {{"rank", g.rank}, {"torsion", g.torsion}}; }

json cell_json(int degree, std::optional<int> level, const std::vector<std::string>& names)
{
    json c;
    c["degree"] = degree;
    c["level"] = level ? json(*level) : json(nullptr);
    c["names"] = names;
    return c;
}

json dim_cell(int degree, std::optional<int> level, std::int64_t dim, const std::vector<std::string>& names = {})
{
    json c = cell_json(degree, level, names);
    c["dim"] = dim;
    return c;
}

json group_cell(int degree, std::optional<int> level, const AbelianGroup& g)
{
    json c = cell_json(degree, level, {});
    c["group"] = group_json(g);
    return c;
}

json report_json(const CheckReport& r)
{
    json items = json::array();
    for (const auto& i : r.items)
        items.push_back({{"label", i.label}, {"passed", i.passed}, {"detail", i.detail}});
    return {{"suite", r.name}, {"passed", r.passed()}, {"items", items}};
}

struct Document {
    json root = json::object();

    Document(const std::string& command)
    {
        root["command"] = command;
        root["summary"] = json::object();
        root["tables"] = json::array();
        root["checks"] = json::array();
        root["notes"] = json::array();
    }
    void table(const std::string& title, json cells) { root["tables"].push_back({{"title", title}, {"cells", std::move(cells)}}); }
    void check(const CheckReport& r) { root["checks"].push_back(report_json(r)); }
    void note(const std::string& s) { root["notes"].push_back(s); }
    bool all_passed() const
    {
        return std::all_of(root["checks"].begin(), root["checks"].end(), [](const json& c) { return c["passed"].get<bool>(); });
    }
};

std::string cell_value(const json& c)
{
    if (c.contains("dim"))
        return std::to_string(c["dim"].get<std::int64_t>());
    AbelianGroup g{c["group"]["rank"].get<int>(), c["group"]["torsion"].get<std::vector<int>>()};
    return g.str();
}

std::string level_text(const json& c) { return c["level"].is_null() ? "" : std::to_string(c["level"].get<int>()); }

std::string joined_names(const json& c)
{
    std::string out;
    for (const auto& n : c["names"])
        out += (out.empty() ? "" : ", ") + n.get<std::string>();
    return out;
}

std::string scalar_text(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void write_md(const Document& doc, std::ostream& out)
{
    const json& r = doc.root;
    out << "# " << r["command"].get<std::string>() << "\n\n";
    for (const auto& [k, v] : r["summary"].items())
        out << "- " << k << ": " << scalar_text(v) << "\n";
    for (const auto& t : r["tables"]) {
        out << "\n## " << t["title"].get<std::string>() << "\n\n| degree | level | names | value |\n|---|---|---|---|\n";
        for (const auto& c : t["cells"])
            out << "| " << c["degree"].get<int>() << " | " << level_text(c) << " | " << joined_names(c) << " | "
                << cell_value(c) << " |\n";
    }
    for (const auto& s : r["checks"]) {
        out << "\n## " << s["suite"].get<std::string>() << (s["passed"].get<bool>() ? " [PASS]" : " [FAIL]") << "\n\n";
        for (const auto& i : s["items"]) {
            out << "- " << (i["passed"].get<bool>() ? "PASS " : "FAIL ") << i["label"].get<std::string>();
            if (!i["detail"].get<std::string>().empty())
                out << " -- " << i["detail"].get<std::string>();
            out << "\n";
        }
    }
    if (!r["notes"].empty()) {
        out << "\n## notes\n\n";
        for (const auto& n : r["notes"])
            out << "- " << n.get<std::string>() << "\n";
    }
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string q = "\"";
    for (char c : s)
        q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

void write_csv(const Document& doc, std::ostream& out)
{
    const json& r = doc.root;
    out << "kind,section,degree,level,names,value,passed,detail\n";
    for (const auto& [k, v] : r["summary"].items())
        out << "summary," << csv_field(k) << ",,,," << csv_field(scalar_text(v)) << ",,\n";
    for (const auto& t : r["tables"])
        for (const auto& c : t["cells"]) {
            std::string names;
            for (const auto& n : c["names"])
                names += (names.empty() ? "" : ";") + n.get<std::string>();
            out << "cell," << csv_field(t["title"].get<std::string>()) << "," << c["degree"].get<int>() << ","
                << level_text(c) << "," << csv_field(names) << "," << csv_field(cell_value(c)) << ",,\n";
        }
    for (const auto& s : r["checks"])
        for (const auto& i : s["items"])
            out << "check," << csv_field(s["suite"].get<std::string>()) << ",,," << csv_field(i["label"].get<std::string>())
                << ",," << (i["passed"].get<bool>() ? "true" : "false") << "," << csv_field(i["detail"].get<std::string>())
                << "\n";
    for (const auto& n : r["notes"])
        out << "note,,,,,," << "," << csv_field(n.get<std::string>()) << "\n";
}

void emit(const Document& doc, const std::string& format, std::ostream& out)
{
    if (format == "json")
        out << doc.root.dump(2) << "\n";
    else if (format == "csv")
        write_csv(doc, out);
    else
        write_md(doc, out);
}

// ---- tables ---------------------------------------------------------------

std::map<Cell, std::vector<std::string>> names_by_cell(int n, int max_level)
{
    std::map<Cell, std::vector<std::string>> out;
    for (auto& c : generator_table(n, max_level))
        out[{c.degree, c.level}] = c.names;
    return out;
}

json path_space_cells(const GradedGroupTable& t, int n)
{
    int top_level = 0;
    for (const auto& [cell, g] : t.by_level)
        top_level = std::max(top_level, cell.level);
    auto names = names_by_cell(n, top_level);
    json cells = json::array();
    for (const auto& [cell, g] : t.by_level) {
        if (t.coeff == Coefficients::F2) {
            auto it = names.find(cell);
            cells.push_back(dim_cell(cell.degree, cell.level, g.rank, it == names.end() ? std::vector<std::string>{} : it->second));
        } else {
            cells.push_back(group_cell(cell.degree, cell.level, g));
        }
    }
    return cells;
}

json plain_cells(const GradedGroupTable& t)
{
    json cells = json::array();
    for (const auto& [d, g] : t.groups)
        cells.push_back(t.coeff == Coefficients::F2 ? dim_cell(d, std::nullopt, g.rank) : group_cell(d, std::nullopt, g));
    return cells;
}

// ---- commands ---------------------------------------------------------------

struct Common {
    std::string format = "md";
    std::uint64_t seed = 0;
    int jobs = 1;
};

int cmd_homology(int n, const std::string& coeff_text, int max_degree, const Common& common, std::ostream& out)
{
    Coefficients coeff = parse_coefficients(coeff_text);
    if (coeff != Coefficients::ZTrivial && coeff != Coefficients::F2)
        throw UnsupportedCoefficients("homology --coeff takes Z or F2");
    Document doc("homology");
    doc.root["summary"] = {{"n", n}, {"coeff", to_string(coeff)}, {"max_degree", max_degree}};

    GradedGroupTable pn = assemble_pn_homology(n, coeff, max_degree);
    doc.table(fmt::format("H(P_{}; {}) by level", n, to_string(coeff)), path_space_cells(pn, n));
    if (coeff == Coefficients::ZTrivial) {
        doc.table(fmt::format("H(P_{}; F2) by level", n), path_space_cells(assemble_pn_homology(n, Coefficients::F2, max_degree), n));
        doc.table(fmt::format("H(ST RP^{}; Z)", n), plain_cells(st_rpn_homology(n, Coefficients::ZTrivial)));
        doc.table(fmt::format("H(ST RP^{}; Z-pullback-o)", n), plain_cells(st_rpn_homology(n, Coefficients::ZPullbackO)));
    }
    doc.table(fmt::format("H(ST RP^{}; F2)", n), plain_cells(st_rpn_homology(n, Coefficients::F2)));
    if (n >= 2)
        doc.check(consistency_checks(n));
    else
        doc.note("ST RP^1 is two circles; the consistency suite starts at n = 2");
    emit(doc, common.format, out);
    return doc.all_passed() ? kPass : kDiscrepancy;
}

std::string words_text(const std::vector<Word>& words)
{
    std::string out;
    for (const auto& w : words)
        out += (out.empty() ? "" : ", ") + w.str();
    return out;
}

std::string rules_text(const std::vector<RewriteRule>& rules)
{
    std::string out;
    for (const auto& r : rules)
        out += (out.empty() ? "" : ", ") + r.str();
    return "{" + out + "}";
}

int cmd_verify(int n, int max_degree, bool repair, const Common& common, std::ostream& out)
{
    AlgebraSignature sig(n);
    Document doc("verify");
    RewriteSystem rs = standard_system(n, max_degree);
    BigradedDimTable algebra = hilbert(rs, max_degree);
    BigradedDimTable homology = homology_dims(n, max_degree);
    DiscrepancyReport diff = compare(algebra, homology);
    annotate_surplus(diff, rs);

    doc.root["summary"] = {{"n", n},
                           {"parity_class", to_string(sig.parity())},
                           {"max_degree", max_degree},
                           {"weight_bound", rs.weight_bound()},
                           {"rules", rs.rules().size()}};

    CheckReport presentation{fmt::format("presentation vs homology, n={}, degrees <= {}", n, max_degree), {}};
    std::string rules;
    for (const auto& r : rs.rules())
        rules += (rules.empty() ? "" : "; ") + r.str();
    presentation.add("completion up to weight bound", rs.complete(), rules);
    if (diff.empty())
        presentation.add("bigraded Hilbert function = homology table", true, "no discrepancy");
    for (const auto& t : diff.totals)
        presentation.add(fmt::format("degree {} total", t.degree), false,
                         fmt::format("algebra {} vs homology {}", t.algebra, t.homology));
    for (const auto& c : diff.cells)
        presentation.add(fmt::format("cell (degree {}, level {})", c.cell.degree, c.cell.level), false,
                         fmt::format("algebra {} vs homology {}{}", c.algebra, c.homology,
                                     c.surplus.empty() ? "" : "; surplus " + words_text(c.surplus)));
    doc.check(presentation);
    doc.check(filtration_check(rs));
    doc.check(anti_automorphism_check(sig, rs));
    doc.check(heredity_check(n));

    auto basis = irreducible_basis(rs, max_degree);
    json cells = json::array();
    for (const auto& [cell, words] : basis) {
        std::vector<std::string> names;
        for (const auto& w : words)
            names.push_back(w.str());
        cells.push_back(dim_cell(cell.degree, cell.level, static_cast<std::int64_t>(words.size()), names));
    }
    doc.table("normal-form basis by (degree, level)", cells);

    if (!diff.empty() && repair) {
        RepairResult rr = repair_search(sig, homology, max_degree);
        CheckReport survivors{fmt::format("confluent repairs matching homology up to degree {}", max_degree), {}};
        for (const auto& s : rr.survivors)
            survivors.add(rules_text(s.effective()), true,
                          fmt::format("added {}; derived by completion {}", rules_text(s.added), rules_text(s.derived)));
        if (rr.survivors.empty())
            survivors.add("no augmentation survives", false,
                          rr.unrepairable_degree ? fmt::format("unrepairable at degree {}", *rr.unrepairable_degree) : "");
        json repairs = json::array();
        for (const auto& s : rr.survivors) {
            json added = json::array(), derived = json::array();
            for (const auto& r : s.added)
                added.push_back(r.str());
            for (const auto& r : s.derived)
                derived.push_back(r.str());
            repairs.push_back({{"added", added}, {"derived", derived}});
        }
        doc.root["repairs"] = {{"survivors", repairs}, {"rejected", rr.rejected}};
        doc.root["checks"].push_back(report_json(survivors));
        // Survivors are informational; the literal presentation still differs.
        doc.root["checks"].back()["informational"] = true;
        for (const auto& r : rr.rejected)
            doc.note("rejected " + r);
    }
    emit(doc, common.format, out);
    bool ok = true;
    for (const auto& c : doc.root["checks"])
        if (!c.contains("informational"))
            ok = ok && c["passed"].get<bool>();
    return ok ? kPass : kDiscrepancy;
}

struct IndexOptions {
    int n = 1;
    int k = 1;
    int segments = 0;  // 0: max(8, 4k+4)
    double fd_step = 1e-4;
    double zero_tol = 1e-3;
};

int cmd_geom_index(const IndexOptions& o, const Common& common, std::ostream& out)
{
    int N = o.segments > 0 ? o.segments : std::max(8, 4 * o.k + 4);
    geom::IndexTolerances tol;
    tol.fd_step = o.fd_step;
    tol.zero_tol = o.zero_tol;
    geom::IndexResult r = geom::critical_index(o.n, o.k, N, tol);
    // Chart independence: a randomly rotated frame at every sample.
    geom::IndexResult rotated = geom::critical_index(o.n, o.k, N, tol, geom::trial_seed(common.seed, 1) | 1);

    Document doc("geom index");
    doc.root["summary"] = {{"n", o.n},
                           {"k", o.k},
                           {"segments", N},
                           {"dimension", r.dimension},
                           {"index", r.index},
                           {"nullity", r.nullity},
                           {"gradient_norm", r.gradient_norm},
                           {"fd_step", tol.fd_step},
                           {"zero_tol", tol.zero_tol}};
    doc.root["eigenvalues"] = r.eigenvalues;
    CheckReport c{fmt::format("index and nullity at level {} (n={}, N={})", o.k, o.n, N), {}};
    int ei = geom::expected_index(o.n, o.k), en = geom::expected_nullity(o.n, o.k);
    c.add(fmt::format("(index, nullity) = ({}, {})", ei, en), r.index == ei && r.nullity == en,
          fmt::format("computed ({}, {})", r.index, r.nullity));
    c.add("gradient norm < 1e-8", r.gradient_norm < tol.grad_tol, fmt::format("{:.3e}", r.gradient_norm));
    c.add("chart independent", rotated.index == r.index && rotated.nullity == r.nullity,
          fmt::format("rotated charts give ({}, {})", rotated.index, rotated.nullity));
    doc.check(c);
    emit(doc, common.format, out);
    return doc.all_passed() ? kPass : kDiscrepancy;
}

int cmd_geom_suite(const std::string& name, const CheckReport& r, const Common& common, std::ostream& out)
{
    Document doc("geom " + name);
    doc.root["summary"] = {{"seed", common.seed}, {"jobs", common.jobs}};
    doc.check(r);
    emit(doc, common.format, out);
    return doc.all_passed() ? kPass : kDiscrepancy;
}

json generator_cells(const std::vector<GeneratorCell>& cells)
{
    json out = json::array();
    for (const auto& c : cells)
        out.push_back(dim_cell(c.degree, c.level, static_cast<std::int64_t>(c.names.size()), c.names));
    return out;
}

CheckReport names_match_homology(int n, const std::vector<GeneratorCell>& cells)
{
    int top = 0;
    for (const auto& c : cells)
        top = std::max(top, c.degree);
    GradedGroupTable f2 = assemble_pn_homology(n, Coefficients::F2, top);
    CheckReport r{fmt::format("generator names vs F2 homology, n={}", n), {}};
    std::string bad;
    for (const auto& c : cells) {
        auto it = f2.by_level.find({c.degree, c.level});
        int dim = it == f2.by_level.end() ? 0 : it->second.rank;
        if (dim != static_cast<int>(c.names.size()))
            bad += fmt::format(" ({}, {}): {} names vs dim {}", c.degree, c.level, c.names.size(), dim);
    }
    r.add("name count = dimension in every cell", bad.empty(), bad);
    return r;
}

int cmd_table(std::optional<int> n_opt, std::optional<int> levels_opt, bool golden, const std::string& golden_dir,
              const Common& common, std::ostream& out)
{
    if (!n_opt && !golden)
        throw CLI::ValidationError("table needs --n (or --golden for all of n = 1..4)");
    std::vector<int> ns;
    if (n_opt)
        ns.push_back(*n_opt);
    else
        ns = {1, 2, 3, 4};

    Document doc("table");
    doc.root["summary"] = {{"golden", golden}};
    for (int n : ns) {
        std::optional<GoldenTable> g;
        if (golden)
            g = read_golden(golden_path(golden_dir, n), n);
        int levels = levels_opt ? *levels_opt : (g ? g->max_level() + 1 : 2);
        if (levels < 1)
            throw CLI::ValidationError("--levels must be >= 1");
        std::vector<GeneratorCell> cells = golden ? golden_window(n, levels) : generator_table(n, levels - 1);
        doc.table(fmt::format("generators of H(P_{}; F2), levels 0..{}", n, levels - 1), generator_cells(cells));
        doc.check(names_match_homology(n, cells));
        if (g) {
            if (levels > g->max_level() + 1)
                throw CLI::ValidationError(
                    fmt::format("golden table for n={} covers levels 0..{}", n, g->max_level()));
            GoldenTable window = *g;
            std::erase_if(window.cells, [&](const GeneratorCell& c) { return c.level >= levels; });
            CheckReport r{fmt::format("golden table n={}", n), {}};
            auto diffs = golden_mismatches(window, cells);
            r.add(fmt::format("cells agree with {}", golden_path(golden_dir, n)), diffs.empty(),
                  fmt::format("{}", fmt::join(diffs, "; ")));
            doc.check(r);
        }
    }
    emit(doc, common.format, out);
    return doc.all_passed() ? kPass : kDiscrepancy;
}

double env_double(const char* name, double fallback)
{
    const char* v = std::getenv(name);
    if (!v || !*v)
        return fallback;
    try {
        std::size_t used = 0;
        double d = std::stod(v, &used);
        if (used != std::string(v).size())
            throw std::invalid_argument(v);
        return d;
    } catch (const std::exception&) {
        throw CLI::ValidationError(fmt::format("{}='{}' is not a number", name, v));
    }
}

}  // namespace

int GoldenTable::max_level() const
{
    int m = 0;
    for (const auto& c : cells)
        m = std::max(m, c.level);
    return m;
}

std::string golden_path(const std::string& dir, int n) { return fmt::format("{}/table_n{}.txt", dir, n); }

GoldenTable read_golden(const std::string& path, int n)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error(fmt::format("cannot open golden file {}", path));
    GoldenTable g;
    g.n = n;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#')
            continue;
        std::istringstream ls(line);
        GeneratorCell c;
        std::string names;
        if (!(ls >> c.degree >> c.level >> names))
            throw std::runtime_error(fmt::format("{}:{}: expected 'degree level names'", path, lineno));
        std::stringstream ns(names);
        for (std::string name; std::getline(ns, name, ',');)
            c.names.push_back(name);
        g.cells.push_back(std::move(c));
    }
    return g;
}

std::vector<GeneratorCell> golden_window(int n, int levels)
{
    auto cells = generator_table(n, levels - 1);
    std::erase_if(cells, [](const GeneratorCell& c) { return c.degree > kGoldenMaxDegree; });
    return cells;
}

std::vector<std::string> golden_mismatches(const GoldenTable& golden, const std::vector<GeneratorCell>& generated)
{
    std::map<Cell, std::vector<std::string>> want, got;
    for (const auto& c : golden.cells)
        want[{c.degree, c.level}] = c.names;
    for (const auto& c : generated)
        got[{c.degree, c.level}] = c.names;
    std::vector<std::string> out;
    std::set<Cell> all;
    for (const auto& [cell, v] : want)
        all.insert(cell);
    for (const auto& [cell, v] : got)
        all.insert(cell);
    for (const Cell& cell : all) {
        auto w = want.count(cell) ? want[cell] : std::vector<std::string>{};
        auto g = got.count(cell) ? got[cell] : std::vector<std::string>{};
        if (w != g)
            out.push_back(fmt::format("(degree {}, level {}): golden [{}] vs generated [{}]", cell.degree, cell.level,
                                      fmt::join(w, ","), fmt::join(g, ",")));
    }
    return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Verification of the path-space homology presentation", "pathalg"};
    app.require_subcommand(1);
    Common common;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", common.format, "json, csv or md")->check(CLI::IsMember({"json", "csv", "md"}));
        sub->add_option("--seed", common.seed, "root RNG seed");
        sub->add_option("--jobs", common.jobs, "parallelism cap")->check(CLI::PositiveNumber);
    };

    int n = 0;
    int max_degree = -1;
    std::string coeff = "F2";
    auto* homology = app.add_subcommand("homology", "additive homology of P_n and ST RP^n");
    homology->add_option("--n", n, "ambient dimension")->required()->check(CLI::PositiveNumber);
    homology->add_option("--coeff", coeff, "Z or F2");
    homology->add_option("--max-degree", max_degree, "degree bound")->check(CLI::NonNegativeNumber);
    add_common(homology);

    bool no_repair = false;
    auto* verify = app.add_subcommand("verify", "presentation vs homology, plus the algebraic suites");
    verify->add_option("--n", n, "ambient dimension")->required()->check(CLI::PositiveNumber);
    verify->add_option("--max-degree", max_degree, "degree bound")->check(CLI::NonNegativeNumber);
    verify->add_flag("--no-repair", no_repair, "skip the repair search");
    add_common(verify);

    IndexOptions idx;
    try {
        idx.fd_step = env_double("PATHALG_FD_STEP", idx.fd_step);
        idx.zero_tol = env_double("PATHALG_ZERO_TOL", idx.zero_tol);
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    int trials = -1;
    int max_k = 3;
    std::vector<int> dims;
    auto* geom = app.add_subcommand("geom", "numerical geometry checks");
    geom->require_subcommand(1);
    auto* index = geom->add_subcommand("index", "Morse index and nullity of a critical level");
    index->add_option("--n", idx.n, "ambient dimension")->check(CLI::PositiveNumber);
    index->add_option("--k", idx.k, "level")->check(CLI::NonNegativeNumber);
    index->add_option("--segments", idx.segments, "broken-geodesic segments N")->check(CLI::PositiveNumber);
    index->add_option("--fd-step", idx.fd_step, "finite-difference step (env PATHALG_FD_STEP)");
    index->add_option("--zero-tol", idx.zero_tol, "relative zero-eigenvalue tolerance (env PATHALG_ZERO_TOL)");
    add_common(index);
    auto* concat = geom->add_subcommand("concat-check", "norm additivity and associativity of c_min");
    auto* halfc = geom->add_subcommand("halfcircle-check", "geodesics and vertical half circles");
    auto* yk = geom->add_subcommand("yk-check", "samples of Y_k");
    auto* hopf = geom->add_subcommand("hopf-check", "Hopf sections");
    for (auto* sub : {concat, halfc, yk, hopf}) {
        sub->add_option("--trials", trials, "number of seeded trials")->check(CLI::PositiveNumber);
        add_common(sub);
    }
    for (auto* sub : {concat, halfc, yk})
        sub->add_option("--n", dims, "dimensions to sample (default 1 2 3)")->check(CLI::Range(1, 3));
    yk->add_option("--k", max_k, "largest k sampled")->check(CLI::PositiveNumber);

    std::optional<int> table_n, levels;
    bool golden = false;
    std::string golden_dir = PATHALG_GOLDEN_DIR;
    auto* table = app.add_subcommand("table", "generator table by degree and level");
    table->add_option("--n", table_n, "ambient dimension")->check(CLI::PositiveNumber);
    table->add_option("--levels", levels, "number of levels (0..L-1)");
    table->add_flag("--golden", golden, "compare with the shipped golden tables (n = 1..4)");
    table->add_option("--golden-dir", golden_dir, "directory holding table_n<k>.txt");
    add_common(table);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kPass;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }

    try {
        auto trial_cfg = [&](int fallback) {
            geom::TrialConfig cfg;
            cfg.trials = trials > 0 ? trials : fallback;
            cfg.seed = common.seed;
            cfg.jobs = common.jobs;
            if (!dims.empty())
                cfg.dims = dims;
            return cfg;
        };
        if (*homology)
            return cmd_homology(n, coeff, max_degree >= 0 ? max_degree : 3 * n + 2, common, out);
        if (*verify)
            return cmd_verify(n, max_degree >= 0 ? max_degree : 40, !no_repair, common, out);
        if (*index)
            return cmd_geom_index(idx, common, out);
        if (*concat)
            return cmd_geom_suite("concat-check", geom::concat_check(trial_cfg(1000)), common, out);
        if (*halfc)
            return cmd_geom_suite("halfcircle-check", geom::halfcircle_check(trial_cfg(200)), common, out);
        if (*yk)
            return cmd_geom_suite("yk-check", geom::yk_check(trial_cfg(200), max_k), common, out);
        if (*hopf)
            return cmd_geom_suite("hopf-check", geom::hopf_check(trial_cfg(200)), common, out);
        if (*table)
            return cmd_table(table_n, levels, golden, golden_dir, common, out);
    } catch (const std::invalid_argument& e) {  // includes unsupported coefficients and geometry preconditions
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const CLI::Error& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    err << "error: no command\n";
    return kUsage;
}

}  // namespace pathalg::cli

// Copyright 2026 The lucastile Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LUCASTILE_CLI_HPP
#define LUCASTILE_CLI_HPP

#include <chrono>
#include <fstream>
#include <functional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "lucastile/box_partition.hpp"
#include "lucastile/circulant_code.hpp"
#include "lucastile/identities.hpp"
#include "lucastile/lucas_cube.hpp"
#include "lucastile/report.hpp"
#include "lucastile/selector.hpp"
#include "lucastile/tiling_check.hpp"

namespace lucastile::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_failed = 1;
inline constexpr int exit_usage = 2;

struct Options {
    int n = 0;
    int n_max = 0;
    int id = 0; // 0: all three identities
    std::string set = "V";
    std::string via = "closed";
    std::string oracle = "twin";
    std::string format = "table";
    std::string output;
    std::uint64_t voxel_budget = 0;
    bool timings = false;
};

/// Accumulates verdicts, tables and optional step timings for one run.
class ReportBuilder {
public:
    ReportBuilder(std::string command, bool with_timings) : with_timings_(with_timings)
    {
        report_.command = std::move(command);
    }

    void param(std::string key, std::string value)
    {
        if (!params_locked_) {
            report_.parameters.emplace_back(std::move(key), std::move(value));
        }
    }
    /// Later param() calls are ignored; combined runs record their own parameters.
    void lock_params() { params_locked_ = true; }
    void verdict(Verdict v) { report_.verdicts.push_back(std::move(v)); }
    void check(std::string name, bool ok, std::string detail = {})
    {
        report_.verdicts.push_back(CheckVerdict{std::move(name), ok, std::move(detail)});
    }
    void table(Table t) { report_.tables.push_back(std::move(t)); }

    template <typename F>
    auto timed(const std::string& step, F&& body)
    {
        const auto start = std::chrono::steady_clock::now();
        auto record = [&] {
            if (with_timings_) {
                const auto us = std::chrono::duration_cast<std::chrono::microseconds>(
                    std::chrono::steady_clock::now() - start);
                report_.timings.push_back({step, us.count()});
            }
        };
        if constexpr (std::is_void_v<decltype(body())>) {
            body();
            record();
        } else {
            auto result = body();
            record();
            return result;
        }
    }

    RunReport take() { return std::move(report_); }

private:
    bool with_timings_;
    bool params_locked_ = false;
    RunReport report_;
};

namespace detail {

inline std::string bool_text(bool b) { return b ? "true" : "false"; }

inline Table word_table(const std::string& name, int n, std::span<const ResidueVector> words)
{
    Table t{name, {}, {}};
    for (int i = 1; i <= n; ++i) {
        t.columns.push_back("c" + std::to_string(i));
    }
    for (const auto& w : words) {
        std::vector<std::string> row;
        for (int i = 0; i < n; ++i) {
            row.push_back(std::to_string(w[i]));
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

inline std::string suffix(const std::string& base, int n)
{
    return base + "(" + std::to_string(n) + ")";
}

inline std::set<BinaryWord> substitute_two_to_zero(const CodeSet& words)
{
    std::set<BinaryWord> out;
    for (const auto& w : words) {
        BinaryWord b{0, w.dimension()};
        for (int i = 0; i < w.dimension(); ++i) {
            if (w[i] == 1) {
                b.bits |= std::uint64_t{1} << i;
            }
        }
        out.insert(b);
    }
    return out;
}

inline void require_dimension(int n, int lo, int hi, const char* what)
{
    if (n < lo || n > hi) {
        throw precondition_error(std::string(what) + ": n must be in [" + std::to_string(lo) + ", " +
                                 std::to_string(hi) + "] (got " + std::to_string(n) + ")");
    }
}

// ------------------------------------------------------------------ steps

inline void code_gen(ReportBuilder& rb, const Options& o)
{
    const int n = o.n;
    rb.param("n", std::to_string(n));
    rb.param("set", o.set);
    const std::string& set = o.set;
    if (set == "A" || set == "AT") {
        require_dimension(n, 1, ResidueVector::max_dimension, "code gen");
        const CirculantMatrix a = lagarias_shor_matrix(n);
        const CirculantMatrix m = set == "A" ? a : transpose(a);
        rb.table(word_table(suffix(set == "A" ? "A" : "A^T", n), n, m.rows()));
        bool rotations = true;
        for (int i = 2; i <= n; ++i) {
            rotations = rotations && m.row(i) == m.row(i - 1).rotated_right(1);
        }
        rb.check("successive rows are right rotations", rotations);
        return;
    }
    if (set == "V_A" || set == "V_AT") {
        require_dimension(n, 1, 24, "code gen");
        const CirculantMatrix a = lagarias_shor_matrix(n);
        const CodeSet c = set == "V_A" ? subset_row_sums(a, CodeLabel::V_A) : subset_row_sums(transpose(a), CodeLabel::V_AT);
        rb.table(word_table(suffix(set == "V_A" ? "V(A)" : "V(A^T)", n), n, c.words()));
        rb.check("subset sums are distinct", c.size() == (std::size_t{1} << n),
                 std::to_string(c.size()) + " distinct words of 2^" + std::to_string(n));
        return;
    }
    if (set == "V_e" || set == "V_o" || set == "V") {
        lucastile::detail::require_odd_at_least(n, 3, "code gen");
        require_dimension(n, 3, 23, "code gen");
        const CirculantMatrix a = lagarias_shor_matrix(n);
        const CodeSet even = filter_even_threes(subset_row_sums(a, CodeLabel::V_A));
        const CodeSet odd = filter_odd_zeros(subset_row_sums(transpose(a), CodeLabel::V_AT));
        if (set == "V") {
            const CodeSet v = lagarias_shor_code(n);
            rb.table(word_table(suffix("V", n), n, v.words()));
            rb.check("|V| = 2^n", v.size() == (std::size_t{1} << n), std::to_string(v.size()) + " words");
        } else {
            const CodeSet& c = set == "V_e" ? even : odd;
            rb.table(word_table(suffix(set, n), n, c.words()));
        }
        rb.check("|V_e| + |V_o| = 2^n", even.size() + odd.size() == (std::size_t{1} << n),
                 std::to_string(even.size()) + " + " + std::to_string(odd.size()));
        return;
    }
    if (set == "U") {
        lucastile::detail::require_odd_at_least(n, 3, "code gen");
        require_dimension(n, 3, 25, "code gen");
        const CodeSet u = enumerate_U(n);
        rb.table(word_table(suffix("U", n), n, u.words()));
        const auto vertices = lucas_vertices(n);
        rb.check("|U(n)| + 1 = L_n", u.size() + 1 == vertices.size(),
                 std::to_string(u.size()) + " + 1 vs " + std::to_string(vertices.size()));
        std::vector<ResidueVector> with_zero(u.begin(), u.end());
        with_zero.push_back(ResidueVector::zero(n));
        const auto substituted = substitute_two_to_zero(CodeSet(n, with_zero));
        rb.check("2->0 substitution on U u {0} gives the Lucas vertices",
                 substituted == std::set<BinaryWord>(vertices.begin(), vertices.end()));
        return;
    }
    if (set == "R") {
        lucastile::detail::require_odd_at_least(n, 5, "code gen");
        require_dimension(n, 5, 25, "code gen");
        const CodeSet r = R_code(n);
        rb.table(word_table(suffix("R", n), n, r.words()));
        rb.check("|R| = independent sets of the path on {2..n-3}",
                 r.size() == independent_sets(n - 4, false).size(), std::to_string(r.size()) + " words");
        return;
    }
    throw precondition_error("code gen: unknown set '" + set + "'");
}

inline void tiling_verify(ReportBuilder& rb, const Options& o)
{
    const int n = o.n;
    lucastile::detail::require_odd_at_least(n, 3, "tiling verify");
    require_dimension(n, 3, 15, "tiling verify");
    if (o.oracle != "twin" && o.oracle != "voxel" && o.oracle != "both") {
        throw precondition_error("tiling verify: --oracle must be twin, voxel or both");
    }
    rb.param("n", std::to_string(n));
    rb.param("oracle", o.oracle);
    const CodeSet v = rb.timed("lagarias_shor_code", [&] { return lagarias_shor_code(n); });
    std::optional<TilingVerdict> twin;
    std::optional<TilingVerdict> voxel;
    if (o.oracle != "voxel") {
        twin = rb.timed("twin_pair_check", [&] { return twin_pair_check(v); });
        rb.verdict(*twin);
    }
    if (o.oracle != "twin") {
        rb.param("voxel_budget", std::to_string(o.voxel_budget));
        voxel = rb.timed("voxel_cover_check", [&] { return voxel_cover_check(v, o.voxel_budget); });
        rb.verdict(*voxel);
    }
    if (twin && voxel) {
        rb.check("oracles agree", twin->ok == voxel->ok);
    }
    std::vector<ResidueVector> meeting;
    for (const auto& w : v) {
        if (!disjoint_from_base(w)) {
            meeting.push_back(w);
        }
    }
    rb.check("tiles meeting [0,2)^n are exactly U u {0, 2}",
             CodeSet(n, meeting) == augmented_U(n), std::to_string(meeting.size()) + " tiles");
}

inline std::string census_expected(int n, int k)
{
    // k = 0 counts the two unit cubes [0,1)^n and [1,2)^n.
    return k == 0 ? "2" : to_decimal(weight_count(n, k));
}

inline void partition_stats(ReportBuilder& rb, int n)
{
    lucastile::detail::require_odd_at_least(n, 3, "partition stats");
    require_dimension(n, 3, 21, "partition stats");
    const BoxFamily f = rb.timed("build_F", [&] { return build_F(n); });

    const auto partition = rb.timed("verify_partition", [&] { return verify_partition(f); });
    rb.check(suffix("F", n) + " partitions [0,2)^n", partition.ok, std::to_string(f.size()) + " boxes");
    rb.check("m(F) = 2^n", volume_sum(f) == (std::uint64_t{1} << n), std::to_string(volume_sum(f)));

    Table census{"census", {"n", "k", "M_k", "closed_form", "match"}, {}};
    const auto m = weight_census(f);
    bool census_ok = true;
    for (int k = 0; k <= n / 2; ++k) {
        const auto it = m.find(k);
        const std::string observed = std::to_string(it == m.end() ? 0 : it->second);
        const std::string expected = census_expected(n, k);
        census_ok = census_ok && observed == expected;
        census.rows.push_back({std::to_string(n), std::to_string(k), observed, expected, bool_text(observed == expected)});
    }
    census_ok = census_ok && m.rbegin()->first <= n / 2;
    rb.table(std::move(census));
    rb.check("M_k = C(n-k,k) n/(n-k)", census_ok);

    const std::uint64_t full_expected = ((std::uint64_t{1} << n) - 2) / 3;
    const std::uint64_t lo_or_hi_expected = 2 * ((std::uint64_t{1} << n) + 1) / 3;
    Table volumes{"volumes", {"i", "m(F_Lo)", "m(F_Hi)", "m(F_Full)", "m(F_LoOrHi)", "cylinder_LoOrHi", "cylinder_Full"}, {}};
    bool uu = true;
    bool reflection = true;
    bool shift = true;
    bool cylinders = true;
    std::vector<std::uint64_t> full(static_cast<std::size_t>(n) + 1);
    std::vector<std::uint64_t> hi(static_cast<std::size_t>(n) + 1);
    rb.timed("volumes_and_cylinders", [&] {
        for (int i = 1; i <= n; ++i) {
            const auto lo_fam = subfamily(f, i, FactorSelector::Lo);
            const auto hi_fam = subfamily(f, i, FactorSelector::Hi);
            const auto full_fam = subfamily(f, i, FactorSelector::Full);
            const auto both_fam = subfamily(f, i, FactorSelector::LoOrHi);
            const auto vl = volume_sum(lo_fam);
            const auto vh = volume_sum(hi_fam);
            const auto vf = volume_sum(full_fam);
            const auto vb = volume_sum(both_fam);
            full[static_cast<std::size_t>(i)] = vf;
            hi[static_cast<std::size_t>(i)] = vh;
            const bool c02 = cylinder_check(both_fam, i);
            const bool c1 = cylinder_check(full_fam, i);
            uu = uu && vf == full_expected && vb == lo_or_hi_expected;
            reflection = reflection && vl == vh;
            cylinders = cylinders && c02 && c1;
            volumes.rows.push_back({std::to_string(i), std::to_string(vl), std::to_string(vh), std::to_string(vf),
                                    std::to_string(vb), bool_text(c02), bool_text(c1)});
        }
    });
    for (int i = 1; i <= n; ++i) {
        const int next = i % n + 1;
        shift = shift && hi[static_cast<std::size_t>(next)] == full[static_cast<std::size_t>(i)] + 1;
    }
    rb.table(std::move(volumes));
    rb.check("m(F^i_Full) = (2^n-2)/3 and m(F^i_LoOrHi) = 2(2^n+1)/3 for all i", uu,
             std::to_string(full_expected) + ", " + std::to_string(lo_or_hi_expected));
    rb.check("m(F^i_Lo) = m(F^i_Hi) for all i", reflection);
    rb.check("m(F^{i+1}_Hi) = m(F^i_Full) + 1 for all i", shift);
    rb.check("F^i_LoOrHi and F^i_Full are i-cylinders for all i", cylinders);

    // Even-index family G(n-1) inside F(n).
    const BoxFamily g = rb.timed("build_G", [&] { return build_G(n); });
    const std::uint64_t half = std::uint64_t{1} << (n - 1);
    rb.check(suffix("G", n - 1) + " boxes are disjoint", verify_disjoint(g).ok, std::to_string(g.size()) + " boxes");
    rb.check("m(G) = 2^(n-1)", volume_sum(g) == half, std::to_string(volume_sum(g)));
    rb.check("m(G^n_Lo) = 2(2^(n-1)-1)/3", volume_sum(subfamily(g, n, FactorSelector::Lo)) == 2 * (half - 1) / 3);
    rb.check("m(G^n_Hi) = (2^(n-1)+2)/3", volume_sum(subfamily(g, n, FactorSelector::Hi)) == (half + 2) / 3);
    bool g_full = true;
    for (int i = 1; i <= n - 1; ++i) {
        g_full = g_full && volume_sum(subfamily(g, i, FactorSelector::Full)) == (half + 2) / 3;
    }
    rb.check("m(G^i_Full) = (2^(n-1)+2)/3 for i in [n-1]", g_full);
    if (n >= 5) {
        const auto b = rb.timed("verify_bijection", [&] { return verify_bijection(n); });
        rb.check("b: R -> last-entry-0 words of U(n-2) u {0} is a bijection", b.ok,
                 std::to_string(b.sources) + " sources, " + std::to_string(b.targets) + " targets");
    }
}

inline std::vector<int> identity_ids(int id)
{
    if (id == 0) {
        return {1, 2, 3};
    }
    lucastile::detail::require_identity(id);
    return {id};
}

inline void add_identity_rows(Table& t, const IdentityReport& r)
{
    t.rows.push_back({std::to_string(r.id), std::to_string(r.n), to_decimal(r.lhs), to_decimal(r.rhs),
                      std::string(to_string(r.path)), bool_text(r.ok)});
}

inline void identities_check(ReportBuilder& rb, const Options& o)
{
    if (o.via != "closed" && o.via != "tiling" && o.via != "both") {
        throw precondition_error("identities check: --via must be closed, tiling or both");
    }
    int lo = 1;
    int hi = o.n_max;
    if (o.n > 0) {
        lo = hi = o.n;
    }
    if (hi < 1) {
        throw precondition_error("identities check: give -n or --n-max >= 1");
    }
    require_dimension(hi, 1, 100000, "identities check");
    const bool closed = o.via != "tiling";
    const bool tiling = o.via != "closed";
    if (tiling) {
        require_dimension(hi, 1, 27, "identities check --via tiling");
    }
    const auto ids = identity_ids(o.id);
    rb.param("id", o.id == 0 ? "all" : std::to_string(o.id));
    rb.param("n_range", std::to_string(lo) + ".." + std::to_string(hi));
    rb.param("via", o.via);

    Table t{"identities", {"id", "n", "lhs", "rhs", "path", "ok"}, {}};
    if (closed) {
        rb.timed("closed_form", [&] {
            for (int id : ids) {
                for (int n = lo; n <= hi; ++n) {
                    auto r = lucastile::detail::make_report(id, n, lhs(id, n), rhs(id, n), IdentityPath::ClosedForm);
                    add_identity_rows(t, r);
                    rb.verdict(std::move(r));
                }
            }
        });
        bool termwise = true;
        for (int n = lo; n <= hi; ++n) {
            termwise = termwise && termwise_decomposition_check(n);
        }
        rb.check("per-k summands of (1) equal those of (2) plus (3)", termwise);
    }
    if (tiling) {
        const int first = std::max(lo, 2); // n = 1 has no tiling derivation
        if (first > hi) {
            throw precondition_error("identities check --via tiling: needs n >= 2");
        }
        rb.param("tiling_n_range", std::to_string(first) + ".." + std::to_string(hi));
        rb.timed("tiling", [&] {
            for (int n = first; n <= hi; ++n) {
                if (n % 2 == 1) {
                    const BoxFamily f = build_F(n);
                    for (int id : ids) {
                        auto r = verify_via_tiling_odd(id, f);
                        add_identity_rows(t, r);
                        rb.verdict(std::move(r));
                    }
                } else {
                    const BoxFamily g = build_G(n + 1);
                    for (int id : ids) {
                        auto r = verify_via_tiling_even(id, g);
                        add_identity_rows(t, r);
                        rb.verdict(std::move(r));
                    }
                }
            }
        });
    }
    rb.table(std::move(t));
}

inline void selector_verify(ReportBuilder& rb, int n)
{
    lucastile::detail::require_odd_at_least(n, 3, "selector verify");
    require_dimension(n, 3, 25, "selector verify");
    const auto boxes = star_boxes(n);
    Table t{suffix("L", n), {"word", "points", "canonical_vertex"}, {}};
    for (const auto& b : boxes) {
        t.rows.push_back({b.source.to_string(), std::to_string(b.cardinality()),
                          b.is_all_ones() ? "-" : canonical_vertex(b).to_string()});
    }
    rb.table(std::move(t));
    rb.check("the boxes partition {0,1}^n",
             rb.timed("verify_discrete_partition", [&] { return verify_discrete_partition(boxes, n); }),
             std::to_string(boxes.size()) + " boxes");
    const auto report = rb.timed("verify_selector", [&] { return verify_selector(boxes, n); });
    rb.check("Lucas vertices select one point from each box but {1}^n", report.ok, report.failure);
    rb.check("box count = vertex count = L_n", report.boxes == report.vertices,
             std::to_string(report.boxes) + " boxes, " + std::to_string(report.vertices) + " vertices");
    if (n <= 11) {
        const auto oracle = verify_selector_quadratic(boxes, n);
        rb.check("quadratic oracle agrees", oracle.ok == report.ok);
    }
}

inline void report_all(ReportBuilder& rb, const Options& o)
{
    const int n = o.n;
    lucastile::detail::require_odd_at_least(n, 3, "report all");
    require_dimension(n, 3, 13, "report all");
    const bool voxel = (std::uint64_t{1} << (2 * n)) <= o.voxel_budget;
    rb.param("n", std::to_string(n));
    rb.param("voxel_budget", std::to_string(o.voxel_budget));
    rb.param("voxel_oracle", voxel ? "run" : "skipped: 4^n exceeds the budget");
    rb.lock_params();
    Options sub = o;
    sub.set = "U";
    rb.timed("code", [&] { code_gen(rb, sub); });
    sub.oracle = voxel ? "both" : "twin";
    rb.timed("tiling", [&] { tiling_verify(rb, sub); });
    rb.timed("partition", [&] { partition_stats(rb, n); });
    sub.via = "both";
    sub.id = 0;
    sub.n = 0;
    sub.n_max = n;
    rb.timed("identities", [&] { identities_check(rb, sub); });
    rb.timed("selector", [&] { selector_verify(rb, n); });
}

inline void write_output(const std::string& text, const Options& o, std::ostream& out)
{
    if (o.output.empty()) {
        out << text;
        return;
    }
    std::ofstream file(o.output, std::ios::binary);
    if (!file) {
        throw std::runtime_error("cannot open output file '" + o.output + "'");
    }
    file << text;
}

} // namespace detail

/**
 * Entry point of the command-line tool. `args` excludes the program name.
 * Exit codes: 0 all verdicts ok, 1 some verdict failed, 2 usage error or
 * refused run. The report goes to `out` (or -o FILE); diagnostics to `err`.
 */
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Cube-tiling verification workbench for the Lucas-cube identities", "lucastile"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(version_string));

    Options o;
    o.voxel_budget = voxel_budget_from_environment();
    std::string command;
    std::function<void(ReportBuilder&)> action;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv", "table"}));
        sub->add_option("-o,--output", o.output, "Write the report to FILE instead of stdout");
        sub->add_flag("--timings", o.timings, "Include per-step wall-clock timings");
    };
    auto leaf = [&](CLI::App* group, const std::string& name, const std::string& description,
                    std::function<void(ReportBuilder&)> body) {
        CLI::App* sub = group->add_subcommand(name, description);
        add_common(sub);
        sub->callback([&, full = group->get_name() + " " + name, body] {
            command = full;
            action = body;
        });
        return sub;
    };

    CLI::App* code = app.add_subcommand("code", "Codes built from the circulant A(n)")->require_subcommand(1);
    CLI::App* gen = leaf(code, "gen", "List a code set", [&](ReportBuilder& rb) { detail::code_gen(rb, o); });
    gen->add_option("-n", o.n, "Dimension")->required();
    gen->add_option("--set", o.set, "A, AT, V_A, V_AT, V_e, V_o, V, U or R")
        ->check(CLI::IsMember({"A", "AT", "V_A", "V_AT", "V_e", "V_o", "V", "U", "R"}));

    CLI::App* tiling = app.add_subcommand("tiling", "Tiling certification")->require_subcommand(1);
    CLI::App* verify = leaf(tiling, "verify", "Certify the Lagarias-Shor code tiles the torus",
                            [&](ReportBuilder& rb) { detail::tiling_verify(rb, o); });
    verify->add_option("-n", o.n, "Odd dimension")->required();
    verify->add_option("--oracle", o.oracle, "twin, voxel or both")->check(CLI::IsMember({"twin", "voxel", "both"}));
    verify->add_option("--voxel-budget", o.voxel_budget, "Largest voxel count the exact-cover oracle may use");

    CLI::App* partition = app.add_subcommand("partition", "Box partitions of [0,2)^n")->require_subcommand(1);
    CLI::App* stats = leaf(partition, "stats", "Census, volumes and cylinder checks for F(n) and G(n-1)",
                           [&](ReportBuilder& rb) {
                               rb.param("n", std::to_string(o.n));
                               detail::partition_stats(rb, o.n);
                           });
    stats->add_option("-n", o.n, "Odd dimension")->required();

    CLI::App* identities = app.add_subcommand("identities", "Binomial identities (1)-(3)")->require_subcommand(1);
    CLI::App* check = leaf(identities, "check", "Verify identities exactly",
                           [&](ReportBuilder& rb) { detail::identities_check(rb, o); });
    check->add_option("--id", o.id, "Identity 1, 2 or 3 (default: all)")->check(CLI::Range(1, 3));
    check->add_option("-n", o.n, "Single n");
    check->add_option("--n-max", o.n_max, "Check every n in 1..N");
    check->add_option("--via", o.via, "closed, tiling or both")->check(CLI::IsMember({"closed", "tiling", "both"}));

    CLI::App* selector = app.add_subcommand("selector", "Lucas vertices as a selector")->require_subcommand(1);
    CLI::App* sel = leaf(selector, "verify", "Discrete partition and selector property",
                         [&](ReportBuilder& rb) {
                             rb.param("n", std::to_string(o.n));
                             detail::selector_verify(rb, o.n);
                         });
    sel->add_option("-n", o.n, "Odd dimension")->required();

    CLI::App* report = app.add_subcommand("report", "Combined reports")->require_subcommand(1);
    CLI::App* all = leaf(report, "all", "Every verification for one n",
                         [&](ReportBuilder& rb) { detail::report_all(rb, o); });
    all->add_option("-n", o.n, "Odd dimension")->required();
    all->add_option("--voxel-budget", o.voxel_budget, "Largest voxel count the exact-cover oracle may use");

    std::vector<const char*> argv{"lucastile"};
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::CallForVersion&) {
        out << version_string << '\n';
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "lucastile: " << e.what() << '\n';
        return exit_usage;
    }

    try {
        ReportBuilder rb(command, o.timings);
        action(rb);
        const RunReport result = rb.take();
        detail::write_output(serialize(result, *format_from_string(o.format)), o, out);
        return result.ok() ? exit_ok : exit_failed;
    } catch (const precondition_error& e) {
        err << "lucastile: usage error: " << e.what() << '\n';
        return exit_usage;
    } catch (const budget_exceeded& e) {
        err << "lucastile: refused: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        err << "lucastile: internal error: " << e.what() << '\n';
        return exit_failed;
    }
}

} // namespace lucastile::cli

#endif

#include "knotconc/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <ostream>

#include <CLI11.hpp>

#include "knotconc/catalog.hpp"
#include "knotconc/obstruct.hpp"
#include "knotconc/report.hpp"
#include "knotconc/resultant.hpp"

namespace knotconc {

namespace {

using Json = nlohmann::ordered_json;

std::string verdict_str(const Verdict& v) {
    switch (v.kind) {
        case VerdictKind::Passes:
            return "passes";
        case VerdictKind::NoSquareOrderSubgroup:
            return "obstructed:no-square-order-subgroup";
        default:
            return "obstructed:no-vanishing-subgroup";
    }
}

Json int_list(const std::vector<Int>& xs) {
    Json a = Json::array();
    for (const auto& x : xs) a.push_back(x.get_str());
    return a;
}

Json factors_json(const FiniteAbelianGroup& g) {
    Json a = Json::array();
    for (const auto& f : g.factors) a.push_back(to_int64(f));
    return a;
}

Json basis_json(const Metabolizer& z) {
    Json a = Json::array();
    for (const auto& v : z.basis) a.push_back(int_list(v));
    return a;
}

struct KnotInput {
    std::string file;
    std::string twist;

    // named pair: (display name, matrix); twist entries keep their k
    CatalogEntry resolve() const {
        if (!twist.empty() && !file.empty()) fail(Errc::ParseError, "give either a file or --twist, not both");
        if (!twist.empty()) return catalog_lookup("twist:" + twist);
        if (!file.empty()) return CatalogEntry{file, read_seifert_file(file), "from file", std::nullopt};
        fail(Errc::ParseError, "no input knot: give a Seifert matrix file or --twist K");
    }
};

Int default_bound(const SeifertMatrix& s) { return 2 * s.matrix().max_abs_entry() + 2; }

void emit(const Report& r, bool json, std::ostream& out) { out << (json ? r.to_json_text() : r.to_text()); }

} // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"knotconc: exact concordance obstructions from Seifert matrices\n"
                 "Defaults: metabolizer search bound = 2*max|entry|+2; subgroup enumeration bound = 10^6."};
    app.require_subcommand(1);
    bool json = false;
    std::int64_t global_bound = 0;
    app.add_flag("--json", json, "emit the report as canonical JSON");
    app.add_option("--bound", global_bound, "entry bound for metabolizer searches (default 2*max|entry|+2)");

    std::function<int()> action;

    auto add_json = [&json](CLI::App* cmd) { cmd->add_flag("--json", json, "emit the report as canonical JSON"); };

    // alexander
    {
        auto* cmd = app.add_subcommand("alexander", "Alexander polynomial det(A - t A^t) of a Seifert matrix");
        auto in = std::make_shared<KnotInput>();
        cmd->add_option("file", in->file, "Seifert matrix file");
        cmd->add_option("--twist", in->twist, "use the twist-family matrix [[-1,1],[0,K]]");
        add_json(cmd);
        cmd->callback([&, in]() {
            action = [&, in]() {
                CatalogEntry e = in->resolve();
                AlexanderPoly d = alexander(e.matrix);
                Report r;
                r.command = "alexander";
                r.params["input"] = e.name;
                Json row;
                row["input"] = e.name;
                row["genus"] = static_cast<std::int64_t>(e.matrix.genus());
                row["alexander"] = d.poly.str();
                Json coeffs = Json::array();
                for (const auto& c : d.poly.coeffs()) coeffs.push_back(c.get_str());
                row["coefficients"] = coeffs;
                row["at_1"] = d.poly.eval(Int(1)).get_str();
                r.rows.push_back(row);
                emit(r, json, out);
                return 0;
            };
        });
    }

    // cover
    {
        auto* cmd = app.add_subcommand("cover", "branched-cover homology, presentations, and order checks");
        auto in = std::make_shared<KnotInput>();
        auto n = std::make_shared<std::int64_t>(2);
        cmd->add_option("file", in->file, "Seifert matrix file");
        cmd->add_option("--twist", in->twist, "use the twist-family matrix");
        cmd->add_option("--n", *n, "cover index (prime power)")->required();
        add_json(cmd);
        cmd->callback([&, in, n]() {
            action = [&, in, n]() {
                CatalogEntry e = in->resolve();
                Int nn(*n);
                CoverPresentation cp = cover_presentation(e.matrix, nn);
                Int fox = order_fox(e.matrix, nn);
                Int det_small = det(cp.small_mat);
                Int block_order = cp.block_coker.group.order();
                Int small_order = cp.small_coker.group.order();
                bool agree = fox == abs(det_small) && fox == block_order && fox == small_order &&
                             cp.small_coker.group == cp.block_coker.group;
                Report r;
                r.command = "cover";
                r.params["input"] = e.name;
                r.params["n"] = *n;
                Json row;
                row["n"] = *n;
                row["invariant_factors"] = factors_json(cp.small_coker.group);
                row["order"] = small_order.get_str();
                row["fox_order"] = fox.get_str();
                row["det_presentation"] = det_small.get_str();
                row["block_order"] = block_order.get_str();
                row["orders_agree"] = agree;
                r.rows.push_back(row);
                r.verdict = agree ? "orders-agree" : "orders-disagree";
                emit(r, json, out);
                return agree ? 0 : 1;
            };
        });
    }

    // dinv
    {
        auto* cmd = app.add_subcommand("dinv", "correction terms for twist-knot double covers or lens spaces");
        auto twist = std::make_shared<std::string>();
        auto lens = std::make_shared<std::vector<std::int64_t>>();
        auto table_out = std::make_shared<std::string>();
        cmd->add_option("--twist", *twist, "twist parameter K >= 0");
        cmd->add_option("--lens", *lens, "lens space parameters P Q")->expected(2);
        cmd->add_option("--table-out", *table_out, "write the (barred) twist table as JSON");
        add_json(cmd);
        cmd->callback([&, twist, lens, table_out]() {
            action = [&, twist, lens, table_out]() {
                Report r;
                r.command = "dinv";
                if (!twist->empty() && !lens->empty())
                    fail(Errc::ParseError, "give either --twist or --lens, not both");
                if (!twist->empty()) {
                    Int k(*twist);
                    r.params["twist"] = *twist;
                    CorrectionTable raw = d_twist_table(k);
                    CorrectionTable dbar = dbar_table(k);
                    for (std::size_t j = 0; j < raw.values.size(); ++j) {
                        Json row;
                        row["label"] = static_cast<std::int64_t>(j);
                        row["d"] = rat_str(raw.values[j]);
                        row["dbar"] = rat_str(dbar.values[j]);
                        r.rows.push_back(row);
                    }
                    if (!table_out->empty()) {
                        std::ofstream f(*table_out);
                        if (!f) fail(Errc::ParseError, "cannot write file: " + *table_out);
                        f << dbar.to_json();
                    }
                } else if (!lens->empty()) {
                    Int p((*lens)[0]), q((*lens)[1]);
                    r.params["p"] = (*lens)[0];
                    r.params["q"] = (*lens)[1];
                    LensParams lp = LensParams::normalized(p, q);
                    for (Int i = 0; i < lp.p; ++i) {
                        Json row;
                        row["label"] = to_int64(i);
                        row["d"] = rat_str(d_lens(lp.p, lp.q, i));
                        r.rows.push_back(row);
                    }
                } else {
                    fail(Errc::ParseError, "dinv needs --twist K or --lens P Q");
                }
                emit(r, json, out);
                return 0;
            };
        });
    }

    // obstruction
    {
        auto* cmd = app.add_subcommand("obstruction",
                                       "vanishing-subgroup verdict and subgroup-sum obstructions");
        auto in = std::make_shared<KnotInput>();
        auto n = std::make_shared<std::int64_t>(2);
        auto p = std::make_shared<std::int64_t>(0);
        auto table_file = std::make_shared<std::string>();
        cmd->add_option("file", in->file, "Seifert matrix file");
        cmd->add_option("--twist", in->twist, "use the twist-family matrix");
        cmd->add_option("--n", *n, "cover index (prime power), default 2");
        cmd->add_option("--p", *p, "report the subgroup-sum obstruction at this prime only");
        cmd->add_option("--table", *table_file, "correction table JSON (required off the twist family or for n != 2)");
        add_json(cmd);
        cmd->callback([&, in, n, p, table_file]() {
            action = [&, in, n, p, table_file]() {
                CatalogEntry e = in->resolve();
                Int nn(*n);
                CorrectionTable table;
                if (!table_file->empty()) {
                    table = CorrectionTable::read_file(*table_file);
                } else if (e.twist_k && *n == 2 && sgn(*e.twist_k) >= 0) {
                    table = dbar_table(*e.twist_k);
                } else {
                    fail(Errc::MissingTable,
                         "no correction table: supply --table (auto tables exist only for --twist K >= 0 with --n 2)");
                }
                Verdict v = slice_obstruction_verdict(e.matrix, nn, table);
                CorrectionTable dbar = table.barred();

                Report r;
                r.command = "obstruction";
                r.params["input"] = e.name;
                r.params["n"] = *n;
                if (*p) r.params["p"] = *p;
                r.params["h1_order"] = v.h1_order.get_str();

                std::vector<Int> ps;
                if (*p) ps.emplace_back(*p);
                else ps = prime_divisors(v.h1_order);
                bool any_positive = false;
                for (const Int& prime : ps) {
                    ObstructionValue val = d_obstruction(dbar, prime);
                    if (sgn(val.value) != 0) any_positive = true;
                    Json row;
                    row["kind"] = "subgroup-sum-obstruction";
                    row["p"] = to_int64(prime);
                    row["value"] = rat_str(val.value);
                    r.rows.push_back(row);
                }
                for (const auto& ev : v.evidence) {
                    Json row;
                    row["kind"] = "square-root-subgroup";
                    row["labels"] = int_list(ev.labels);
                    Json dvals = Json::array();
                    for (const auto& d : ev.dbar) dvals.push_back(rat_str(d));
                    row["dbar"] = dvals;
                    row["vanishes"] = ev.vanishes;
                    r.rows.push_back(row);
                }
                r.verdict = verdict_str(v);
                emit(r, json, out);
                return (v.kind == VerdictKind::Passes && !any_positive) ? 0 : 1;
            };
        });
    }

    // twist-scan
    {
        auto* cmd = app.add_subcommand("twist-scan", "double-cover obstruction table over the twist family");
        auto kmax = std::make_shared<std::int64_t>(0);
        cmd->add_option("--kmax", *kmax, "scan k = 1..kmax")->required()->check(CLI::Range(std::int64_t(1), std::int64_t(1000000)));
        add_json(cmd);
        cmd->callback([&, kmax]() {
            action = [&, kmax]() {
                Report r;
                r.command = "twist-scan";
                r.params["kmax"] = *kmax;
                for (const auto& row : twist_report(Int(*kmax))) {
                    Json j;
                    j["k"] = to_int64(row.k);
                    j["p"] = to_int64(row.p);
                    j["dbar_obstruction"] = rat_str(row.obstruction);
                    j["alg_class"] = alg_class_str(row.alg_class);
                    r.rows.push_back(j);
                }
                emit(r, json, out);
                return 0;
            };
        });
    }

    // splitting-check
    {
        auto* cmd = app.add_subcommand("splitting-check",
                                       "split every metabolizer of a block sum into factor metabolizers");
        auto files = std::make_shared<std::vector<std::string>>();
        auto bound = std::make_shared<std::int64_t>(0);
        cmd->add_option("files", *files, "two Seifert matrix files")->expected(2)->required();
        cmd->add_option("--bound", *bound, "entry bound for the metabolizer search (default 2*max|entry|+2)");
        add_json(cmd);
        cmd->callback([&, files, bound]() {
            action = [&, files, bound]() {
                SeifertMatrix s1 = read_seifert_file((*files)[0]);
                SeifertMatrix s2 = read_seifert_file((*files)[1]);
                SeifertMatrix sum = block_sum({{s1, 1}, {s2, 1}});
                std::int64_t chosen = *bound > 0 ? *bound : global_bound;
                Int b = chosen > 0 ? Int(chosen) : default_bound(sum);
                Report r;
                r.command = "splitting-check";
                r.params["file1"] = (*files)[0];
                r.params["file2"] = (*files)[1];
                r.params["bound"] = to_int64(b);
                auto metabolizers = metabolizer_search(sum, b);
                bool all_ok = true;
                for (const auto& z : metabolizers) {
                    auto [z1, z2] = split_metabolizer(s1, s2, z);
                    Json row;
                    row["metabolizer"] = basis_json(z);
                    row["factor1"] = basis_json(z1);
                    row["factor2"] = basis_json(z2);
                    row["ok"] = true; // split_metabolizer verified both factors
                    r.rows.push_back(row);
                }
                r.verdict = metabolizers.empty() ? "no-metabolizers-within-bound"
                                                 : (all_ok ? "all-split" : "split-failed");
                emit(r, json, out);
                return all_ok ? 0 : 1;
            };
        });
    }

    // verify-lemma3
    {
        auto* cmd = app.add_subcommand("verify-lemma3",
                                       "resultants of 1+t+...+t^{m-1} pairs: units iff coprime degrees");
        auto max = std::make_shared<std::int64_t>(0);
        cmd->add_option("--max", *max, "check all 2 <= m < n <= max")->required()->check(CLI::Range(std::int64_t(3), std::int64_t(200)));
        add_json(cmd);
        cmd->callback([&, max]() {
            action = [&, max]() {
                Report r;
                r.command = "verify-lemma3";
                r.params["max"] = *max;
                long pairs = 0, coprime = 0;
                bool ok = true;
                for (long m = 2; m <= *max; ++m)
                    for (long n = m + 1; n <= *max; ++n) {
                        Int d = ones_sylvester_det(static_cast<unsigned long>(m), static_cast<unsigned long>(n));
                        ++pairs;
                        bool cop = gcd(Int(m), Int(n)) == 1;
                        if (cop) ++coprime;
                        bool good = cop ? (d == 1 || d == -1) : (sgn(d) == 0);
                        if (!good) {
                            ok = false;
                            Json row;
                            row["m"] = m;
                            row["n"] = n;
                            row["det"] = d.get_str();
                            r.rows.push_back(row);
                        }
                    }
                Json row;
                row["pairs_checked"] = pairs;
                row["coprime_pairs"] = coprime;
                row["all_coprime_units"] = ok;
                r.rows.push_back(row);
                r.verdict = ok ? "all coprime pairs give determinant +-1, all others 0" : "violation found";
                emit(r, json, out);
                return ok ? 0 : 1;
            };
        });
    }

    // spk
    {
        auto* cmd = app.add_subcommand("spk", "primes q with p dividing some q^r-cover homology order");
        auto in = std::make_shared<KnotInput>();
        auto p = std::make_shared<std::int64_t>(0);
        auto qmax = std::make_shared<std::int64_t>(20);
        auto rmax = std::make_shared<std::int64_t>(2);
        cmd->add_option("file", in->file, "Seifert matrix file");
        cmd->add_option("--twist", in->twist, "use the twist-family matrix");
        cmd->add_option("--p", *p, "the prime p")->required();
        cmd->add_option("--qmax", *qmax, "largest prime q to try (default 20)");
        cmd->add_option("--rmax", *rmax, "largest exponent r to try (default 2)");
        add_json(cmd);
        cmd->callback([&, in, p, qmax, rmax]() {
            action = [&, in, p, qmax, rmax]() {
                CatalogEntry e = in->resolve();
                PrimeSet set = cover_order_prime_set(e.matrix, Int(*p), Int(*qmax), Int(*rmax));
                Report r;
                r.command = "spk";
                r.params["input"] = e.name;
                r.params["p"] = *p;
                r.params["qmax"] = *qmax;
                r.params["rmax"] = *rmax;
                Json row;
                row["p"] = *p;
                row["members"] = int_list(set.members);
                row["qmax"] = *qmax;
                row["rmax"] = *rmax;
                row["complete"] = false; // bounded search, not the full set
                r.rows.push_back(row);
                emit(r, json, out);
                return 0;
            };
        });
    }

    std::reverse(args.begin(), args.end()); // CLI11 consumes a reversed vector
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }
    try {
        return action ? action() : 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace knotconc

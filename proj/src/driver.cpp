#include "syzygy/driver.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "syzygy/certify.hpp"
#include "syzygy/hyperelliptic.hpp"
#include "syzygy/koszul.hpp"
#include "syzygy/moduli.hpp"
#include "syzygy/planecurve.hpp"
#include "syzygy/resolution.hpp"

namespace syzygy::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

nlohmann::json class_json(const moduli::DivClass& c) {
    return {{"lambda", to_string(c.c_lambda)}, {"sum_psi", to_string(c.c_psi)}};
}

nlohmann::json table_payload(const koszul::BettiTable& t) {
    auto j = koszul::to_json(t);
    j["diagram"] = koszul::pretty(t);
    return j;
}

Report betti_report(const std::string& model, long pmax, long qmax, bool oracle, std::uint32_t p) {
    Report r;
    r.anchor = "koszul.betti";
    // the strand d_{p,q} reaches R_{q+1}
    const auto ring = koszul::model_from_spec(model, p, qmax + 1);
    r.seed = ring.seed;
    const auto t = koszul::betti_table(ring, pmax, qmax);
    r.payload["table"] = table_payload(t);
    r.payload["model_id"] = ring.id;
    r.payload["nonspecial"] = ring.nonspecial;
    r.payload["natural"] = koszul::naturality_check(t);
    if (ring.nonspecial && qmax >= 2) {
        std::vector<std::string> failures;
        r.verdicts["euler_diagonal"] = koszul::euler_diagonal_check(t, ring.g, ring.d, &failures);
        if (!failures.empty()) r.payload["euler_failures"] = failures;
    }
    if (oracle) {
        const auto o = koszul::minimal_resolution_oracle(ring, pmax, ring.seed + 17);
        const auto bad = koszul::compare(t, o);
        nlohmann::json mism = nlohmann::json::array();
        for (const auto& [pp, qq] : bad) mism.push_back({pp, qq});
        r.payload["oracle_mismatches"] = mism;
        r.verdicts["oracle_agrees"] = bad.empty();
    }
    return r;
}

Report prym_report(long g0, long g1) {
    Report r;
    r.anchor = "koszul.prym_green";
    nlohmann::json rows = nlohmann::json::array();
    bool natural = true, one_mixed = true, euler = true;
    for (long g = g0; g <= g1; g += 2) {
        const auto t = koszul::prym_green_predicted(g);
        const auto mixed = koszul::mixed_columns(t);
        const bool n = koszul::naturality_check(t);
        const bool e = koszul::euler_diagonal_check(t, g, 2 * g - 2);
        natural = natural && n;
        one_mixed = one_mixed && mixed.size() == 1;
        euler = euler && e;
        rows.push_back({{"g", g}, {"table", table_payload(t)}, {"mixed_columns", mixed}, {"natural", n},
                        {"euler_diagonal", e}});
    }
    r.payload["tables"] = rows;
    r.verdicts["natural"] = natural;
    r.verdicts["exactly_one_mixed_column"] = one_mixed;
    r.verdicts["euler_diagonal"] = euler;
    return r;
}

Report lattice_report(const std::string& lemma, const lattice::Params& given) {
    Report r;
    r.anchor = "lattice.certificate";
    std::vector<std::string> ids;
    if (lemma == "all") ids = lattice::lemma_ids();
    else ids = {lemma};
    const auto& known = lattice::lemma_ids();
    for (const auto& id : ids)
        if (std::find(known.begin(), known.end(), id) == known.end()) throw UsageError("unknown lemma: " + id);
    nlohmann::json certs = nlohmann::json::array();
    bool all = true;
    std::uint64_t checked = 0;
    for (const auto& id : ids) {
        std::vector<lattice::Params> grid;
        if (given.empty()) grid = lattice::default_grid(id);
        else grid = {given};
        for (const auto& ps : grid) {
            lattice::Certificate c;
            try {
                c = lattice::certify(id, ps);
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
            all = all && c.pass && c.candidates_checked > 0;
            checked += c.candidates_checked;
            certs.push_back(lattice::to_json(c));
        }
    }
    r.payload["certificates"] = certs;
    r.payload["candidates_checked"] = checked;
    r.verdicts["all_pass"] = all;
    return r;
}

Report moduli_report(long i0, long i1, const std::string& check) {
    using namespace moduli;
    Report r;
    if (check == "picid" || check == "all") r.anchor = "moduli.picid";
    else if (check == "dims") r.anchor = "moduli.dims";
    else r.anchor = "moduli.classes";
    const bool cls = check == "all" || check == "osztaly";
    const bool pic = check == "all" || check == "picid";
    const bool dims = check == "all" || check == "dims";
    bool ok_cls = true, ok_pic = true, ok_rank = true;
    nlohmann::json rows = nlohmann::json::array();
    for (long i = i0; i <= i1; ++i) {
        nlohmann::json row = {{"i", i}};
        if (cls) {
            const auto g = c1_rec(i - 1, 2, i, Family::G), h = c1_rec(i - 1, 2, i, Family::H);
            const auto syz = syz_class(i);
            const bool v = g == c1_G_closed(i) && h == c1_H_closed(i) && syz == syz_closed(i);
            ok_cls = ok_cls && v;
            row["c1_G"] = class_json(g);
            row["c1_H"] = class_json(h);
            row["syz"] = class_json(syz);
            row["classes_match_closed_forms"] = v;
        }
        if (pic) {
            const auto syz = syz_class(i), sec = sec_class(i), hur = hur_pullback(i);
            const bool v = syz == sec + hur * BigRational(i);
            ok_pic = ok_pic && v;
            row["sec"] = class_json(sec);
            row["hur"] = class_json(hur);
            row["picid"] = v;
        }
        if (dims) {
            const auto rg = rank_rec(i - 1, 2, i, Family::G), rh = rank_rec(i - 1, 2, i, Family::H);
            const auto dc = dim_count_check(i);
            const bool v = rg == rh && rg == dc.fibre && dc.derived_eq_fibre;
            ok_rank = ok_rank && v;
            row["rank_G"] = to_string(rg);
            row["rank_H"] = to_string(rh);
            row["dim_printed"] = to_string(dc.printed);
            row["dim_derived"] = to_string(dc.derived);
            row["dim_fibre"] = to_string(dc.fibre);
            row["printed_eq_derived"] = dc.printed_eq_derived;
            row["ranks_balance"] = v;
        }
        rows.push_back(row);
    }
    if (check == "all") {
        bool grr = true;
        for (long ell = 1; ell <= 10; ++ell) grr = grr && grr_expand(ell, 1) == c1_G0(ell, 1);
        r.verdicts["grr_matches_c1_G0"] = grr;
    }
    r.payload["rows"] = rows;
    if (cls) r.verdicts["classes_match_closed_forms"] = ok_cls;
    if (pic) r.verdicts["picid"] = ok_pic;
    if (dims) r.verdicts["ranks_balance"] = ok_rank;
    return r;
}

Report scan_report(long g, std::uint32_t p, std::uint64_t seed) {
    if (g < 3 || g % 2 == 0) throw UsageError("scan-torsion needs odd g >= 3");
    Report r;
    r.anchor = "curve.torsion_scan";
    const auto c = curve::hyperelliptic_sample(p, static_cast<int>(g), seed);
    const long pp = (g - 3) / 2;
    const auto rows = curve::torsion_scan(c, pp);
    nlohmann::json out = nlohmann::json::array();
    long vanishing = 0;
    for (const auto& row : rows) {
        out.push_back({row.mask, row.h1, row.vanishing});
        vanishing += row.vanishing ? 1 : 0;
    }
    r.payload["curve"] = c.id();
    r.payload["f"] = c.f;
    r.payload["weierstrass_x"] = c.roots;
    r.payload["p"] = pp;
    r.payload["row_format"] = {"mask", "h1 for j=0..p", "vanishing"};
    r.payload["rows"] = out;
    r.payload["classes"] = rows.size();
    r.payload["vanishing_classes"] = vanishing;
    r.verdicts["complete"] = rows.size() == (std::size_t{1} << (2 * g));
    return r;
}

Report secant_report(long quartics, long hyp, std::uint32_t p, std::uint64_t seed) {
    Report r;
    r.anchor = "koszul.secant";
    r.payload = secant_suite(p, quartics, hyp, seed);
    r.verdicts["quartic_equivalence"] = r.payload["quartic_mismatches"].empty();
    r.verdicts["hyperelliptic_k02_nonzero"] = r.payload["hyperelliptic_failures"].empty();
    return r;
}

int report_command(const std::string& input, std::ostream& out, std::ostream& err) {
    std::ifstream in(input);
    if (!in) {
        err << "report: cannot open " << input << "\n";
        return kUsage;
    }
    Report r;
    try {
        r = report_from_json(nlohmann::json::parse(in));
    } catch (const std::exception& e) {
        err << "report: " << e.what() << "\n";
        return kUsage;
    }
    out << r.command << "  [" << r.anchor << ": " << anchor_table().at(r.anchor) << "]\n";
    out << "  params " << r.params.dump() << "  prime " << r.prime << "  seed " << r.seed << "\n";
    for (const auto& [name, v] : r.verdicts.items()) out << "  " << (v == true ? "PASS " : "FAIL ") << name << "\n";
    if (!r.error.empty()) out << "  error: " << r.error << "\n";
    if (r.payload.contains("table") && r.payload["table"].contains("diagram"))
        out << r.payload["table"]["diagram"].get<std::string>();
    return r.pass() ? kPass : kCheckFailed;
}

}  // namespace

std::pair<long, long> parse_range(const std::string& s) {
    const auto dots = s.find("..");
    try {
        std::size_t used = 0;
        if (dots == std::string::npos) {
            const long v = std::stol(s, &used);
            if (used != s.size()) throw std::invalid_argument(s);
            return {v, v};
        }
        const std::string a = s.substr(0, dots), b = s.substr(dots + 2);
        const long lo = std::stol(a, &used);
        if (used != a.size()) throw std::invalid_argument(s);
        const long hi = std::stol(b, &used);
        if (used != b.size()) throw std::invalid_argument(s);
        if (lo > hi) throw std::invalid_argument(s);
        return {lo, hi};
    } catch (const std::exception&) {
        throw std::invalid_argument("bad range '" + s + "', expected a..b");
    }
}

nlohmann::json secant_suite(std::uint32_t p, long quartics, long hyperelliptic, std::uint64_t seed) {
    nlohmann::json samples = nlohmann::json::array(), mismatches = nlohmann::json::array();
    long on_conic = 0;
    for (long s = 0; s < quartics; ++s) {
        const auto q = curve::plane_quartic_sample(p, seed + static_cast<std::uint64_t>(s));
        std::mt19937_64 rng(seed * 1000003ULL + static_cast<std::uint64_t>(s));
        std::vector<curve::ProjPoint> E;
        if (s % 2 == 0) {
            const auto l1 = curve::split_line(q, rng);
            std::vector<curve::ProjPoint> l2;
            for (int t = 0; t < 20 && !l1.empty(); ++t) {
                l2 = curve::split_line(q, rng);
                if (l2 != l1) break;
            }
            E.assign(l1.begin(), l1.end());
            for (const auto& P : l2)
                if (E.size() < 6 && std::find(E.begin(), E.end(), P) == E.end()) E.push_back(P);
        }
        if (E.size() != 6) {
            E.clear();
            auto pool = q.points;
            std::shuffle(pool.begin(), pool.end(), rng);
            E.assign(pool.begin(), pool.begin() + 6);
        }
        const auto cmp = koszul::gl_secant_divisorial_check(q, E, seed + static_cast<std::uint64_t>(s));
        on_conic += cmp.rhs ? 1 : 0;
        nlohmann::json rec = {{"model", q.id()}, {"E", E}, {"k02_nonzero", cmp.lhs}, {"on_conic", cmp.rhs}};
        if (cmp.lhs != cmp.rhs) {
            rec["F"] = q.F;
            mismatches.push_back(rec);
        }
        samples.push_back(rec);
    }
    nlohmann::json hyp = nlohmann::json::array(), hyp_fail = nlohmann::json::array();
    for (long s = 0; s < hyperelliptic; ++s) {
        const auto c = curve::hyperelliptic_sample(p, 3, seed + 5000 + static_cast<std::uint64_t>(s));
        std::mt19937_64 rng(seed + 7919ULL * static_cast<std::uint64_t>(s + 1));
        curve::Divisor L;
        for (int t = 0; t < 64; ++t) {
            L = curve::random_effective(c, 6, rng);
            if (curve::h0(c, c.canonical() - L) == 0) break;
        }
        const auto cmp = koszul::gl_secant_divisorial_check(c, L, seed + static_cast<std::uint64_t>(s));
        nlohmann::json rec = {{"model", c.id()}, {"L", curve::to_string(L)}, {"k02_nonzero", cmp.lhs}};
        if (!cmp.lhs) {
            rec["f"] = c.f;
            hyp_fail.push_back(rec);
        }
        hyp.push_back(rec);
    }
    return {{"quartic_samples", samples},
            {"quartic_on_conic", on_conic},
            {"quartic_mismatches", mismatches},
            {"hyperelliptic_samples", hyp},
            {"hyperelliptic_failures", hyp_fail}};
}

RunResult run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Syzygies of curves over finite fields"};
    app.require_subcommand(1);
    std::uint32_t prime = kDefaultPrime;
    std::uint64_t seed = 0;
    std::string output, cache_dir;
    bool no_cache = false;
    app.add_option("--prime", prime, "field characteristic")->capture_default_str();
    app.add_option("--seed", seed, "base seed")->capture_default_str();
    app.add_option("-o,--output", output, "write the JSON report here instead of stdout");
    app.add_option("--cache-dir", cache_dir, "report cache directory (default: $SYZYGY_CACHE_DIR)");
    app.add_flag("--no-cache", no_cache);

    std::string model;
    long pmax = 2, qmax = 2;
    bool oracle = false, pretty = false;
    auto* betti = app.add_subcommand("betti", "Betti table of a model");
    betti->add_option("--model", model, "e.g. \"quartic seed=3\", \"hyp g=5 seed=7\", \"rnc d=4\"")->required();
    betti->add_option("--pmax", pmax)->check(CLI::Range(0L, 40L));
    betti->add_option("--qmax", qmax)->check(CLI::Range(1L, 8L));
    betti->add_flag("--oracle", oracle, "cross-check against a minimal free resolution");
    betti->add_flag("--pretty", pretty, "print the diagram to stdout");

    std::string lemma = "all";
    std::optional<long> lg, lp, lj;
    auto* lat = app.add_subcommand("lattice-certify", "certify lattice lemmas");
    lat->add_option("--lemma", lemma, "lemma id or 'all'")->capture_default_str();
    lat->add_option("--g", lg);
    lat->add_option("--p", lp);
    lat->add_option("--j", lj);
    auto* list = lat->add_flag("--list", "list lemma ids");

    std::string grange = "7..35";
    auto* prym = app.add_subcommand("prym-green", "predicted Prym-canonical tables");
    prym->add_option("--g", grange, "odd genus or range a..b")->capture_default_str();

    long quartics = 100, hyps = 20;
    auto* sec = app.add_subcommand("secant", "K_{0,2} against the secant condition at genus 3");
    sec->add_option("--samples", quartics)->check(CLI::Range(0L, 100000L))->capture_default_str();
    sec->add_option("--hyperelliptic", hyps)->check(CLI::Range(0L, 100000L))->capture_default_str();

    std::string irange = "1..60", check = "all";
    auto* mod = app.add_subcommand("moduli", "divisor class identities");
    mod->add_option("--i-range", irange)->capture_default_str();
    mod->add_option("--check", check)->check(CLI::IsMember({"all", "osztaly", "picid", "dims"}))->capture_default_str();

    long tg = 7;
    auto* scan = app.add_subcommand("scan-torsion", "h1 over all 2-torsion twists");
    scan->add_option("--g", tg)->check(CLI::Range(3L, 9L))->capture_default_str();

    std::string input;
    auto* rep = app.add_subcommand("report", "summarize a saved report");
    rep->add_option("input", input)->required();

    RunResult res;
    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        res.exit_code = kPass;
        return res;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        res.exit_code = kPass;
        return res;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        res.exit_code = kUsage;
        return res;
    }

    if (*rep) {
        res.exit_code = report_command(input, out, err);
        return res;
    }
    if (*lat && list->count() > 0) {
        for (const auto& id : lattice::lemma_ids()) out << id << "\n";
        res.exit_code = kPass;
        return res;
    }

    std::string command;
    nlohmann::json params = nlohmann::json::object();
    std::function<Report()> compute;
    try {
        if (*betti) {
            command = "betti";
            params = {{"model", model}, {"pmax", pmax}, {"qmax", qmax}, {"oracle", oracle}};
            compute = [&] { return betti_report(model, pmax, qmax, oracle, prime); };
        } else if (*lat) {
            command = "lattice-certify";
            lattice::Params ps;
            if (lg) ps["g"] = *lg;
            if (lp) ps["p"] = *lp;
            if (lj) ps["j"] = *lj;
            params = {{"lemma", lemma}, {"params", ps}};
            compute = [&, ps] { return lattice_report(lemma, ps); };
        } else if (*prym) {
            command = "prym-green";
            const auto [a, b] = parse_range(grange);
            if (a < 7 || a % 2 == 0 || b % 2 == 0) throw UsageError("prym-green needs odd g >= 7");
            params = {{"g", {a, b}}};
            compute = [a = a, b = b] { return prym_report(a, b); };
        } else if (*sec) {
            command = "secant";
            params = {{"quartic_samples", quartics}, {"hyperelliptic_samples", hyps}};
            compute = [&] { return secant_report(quartics, hyps, prime, seed); };
        } else if (*mod) {
            command = "moduli";
            const auto [a, b] = parse_range(irange);
            if (a < 1 || b > moduli::kMaxI) throw UsageError("--i-range must lie in 1.." + std::to_string(moduli::kMaxI));
            params = {{"i", {a, b}}, {"check", check}};
            compute = [a = a, b = b, &check] { return moduli_report(a, b, check); };
        } else if (*scan) {
            command = "scan-torsion";
            params = {{"g", tg}};
            compute = [&] { return scan_report(tg, prime, seed); };
        }
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        res.exit_code = kUsage;
        return res;
    }
    if (prime < 3 || prime > 65521) {
        err << "--prime must be an odd prime below 65536\n";
        res.exit_code = kUsage;
        return res;
    }
    for (std::uint32_t d = 2; d * d <= prime; ++d)
        if (prime % d == 0) {
            err << "--prime " << prime << " is not prime\n";
            res.exit_code = kUsage;
            return res;
        }

    std::optional<ReportCache> cache;
    const std::string key = cache_key(command, params, seed, prime);
    if (!no_cache) {
        std::optional<std::filesystem::path> dir;
        if (!cache_dir.empty()) dir = cache_dir;
        else dir = env_cache_dir();
        if (dir) cache.emplace(*dir);
    }

    std::optional<std::string> hit;
    if (cache) hit = cache->lookup(key);
    Report report;
    if (hit) {
        res.bytes = *hit;
        res.from_cache = true;
        report = report_from_json(nlohmann::json::parse(res.bytes));
    } else {
        try {
            report = compute();
        } catch (const UsageError& e) {
            err << e.what() << "\n";
            res.exit_code = kUsage;
            return res;
        } catch (const std::invalid_argument& e) {
            err << e.what() << "\n";
            res.exit_code = kUsage;
            return res;
        } catch (const std::exception& e) {
            report = Report{};
            static const std::map<std::string, std::string> fallback = {
                {"betti", "koszul.betti"},         {"lattice-certify", "lattice.certificate"},
                {"prym-green", "koszul.prym_green"}, {"secant", "koszul.secant"},
                {"moduli", "moduli.classes"},      {"scan-torsion", "curve.torsion_scan"}};
            report.anchor = fallback.at(command);
            report.error = e.what();
            err << command << ": " << e.what() << "\n";
        }
        report.command = command;
        report.params = params;
        report.prime = prime;
        if (!*betti) report.seed = seed;
        else if (report.seed == 0) report.seed = seed;
        if (!anchor_registered(report.anchor)) throw std::logic_error("unregistered anchor " + report.anchor);
        res.bytes = serialize(report);
        if (cache && report.error.empty()) cache->store(key, res.bytes);
    }

    if (output.empty()) {
        out << res.bytes;
    } else {
        const std::filesystem::path path(output);
        const auto tmp = path.string() + ".tmp";
        {
            std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
            if (!f) {
                err << "cannot write " << output << "\n";
                res.exit_code = kUsage;
                return res;
            }
            f << res.bytes;
        }
        std::filesystem::rename(tmp, path);
    }
    if (*betti && (pretty || !output.empty()) && report.payload.contains("table"))
        out << report.payload["table"]["diagram"].get<std::string>();
    res.exit_code = report.pass() ? kPass : kCheckFailed;
    return res;
}

int run(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, std::cout, std::cerr).exit_code;
}

}  // namespace syzygy::cli

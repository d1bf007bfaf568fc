// sharygin: command-line driver for the Sharygin-triangle engine.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.
// Primary output is deterministic: identical invocations produce
// byte-identical stdout.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "sharygin/appendix.hpp"
#include "sharygin/curve.hpp"
#include "sharygin/cyclotomic.hpp"
#include "sharygin/enumerate.hpp"
#include "sharygin/parallel.hpp"
#include "sharygin/qf17.hpp"
#include "sharygin/real.hpp"
#include "sharygin/torsion.hpp"
#include "sharygin/triangle.hpp"

namespace {

using namespace sharygin;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Form parse_form(const std::string& name) {
    if (name == "cubic") return Form::cubic;
    if (name == "weierstrass") return Form::weierstrass;
    if (name == "minimal") return Form::minimal;
    throw UsageError("unknown form '" + name + "' (expected cubic, weierstrass or minimal)");
}

ProjectiveTriple parse_point(const std::string& text, Form form) {
    try {
        return ProjectiveTriple::parse(text, form);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("bad point '") + text + "': " + e.what());
    }
}

WeierstrassPoint lift_to_group(const ProjectiveTriple& p) {
    switch (p.form()) {
        case Form::cubic: return cubic_to_weierstrass(p);
        case Form::weierstrass: return to_weierstrass_point(p);
        case Form::minimal: return minimal_to_weierstrass(p);
    }
    throw std::logic_error("lift_to_group: bad form");
}

ProjectiveTriple present_in_form(const WeierstrassPoint& p, Form form) {
    switch (form) {
        case Form::cubic: return weierstrass_to_cubic(p);
        case Form::weierstrass: return to_projective(p);
        case Form::minimal: return weierstrass_to_minimal(p);
    }
    throw std::logic_error("present_in_form: bad form");
}

int cmd_verify_point(const std::string& form_name_arg, const std::string& point_text) {
    Form form = parse_form(form_name_arg);
    ProjectiveTriple p = parse_point(point_text, form);
    bool ok = is_on_curve(p);
    std::cout << p.to_string() << " (" << form_name(form) << "): "
              << (ok ? "on curve" : "NOT on curve") << "\n";
    return ok ? 0 : 1;
}

int cmd_add(const std::string& form_name_arg, const std::string& lhs, const std::string& rhs) {
    Form form = parse_form(form_name_arg);
    WeierstrassPoint p = lift_to_group(parse_point(lhs, form));
    WeierstrassPoint q = lift_to_group(parse_point(rhs, form));
    std::cout << present_in_form(add(p, q), form).to_string() << "\n";
    return 0;
}

int cmd_mul(const std::string& form_name_arg, long n, const std::string& point_text) {
    Form form = parse_form(form_name_arg);
    WeierstrassPoint p = lift_to_group(parse_point(point_text, form));
    std::cout << present_in_form(scalar_mul(n, p), form).to_string() << "\n";
    return 0;
}

int cmd_enumerate(int n_max, const std::string& format_name, const std::string& output,
                  const std::string& checkpoint, unsigned threads) {
    CatalogFormat format;
    if (format_name == "json")
        format = CatalogFormat::json;
    else if (format_name == "csv")
        format = CatalogFormat::csv;
    else
        throw UsageError("unknown format '" + format_name + "' (expected json or csv)");
    if (!checkpoint.empty() && output.empty())
        throw UsageError("--checkpoint requires --output");

    EmitSummary summary;
    if (!checkpoint.empty()) {
        summary = emit_catalog_resumable(n_max, format, output, checkpoint, threads);
    } else if (!output.empty()) {
        std::ofstream out(output, std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open output file " + output);
        summary = emit_catalog(n_max, format, out, threads);
    } else {
        summary = emit_catalog(n_max, format, std::cout, threads);
    }
    std::cerr << "wrote " << summary.records_written << " records (n = " << summary.first_n
              << ".." << summary.last_n << "), " << summary.sharygin_count
              << " Sharygin triangles" << (summary.resumed ? " [resumed]" : "") << "\n";
    return 0;
}

int cmd_catalog_verify() {
    FactorizationReport report = verify_factorizations();
    const std::vector<CatalogEntry>& entries = printed_factorizations();
    for (size_t e = 0; e < report.checks.size(); ++e) {
        const FactorizationCheck& check = report.checks[e];
        std::cout << check.label << ": sides "
                  << (check.sides_match ? "match printed factorizations" : "MISMATCH");
        if (!check.nonprime_small_factors.empty()) {
            std::cout << "; non-prime printed factors:";
            for (const Integer& f : check.nonprime_small_factors) std::cout << " " << f;
        }
        std::cout << "\n";
        for (size_t i = 0; i < 3; ++i)
            std::cout << "    " << check.products[i] << " = " << entries[e].groups[i].to_string()
                      << "\n";
    }
    std::cout << (report.ok() ? "catalog factorizations verified" : "catalog verification FAILED")
              << "\n";
    return report.ok() ? 0 : 1;
}

int cmd_torsion() {
    std::vector<TorsionCandidate> candidates = torsion_candidates();
    size_t rejected = 0;
    for (const TorsionCandidate& c : candidates)
        if (!c.confirmed_order) ++rejected;
    std::vector<WeierstrassPoint> subgroup = torsion_subgroup();

    bool expected = subgroup.size() == 2 && subgroup[0].is_infinity() &&
                    subgroup[1] == WeierstrassPoint::affine(Rational(0), Rational(0));
    std::cout << "torsion subgroup: {O, (0,0)}";
    if (!expected) {
        std::cout << " EXPECTED, got {";
        for (const WeierstrassPoint& p : subgroup) std::cout << " " << p.to_string();
        std::cout << " }";
    }
    std::cout << "\n";
    std::cout << "isomorphic to Z/2Z; (0,0) has cubic coordinates "
              << weierstrass_to_cubic(WeierstrassPoint::affine(Rational(0), Rational(0))).to_string()
              << "\n";
    std::cout << "candidates audited: " << candidates.size() << " (" << rejected
              << " rejected by the order-12 bound)\n";
    return expected ? 0 : 1;
}

int cmd_growth_cert(int multiple, int steps) {
    WeierstrassPoint start = scalar_mul(multiple, generator_point());
    std::cout << "start " << multiple << "A, x = " << to_string(start.x()) << "\n";
    GrowthCertificate cert = growth_certificate(start, steps);
    for (size_t i = 1; i < cert.numerators.size(); ++i)
        std::cout << "step " << i << ": numerator has "
                  << mpz_sizeinbase(cert.numerators[i].get_mpz_t(), 10)
                  << " digits (odd, positive, > previous)\n";
    std::cout << "growth certificate: " << steps
              << " strictly increasing odd positive numerators; the start point has infinite order\n";
    return 0;
}

int cmd_count_points(long p_max, long single_p, const std::string& output, unsigned threads) {
    std::ostream* out = &std::cout;
    std::ofstream file;
    if (!output.empty()) {
        file.open(output, std::ios::trunc);
        if (!file) throw std::runtime_error("cannot open output file " + output);
        out = &file;
    }
    *out << "p,Np,ap\n";
    if (single_p > 0) {
        ReductionCount rc = count_points_mod_p(single_p);
        *out << rc.p << "," << rc.np << "," << rc.ap << "\n";
        return 0;
    }
    HasseScanReport report = hasse_scan(p_max, threads);
    for (const ReductionCount& rc : report.counts)
        *out << rc.p << "," << rc.np << "," << rc.ap << "\n";
    return 0;
}

int cmd_hasse_scan(long p_max, const std::string& csv_path, unsigned threads) {
    HasseScanReport report = hasse_scan(p_max, threads);
    if (!csv_path.empty()) {
        std::ofstream csv(csv_path, std::ios::trunc);
        if (!csv) throw std::runtime_error("cannot open csv file " + csv_path);
        csv << "p,Np,ap\n";
        for (const ReductionCount& rc : report.counts)
            csv << rc.p << "," << rc.np << "," << rc.ap << "\n";
    }
    std::cout << "checked " << report.counts.size() << " good primes p <= " << p_max
              << "; Hasse bound violations: " << report.violations.size() << "\n";
    for (long p : report.violations) std::cout << "  VIOLATION at p = " << p << "\n";
    return report.violations.empty() ? 0 : 1;
}

int cmd_descent_check() {
    bool all_ok = true;
    const DescentConstants& k = descent_constants();
    std::cout << "field: Q(sqrt17); e1 = 0, e2 = " << k.e2.to_string() << ", e3 = "
              << k.e3.to_string() << "\n";
    std::cout << "unit 4 + sqrt17 has norm " << to_string(k.unit.norm())
              << "; 2 = (2+)(2-) with 2+ = " << k.two_plus.to_string() << ", 2- = "
              << k.two_minus.to_string() << "\n";

    std::vector<QF17Element> reps = ks2_representatives();
    bool inequiv = ks2_pairwise_inequivalent(reps);
    all_ok = all_ok && reps.size() == 64 && inequiv;
    std::cout << "K(S,2) representatives: " << reps.size()
              << ", pairwise square-inequivalent: " << (inequiv ? "yes" : "NO") << "\n";

    int row_index = 0;
    for (const WitnessRow& row : builtin_witness_table()) {
        ++row_index;
        WeierstrassPoint p = verify_witness(row.witness);
        bool ok = p == row.expected;
        all_ok = all_ok && ok;
        std::cout << "row " << row_index << ": b1 = " << row.witness.b1.to_string() << ", b2 = "
                  << row.witness.b2.to_string() << "; equations exact; recovered " << p.to_string()
                  << " = " << row.label << (ok ? "" : "  [MISMATCH]") << "\n";
    }

    bool step9 = minpoly_check_step9();
    bool step11 = squares_mod8_obstruction();
    all_ok = all_ok && step9 && step11;
    std::cout << "minimal-polynomial checks (2B^4 - 21B^2 + 2 = 0, B not in Q(sqrt17)): "
              << (step9 ? "pass" : "FAIL") << "\n";
    std::cout << "mod-8 obstruction (odd squares = 1, 5 not a square): "
              << (step11 ? "pass" : "FAIL") << "\n";

    auto [branch5, other5] = hensel_sqrt17(5);
    std::cout << "2-adic sqrt(17) mod 2^5: " << branch5.residue << " (other branch "
              << other5.residue << ")\n";
    long o2m = ord2(k.two_minus), o2p = ord2(k.two_plus), o2e2 = ord2(k.e2), o2e3 = ord2(k.e3);
    Rational o17 = ord17(k.sqrt17);
    bool vals_ok = o2m == 1 && o2p == 0 && o2e2 == 5 && o2e3 == 0 && o17 == Rational(1, 2);
    all_ok = all_ok && vals_ok;
    std::cout << "valuations on the canonical branch: ord2(2-) = " << o2m << ", ord2(2+) = " << o2p
              << ", ord2(e2) = " << o2e2 << ", ord2(e3) = " << o2e3
              << ", ord17(sqrt17) = " << to_string(o17) << (vals_ok ? "" : "  [MISMATCH]") << "\n";

    // Images of {O, D, A, A+D} under x -> (x - e1, x - e2) must represent
    // four distinct classes, matching |E(Q)/2E(Q)| = 4.
    std::vector<std::pair<std::string, WeierstrassPoint>> points{
        {"O", WeierstrassPoint::infinity()},
        {"D", torsion_point()},
        {"A", generator_point()},
        {"A+D", add(generator_point(), torsion_point())}};
    bool distinct = true;
    for (size_t i = 0; i < points.size(); ++i)
        for (size_t j = i + 1; j < points.size(); ++j) {
            auto [b1i, b2i] = descent_image(points[i].second);
            auto [b1j, b2j] = descent_image(points[j].second);
            if (same_square_class(b1i, b1j) && same_square_class(b2i, b2j)) distinct = false;
        }
    all_ok = all_ok && distinct;
    std::cout << "descent images of {O, D, A, A+D} pairwise distinct in K(S,2)^2: "
              << (distinct ? "yes" : "NO") << "\n";
    std::cout << (all_ok ? "descent verification passed" : "descent verification FAILED") << "\n";
    return all_ok ? 0 : 1;
}

int cmd_heptagon_search(unsigned n_max, bool numeric_only, unsigned threads) {
    SearchOptions options;
    options.threads = threads;
    options.exact = !numeric_only;
    for (const SearchHit& hit : search(n_max, options))
        std::cout << "{\"N\":" << hit.N << ",\"m\":" << hit.m << ",\"n\":" << hit.n << "}\n";
    return 0;
}

int cmd_check_triangle(const std::string& a_text, const std::string& b_text,
                       const std::string& c_text) {
    Rational a, b, c;
    try {
        a = parse_rational(a_text);
        b = parse_rational(b_text);
        c = parse_rational(c_text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (sgn(a) <= 0 || sgn(b) <= 0 || sgn(c) <= 0) throw UsageError("sides must be positive");
    if (!TriangleTriple::valid_sides(a, b, c)) {
        std::cout << "NOT A TRIANGLE\n";
        return 1;
    }
    TriangleTriple t(a, b, c);
    if (is_sharygin(t)) {
        std::cout << "SHARYGIN\n";
        return 0;
    }
    std::cout << "NOT SHARYGIN\n";
    return 1;
}

int cmd_inflexions() {
    IntPoly octic = inflexion_polynomial();
    std::cout << "inflexion polynomial (t = a/b, origin factor removed):";
    for (const Integer& c : octic.coefficients()) std::cout << " " << c;
    std::cout << "\n";

    // A rational root would have numerator and denominator dividing 32.
    std::vector<Rational> rational_coeffs;
    for (const Integer& c : octic.coefficients()) rational_coeffs.emplace_back(c);
    RatPoly octic_q(std::move(rational_coeffs));
    bool rational_root = false;
    for (long num : {1, 2, 4, 8, 16, 32})
        for (long den : {1, 2, 4, 8, 16, 32})
            for (long s : {1, -1})
                if (sgn(octic_q.evaluate(Rational(s * num, den))) == 0) rational_root = true;
    // The chart t = a/b misses only the two curve points with b = 0; neither
    // is an inflexion.
    bool b0_clear =
        sgn(hessian_eval(ProjectiveTriple(Integer(1), Integer(0), Integer(1), Form::cubic))) != 0 &&
        sgn(hessian_eval(ProjectiveTriple(Integer(1), Integer(0), Integer(-1), Form::cubic))) != 0;
    bool origin_inflexion = sgn(hessian_eval(curve_constants().origin_o)) == 0;

    bool ok = !rational_root && b0_clear && origin_inflexion;
    std::cout << "rational roots of the octic: " << (rational_root ? "FOUND (unexpected)" : "none")
              << "\n";
    std::cout << "unique rational inflexion: (1:-1:0)" << (ok ? "" : "  [CHECK FAILED]") << "\n";
    return ok ? 0 : 1;
}

int cmd_appendix_verify() {
    AppendixReport report = verify_appendix();
    for (size_t i = 0; i < report.cells.size(); i += 3) {
        std::cout << report.cells[i].label << ":";
        for (size_t j = i; j < i + 3; ++j) {
            const AppendixCell& cell = report.cells[j];
            std::cout << " " << form_name(cell.form) << "=";
            switch (cell.status) {
                case CellStatus::match: std::cout << "ok"; break;
                case CellStatus::match_negated: std::cout << "ok(negated)"; break;
                case CellStatus::whitelisted: std::cout << "whitelisted"; break;
                case CellStatus::mismatch: std::cout << "MISMATCH[" << cell.note << "]"; break;
            }
        }
        std::cout << "\n";
    }
    std::cout << report.cells.size() / 3 << " rows, " << report.cells.size()
              << " cells: " << report.matches << " match, " << report.negated << " negated, "
              << report.whitelisted << " whitelisted, " << report.mismatches << " mismatch\n";
    return report.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact arithmetic engine for Sharygin triangles and the elliptic curve behind them"};
    app.require_subcommand(1);

    unsigned precision = kDefaultRealPrecisionBits;
    std::string tolerance = kDefaultTolerance;
    unsigned threads_flag = 0;
    app.add_option("--precision", precision, "working precision for numeric checks, in bits (>= 64)")
        ->capture_default_str();
    app.add_option("--tolerance", tolerance, "absolute tolerance for numeric checks")
        ->capture_default_str();
    app.add_option("--threads", threads_flag,
                   "worker threads (0 = SHARYGIN_THREADS or hardware default)");

    auto* verify_point = app.add_subcommand("verify-point", "check that a point satisfies its model");
    std::string vp_form = "cubic", vp_point;
    verify_point->add_option("--form", vp_form, "cubic|weierstrass|minimal")->capture_default_str();
    verify_point->add_option("point", vp_point, "projective point u:v:w")->required();

    auto* add_cmd = app.add_subcommand("add", "add two points");
    std::string add_form = "weierstrass", add_p, add_q;
    add_cmd->add_option("--form", add_form, "cubic|weierstrass|minimal")->capture_default_str();
    add_cmd->add_option("p", add_p, "projective point u:v:w")->required();
    add_cmd->add_option("q", add_q, "projective point u:v:w")->required();

    auto* mul_cmd = app.add_subcommand("mul", "scalar multiple of a point");
    std::string mul_form = "weierstrass", mul_point;
    long mul_n = 0;
    mul_cmd->add_option("--form", mul_form, "cubic|weierstrass|minimal")->capture_default_str();
    mul_cmd->add_option("n", mul_n, "integer scalar")->required();
    mul_cmd->add_option("point", mul_point, "projective point u:v:w")->required();

    auto* enumerate = app.add_subcommand("enumerate", "walk nA and nA+D and emit the catalog");
    int en_nmax = 135;
    std::string en_format = "json", en_output, en_checkpoint;
    enumerate->add_option("--nmax", en_nmax, "largest multiple of A")->capture_default_str();
    enumerate->add_option("--format", en_format, "json|csv")->capture_default_str();
    enumerate->add_option("--output", en_output, "output path (default stdout)");
    enumerate->add_option("--checkpoint", en_checkpoint, "checkpoint path for resumable runs");

    auto* catalog_verify =
        app.add_subcommand("catalog-verify", "verify the printed triangle factorizations");

    auto* torsion = app.add_subcommand("torsion", "Nagell-Lutz torsion subgroup");

    auto* growth =
        app.add_subcommand("growth-cert", "infinite-order certificate by duplication growth");
    int gc_multiple = 6, gc_steps = 10;
    growth->add_option("--multiple", gc_multiple, "start point nA")->capture_default_str();
    growth->add_option("--steps", gc_steps, "duplication steps")->capture_default_str();

    auto* count_points = app.add_subcommand("count-points", "affine point counts mod p (CSV)");
    long cp_pmax = 10000, cp_single = 0;
    std::string cp_output;
    count_points->add_option("--pmax", cp_pmax, "count for all good primes <= pmax")
        ->capture_default_str();
    count_points->add_option("--p", cp_single, "count for a single prime");
    count_points->add_option("--output", cp_output, "output path (default stdout)");

    auto* hasse = app.add_subcommand("hasse-scan", "verify the Hasse bound for all good primes");
    long hs_pmax = 10000;
    std::string hs_csv;
    hasse->add_option("--pmax", hs_pmax, "largest prime")->capture_default_str();
    hasse->add_option("--csv", hs_csv, "also write p,Np,ap rows to this file");

    auto* descent =
        app.add_subcommand("descent-check", "verify the 2-descent computations over Q(sqrt17)");

    auto* heptagon = app.add_subcommand(
        "heptagon-search", "search regular-polygon vertex triples for Sharygin triangles");
    unsigned hp_nmax = 200;
    bool hp_numeric = false;
    heptagon->add_option("--nmax", hp_nmax, "largest polygon order N")->capture_default_str();
    auto* exact_flag =
        heptagon->add_flag("--exact", "confirm hits with the exact cyclotomic test (default)");
    heptagon->add_flag("--numeric", hp_numeric, "report numeric near-zeros without exact confirmation")
        ->excludes(exact_flag);

    auto* check_triangle = app.add_subcommand("check-triangle", "exact bisectral Sharygin test");
    std::string ct_a, ct_b, ct_c;
    check_triangle->add_option("a", ct_a)->required();
    check_triangle->add_option("b", ct_b)->required();
    check_triangle->add_option("c", ct_c)->required();

    auto* inflexions =
        app.add_subcommand("inflexions", "inflexion polynomial and rational inflexions");

    auto* appendix = app.add_subcommand("appendix-verify", "recompute the reference point table");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\nrun with --help for usage\n";
        return 2;
    }

    try {
        if (precision < 64) throw UsageError("--precision must be at least 64 bits");
        set_real_precision_bits(precision);
        Real tol;
        try {
            tol = Real(tolerance);
        } catch (...) {
            throw UsageError("--tolerance must be a number");
        }
        if (!(tol > 0)) throw UsageError("--tolerance must be positive");
        unsigned threads = resolve_thread_count(threads_flag);

        if (verify_point->parsed()) return cmd_verify_point(vp_form, vp_point);
        if (add_cmd->parsed()) return cmd_add(add_form, add_p, add_q);
        if (mul_cmd->parsed()) return cmd_mul(mul_form, mul_n, mul_point);
        if (enumerate->parsed()) {
            if (en_nmax < 1) throw UsageError("--nmax must be >= 1");
            return cmd_enumerate(en_nmax, en_format, en_output, en_checkpoint, threads);
        }
        if (catalog_verify->parsed()) return cmd_catalog_verify();
        if (torsion->parsed()) return cmd_torsion();
        if (growth->parsed()) {
            if (gc_steps < 1 || gc_multiple < 1)
                throw UsageError("--steps and --multiple must be >= 1");
            return cmd_growth_cert(gc_multiple, gc_steps);
        }
        if (count_points->parsed()) return cmd_count_points(cp_pmax, cp_single, cp_output, threads);
        if (hasse->parsed()) {
            if (hs_pmax < 5) throw UsageError("--pmax must be >= 5");
            return cmd_hasse_scan(hs_pmax, hs_csv, threads);
        }
        if (descent->parsed()) return cmd_descent_check();
        if (heptagon->parsed()) {
            if (hp_nmax < 3) throw UsageError("--nmax must be >= 3");
            return cmd_heptagon_search(hp_nmax, hp_numeric, threads);
        }
        if (check_triangle->parsed()) return cmd_check_triangle(ct_a, ct_b, ct_c);
        if (inflexions->parsed()) return cmd_inflexions();
        if (appendix->parsed()) return cmd_appendix_verify();
        throw UsageError("no subcommand selected");
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

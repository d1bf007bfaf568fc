#include "sharygin/enumerate.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "sharygin/parallel.hpp"

namespace sharygin {

WeierstrassPoint generator_point() {
    static const WeierstrassPoint a = cubic_to_weierstrass(curve_constants().generator_a);
    return a;
}

WeierstrassPoint torsion_point() {
    static const WeierstrassPoint d = cubic_to_weierstrass(curve_constants().torsion_d);
    return d;
}

PointRecord make_record(int n, bool with_d, const WeierstrassPoint& point) {
    if (point.is_infinity())
        throw std::invalid_argument("make_record: walk points are never the identity");
    PointRecord rec{n,     with_d, point_label(n, with_d),      point,
                    weierstrass_to_cubic(point), weierstrass_to_minimal(point),
                    std::nullopt, false};
    rec.triangle = point_to_triangle(rec.cubic);
    if (rec.triangle) {
        // Curve points inside the triangle region are Sharygin by
        // construction; this is asserted through the independent bisectral
        // computation rather than assumed.
        if (!rec.triangle->is_scalene())
            throw std::logic_error("make_record: isosceles triangle on the curve at " + rec.label);
        if (!is_sharygin(*rec.triangle))
            throw std::logic_error("make_record: bisectral check failed at " + rec.label);
        rec.sharygin = true;
    }
    return rec;
}

namespace {

struct WalkState {
    int n = 0;  // plain = nA, with_d = nA + D
    WeierstrassPoint plain = WeierstrassPoint::infinity();
    WeierstrassPoint with_d = WeierstrassPoint::infinity();
};

// Advances to n+1 and cross-checks against double-and-add periodically.
void advance(WalkState& s) {
    const WeierstrassPoint a = generator_point();
    if (s.n == 0) {
        s.plain = a;
        s.with_d = add(a, torsion_point());
        s.n = 1;
        return;
    }
    s.plain = add(s.plain, a);
    s.with_d = add(s.with_d, a);
    ++s.n;
    if (s.n % 16 == 0) {
        WeierstrassPoint expected = scalar_mul(s.n, a);
        if (s.plain != expected || s.with_d != add(expected, torsion_point()))
            throw std::logic_error("walk: incremental chain diverged from double-and-add at n = " +
                                   std::to_string(s.n));
    }
}

std::vector<PointRecord> records_from(WalkState state, int n_max, unsigned threads) {
    std::vector<std::pair<int, WeierstrassPoint>> pending;  // (n, point) pairs, both cosets
    while (state.n < n_max) {
        advance(state);
        pending.emplace_back(state.n, state.plain);
        pending.emplace_back(state.n, state.with_d);
    }
    return parallel_map<PointRecord>(pending.size(), threads, [&](size_t i) {
        return make_record(pending[i].first, i % 2 == 1, pending[i].second);
    });
}

}  // namespace

std::vector<PointRecord> walk(int n_max, unsigned threads) {
    if (n_max < 1) throw std::invalid_argument("walk: n_max must be >= 1");
    return records_from(WalkState{}, n_max, threads);
}

std::vector<std::pair<int, bool>> triangle_indices(int n_max, unsigned threads) {
    std::vector<std::pair<int, bool>> out;
    for (const PointRecord& rec : walk(n_max, threads))
        if (rec.triangle) out.emplace_back(rec.n, rec.with_d);
    return out;
}

namespace {

ProjectiveTriple computed_form(const WeierstrassPoint& p, Form form) {
    switch (form) {
        case Form::minimal: return weierstrass_to_minimal(p);
        case Form::weierstrass: return to_projective(p);
        case Form::cubic: return weierstrass_to_cubic(p);
    }
    throw std::logic_error("computed_form: bad form");
}

}  // namespace

AppendixReport verify_appendix() {
    AppendixReport report;
    for (const AppendixRow& row : appendix_rows()) {
        WeierstrassPoint p = scalar_mul(row.n, generator_point());
        if (row.with_d) p = add(p, torsion_point());
        for (Form form : {Form::minimal, Form::weierstrass, Form::cubic}) {
            const ProjectiveTriple& printed = form == Form::minimal      ? row.minimal
                                              : form == Form::weierstrass ? row.weierstrass
                                                                          : row.cubic;
            ProjectiveTriple computed = computed_form(p, form);
            AppendixCell cell{row.label, form, CellStatus::match, ""};
            if (computed == printed) {
                ++report.matches;
            } else if (negate(computed) == printed) {
                cell.status = CellStatus::match_negated;
                cell.note = "matches the negated point";
                ++report.negated;
            } else {
                cell.status = CellStatus::mismatch;
                bool found = false;
                for (const AppendixErratum& e : appendix_errata()) {
                    if (e.label == row.label && e.form == form) {
                        cell.status = CellStatus::whitelisted;
                        cell.note = e.note;
                        ++report.whitelisted;
                        found = true;
                        break;
                    }
                }
                if (!found) {
                    cell.note = "computed " + computed.to_string() + " != printed " + printed.to_string();
                    ++report.mismatches;
                }
            }
            report.cells.push_back(cell);
        }
    }
    return report;
}

Integer FactorGroup::product() const {
    Integer prod(1);
    for (const auto& [base, exp] : factors) prod *= pow_int(base, exp);
    return prod;
}

std::string FactorGroup::to_string() const {
    std::string out;
    for (const auto& [base, exp] : factors) {
        if (!out.empty()) out += "*";
        out += base.get_str();
        if (exp > 1) out += "^" + std::to_string(exp);
    }
    return out;
}

const std::vector<CatalogEntry>& printed_factorizations() {
    static const std::vector<CatalogEntry> entries = [] {
        auto group = [](std::vector<std::pair<const char*, unsigned>> factors) {
            FactorGroup g;
            for (const auto& [base, exp] : factors) g.factors.emplace_back(parse_integer(base), exp);
            return g;
        };
        std::vector<CatalogEntry> out;
        out.push_back({"9A+D",
                       {group({{"83", 2}, {"2729", 1}}),
                        group({{"1217", 2}}),
                        group({{"17", 1}, {"23", 1}, {"157", 1}, {"313", 1}})}});
        out.push_back({"16A",
                       {group({{"2", 5}, {"5", 2}, {"17", 1}, {"23", 1}, {"137", 1}, {"7901", 1}, {"943429", 2}}),
                        group({{"29", 2}, {"37", 1}, {"1291", 1}, {"3041", 2}, {"11497", 2}}),
                        group({{"3", 1}, {"19", 1}, {"83", 1}, {"2593", 1}, {"14741", 1}, {"227257", 1}, {"7704617", 1}})}});
        out.push_back({"23A+D",
                       {group({{"5", 1}, {"17", 1}, {"29", 1}, {"97", 1}, {"17182729", 1}, {"32537017", 1},
                               {"254398174040897", 1}, {"350987274396527", 1}}),
                        group({{"7", 1}, {"1093889", 2}, {"4941193", 1}, {"894993889", 2}, {"331123185233", 1}}),
                        group({{"83", 2}, {"571", 2}, {"13873", 1}, {"337789537", 1}, {"16268766383521", 2}})}});
        out.push_back({"30A",
                       {group({{"3", 1}, {"19", 1}, {"83", 1}, {"347", 1}, {"853", 2}, {"14741", 1}, {"197609", 1},
                               {"1326053", 1}, {"9921337", 2}, {"2774248223", 1}, {"16439698126501721", 2}}),
                        group({{"37", 1}, {"53", 1}, {"113", 1}, {"1291", 1}, {"6301", 2}, {"11057", 1}, {"70717", 2},
                               {"419401", 2}, {"56702749", 2}, {"75758233", 2}, {"58963203163", 1}}),
                        group({{"2", 4}, {"5", 1}, {"7", 1}, {"13", 1}, {"281", 1}, {"1361", 1}, {"4519", 1},
                               {"943429", 1}, {"1277496791", 1}, {"58636722172129", 1},
                               {"434222192069971469300337687991080717947321", 1}})}});
        out.push_back({"37A+D",
                       {group({{"5", 1}, {"2299159", 1}, {"138049208211121", 1}, {"2760426916410799", 1},
                               {"728165182513369014929", 1}, {"2457244522753608004147669717", 1},
                               {"3646312514774768838959262707271994342627321", 1}}),
                        group({{"3", 6}, {"41", 1}, {"43", 2}, {"59", 2}, {"71", 1}, {"1753", 2}, {"4271", 1},
                               {"6449", 2}, {"306193", 2}, {"258408497", 2}, {"294583400141651", 2},
                               {"5917115594031382979839359182507437287191", 1}}),
                        group({{"7", 2}, {"79", 1}, {"3529", 1}, {"2812999081", 2}, {"5544800297", 2},
                               {"16078869119", 1}, {"13860847191174419174377", 2},
                               {"306179686612030303942777", 1}})}});
        return out;
    }();
    return entries;
}

FactorizationReport verify_factorizations() {
    FactorizationReport report;
    for (const CatalogEntry& entry : printed_factorizations()) {
        auto [n, with_d] = parse_point_label(entry.label);
        WeierstrassPoint p = scalar_mul(n, generator_point());
        if (with_d) p = add(p, torsion_point());
        PointRecord rec = make_record(n, with_d, p);
        if (!rec.triangle)
            throw std::logic_error("verify_factorizations: " + entry.label + " is not a triangle");

        FactorizationCheck check;
        check.label = entry.label;
        for (size_t i = 0; i < 3; ++i) check.products[i] = entry.groups[i].product();
        check.sides = {rec.triangle->a().get_num(), rec.triangle->b().get_num(),
                       rec.triangle->c().get_num()};

        std::array<Integer, 3> lhs = check.products, rhs = check.sides;
        std::sort(lhs.begin(), lhs.end());
        std::sort(rhs.begin(), rhs.end());
        check.sides_match = lhs == rhs;

        for (const FactorGroup& g : entry.groups)
            for (const auto& [base, exp] : g.factors)
                if (base < 1000000 && !is_probable_prime(base))
                    check.nonprime_small_factors.push_back(base);
        report.checks.push_back(check);
    }
    return report;
}

std::string record_to_json(const PointRecord& r) {
    std::ostringstream os;
    os << "{\"label\":\"" << r.label << "\",\"n\":" << r.n
       << ",\"withD\":" << (r.with_d ? "true" : "false") << ",\"weierstrass\":{\"x\":\""
       << to_string(r.weierstrass.x()) << "\",\"y\":\"" << to_string(r.weierstrass.y())
       << "\"},\"cubic\":[" << r.cubic.u() << "," << r.cubic.v() << "," << r.cubic.w()
       << "],\"minimal\":[" << r.minimal.u() << "," << r.minimal.v() << "," << r.minimal.w()
       << "],\"triangle\":";
    if (r.triangle)
        os << "[" << r.triangle->a().get_num() << "," << r.triangle->b().get_num() << ","
           << r.triangle->c().get_num() << "]";
    else
        os << "null";
    os << ",\"sharygin\":" << (r.sharygin ? "true" : "false") << "}";
    return os.str();
}

std::string csv_header() {
    return "label,n,withD,weierstrass_x,weierstrass_y,cubic_a,cubic_b,cubic_c,"
           "minimal_x,minimal_y,minimal_z,triangle_a,triangle_b,triangle_c,sharygin";
}

std::string record_to_csv(const PointRecord& r) {
    std::ostringstream os;
    os << r.label << "," << r.n << "," << (r.with_d ? "true" : "false") << ","
       << to_string(r.weierstrass.x()) << "," << to_string(r.weierstrass.y()) << ","
       << r.cubic.u() << "," << r.cubic.v() << "," << r.cubic.w() << "," << r.minimal.u() << ","
       << r.minimal.v() << "," << r.minimal.w() << ",";
    if (r.triangle)
        os << r.triangle->a().get_num() << "," << r.triangle->b().get_num() << ","
           << r.triangle->c().get_num();
    else
        os << ",,";
    os << "," << (r.sharygin ? "true" : "false");
    return os.str();
}

namespace {

struct Checkpoint {
    int n_done = 0;
    size_t records_written = 0;
    WeierstrassPoint plain = WeierstrassPoint::infinity();
    WeierstrassPoint with_d = WeierstrassPoint::infinity();
};

std::string point_fields(const WeierstrassPoint& p) {
    return p.x().get_num().get_str() + " " + p.x().get_den().get_str() + " " +
           p.y().get_num().get_str() + " " + p.y().get_den().get_str();
}

WeierstrassPoint parse_point_fields(std::istream& in) {
    std::string xn, xd, yn, yd;
    if (!(in >> xn >> xd >> yn >> yd))
        throw std::runtime_error("checkpoint: truncated point record");
    WeierstrassPoint p = WeierstrassPoint::affine(
        make_rational(parse_integer(xn), parse_integer(xd)),
        make_rational(parse_integer(yn), parse_integer(yd)));
    if (!is_on_curve(p)) throw std::runtime_error("checkpoint: stored point is not on the curve");
    return p;
}

std::optional<Checkpoint> load_checkpoint(const std::string& path) {
    std::ifstream in(path);
    if (!in) return std::nullopt;
    std::string header;
    std::getline(in, header);
    if (header != "sharygin-catalog-checkpoint v1")
        throw std::runtime_error("checkpoint: unrecognized header in " + path);
    Checkpoint cp;
    std::string key;
    while (in >> key) {
        if (key == "n_done")
            in >> cp.n_done;
        else if (key == "records_written")
            in >> cp.records_written;
        else if (key == "plain")
            cp.plain = parse_point_fields(in);
        else if (key == "withd")
            cp.with_d = parse_point_fields(in);
        else
            throw std::runtime_error("checkpoint: unknown key '" + key + "'");
    }
    if (cp.n_done < 1 || cp.plain.is_infinity() || cp.with_d.is_infinity())
        throw std::runtime_error("checkpoint: incomplete state in " + path);
    return cp;
}

void save_checkpoint(const std::string& path, const Checkpoint& cp) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw std::runtime_error("checkpoint: cannot write " + tmp);
        out << "sharygin-catalog-checkpoint v1\n";
        out << "n_done " << cp.n_done << "\n";
        out << "records_written " << cp.records_written << "\n";
        out << "plain " << point_fields(cp.plain) << "\n";
        out << "withd " << point_fields(cp.with_d) << "\n";
        out.flush();
        if (!out) throw std::runtime_error("checkpoint: write failed for " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw std::runtime_error("checkpoint: atomic rename onto " + path + " failed");
}

EmitSummary write_records(const std::vector<PointRecord>& records, CatalogFormat format,
                          std::ostream& out) {
    EmitSummary summary;
    for (const PointRecord& rec : records) {
        out << (format == CatalogFormat::json ? record_to_json(rec) : record_to_csv(rec)) << "\n";
        ++summary.records_written;
        if (rec.sharygin) ++summary.sharygin_count;
        summary.last_n = rec.n;
    }
    return summary;
}

}  // namespace

EmitSummary emit_catalog(int n_max, CatalogFormat format, std::ostream& out, unsigned threads) {
    if (format == CatalogFormat::csv) out << csv_header() << "\n";
    std::vector<PointRecord> records = walk(n_max, threads);
    EmitSummary summary = write_records(records, format, out);
    summary.first_n = 1;
    if (!out) throw std::runtime_error("emit_catalog: output stream failed");
    return summary;
}

EmitSummary emit_catalog_resumable(int n_max, CatalogFormat format,
                                   const std::string& output_path,
                                   const std::string& checkpoint_path, unsigned threads) {
    if (n_max < 1) throw std::invalid_argument("emit_catalog_resumable: n_max must be >= 1");
    std::optional<Checkpoint> loaded = load_checkpoint(checkpoint_path);

    WalkState state;
    size_t previously_written = 0;
    if (loaded) {
        state.n = loaded->n_done;
        state.plain = loaded->plain;
        state.with_d = loaded->with_d;
        previously_written = loaded->records_written;
    }

    EmitSummary summary;
    summary.resumed = loaded.has_value();
    summary.first_n = state.n + 1;
    if (state.n >= n_max) {
        summary.last_n = state.n;
        return summary;  // catalog already covers the request; checkpoint kept
    }

    std::vector<PointRecord> records = records_from(state, n_max, threads);

    std::ofstream out(output_path, loaded ? std::ios::app : std::ios::trunc);
    if (!out) throw std::runtime_error("emit_catalog_resumable: cannot open " + output_path);
    if (!loaded && format == CatalogFormat::csv) out << csv_header() << "\n";
    EmitSummary written = write_records(records, format, out);
    out.flush();
    if (!out) throw std::runtime_error("emit_catalog_resumable: write failed for " + output_path);

    summary.records_written = written.records_written;
    summary.sharygin_count = written.sharygin_count;
    summary.last_n = n_max;

    Checkpoint cp;
    cp.n_done = n_max;
    cp.records_written = previously_written + written.records_written;
    cp.plain = records[records.size() - 2].weierstrass;
    cp.with_d = records[records.size() - 1].weierstrass;
    save_checkpoint(checkpoint_path, cp);
    return summary;
}

}  // namespace sharygin

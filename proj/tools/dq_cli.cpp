// dq — exact construction, verification, and existence checks for rational
// D(q)-quadruples with prescribed product.
//
// Exit codes: 0 pass/success, 1 checked-and-false, 2 usage or domain error,
// 3 internal error.

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "dq/birational.hpp"
#include "dq/curves.hpp"
#include "dq/errors.hpp"
#include "dq/quadruples.hpp"
#include "dq/search.hpp"
#include "dq/serialize.hpp"

namespace {

using nlohmann::json;

// All options arrive as exact strings; decimals are never accepted.
struct JobConfig {
    std::string q, m, u;
    std::vector<std::string> t;
    std::vector<long> t_range;
    long height = 25;
    std::string points_file;
    std::string format = "json";
    std::vector<std::string> entries;
    long int_bound = 0, num_bound = 0, den_bound = 1;
    bool quadruples = false, signed_entries = false;
};

dq::Rational parse_rat(const std::string& s, const char* what) {
    try {
        return dq::Rational::parse(s);
    } catch (const dq::ParseError& e) {
        throw dq::ParseError(std::string(what) + ": " + e.what());
    }
}

int cmd_verify(const JobConfig& cfg) {
    const dq::Rational q = parse_rat(cfg.q, "--q");
    std::vector<dq::Rational> v;
    for (const auto& s : cfg.entries) v.push_back(parse_rat(s, "entry"));
    const dq::Certificate cert = dq::verify_quadruple(q, v[0], v[1], v[2], v[3]);
    std::cout << json(cert).dump() << "\n";
    return cert.pass ? 0 : 1;
}

json family_record(const dq::Rational& q, const dq::Rational& t, const dq::Rational& u) {
    json rec{{"t", json(t)}, {"u", json(u)}};
    try {
        const auto pp = dq::m_from_tu(q, t, u);
        rec["m"] = pp.m;
        const dq::Quadruple qu = dq::construct_family_quadruple(q, t, u);
        if (!dq::verify_quadruple(qu).pass)  // self-check before emitting
            throw dq::DegenerateTriple("constructed quadruple fails verification");
        rec["quadruple"] = qu;
        rec["verified"] = true;
    } catch (const dq::DegenerateTriple& e) {
        rec["degenerate"] = true;
        rec["reason"] = e.what();
    } catch (const dq::SquareConditionFails& e) {
        rec["degenerate"] = true;
        rec["reason"] = e.what();
    } catch (const dq::InvalidParams& e) {
        rec["invalid"] = true;
        rec["reason"] = e.what();
    }
    return rec;
}

void family_csv_row(std::ostream& os, const json& rec) {
    const auto field = [&](const char* k) -> std::string {
        if (!rec.contains(k)) return "";
        return rec[k].is_string() ? rec[k].get<std::string>() : rec[k].dump();
    };
    const bool ok = rec.contains("verified");
    os << field("t") << "," << field("u") << "," << field("m") << ",";
    if (ok) {
        const auto& qu = rec["quadruple"];
        os << qu["a"].get<std::string>() << "," << qu["b"].get<std::string>() << ","
           << qu["c"].get<std::string>() << "," << qu["d"].get<std::string>() << ",true,";
    } else {
        os << ",,,,false,";
    }
    os << field("reason") << "\n";
}

int cmd_family(const JobConfig& cfg) {
    const dq::Rational q = parse_rat(cfg.q, "--q");
    const dq::Rational u = parse_rat(cfg.u, "--u");
    std::vector<dq::Rational> ts;
    for (const auto& s : cfg.t) ts.push_back(parse_rat(s, "--t"));
    if (!cfg.t_range.empty())
        for (long v = cfg.t_range[0]; v <= cfg.t_range[1]; ++v) ts.emplace_back(v);
    if (ts.empty()) throw dq::InvalidParams("family: no t samples given");

    if (cfg.format == "csv") std::cout << "t,u,m,a,b,c,d,verified,reason\n";
    size_t emitted = 0;
    for (const auto& t : ts) {
        const json rec = family_record(q, t, u);
        if (cfg.format == "csv")
            family_csv_row(std::cout, rec);
        else
            std::cout << rec.dump() << "\n";
        if (!rec.contains("invalid")) ++emitted;
    }
    return emitted > 0 ? 0 : 2;
}

// Candidate coset representatives: caller-supplied points first, then the
// translates i·S+j·R, then images of every searched point on the product
// curve. Order fixes which witness is reported.
std::vector<dq::EPoint> assemble_candidates(const dq::Params& pr,
                                            const std::vector<dq::EPoint>& supplied,
                                            const std::vector<dq::DPoint>& found) {
    const auto curve = dq::curve_q(pr);
    const dq::EPoint s = dq::point_S(pr), r = dq::point_R(pr);
    std::vector<dq::EPoint> cands = supplied;
    cands.push_back(r);
    cands.push_back(dq::EPoint{});  // infinity: the trivial coset
    for (long i = 1; i <= 3; ++i)
        for (long j = 0; j <= 3; ++j) cands.push_back(curve.add(curve.mul(i, s), curve.mul(j, r)));
    for (const auto& p : found) cands.push_back(dq::f_map(pr, p));
    std::vector<dq::EPoint> dedup;
    for (const auto& p : cands)
        if (std::find(dedup.begin(), dedup.end(), p) == dedup.end()) dedup.push_back(p);
    return dedup;
}

// A witness T lifts to a quadruple through any non-degenerate triple whose
// sum is T plus an even multiple of S; try a few shapes.
std::optional<dq::Quadruple> quadruple_from_witness(const dq::Params& pr, const dq::EPoint& t) {
    const auto curve = dq::curve_q(pr);
    const dq::EPoint s = dq::point_S(pr);
    const long shapes[][3] = {{1, 2, 3}, {3, 2, 3}, {1, 2, 5}, {5, 2, 3}, {1, 4, 3}, {3, 4, 5}};
    for (const auto& sh : shapes) {
        const dq::Triple tri{curve.add(t, curve.mul(sh[0], s)), curve.mul(sh[1], s),
                             curve.mul(sh[2], s)};
        try {
            return dq::construct_from_triple(pr, tri);
        } catch (const dq::DegenerateTriple&) {
        } catch (const dq::SquareConditionFails&) {
        } catch (const dq::PoleOfG&) {
        }
    }
    return std::nullopt;
}

int cmd_check_m(const JobConfig& cfg) {
    const dq::Rational q = parse_rat(cfg.q, "--q");
    const dq::Rational m = parse_rat(cfg.m, "--m");
    if (q.is_zero() || m.is_zero() || m == dq::sq(q))
        throw dq::InvalidParams("check-m: need q nonzero and m outside {0, q^2}");
    const dq::HeightBound bound(cfg.height);

    std::vector<dq::DPoint> supplied;
    if (!cfg.points_file.empty()) {
        std::ifstream in(cfg.points_file);
        if (!in) throw dq::InvalidParams("check-m: cannot open points file");
        json doc = json::parse(in);
        supplied = doc.get<std::vector<dq::DPoint>>();
    }

    const std::vector<dq::DPoint> found = dq::search_D_points(q, m, bound);
    if (found.empty() && supplied.empty())
        throw dq::NoBasePoint("no point on the product curve up to the height bound");

    // Prefer a base point with x1²−q square: it normalizes the existence
    // criterion so that R itself witnesses admissible m.
    std::optional<dq::DPoint> base = dq::find_square_base_point(q, m, bound);
    for (size_t i = 0; !base && i < supplied.size(); ++i)
        if (dq::is_square(dq::sq(supplied[i].x) - q)) base = supplied[i];
    if (!base) base = found.empty() ? supplied.front() : found.front();
    const dq::Params pr = dq::Params::checked(q, m, base->x, base->y);

    std::vector<dq::EPoint> supplied_cosets;
    for (const auto& p : supplied) supplied_cosets.push_back(dq::f_map(pr, p));
    const auto cands = assemble_candidates(pr, supplied_cosets, found);
    const dq::AdmissibilityVerdict verdict = dq::admissibility_check(pr, cands);

    json out{{"q", json(q)},
             {"m", json(m)},
             {"height", cfg.height},
             {"base_point", json(dq::DPoint{pr.x1, pr.y1})},
             {"verdict", json(verdict)},
             {"partial", true},
             {"disclaimer",
              "conclusive only if the checked representatives cover all of E(Q)/2E(Q); "
              "coverage is not verified"},
             {"quadruple", nullptr}};

    if (verdict.status == dq::Admissibility::Exists) {
        if (auto qu = quadruple_from_witness(pr, *verdict.witness)) {
            if (!dq::verify_quadruple(*qu).pass)
                throw std::logic_error("check-m: constructed quadruple fails verification");
            out["quadruple"] = *qu;
        }
        std::cout << out.dump() << "\n";
        return 0;
    }
    std::cout << out.dump() << "\n";
    return 1;
}

int cmd_search(const JobConfig& cfg) {
    const dq::Rational q = parse_rat(cfg.q, "--q");
    if (cfg.quadruples) {
        const long nb = cfg.int_bound > 0 ? cfg.int_bound : cfg.num_bound;
        const long db = cfg.int_bound > 0 ? 1 : cfg.den_bound;
        const auto out = dq::brute_force_quadruples(q, nb, db, cfg.signed_entries);
        for (const auto& qu : out) {
            if (!dq::verify_quadruple(qu).pass)  // self-check before emitting
                throw std::logic_error("search: found quadruple fails verification");
            std::cout << json(qu).dump() << "\n";
        }
        return 0;
    }
    const dq::Rational m = parse_rat(cfg.m, "--m");
    for (const auto& p : dq::search_D_points(q, m, dq::HeightBound(cfg.height)))
        std::cout << json(p).dump() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact arithmetic for rational D(q)-quadruples with prescribed product"};
    app.require_subcommand(1);
    JobConfig cfg;

    auto* verify = app.add_subcommand("verify", "check the six square certificates of a quadruple");
    verify->add_option("--q", cfg.q, "the shift q")->required();
    verify->add_option("entries", cfg.entries, "the four entries a b c d")
        ->expected(4)
        ->required();

    auto* family = app.add_subcommand("family", "sample the explicit (t,u) family");
    family->add_option("--q", cfg.q, "the shift q")->required();
    family->add_option("--u", cfg.u, "family parameter u")->required();
    family->add_option("--t", cfg.t, "family parameter t (repeatable)");
    family->add_option("--t-range", cfg.t_range, "integer range lo hi of t samples")->expected(2);
    family->add_option("--format", cfg.format, "json (default) or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    auto* check = app.add_subcommand("check-m", "decide admissibility of m among known cosets");
    check->add_option("--q", cfg.q, "the shift q")->required();
    check->add_option("--m", cfg.m, "the prescribed product")->required();
    check->add_option("--height", cfg.height, "search height for base point and witnesses");
    check->add_option("--points", cfg.points_file,
                      "JSON array of product-curve points [{\"x\":...,\"y\":...}]");

    auto* search = app.add_subcommand("search", "enumerate curve points or quadruples");
    search->add_option("--q", cfg.q, "the shift q")->required();
    search->add_option("--m", cfg.m, "product (point search mode)");
    search->add_option("--height", cfg.height, "height bound for point search");
    search->add_flag("--quadruples", cfg.quadruples, "brute-force quadruple mode");
    search->add_option("--int-bound", cfg.int_bound, "integer entries up to this bound");
    search->add_option("--num-bound", cfg.num_bound, "numerator bound for entries");
    search->add_option("--den-bound", cfg.den_bound, "denominator bound for entries");
    search->add_flag("--signed", cfg.signed_entries, "allow negative entries");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (verify->parsed()) return cmd_verify(cfg);
        if (family->parsed()) return cmd_family(cfg);
        if (check->parsed()) return cmd_check_m(cfg);
        return cmd_search(cfg);
    } catch (const dq::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}

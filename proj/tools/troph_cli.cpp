// Command-line front end: tropicalizations of projective varieties and of
// their Hilbert-scheme points over Q(t^(1/N)).
//
// Exit codes: 0 success / predicate true, 1 predicate false (non-member,
// off the zero locus), 2 usage error, 3 computation error.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "troph/hilbpoint.hpp"
#include "troph/initial.hpp"
#include "troph/json_io.hpp"
#include "troph/monideal.hpp"
#include "troph/numpoly.hpp"
#include "troph/selftest.hpp"
#include "troph/subdiv.hpp"

using json = nlohmann::json;
using namespace troph;

namespace {

std::vector<Rat> parse_rat_list(const std::string& text) {
    std::vector<Rat> out;
    std::stringstream ss(text);
    std::string piece;
    while (std::getline(ss, piece, ','))
        if (!piece.empty()) out.push_back(parse_rat(piece));
    return out;
}

std::vector<long> parse_long_list(const std::string& text) {
    std::vector<long> out;
    for (const auto& q : parse_rat_list(text)) {
        if (q.get_den() != 1) throw parse_error("expected integers: " + text);
        out.push_back(q.get_num().get_si());
    }
    return out;
}

// one omega per ';', coordinates comma-separated
std::vector<std::vector<Rat>> parse_grid(const std::string& text) {
    std::vector<std::vector<Rat>> out;
    std::stringstream ss(text);
    std::string piece;
    while (std::getline(ss, piece, ';'))
        if (!piece.empty()) out.push_back(parse_rat_list(piece));
    return out;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw invalid_input("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// --ideal accepts a file path or inline JSON
GradedIdeal load_ideal(const std::string& spec) {
    std::string text = spec;
    if (!spec.empty() && spec[0] != '{') text = slurp(spec);
    return ideal_from_json(text);
}

json trop_point_json(const TropProjPoint& p) {
    json arr = json::array();
    for (const auto& c : p.coords()) arr.push_back(c.str());
    return arr;
}

struct Options {
    bool json_out = false;
    std::uint64_t seed = 1;
};

void emit(const Options& opt, const json& machine, const std::string& human) {
    if (opt.json_out)
        std::cout << machine.dump() << "\n";
    else
        std::cout << human << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tropicalization of projective varieties and Hilbert points over Q(t^(1/N))"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    app.add_flag("--json", opt.json_out, "machine-readable output");
    if (const char* env = std::getenv("TROPH_OUTPUT"))
        opt.json_out = (std::string(env) == "json");
    app.add_option("--seed", opt.seed, "seed for randomized suites");

    int exit_code = 0;

    // ------------------------------------------------------------- numpoly
    auto* np = app.add_subcommand("numpoly", "numerical polynomial utilities");
    np->require_subcommand(1);
    {
        auto* dec = np->add_subcommand("decompose", "g-decomposition of a polynomial");
        auto coeffs = std::make_shared<std::string>();
        dec->add_option("--coeffs", *coeffs, "coefficients c0,c1,... of the polynomial")
            ->required();
        dec->callback([&, coeffs] {
            NumPoly p(parse_rat_list(*coeffs));
            MVector m = decompose(p);
            json j;
            j["m"] = m;
            std::ostringstream os;
            os << "m = (";
            for (std::size_t i = 0; i < m.size(); ++i) os << (i ? ", " : "") << m[i];
            os << ")";
            emit(opt, j, os.str());
        });

        auto* ev = np->add_subcommand("eval", "evaluate g(m; x)");
        auto mstr = std::make_shared<std::string>();
        auto xval = std::make_shared<long>(0);
        ev->add_option("--m", *mstr, "entries m0,m1,...")->required();
        ev->add_option("--x", *xval, "argument")->required();
        ev->callback([&, mstr, xval] {
            Int v = g_eval(parse_long_list(*mstr), *xval);
            json j;
            j["value"] = v.get_str();
            emit(opt, j, v.get_str());
        });
    }

    // ------------------------------------------------------------- member
    {
        auto* cmd = app.add_subcommand("member", "tropical membership oracle");
        auto ideal = std::make_shared<std::string>();
        auto mstr = std::make_shared<std::string>();
        auto omega = std::make_shared<std::string>();
        auto gridstr = std::make_shared<std::string>();
        cmd->add_option("--ideal", *ideal, "ideal JSON (path or inline)")->required();
        cmd->add_option("--m", *mstr, "Hilbert polynomial data m0,m1,...")->required();
        cmd->add_option("--omega", *omega, "rational point w0,w1,...");
        cmd->add_option("--grid", *gridstr,
                        "semicolon-separated points, e.g. \"0,0,0;0,0,1\"");
        cmd->callback([&, ideal, mstr, omega, gridstr] {
            GradedIdeal I = load_ideal(*ideal);
            MVector m = parse_long_list(*mstr);
            if (omega->empty() == gridstr->empty())
                throw CLI::ValidationError("member needs exactly one of --omega / --grid");
            if (!omega->empty()) {
                bool in = member(I, m, parse_rat_list(*omega));
                json j;
                j["member"] = in;
                emit(opt, j, std::string("member: ") + (in ? "true" : "false"));
                if (!in) exit_code = 1;
                return;
            }
            json arr = json::array();
            std::ostringstream os;
            bool all = true;
            for (const auto& w : parse_grid(*gridstr)) {
                bool in = member(I, m, w);
                all = all && in;
                json j;
                json pt = json::array();
                for (const auto& q : w) pt.push_back(rat_str(q));
                j["omega"] = pt;
                j["member"] = in;
                arr.push_back(j);
                for (std::size_t i = 0; i < w.size(); ++i)
                    os << (i ? "," : "") << rat_str(w[i]);
                os << "  member: " << (in ? "true" : "false") << "\n";
            }
            emit(opt, json{{"grid", arr}}, os.str());
            if (!all) exit_code = 1;
        });
    }

    // ------------------------------------------------------------- witness
    {
        auto* cmd = app.add_subcommand("witness",
                                       "certificate polynomial for a non-member point");
        auto ideal = std::make_shared<std::string>();
        auto mstr = std::make_shared<std::string>();
        auto omega = std::make_shared<std::string>();
        cmd->add_option("--ideal", *ideal, "ideal JSON (path or inline)")->required();
        cmd->add_option("--m", *mstr, "Hilbert polynomial data")->required();
        cmd->add_option("--omega", *omega, "rational point")->required();
        cmd->callback([&, ideal, mstr, omega] {
            GradedIdeal I = load_ideal(*ideal);
            KPoly w = witness_polynomial(I, parse_long_list(*mstr), parse_rat_list(*omega));
            json j;
            j["witness"] = json::parse(kpoly_to_json(w));
            emit(opt, j, w.str());
        });
    }

    // --------------------------------------------------------- initial-form
    {
        auto* cmd = app.add_subcommand("initial-form", "initial form of a polynomial");
        auto poly = std::make_shared<std::string>();
        auto omega = std::make_shared<std::string>();
        cmd->add_option("--poly", *poly, "KPoly JSON (path or inline)")->required();
        cmd->add_option("--omega", *omega, "rational point")->required();
        cmd->callback([&, poly, omega] {
            std::string text = *poly;
            if (!text.empty() && text[0] != '[') text = slurp(text);
            KPoly f = kpoly_from_json(text);
            ResiduePoly r = initial_form(f, parse_rat_list(*omega));
            json j;
            json terms = json::array();
            for (const auto& [e, c] : r.terms()) {
                json t;
                t["exp"] = e;
                t["coef"] = rat_str(c);
                terms.push_back(t);
            }
            j["initial_form"] = terms;
            emit(opt, j, r.str());
        });
    }

    // ------------------------------------------------------------ trop-eval
    {
        auto* cmd = app.add_subcommand("trop-eval", "evaluate a tropical polynomial");
        auto poly = std::make_shared<std::string>();
        auto omega = std::make_shared<std::string>();
        cmd->add_option("--poly", *poly, "TropPoly JSON (path or inline)")->required();
        cmd->add_option("--omega", *omega, "rational point")->required();
        cmd->callback([&, poly, omega] {
            std::string text = *poly;
            if (!text.empty() && text[0] != '[') text = slurp(text);
            TropPoly phi = trop_poly_from_json(text);
            TropVal v = phi.eval(parse_rat_list(*omega));
            json j;
            j["value"] = v.str();
            emit(opt, j, v.str());
        });
    }

    // ------------------------------------------------------------ zero-locus
    {
        auto* cmd = app.add_subcommand("zero-locus",
                                       "is omega in the tropical zero locus?");
        auto poly = std::make_shared<std::string>();
        auto omega = std::make_shared<std::string>();
        cmd->add_option("--poly", *poly, "TropPoly JSON (path or inline)")->required();
        cmd->add_option("--omega", *omega, "rational point")->required();
        cmd->callback([&, poly, omega] {
            std::string text = *poly;
            if (!text.empty() && text[0] != '[') text = slurp(text);
            TropPoly phi = trop_poly_from_json(text);
            bool in = phi.in_zero_locus(parse_rat_list(*omega));
            json j;
            j["in_zero_locus"] = in;
            emit(opt, j, in ? "true" : "false");
            if (!in) exit_code = 1;
        });
    }

    // ------------------------------------------------------------- monideal
    {
        auto* mi = app.add_subcommand("monideal", "monomial ideal laboratory");
        mi->require_subcommand(1);
        auto gens = std::make_shared<std::string>();
        auto nvars = std::make_shared<int>(3);
        auto fmono = std::make_shared<std::string>();
        for (const char* name : {"decompose", "colon", "saturate", "adeg"}) {
            auto* sub = mi->add_subcommand(name);
            sub->add_option("--gens", *gens, "generators, e.g. \"x0^2,x0*x1\"")->required();
            sub->add_option("--nvars", *nvars, "number of variables (default 3)");
            if (std::string(name) == "colon" || std::string(name) == "saturate")
                sub->add_option("--f", *fmono, "monomial")->required();
            sub->callback([&, gens, nvars, fmono, name = std::string(name)] {
                MonIdeal I = parse_mon_ideal(*gens, *nvars);
                json j;
                std::ostringstream os;
                if (name == "decompose") {
                    json arr = json::array();
                    for (const auto& piece : primary_decomposition(I)) {
                        json p;
                        json qg = json::array();
                        for (const auto& g : piece.Q.gens()) qg.push_back(monomial_str(g));
                        p["primary"] = qg;
                        json pv = json::array();
                        for (int v : piece.P) pv.push_back("x" + std::to_string(v));
                        p["prime"] = pv;
                        p["multiplicity"] = piece.multiplicity;
                        arr.push_back(p);
                        os << piece.Q.str() << "  prime (";
                        for (std::size_t k = 0; k < piece.P.size(); ++k)
                            os << (k ? ", " : "") << "x" << piece.P[k];
                        os << ")  mult " << piece.multiplicity << "\n";
                    }
                    j["pieces"] = arr;
                } else if (name == "colon") {
                    MonIdeal r = I.colon(parse_monomial(*fmono, *nvars));
                    json arr = json::array();
                    for (const auto& g : r.gens()) arr.push_back(monomial_str(g));
                    j["colon"] = arr;
                    os << r.str();
                } else if (name == "saturate") {
                    Saturation s = saturate(I, parse_monomial(*fmono, *nvars));
                    json arr = json::array();
                    for (const auto& g : s.ideal.gens()) arr.push_back(monomial_str(g));
                    j["saturation"] = arr;
                    j["ell"] = s.ell;
                    os << s.ideal.str() << "  ell = " << s.ell;
                } else {
                    ArithDegree ad = adeg(I);
                    json arr = json::array();
                    for (long r = -1; r <= I.n() - 1; ++r) arr.push_back(ad.at(r));
                    j["adeg_by_dim"] = arr;
                    j["total"] = ad.total;
                    os << "adeg_r for r = -1.." << (I.n() - 1) << ": ";
                    for (long r = -1; r <= I.n() - 1; ++r) os << ad.at(r) << " ";
                    os << " total " << ad.total;
                }
                emit(opt, j, os.str());
            });
        }
    }

    // --------------------------------------------------------- hilbert-point
    {
        auto* cmd = app.add_subcommand("hilbert-point",
                                       "Pluecker coordinates of the degree-m0 component");
        auto ideal = std::make_shared<std::string>();
        auto mstr = std::make_shared<std::string>();
        cmd->add_option("--ideal", *ideal, "ideal JSON (path or inline)")->required();
        cmd->add_option("--m", *mstr, "Hilbert polynomial data (fitted when omitted)");
        cmd->callback([&, ideal, mstr] {
            GradedIdeal I = load_ideal(*ideal);
            MVector m = mstr->empty() ? fit_hilbert_polynomial(I) : parse_long_list(*mstr);
            HilbertPoint H = hilbert_point(I, m);
            TropHilbertPoint T = trop_hilbert_point(H);
            json j;
            j["m"] = m;
            json pl = json::array();
            for (const auto& c : H.pluecker) pl.push_back(c.str());
            j["pluecker"] = pl;
            j["tropical"] = trop_point_json(T);
            std::ostringstream os;
            os << "pluecker:";
            for (const auto& c : H.pluecker) os << " " << c.str();
            os << "\ntropical: " << T.str();
            emit(opt, j, os.str());
        });
    }

    // ---------------------------------------------------------------- pairs
    {
        auto* cmd = app.add_subcommand("pairs",
                                       "pairs-of-points stratum in the plane");
        auto sa = std::make_shared<std::string>();
        auto sb = std::make_shared<std::string>();
        auto sc = std::make_shared<std::string>();
        auto sl = std::make_shared<std::string>();
        auto check = std::make_shared<bool>(false);
        cmd->add_option("--a", *sa, "field element");
        cmd->add_option("--b", *sb, "field element");
        cmd->add_option("--c", *sc, "field element");
        cmd->add_option("--l", *sl, "field element");
        cmd->add_flag("--check", *check, "run the fixture comparison suite");
        cmd->callback([&, sa, sb, sc, sl, check] {
            if (*check) {
                SuiteResult r = run_suite("pairs", opt.seed);
                json j;
                j["checks"] = r.checks;
                j["failures"] = r.failures;
                std::ostringstream os;
                os << "pairs fixture suite: " << r.checks << " checks, " << r.failures
                   << " failures";
                emit(opt, j, os.str());
                if (!r.passed()) exit_code = 3;
                return;
            }
            if (sa->empty() || sb->empty() || sc->empty() || sl->empty())
                throw CLI::ValidationError("--a/--b/--c/--l are required without --check");
            PairsResult r = pairs_of_points(
                PuiseuxRat::parse(*sa), PuiseuxRat::parse(*sb), PuiseuxRat::parse(*sc),
                PuiseuxRat::parse(*sl));
            json j;
            json pl = json::array();
            for (const auto& c : r.point.pluecker) pl.push_back(c.str());
            j["pluecker"] = pl;
            j["tropical"] = trop_point_json(r.trop);
            j["case"] = to_string(r.stratum.tag);
            j["mu"] = rat_str(r.stratum.mu);
            std::ostringstream os;
            os << "case " << to_string(r.stratum.tag) << ", mu = "
               << rat_str(r.stratum.mu) << "\ncoordinates:";
            for (const auto& c : r.point.pluecker) os << " " << c.str();
            os << "\ntropical: " << r.trop.str();
            emit(opt, j, os.str());
        });
    }

    // ---------------------------------------------------------------- subdiv
    {
        auto* cmd = app.add_subcommand("subdiv",
                                       "regular subdivision and dual tropical curve");
        auto d = std::make_shared<long>(2);
        auto heights = std::make_shared<std::string>();
        auto svg = std::make_shared<std::string>();
        cmd->add_option("--d", *d, "degree")->required();
        cmd->add_option("--heights", *heights,
                        "heights in the canonical monomial order")->required();
        cmd->add_option("--svg", *svg, "write an SVG plot to this path");
        cmd->callback([&, d, heights, svg] {
            LiftedConfig cfg = LiftedConfig::from_heights(*d, parse_rat_list(*heights));
            Subdivision sub = regular_subdivision(cfg);
            DualCurve curve = dual_curve(cfg);
            json j;
            json cells = json::array();
            for (const auto& cell : sub.cells) {
                json c;
                json marked = json::array(), verts = json::array();
                for (auto i : cell.marked)
                    marked.push_back({cfg.points[i].x, cfg.points[i].y});
                for (auto i : cell.vertices)
                    verts.push_back({cfg.points[i].x, cfg.points[i].y});
                c["marked"] = marked;
                c["vertices"] = verts;
                cells.push_back(c);
            }
            j["cells"] = cells;
            json rays = json::array();
            for (const auto& r : curve.rays) {
                rays.push_back({{"vertex", r.vertex},
                                {"dir", {r.dir.first, r.dir.second}},
                                {"weight", r.weight}});
            }
            json edges = json::array();
            for (const auto& e : curve.edges)
                edges.push_back({{"from", e.from}, {"to", e.to}, {"weight", e.weight}});
            json verts = json::array();
            for (const auto& v : curve.vertices)
                verts.push_back({rat_str(v.x), rat_str(v.y)});
            j["curve"] = {{"vertices", verts}, {"edges", edges}, {"rays", rays}};
            j["region_p"] = in_region_p(sub);
            std::ostringstream os;
            os << sub.cells.size() << " cells; region P: "
               << (in_region_p(sub) ? "yes" : "no") << "\n"
               << curve.str();
            emit(opt, j, os.str());
            if (!svg->empty()) {
                std::ofstream out(*svg);
                out << subdivision_svg(sub, curve);
            }
        });
    }

    // --------------------------------------------------------------- selftest
    {
        auto* cmd = app.add_subcommand("selftest", "run the property corpora");
        auto suite = std::make_shared<std::string>();
        cmd->add_option("--suite", *suite, "run a single suite by name");
        cmd->callback([&, suite] {
            std::vector<SuiteResult> results;
            if (suite->empty())
                results = run_all_suites(opt.seed);
            else
                results.push_back(run_suite(*suite, opt.seed));
            json arr = json::array();
            bool ok = true;
            for (const auto& r : results) {
                json j;
                j["suite"] = r.name;
                j["checks"] = r.checks;
                j["failures"] = r.failures;
                j["seconds"] = r.seconds;
                arr.push_back(j);
                std::ostringstream os;
                os << (r.passed() ? "PASS" : "FAIL") << " " << r.name << ": " << r.checks
                   << " checks, " << r.failures << " failures (" << r.seconds << " s)";
                if (!opt.json_out) std::cout << os.str() << "\n";
                for (const auto& msg : r.messages)
                    if (!opt.json_out) std::cout << "  " << msg << "\n";
                ok = ok && r.passed();
            }
            if (opt.json_out) {
                json top;
                top["seed"] = opt.seed;
                top["suites"] = arr;
                std::cout << top.dump() << "\n";
            } else {
                std::cout << "seed " << opt.seed << "\n";
            }
            if (!ok) exit_code = 3;
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return exit_code;
}

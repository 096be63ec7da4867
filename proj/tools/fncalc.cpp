// fncalc: command-line front end to the fncalc headers.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "fncalc/cohomology.hpp"
#include "fncalc/io.hpp"
#include "fncalc/steenrod.hpp"
#include "fncalc/suites.hpp"
#include "fncalc/svg.hpp"

using json = nlohmann::ordered_json;
using namespace fncalc;

namespace {

constexpr int kSchemaVersion = 1;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct MathFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json integer_json(const Integer& c) {
    if (c.fits_slong_p()) return c.get_si();
    return c.get_str();
}

json cell_json(const Composition& a) {
    if (a.n() == 0) return json::array();
    return json(std::vector<int>(a.entries().begin(), a.entries().end()));
}

json cochain_json(const Cochain& x) {
    json t = json::array();
    for (const auto& [a, c] : x) t.push_back({{"coefficient", integer_json(c)}, {"n", a.n()}, {"cell", cell_json(a)}});
    return t;
}

json labeled_json(const LabeledCochain& x) {
    json t = json::array();
    for (const auto& [g, c] : x) t.push_back({{"coefficient", integer_json(c)}, {"ordering", format(g)}});
    return t;
}

json block_json(const GatheredBlock& b) {
    json p = json::array();
    for (auto it = b.profile.rbegin(); it != b.profile.rend(); ++it) p.push_back({{"l", it->first}, {"n", b.points >> it->first}, {"power", it->second}});
    return {{"points", b.points}, {"factors", p}};
}

json monomial_json(const SkylineMonomial& m) {
    json cols = json::array();
    for (const auto& b : m.blocks()) cols.push_back(block_json(b));
    json unit = m.stable() ? json("inf") : json(m.unit_width());
    return {{"text", format(m)}, {"degree", m.degree()}, {"columns", cols}, {"unit", unit}};
}

json skyline_json(const SkylineClass& x) {
    json t = json::array();
    for (const auto& [m, c] : x) t.push_back(monomial_json(m));
    return {{"text", format(x)}, {"terms", t}};
}

json tensor_json(const SkylineTensor& x) {
    json t = json::array();
    for (const auto& [pq, c] : x) t.push_back({{"left", monomial_json(pq.first)}, {"right", monomial_json(pq.second)}});
    return {{"text", format(x)}, {"terms", t}};
}

json report_json(const Report& r) {
    return {{"suite", r.name}, {"passed", r.passed}, {"checked", r.checked}, {"lines", r.lines}, {"counterexamples", r.counterexamples}};
}

std::string report_text(const Report& r) {
    std::ostringstream o;
    o << r.name << ": " << (r.passed ? "pass" : "FAIL") << " (" << r.checked << " checks)\n";
    for (const auto& l : r.lines) o << "  " << l << "\n";
    for (const auto& c : r.counterexamples) o << "  counterexample: " << c << "\n";
    return o.str();
}

struct Options {
    std::string format = "text";
    std::string out;
    std::string ring = "z";
    std::optional<int> m;
};

AmbientDim ambient(const Options& o) { return o.m ? AmbientDim(*o.m) : kInfinity; }

class Output {
public:
    explicit Output(const Options& o) : opt_(o) {}

    void text(const std::string& verb, const std::string& s, json payload, const SkylineClass* svg = nullptr) {
        std::string body;
        if (opt_.format == "text") {
            body = s;
            if (body.empty() || body.back() != '\n') body += "\n";
        } else if (opt_.format == "json") {
            json doc{{"schema_version", kSchemaVersion}, {"command", verb}};
            for (auto& [k, v] : payload.items()) doc[k] = v;
            body = doc.dump(2) + "\n";
        } else if (opt_.format == "svg") {
            if (!svg) throw UsageError("--format svg applies to skyline-valued commands only");
            body = render_svg(*svg);
        } else {
            throw UsageError("unknown format '" + opt_.format + "'");
        }
        if (opt_.out.empty()) {
            std::cout << body;
            return;
        }
        std::ofstream f(opt_.out, std::ios::binary);
        if (!f || !(f << body)) throw UsageError("cannot write " + opt_.out);
    }

private:
    const Options& opt_;
};

int run(int argc, char** argv) {
    CLI::App app{"Fox-Neuwirth cochains, skyline diagrams and Steenrod squares"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--format,-f", opt.format, "text | json | svg")->check(CLI::IsMember({"text", "json", "svg"}));
    app.add_option("--out,-o", opt.out, "write output to a file");

    std::string arg1, arg2;
    int n = 4, max_degree = 4, sq_index = 0, d = 3, width = 6, max_entry = 8;
    bool generic = false;

    auto ring_opt = [&](CLI::App* s) {
        s->add_option("--ring", opt.ring, "z | f2")->check(CLI::IsMember({"z", "f2", "Z", "F2"}));
        s->add_option("--m", opt.m, "ambient dimension (default infinity)")->check(CLI::PositiveNumber);
    };

    auto* c_delta = app.add_subcommand("delta", "differential of a cell, labeled cell or cochain");
    c_delta->add_option("expression", arg1)->required();
    ring_opt(c_delta);

    auto* c_coh = app.add_subcommand("cohomology", "cohomology of BS_n through a degree");
    c_coh->add_option("--n", n)->required()->check(CLI::PositiveNumber);
    c_coh->add_option("--max-degree", max_degree)->check(CLI::NonNegativeNumber);
    ring_opt(c_coh);

    auto* c_prod = app.add_subcommand("product", "cup product of skyline classes");
    auto* c_tr = app.add_subcommand("transfer", "transfer product of skyline classes");
    for (auto* s : {c_prod, c_tr}) {
        s->add_option("a", arg1)->required();
        s->add_option("b", arg2)->required();
    }
    auto* c_cop = app.add_subcommand("coproduct", "coproduct of a skyline class");
    c_cop->add_option("a", arg1)->required();
    auto* c_sq = app.add_subcommand("steenrod", "Sq^i of a skyline class");
    c_sq->add_option("i", sq_index)->required()->check(CLI::NonNegativeNumber);
    c_sq->add_option("a", arg1)->required();
    auto* c_nak = app.add_subcommand("nakaoka", "stable class as a polynomial in odd columns");
    c_nak->add_option("a", arg1)->required();
    auto* c_render = app.add_subcommand("render", "SVG skyline diagram");
    c_render->add_option("a", arg1)->required();

    auto* c_verify = app.add_subcommand("verify", "run a property suite");
    c_verify->add_option("suite", arg1)
        ->required()
        ->check(CLI::IsMember({"golden-differentials", "d2", "d2-labeled", "bs2", "bs4-basis", "bs4-homotopy", "basis-agreement", "hopf-goldens", "hopf-axioms",
                               "steenrod-oracle", "steenrod-axioms", "nakaoka", "vassiliev"}));
    c_verify->add_option("--n", n)->check(CLI::PositiveNumber);
    c_verify->add_option("--max-degree", max_degree)->check(CLI::NonNegativeNumber);
    c_verify->add_option("--d", d)->check(CLI::PositiveNumber);
    c_verify->add_option("--width", width)->check(CLI::PositiveNumber);
    c_verify->add_option("--max-entry", max_entry)->check(CLI::PositiveNumber);
    c_verify->add_flag("--generic", generic, "bs4-homotopy: skip cells whose two smallest entries are adjacent");
    ring_opt(c_verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    const Ring ring = parse_ring(opt.ring);
    Output out(opt);
    auto* sub = app.get_subcommands().front();
    const std::string verb = sub->get_name();

    if (sub == c_delta) {
        json in{{"input", arg1}, {"ring", ring_name(ring)}, {"m", opt.m ? json(*opt.m) : json(nullptr)}};
        if (arg1.find('<') != std::string::npos) {
            LabeledCochain x = arg1.find('(') != std::string::npos ? parse_labeled_cochain(arg1, ring) : LabeledCochain(ring, parse_labeled(arg1));
            LabeledCochain y = delta(x, ambient(opt));
            in["result"] = {{"text", format(y)}, {"terms", labeled_json(y)}};
            out.text(verb, format(y), in);
        } else {
            Cochain y = delta(parse_cochain(arg1, ring), ambient(opt));
            in["result"] = {{"text", format(y)}, {"terms", cochain_json(y)}};
            out.text(verb, format(y), in);
        }
        return 0;
    }
    if (sub == c_coh) {
        std::ostringstream t;
        json rows = json::array();
        for (int k = 0; k <= max_degree; ++k) {
            CohomologyGroup H(n, k, ring, ambient(opt));
            json tor = json::array();
            for (const auto& q : H.torsion()) tor.push_back(integer_json(q));
            if (ring == Ring::F2) {
                t << "H^" << k << ": " << H.dimension() << "\n";
                rows.push_back({{"degree", k}, {"dimension", H.dimension()}});
            } else {
                t << "H^" << k << ": " << suites::describe_group(H) << "\n";
                rows.push_back({{"degree", k}, {"free_rank", H.free_rank()}, {"torsion", tor}, {"text", suites::describe_group(H)}});
            }
        }
        out.text(verb, t.str(), {{"n", n}, {"ring", ring_name(ring)}, {"m", opt.m ? json(*opt.m) : json(nullptr)}, {"result", rows}});
        return 0;
    }
    if (sub == c_prod || sub == c_tr) {
        SkylineClass a = parse_skyline(arg1), b = parse_skyline(arg2);
        SkylineClass r = sub == c_prod ? cup_skyline(a, b) : transfer_skyline(a, b);
        out.text(verb, format(r), {{"inputs", {arg1, arg2}}, {"result", skyline_json(r)}}, &r);
        return 0;
    }
    if (sub == c_cop) {
        SkylineTensor r = coproduct_skyline(parse_skyline(arg1));
        out.text(verb, format(r), {{"input", arg1}, {"result", tensor_json(r)}});
        return 0;
    }
    if (sub == c_sq) {
        SkylineClass r = sq_skyline(sq_index, parse_skyline(arg1));
        out.text(verb, format(r), {{"i", sq_index}, {"input", arg1}, {"result", skyline_json(r)}}, &r);
        return 0;
    }
    if (sub == c_nak) {
        NakaokaExpression e;
        try {
            e = nakaoka_decompose(parse_skyline(arg1));
        } catch (const std::logic_error& err) {
            throw MathFailure(err.what());
        }
        json terms = json::array();
        for (const auto& t : e) {
            json f = json::array();
            for (const auto& [g, k] : t) f.push_back({{"column", block_json(g)}, {"exponent", k}});
            terms.push_back(f);
        }
        out.text(verb, format(e), {{"input", arg1}, {"result", {{"text", format(e)}, {"terms", terms}}}});
        return 0;
    }
    if (sub == c_render) {
        SkylineClass r = parse_skyline(arg1);
        if (opt.format == "text") opt.format = "svg";
        out.text(verb, render_svg(r), {{"input", arg1}, {"result", {{"text", format(r)}, {"svg", render_svg(r)}}}}, &r);
        return 0;
    }
    if (sub == c_verify) {
        const bool n_set = c_verify->count("--n") > 0, deg_set = c_verify->count("--max-degree") > 0;
        auto pick = [](bool set, int v, int dflt) { return set ? v : dflt; };
        Report r;
        if (arg1 == "golden-differentials") r = suites::differential_goldens();
        else if (arg1 == "d2") r = suites::d2_unlabeled(pick(n_set, n, 6), pick(deg_set, max_degree, 10), ring, ambient(opt));
        else if (arg1 == "d2-labeled") r = suites::d2_labeled(pick(n_set, n, 4), pick(deg_set, max_degree, 6), ring, ambient(opt));
        else if (arg1 == "bs2") r = suites::bs2_integral(pick(deg_set, max_degree, 10));
        else if (arg1 == "bs4-basis") r = suites::bs4_basis(pick(deg_set, max_degree, 12));
        else if (arg1 == "bs4-homotopy") r = suites::bs4_homotopy(max_entry, generic);
        else if (arg1 == "basis-agreement") r = suites::basis_agreement(pick(n_set, n, 6), pick(deg_set, max_degree, 8), opt.m);
        else if (arg1 == "hopf-goldens") r = suites::hopf_goldens();
        else if (arg1 == "hopf-axioms") r = suites::hopf_axioms(pick(n_set, n, 6), pick(deg_set, max_degree, 6));
        else if (arg1 == "steenrod-oracle") r = suites::steenrod_oracle();
        else if (arg1 == "steenrod-axioms") r = suites::steenrod_axioms(pick(n_set, n, 8), pick(deg_set, max_degree, 8));
        else if (arg1 == "nakaoka") r = suites::nakaoka(pick(deg_set, max_degree, 6), width);
        else if (arg1 == "vassiliev") r = suites::vassiliev(pick(n_set, n, 6), d);
        out.text(verb, report_text(r), {{"result", report_json(r)}});
        return r.passed ? 0 : 1;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ParseError& e) {
        std::cerr << "fncalc: parse error: " << e.what() << "\n";
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "fncalc: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "fncalc: " << e.what() << "\n";
        return 2;
    } catch (const MathFailure& e) {
        std::cerr << "fncalc: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "fncalc: " << e.what() << "\n";
        return 1;
    }
}

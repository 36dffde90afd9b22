#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <optional>
#include <string>
#include <vector>

#include "fewform/bounds.hpp"
#include "fewform/certification.hpp"
#include "fewform/counting.hpp"
#include "fewform/json_io.hpp"
#include "fewform/kernels.hpp"
#include "fewform/verify.hpp"

using namespace fewform;
using nlohmann::json;

namespace {

// fixed 12-significant-digit rendering so output is byte-deterministic
std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

json gamma_json(const ProjectiveMap& g) {
    return json::array(
        {rat_to_string(g.u1), rat_to_string(g.u2), rat_to_string(g.u3), rat_to_string(g.u4)});
}

std::string gamma_text(const ProjectiveMap& g) {
    return "(" + rat_to_string(g.u1) + ", " + rat_to_string(g.u2) + "; " + rat_to_string(g.u3) +
           ", " + rat_to_string(g.u4) + ")";
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Certified: return "certified";
        case Verdict::Refuted: return "refuted";
        default: return "inconclusive";
    }
}

const char* route_name(Route r) {
    switch (r) {
        case Route::Theorem486: return "theorem-486";
        case Route::Theorem527: return "theorem-527";
        default: return "root-search";
    }
}

json certificate_json(const Certificate& c) {
    json j;
    j["verdict"] = verdict_name(c.verdict);
    j["route"] = route_name(c.route);
    if (!c.detail.empty()) j["detail"] = c.detail;
    if (c.pair) j["pair"] = json::array({c.pair->first, c.pair->second});
    if (c.dilation_witness) {
        const auto& w = *c.dilation_witness;
        j["dilation"] = {{"i", w.i}, {"j", w.j}, {"u", rat_to_string(w.u)},
                         {"v", rat_to_string(w.v)}};
    }
    if (c.map_witness)
        j["map"] = {{"gamma", gamma_json(c.map_witness->gamma)},
                    {"nu", rat_to_string(c.map_witness->nu)}};
    return j;
}

const char* aut_name(AutClass c) {
    switch (c) {
        case AutClass::Id: return "Id";
        case AutClass::PlusMinusId: return "PlusMinusId";
        case AutClass::D2: return "D2";
        default: return "Other";
    }
}

struct Options {
    bool json_out = false;
    int threads = 1;
};

// a FormSet either from repeated --form args or family members of one degree
FormSet collect_set(const std::vector<std::string>& form_args, const std::string& family_arg,
                    int degree) {
    FormSet s;
    if (!form_args.empty()) {
        for (const auto& a : form_args) s.members.push_back(form_from_arg(a));
        if (s.members.empty()) throw DomainError("certify: no forms given");
        s.degree = s.members.front().degree();
        return s;
    }
    if (family_arg.empty()) throw DomainError("certify: --form or --family required");
    FewnomialFamily fam = family_from_arg(family_arg);
    fam.validate();
    if (degree <= 0) throw DomainError("certify: --degree required with --family");
    if (degree % fam.r != 0) throw DomainError("certify: degree is not a multiple of r");
    int k = degree / fam.r;
    auto it = fam.blocks.find(k);
    if (it == fam.blocks.end()) throw DomainError("certify: family has no block of that degree");
    s.degree = degree;
    for (size_t i = 0; i < it->second.size(); ++i)
        s.members.push_back(build_fewnomial(fam, k, static_cast<int>(i)));
    return s;
}

// accept "p/q" and plain decimals like "0.01" (exactly, as 1/100)
Rat parse_rat_arg(const std::string& s) {
    auto dot = s.find('.');
    if (dot == std::string::npos) return parse_rational(s);
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    size_t frac = s.size() - dot - 1;
    Rat v = parse_rational(digits.empty() ? "0" : digits);
    for (size_t i = 0; i < frac; ++i) v /= 10;
    return v;
}

void emit(const Options& opt, const json& j, const std::string& text) {
    if (opt.json_out)
        std::cout << j.dump() << "\n";
    else
        std::cout << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact arithmetic for sparse binary forms"};
    app.require_subcommand(1);

    Options opt;
    app.add_flag("--json", opt.json_out, "machine-readable JSON output");
    if (const char* env = std::getenv("FEWFORM_THREADS")) opt.threads = std::atoi(env);
    app.add_option("--threads", opt.threads, "worker thread budget (reserved)");

    std::vector<std::string> form_args;
    std::string family_arg, set_name, x_arg = "0", y_arg = "0", m_arg, n_arg, eps_arg = "0",
                            lambda_arg, theta_arg = "1";
    std::string gamma_arg, q_arg, r_arg, s_arg;
    int degree = 0, theorem = 0, d_flag = 0, r_small = 1, k_small = 1;
    double tol = 1e-8;
    long precision_bits = 128, cap = 0;
    std::string denom_cap = "1000000000000";
    bool allow_scalar = false;
    std::vector<std::string> n_list;

    auto add_form = [&](CLI::App* c, bool many = false) {
        auto* o = c->add_option("--form", form_args, "form as inline JSON or a file path");
        if (!many) o->expected(1);
        return o;
    };

    auto* c_disc = app.add_subcommand("disc", "discriminant of a form");
    add_form(c_disc)->required();

    auto* c_eval = app.add_subcommand("eval", "evaluate F(x, y)");
    add_form(c_eval)->required();
    c_eval->add_option("--x", x_arg, "rational x")->required();
    c_eval->add_option("--y", y_arg, "rational y")->required();

    auto* c_lambda = app.add_subcommand("lambda", "gap invariants lambda+ / lambda-");
    add_form(c_lambda)->required();

    auto* c_apply = app.add_subcommand("apply-homography", "apply gamma or h_{q,r,s}");
    add_form(c_apply)->required();
    c_apply->add_option("--gamma", gamma_arg, "u1,u2,u3,u4 acting on the form");
    c_apply->add_option("--q", q_arg, "homography q (acts on the associated polynomial)");
    c_apply->add_option("--r", r_arg, "homography r");
    c_apply->add_option("--s", s_arg, "homography s (omit for affine q t + r)");

    auto* c_isom = app.add_subcommand("isom", "isomorphisms between two forms");
    add_form(c_isom, true)->expected(2)->required();
    c_isom->add_flag("--scalar", allow_scalar, "allow F o gamma = nu G");
    c_isom->add_option("--precision-bits", precision_bits, "starting root precision");
    c_isom->add_option("--denom-cap", denom_cap, "rationalization denominator cap");

    auto* c_aut = app.add_subcommand("aut", "automorphism group of a form");
    add_form(c_aut)->required();
    c_aut->add_option("--precision-bits", precision_bits, "starting root precision");
    c_aut->add_option("--denom-cap", denom_cap, "rationalization denominator cap");

    auto* c_wf = app.add_subcommand("wf", "the constant W_F");
    add_form(c_wf)->required();

    auto* c_certify = app.add_subcommand("certify", "homography-freeness of a set");
    add_form(c_certify, true);
    c_certify->add_option("--family", family_arg, "family JSON");
    c_certify->add_option("--degree", degree, "degree block to take from the family");
    c_certify->add_option("--theorem", theorem, "486, 527 or 0 for auto")
        ->check(CLI::IsMember({0, 486, 527}));

    auto* c_member = app.add_subcommand("member", "membership in U1/U2/V1/V2");
    add_form(c_member)->required();
    c_member->add_option("--set", set_name, "U1, U2, V1 or V2")
        ->required()
        ->check(CLI::IsMember({"U1", "U2", "V1", "V2"}));

    auto* c_count = app.add_subcommand("count", "R_{>=d}(N) for a family");
    c_count->add_option("--family", family_arg, "family JSON")->required();
    c_count->add_option("--d", d_flag, "minimum degree")->required();
    c_count->add_option("--N", n_arg, "bound N")->required();
    c_count->add_option("--cap", cap, "box truncation max{|x|,|y|} <= cap");

    auto* c_gset = app.add_subcommand("gset", "G_{>=d}(m) listing");
    c_gset->add_option("--family", family_arg, "family JSON")->required();
    c_gset->add_option("--d", d_flag, "minimum degree")->required();
    c_gset->add_option("--m", m_arg, "target integer m, |m| >= 2")->required();
    c_gset->add_option("--cap", cap, "box truncation");

    auto* c_area = app.add_subcommand("area", "A_F by quadrature");
    add_form(c_area)->required();
    c_area->add_option("--tol", tol, "quadrature tolerance");

    auto* c_cf = app.add_subcommand("cf", "C_F = A_F W_F");
    add_form(c_cf)->required();
    c_cf->add_option("--tol", tol, "quadrature tolerance");

    auto* c_table = app.add_subcommand("table", "asymptotic count table (CSV)");
    c_table->add_option("--family", family_arg, "family JSON")->required();
    c_table->add_option("--d", d_flag, "degree")->required();
    c_table->add_option("--N", n_list, "bounds N (repeatable)")->required();
    c_table->add_option("--eps", eps_arg, "epsilon in the error exponent");
    c_table->add_option("--cap", cap, "box truncation");
    c_table->add_option("--tol", tol, "quadrature tolerance");

    auto* c_theta = app.add_subcommand("theta", "the constant theta_d");
    c_theta->add_option("--d", d_flag, "degree")->required();

    auto* c_bound = app.add_subcommand("bound", "fewnomial Diophantine lower bound");
    add_form(c_bound)->required();
    c_bound->add_option("--r", r_small, "fewnomial step count")->required();
    c_bound->add_option("--k", k_small, "fewnomial step size")->required();
    c_bound->add_option("--x", x_arg, "integer x")->required();
    c_bound->add_option("--y", y_arg, "integer y")->required();

    auto* c_thr = app.add_subcommand("thresholds", "eta, mu_max, M0");
    c_thr->add_option("--eps", eps_arg, "epsilon")->required();
    c_thr->add_option("--r", r_small, "step count")->required();
    c_thr->add_option("--lambda", lambda_arg, "lambda > 2")->required();
    c_thr->add_option("--m", m_arg, "m (or N)")->required();
    c_thr->add_option("--theta", theta_arg, "theta");

    app.add_subcommand("verify-paper", "replay the printed identities");

    // let --json / --threads appear after the subcommand name too
    for (auto* sc : app.get_subcommands([](const CLI::App*) { return true; })) sc->fallthrough();

    CLI11_PARSE(app, argc, argv);
    if (opt.threads < 1) opt.threads = 1;

    try {
        IsomOptions iopts;
        iopts.precision_bits = precision_bits;
        iopts.denom_cap = Int(denom_cap);
        std::optional<long long> capopt;
        if (cap > 0) capopt = cap;

        if (c_disc->parsed()) {
            Rat d = discriminant(form_from_arg(form_args[0]));
            emit(opt, json{{"discriminant", rat_to_string(d)}}, rat_to_string(d) + "\n");
        } else if (c_eval->parsed()) {
            Rat v = form_from_arg(form_args[0])
                        .evaluate(parse_rational(x_arg), parse_rational(y_arg));
            emit(opt, json{{"value", rat_to_string(v)}}, rat_to_string(v) + "\n");
        } else if (c_lambda->parsed()) {
            BinaryForm f = form_from_arg(form_args[0]);
            int lp = lambda_gap(f, GapSide::Plus), lm = lambda_gap(f, GapSide::Minus);
            emit(opt, json{{"lambda_minus", lm}, {"lambda_plus", lp}},
                 "lambda+ = " + std::to_string(lp) + "\nlambda- = " + std::to_string(lm) + "\n");
        } else if (c_apply->parsed()) {
            BinaryForm f = form_from_arg(form_args[0]);
            if (!gamma_arg.empty()) {
                std::vector<Rat> u;
                std::string tok;
                for (std::istringstream in(gamma_arg); std::getline(in, tok, ',');)
                    u.push_back(parse_rational(tok));
                if (u.size() != 4) throw DomainError("apply-homography: gamma needs 4 entries");
                BinaryForm g = act_on_form(f, ProjectiveMap(u[0], u[1], u[2], u[3]));
                emit(opt, json::parse(form_to_json_text(g)), form_to_json_text(g) + "\n");
            } else {
                if (q_arg.empty() || r_arg.empty())
                    throw DomainError("apply-homography: --gamma or --q/--r required");
                Homography h = s_arg.empty()
                                   ? Homography::affine(parse_rational(q_arg), parse_rational(r_arg))
                                   : Homography::non_affine(parse_rational(q_arg),
                                                            parse_rational(r_arg),
                                                            parse_rational(s_arg));
                MonicPolynomial g = apply(h, associated_polynomial(f));
                json arr = json::array();
                std::string text;
                for (const Rat& c : g.coeffs()) {
                    arr.push_back(rat_to_string(c));
                    text += (text.empty() ? "" : " ") + rat_to_string(c);
                }
                emit(opt, json{{"degree", g.degree()}, {"monic_coeffs", arr}}, text + "\n");
            }
        } else if (c_isom->parsed()) {
            BinaryForm f = form_from_arg(form_args[0]), g = form_from_arg(form_args[1]);
            auto certs = isomorphisms(f, g, allow_scalar, iopts);
            json arr = json::array();
            std::string text;
            for (const auto& c : certs) {
                arr.push_back({{"gamma", gamma_json(c.gamma)}, {"nu", rat_to_string(c.nu)}});
                text += gamma_text(c.gamma) + "  nu = " + rat_to_string(c.nu) + "\n";
            }
            if (text.empty()) text = "no isomorphisms\n";
            emit(opt, json{{"isomorphisms", arr}}, text);
        } else if (c_aut->parsed()) {
            AutGroup aut = automorphism_group(form_from_arg(form_args[0]), iopts);
            json arr = json::array();
            std::string text = std::string("classification: ") + aut_name(aut.classification) + "\n";
            for (const auto& g : aut.elements) {
                arr.push_back(gamma_json(g));
                text += gamma_text(g) + "\n";
            }
            emit(opt, json{{"classification", aut_name(aut.classification)}, {"elements", arr}},
                 text);
        } else if (c_wf->parsed()) {
            Rat w = w_constant(form_from_arg(form_args[0]), iopts);
            emit(opt, json{{"w", rat_to_string(w)}}, rat_to_string(w) + "\n");
        } else if (c_certify->parsed()) {
            FormSet s = collect_set(form_args, family_arg, degree);
            Certificate cert =
                theorem == 0 ? homography_free(s, 1000, iopts) : check_theorem(s, theorem);
            std::string text = std::string(verdict_name(cert.verdict)) + " via " +
                               route_name(cert.route) +
                               (cert.detail.empty() ? "" : ": " + cert.detail) + "\n";
            emit(opt, certificate_json(cert), text);
            if (cert.verdict == Verdict::Inconclusive) return 2;
        } else if (c_member->parsed()) {
            SetName which = set_name == "U1"   ? SetName::U1
                            : set_name == "U2" ? SetName::U2
                            : set_name == "V1" ? SetName::V1
                                               : SetName::V2;
            auto m = membership(form_from_arg(form_args[0]), which);
            emit(opt, json{{"member", m.member}, {"reason", m.reason}},
                 std::string(m.member ? "member" : "not a member") + ": " + m.reason + "\n");
        } else if (c_count->parsed()) {
            FewnomialFamily fam = family_from_arg(family_arg);
            CountReport rep = r_count(fam, d_flag, Int(n_arg), capopt);
            std::string csv = "N,count,predicted,ratio,error_exponent\n" + rep.n.get_str() + "," +
                              std::to_string(rep.count) + "," + fmt(rep.predicted) + "," +
                              fmt(rep.ratio) + "," + fmt(rep.error_exponent) + "\n";
            emit(opt,
                 json{{"N", rep.n.get_str()},
                      {"count", rep.count},
                      {"error_exponent", fmt(rep.error_exponent)}},
                 csv);
        } else if (c_gset->parsed()) {
            FewnomialFamily fam = family_from_arg(family_arg);
            auto triples = g_set(fam, d_flag, Int(m_arg), capopt);
            json arr = json::array();
            std::string text;
            for (const auto& t : triples) {
                arr.push_back({{"x", t.x}, {"y", t.y}, {"form_index", t.form_index}});
                text += "(" + std::to_string(t.x) + ", " + std::to_string(t.y) + ") form " +
                        std::to_string(t.form_index) + "\n";
            }
            if (text.empty()) text = "empty\n";
            emit(opt, json{{"solutions", arr}}, text);
        } else if (c_area->parsed()) {
            double a = area_AF(form_from_arg(form_args[0]), tol);
            emit(opt, json{{"area", fmt(a)}}, fmt(a) + "\n");
        } else if (c_cf->parsed()) {
            double c = c_constant(form_from_arg(form_args[0]), tol, iopts);
            emit(opt, json{{"c_f", fmt(c)}}, fmt(c) + "\n");
        } else if (c_table->parsed()) {
            FewnomialFamily fam = family_from_arg(family_arg);
            std::vector<Int> ns;
            for (const auto& s : n_list) ns.push_back(Int(s));
            auto rows = asymptotic_table(fam, d_flag, ns, to_double(parse_rat_arg(eps_arg)),
                                         capopt, tol);
            std::string csv = "N,count,predicted,ratio,error_exponent\n";
            json arr = json::array();
            for (const auto& rep : rows) {
                csv += rep.n.get_str() + "," + std::to_string(rep.count) + "," +
                       fmt(rep.predicted) + "," + fmt(rep.ratio) + "," +
                       fmt(rep.error_exponent) + "\n";
                arr.push_back({{"N", rep.n.get_str()},
                               {"count", rep.count},
                               {"predicted", fmt(rep.predicted)},
                               {"ratio", fmt(rep.ratio)},
                               {"error_exponent", fmt(rep.error_exponent)}});
            }
            emit(opt, json{{"rows", arr}}, csv);
        } else if (c_theta->parsed()) {
            double t = theta_d(d_flag);
            emit(opt, json{{"theta", fmt(t)}}, fmt(t) + "\n");
        } else if (c_bound->parsed()) {
            auto rep = fewnomial_lower_bound(form_from_arg(form_args[0]), r_small, k_small,
                                             Int(x_arg), Int(y_arg));
            json j{{"anchored", fmt(rep.anchored)},
                   {"d", rep.d},
                   {"exponent", fmt(rep.exponent)},
                   {"log_astar", fmt(rep.log_astar)}};
            emit(opt, j,
                 "d = " + std::to_string(rep.d) + "\nlog A* = " + fmt(rep.log_astar) +
                     "\nexponent = " + fmt(rep.exponent) + "\nanchored = " + fmt(rep.anchored) +
                     "\n");
        } else if (c_thr->parsed()) {
            auto t = thresholds(parse_rat_arg(eps_arg), r_small, parse_rat_arg(lambda_arg),
                                Int(m_arg), to_double(parse_rat_arg(theta_arg)));
            emit(opt,
                 json{{"eta", rat_to_string(t.eta)},
                      {"m0", t.m0},
                      {"mu_max", rat_to_string(t.mu_max)}},
                 "eta = " + rat_to_string(t.eta) + "\nmu_max = " + rat_to_string(t.mu_max) +
                     "\nM0 = " + std::to_string(t.m0) + "\n");
        } else {  // verify-paper
            auto items = verify_paper();
            size_t failed = 0;
            json arr = json::array();
            std::string text;
            for (const auto& it : items) {
                if (!it.pass) ++failed;
                arr.push_back({{"detail", it.detail}, {"name", it.name}, {"pass", it.pass}});
                text += std::string(it.pass ? "PASS  " : "FAIL  ") + it.name +
                        (it.detail.empty() ? "" : " (" + it.detail + ")") + "\n";
            }
            text += std::to_string(items.size() - failed) + "/" + std::to_string(items.size()) +
                    " identities pass\n";
            emit(opt, json{{"failed", failed}, {"items", arr}, {"total", items.size()}}, text);
            if (failed > 0) return 1;
        }
    } catch (const DomainError& e) {
        json err{{"code", "domain-error"}, {"error", e.what()}};
        if (opt.json_out) std::cout << err.dump() << "\n";
        else std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const InconclusiveError& e) {
        json err{{"code", "inconclusive"}, {"error", e.what()}};
        if (opt.json_out) std::cout << err.dump() << "\n";
        else std::cerr << "inconclusive: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nilfocus/certify.hpp"
#include "nilfocus/gtrig.hpp"
#include "nilfocus/lyapunov.hpp"
#include "nilfocus/moments.hpp"
#include "nilfocus/simulate.hpp"

using nlohmann::json;
using namespace nilfocus;

namespace {

constexpr int kExitOk = 0, kExitBadParams = 2, kExitInconclusive = 3, kExitVerifyFail = 4;

/// "p/q" and integer strings are exact; anything with a decimal point is
/// carried as a float and flagged inexact (the critical branch needs exactness).
bool parse_m(const std::string& s, MValue& out) {
    if (s.find('.') != std::string::npos) {
        try {
            out = MValue::from_double(std::stod(s));
        } catch (const std::exception&) {
            return false;
        }
        return true;
    }
    auto r = parse_rational(s);
    if (!r) return false;
    out = MValue::from_rational(*r);
    return true;
}

json report_to_json(const Params& p, const LyapunovReport& rep) {
    json j{{"l", p.l},
           {"k", p.k},
           {"s", p.s},
           {"m", p.m.exact ? rational_str(p.m.rat) : std::to_string(p.m.approx)},
           {"m_exact", p.m.exact},
           {"regime", to_string(rep.regime)},
           {"stability", to_string(rep.stability)},
           {"first_index", rep.first_index},
           {"float_value", rep.float_value}};
    if (rep.exact_value) {
        j["value_num"] = num_str(rep.exact_value->coeff);
        j["value_den"] = den_str(rep.exact_value->coeff);
    }
    if (!rep.warning.empty()) j["warning"] = rep.warning;
    if (rep.certificate) j["certificate"] = rep.certificate->to_json();
    return j;
}

int thread_budget() {
    if (const char* env = std::getenv("NILFOCUS_THREADS")) {
        int n = std::atoi(env);
        if (n >= 1) return n;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return std::clamp<int>(hw == 0 ? 1 : static_cast<int>(hw), 1, 8);
}

struct SweepPoint {
    int l, k, s;
    std::string m;
};

std::string sweep_row(const SweepPoint& pt, double ode_tol) {
    std::ostringstream os;
    os.imbue(std::locale::classic());
    os << pt.l << "," << pt.k << "," << pt.s << "," << pt.m << ",";
    MValue m;
    if (!parse_m(pt.m, m)) {
        os << "error:bad-m,,,,";
        return os.str();
    }
    Params p{pt.l, pt.k, pt.s, m};
    if (!p.valid()) {
        os << "error:invalid-params,,,,";
        return os.str();
    }
    try {
        LyapunovReport rep = classify(p);
        os << to_string(rep.regime) << "," << to_string(rep.stability) << "," << rep.first_index
           << ",";
        if (rep.regime == Regime::CriticalAtStar)
            os << (certify_instance(p.l, p.k).verdict ? "1" : "0");
        else if (rep.exact_value)
            os << (rep.exact_value->sign() != 0 ? "1" : "0");
        else
            os << "na";
        os << ",";
        ProbeReport probe = stability_probe(p, {0.25, 0.35}, ode_tol);
        if (probe.result == ProbeResult::Inconclusive)
            os << "inconclusive";
        else {
            std::ostringstream d;
            d.imbue(std::locale::classic());
            d.precision(17);
            d << probe.delta.back();
            os << d.str();
        }
    } catch (const std::exception& e) {
        os << "error," << e.what() << ",,,";
    }
    return os.str();
}

void print_output(const json& j, const std::string& format) {
    if (format == "plain") {
        for (auto it = j.begin(); it != j.end(); ++it)
            std::cout << it.key() << ": " << (it->is_string() ? it->get<std::string>() : it->dump())
                      << "\n";
    } else {
        std::cout << j.dump(2) << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact stability analysis of the nilpotent-focus family "
                 "xdot = y^(2l-1) - x^(2k+1), ydot = -x + m y^(2s+1)"};
    app.require_subcommand(1);
    std::string format = "json";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "plain", "csv"}));

    int l = 2, k = 1, s = 2, i_exp = 0, j_exp = 0, tail_N = 10, exp_M = 8;
    std::string m_str = "0", lemma, config_path, csv_path, probe_list;
    double rho = 0.3, tol = 1e-10, ode_tol = 1e-10, t_end = 50.0;
    bool all_certs = false;

    auto* c_classify = app.add_subcommand("classify", "First non-vanishing constant and stability");
    c_classify->add_option("--l", l)->required();
    c_classify->add_option("--k", k)->required();
    c_classify->add_option("--s", s)->required();
    c_classify->add_option("--m", m_str)->required();

    auto* c_mstar = app.add_subcommand("mstar", "Critical parameter m*(l,k)");
    c_mstar->add_option("--l", l)->required();
    c_mstar->add_option("--k", k)->required();

    auto* c_moment = app.add_subcommand("moment", "Exact moment I(i,j) with numeric cross-check");
    c_moment->add_option("--l", l)->required();
    c_moment->add_option("--i", i_exp)->required();
    c_moment->add_option("--j", j_exp)->required();
    c_moment->add_option("--quad-tol", tol);

    auto* c_lyap = app.add_subcommand("lyap", "Exact V, W and u at the critical parameter");
    c_lyap->add_option("--l", l)->required();
    c_lyap->add_option("--k", k)->required();

    auto* c_certify = app.add_subcommand("certify", "Exact inequality certificates");
    c_certify->add_option("--l", l);
    c_certify->add_option("--k", k);
    c_certify->add_flag("--all", all_certs, "Emit the full certificate set for (l,k)");
    c_certify->add_option("--lemma", lemma, "One tail estimate: approx1|approx2|w2w1|nuk");
    c_certify->add_option("--N", tail_N, "Tail cut (products evaluated exactly up to N)");
    c_certify->add_option("--M", exp_M, "exp series truncation order");

    auto* c_simulate = app.add_subcommand("simulate", "Poincare return map / trajectory");
    c_simulate->add_option("--l", l)->required();
    c_simulate->add_option("--k", k)->required();
    c_simulate->add_option("--s", s)->required();
    c_simulate->add_option("--m", m_str)->required();
    c_simulate->add_option("--rho", rho);
    c_simulate->add_option("--ode-tol", ode_tol);
    c_simulate->add_option("--t-end", t_end);
    c_simulate->add_option("--traj-csv", csv_path, "Write a Cartesian trajectory CSV here");
    c_simulate->add_option("--probe", probe_list, "Comma-separated rho grid for stability probe");

    auto* c_sweep = app.add_subcommand("sweep", "Grid sweep to CSV");
    c_sweep->add_option("--config", config_path)->required()->check(CLI::ExistingFile);

    // allow global options (e.g. --format) after the subcommand name
    for (CLI::App* sc : app.get_subcommands([](const CLI::App*) { return true; }))
        sc->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitBadParams;
    }

    try {
        if (*c_classify) {
            MValue m;
            if (!parse_m(m_str, m)) {
                std::cerr << "error: cannot parse --m '" << m_str << "'\n";
                return kExitBadParams;
            }
            Params p{l, k, s, m};
            if (!p.valid()) {
                std::cerr << "error: require l >= 2, k >= 1, s >= 1 and l <= 2s\n";
                return kExitBadParams;
            }
            print_output(report_to_json(p, classify(p)), format);
            return kExitOk;
        }
        if (*c_mstar) {
            if (l < 2 || k < 1) {
                std::cerr << "error: require l >= 2 and k >= 1\n";
                return kExitBadParams;
            }
            std::cout << rational_str(m_star(l, k)) << "\n";
            return kExitOk;
        }
        if (*c_moment) {
            if (l < 2 || i_exp < 0 || j_exp < 0) {
                std::cerr << "error: require l >= 2 and non-negative exponents\n";
                return kExitBadParams;
            }
            ExactMoment m = moment_any(l, i_exp, j_exp);
            GtrigTable trig(l);
            double quad = moment_quad(trig, i_exp, j_exp, tol);
            json j{{"l", l},          {"i", i_exp},
                   {"j", j_exp},      {"coeff_num", num_str(m.coeff)},
                   {"coeff_den", den_str(m.coeff)}, {"base_i0", m.base.i0},
                   {"base_j0", m.base.j0},          {"float_value", m.value()},
                   {"quadrature", quad},            {"abs_difference", std::fabs(m.value() - quad)}};
            print_output(j, format);
            return kExitOk;
        }
        if (*c_lyap) {
            if (l < 2 || k < 1) {
                std::cerr << "error: require l >= 2 and k >= 1\n";
                return kExitBadParams;
            }
            U3K1Result u = u_3K1(l, k);
            json j{{"l", l},
                   {"k", k},
                   {"m_star", rational_str(m_star(l, k))},
                   {"index_step", index_step(l, k)},
                   {"first_index", 3 * index_step(l, k) + 1},
                   {"V_num", num_str(u.V.coeff)},
                   {"V_den", den_str(u.V.coeff)},
                   {"W_num", num_str(u.W.coeff)},
                   {"W_den", den_str(u.W.coeff)},
                   {"total_num", num_str(u.total.coeff)},
                   {"total_den", den_str(u.total.coeff)},
                   {"float_value", u.total.value()}};
            print_output(j, format);
            return kExitOk;
        }
        if (*c_certify) {
            std::vector<Certificate> certs;
            if (!lemma.empty()) {
                TailLemma id;
                if (lemma == "approx1")
                    id = TailLemma::Approx1;
                else if (lemma == "approx2")
                    id = TailLemma::Approx2;
                else if (lemma == "w2w1")
                    id = TailLemma::W2W1;
                else if (lemma == "nuk")
                    id = TailLemma::NuK;
                else {
                    std::cerr << "error: unknown --lemma '" << lemma << "'\n";
                    return kExitBadParams;
                }
                certs.push_back(check_general_tail(id, tail_N, exp_M));
            } else {
                if (l < 2 || k < 1) {
                    std::cerr << "error: require l >= 2 and k >= 1\n";
                    return kExitBadParams;
                }
                certs.push_back(certify_instance(l, k));
                if (all_certs) {
                    certs.push_back(check_prop_infinitesimal(l, k));
                    certs.push_back(check_main_terms(l, k));
                    certs.push_back(u_2K1_is_zero(l, k));
                    if (k == 1) certs.push_back(check_k1_W(l));
                }
            }
            json arr = json::array();
            bool any_fail = false, any_inconclusive = false;
            for (const Certificate& c : certs) {
                arr.push_back(c.to_json());
                if (c.status == "failed") any_fail = true;
                if (!c.verdict) any_inconclusive = true;
            }
            std::cout << arr.dump(2) << "\n";
            if (any_fail) return kExitVerifyFail;
            if (any_inconclusive) return kExitInconclusive;
            return kExitOk;
        }
        if (*c_simulate) {
            MValue m;
            if (!parse_m(m_str, m)) {
                std::cerr << "error: cannot parse --m '" << m_str << "'\n";
                return kExitBadParams;
            }
            Params p{l, k, s, m};
            if (!p.valid() || rho < 0 || ode_tol <= 0) {
                std::cerr << "error: invalid parameters\n";
                return kExitBadParams;
            }
            if (!csv_path.empty()) {
                Trajectory traj = integrate_cartesian(p, 0.0, rho, t_end, ode_tol);
                if (!traj.ok) {
                    std::cerr << "error: " << traj.error << "\n";
                    return kExitBadParams;
                }
                std::ofstream out(csv_path);
                out << traj.to_csv();
            }
            json j;
            if (!probe_list.empty()) {
                std::vector<double> grid;
                std::stringstream ss(probe_list);
                std::string tok;
                while (std::getline(ss, tok, ',')) grid.push_back(std::stod(tok));
                ProbeReport probe = stability_probe(p, grid, ode_tol);
                j = json{{"result", to_string(probe.result)},
                         {"rho", probe.rho},
                         {"delta", probe.delta},
                         {"err_est", probe.err_est}};
                if (!probe.note.empty()) j["note"] = probe.note;
                print_output(j, format);
                return probe.result == ProbeResult::Inconclusive ? kExitInconclusive : kExitOk;
            }
            ReturnMapResult r = return_map(p, rho, ode_tol);
            j = json{{"ok", r.ok},
                     {"rho", r.rho},
                     {"p_rho", r.p_rho},
                     {"delta", r.delta},
                     {"steps", r.steps},
                     {"min_denominator", r.min_denominator},
                     {"err_est", r.err_est}};
            if (!r.ok) j["error"] = r.error;
            print_output(j, format);
            return r.ok ? kExitOk : kExitBadParams;
        }
        if (*c_sweep) {
            std::ifstream in(config_path);
            json cfg = json::parse(in);
            double sweep_tol = cfg.value("ode_tol", 1e-10);
            std::vector<SweepPoint> points;
            if (cfg.contains("points")) {
                for (const auto& pt : cfg.at("points"))
                    points.push_back({pt.at(0).get<int>(), pt.at(1).get<int>(), pt.at(2).get<int>(),
                                      pt.at(3).get<std::string>()});
            } else {
                for (int ll : cfg.at("l"))
                    for (int kk : cfg.at("k"))
                        for (int ss : cfg.at("s"))
                            for (const auto& mm : cfg.at("m"))
                                points.push_back({ll, kk, ss, mm.get<std::string>()});
            }
            const int threads = thread_budget();
            std::vector<std::string> rows(points.size());
            for (size_t base = 0; base < points.size(); base += threads) {
                std::vector<std::future<std::string>> batch;
                size_t end = std::min(points.size(), base + threads);
                for (size_t i = base; i < end; ++i)
                    batch.push_back(std::async(std::launch::async, sweep_row, points[i], sweep_tol));
                for (size_t i = base; i < end; ++i) rows[i] = batch[i - base].get();
            }
            std::cout << "l,k,s,m,regime,stability,first_index,cert_ok,sim_delta\n";
            for (const std::string& row : rows) std::cout << row << "\n";
            return kExitOk;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadParams;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadParams;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitVerifyFail;
    }
    return kExitBadParams;
}

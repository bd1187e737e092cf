#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "lerchphi/errors.hpp"
#include "lerchphi/harmonic.hpp"
#include "lerchphi/hurwitz.hpp"
#include "lerchphi/lerch.hpp"
#include "lerchphi/partial_sums.hpp"
#include "lerchphi/series_limits.hpp"
#include "lerchphi/verify.hpp"

namespace {

using lerchphi::cplx;
using nlohmann::json;

constexpr int kExitUsage = 64;
constexpr int kExitDomain = 2;
constexpr int kExitConvergence = 3;

// numbers come in as "re" or "re+imI" (also "re-imI", "imI")
cplx parse_complex(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty number");
    std::string t = s;
    if (t.back() == 'I' || t.back() == 'i') {
        t.pop_back();
        std::size_t pos = std::string::npos;
        for (std::size_t i = t.size(); i-- > 1;) {
            if ((t[i] == '+' || t[i] == '-') && t[i - 1] != 'e' && t[i - 1] != 'E') {
                pos = i;
                break;
            }
        }
        if (pos == std::string::npos) {
            if (t.empty() || t == "+" || t == "-") t += "1";
            return {0.0, std::stod(t)};
        }
        std::string im = t.substr(pos);
        if (im == "+" || im == "-") im += "1";
        return {std::stod(t.substr(0, pos)), std::stod(im)};
    }
    return {std::stod(t), 0.0};
}

json cplx_json(cplx z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

struct cli_state {
    lerchphi::verify::run_config cfg;
    std::string config_path;

    lerchphi::quad::integration_options qopt() const {
        lerchphi::quad::integration_options o;
        o.rel_tol = cfg.rel_tol;
        o.abs_tol = cfg.abs_tol;
        o.max_evals = cfg.max_evals;
        return o;
    }
    double error_estimate(cplx v) const {
        return std::max(cfg.abs_tol, cfg.rel_tol * std::abs(v));
    }
};

void emit_value(const std::string& command, const json& params, cplx value, double err_est,
                const json& extra = json::object()) {
    std::cout.precision(17);
    std::cout << command << " = " << value.real();
    if (value.imag() != 0.0) std::cout << (value.imag() < 0 ? " - " : " + ")
                                       << std::abs(value.imag()) << "i";
    std::cout << "  (err <= " << err_est << ")\n";
    json rec{{"command", command},
             {"params", params},
             {"value", cplx_json(value)},
             {"error_estimate", err_est}};
    for (auto it = extra.begin(); it != extra.end(); ++it) rec[it.key()] = it.value();
    std::cout << rec.dump() << "\n";
}

int run_verify(const cli_state& st, const std::string& suite) {
    using lerchphi::verify::run_config;
    const auto reports = lerchphi::verify::run_suite(suite, st.cfg);
    long passed = 0;
    if (st.cfg.fmt == run_config::format::csv) std::cout << lerchphi::verify::csv_header() << "\n";
    for (const auto& r : reports) {
        passed += r.pass ? 1 : 0;
        if (st.cfg.fmt == run_config::format::csv)
            std::cout << lerchphi::verify::to_csv(r) << "\n";
        else
            std::cout << lerchphi::verify::to_json(r).dump() << "\n";
    }
    std::cout << "passed/total: " << passed << "/" << reports.size() << "\n";
    return passed == static_cast<long>(reports.size()) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lerch transcendent, polylogarithm and Hurwitz zeta via closed-form "
                 "Fourier series, with a verification harness"};
    app.require_subcommand(1);

    cli_state st;
    std::string a_s = "1", b_s = "0", m_s = "-1";
    int k = 1;
    long n = 1;
    std::string kind = "cos-even", trig = "cos", suite = "all", grid = "full", fmt = "json";
    int order = 1;
    bool lerch_sum_only = false;

    app.add_option("--rel-tol", st.cfg.rel_tol, "quadrature relative tolerance");
    app.add_option("--abs-tol", st.cfg.abs_tol, "quadrature absolute tolerance");
    app.add_option("--max-evals", st.cfg.max_evals, "quadrature evaluation budget");
    app.add_option("--config", st.config_path, "RunConfig JSON file");

    auto* partial = app.add_subcommand("partial", "closed-form partial sums vs direct sums");
    partial->add_option("--kind", kind, "cos-even|sin-odd|cos-odd|sin-even|lerch");
    partial->add_option("-a", a_s, "coefficient a (re or re+imI)");
    partial->add_option("-b", b_s, "offset b");
    partial->add_option("-m", m_s, "parameter m");
    partial->add_option("-k", k, "index k");
    partial->add_option("-n", n, "number of terms")->required();

    auto* series = app.add_subcommand("series", "full Fourier series closed form");
    series->add_option("--trig", trig, "cos|sin");
    series->add_option("--order", order, "term power")->required();
    series->add_option("-m", m_s, "parameter m");
    series->add_option("-b", b_s, "offset b");

    auto* lerch_cmd = app.add_subcommand("lerch", "Lerch Phi(e^m, k, b)");
    lerch_cmd->add_option("-m", m_s, "exponent m");
    lerch_cmd->add_option("-k", k, "order k");
    lerch_cmd->add_option("-b", b_s, "offset b");
    lerch_cmd->add_flag("--sum", lerch_sum_only, "print E^m_k(b) instead of Phi");

    auto* polylog_cmd = app.add_subcommand("polylog", "Li_k(e^m)");
    polylog_cmd->add_option("-k", k, "order k");
    polylog_cmd->add_option("-m", m_s, "exponent m");

    auto* hz = app.add_subcommand("hurwitz-neg", "zeta(-k, b)");
    hz->add_option("-k", k, "non-negative integer k");
    hz->add_option("-b", b_s, "second argument b");

    auto* hp = app.add_subcommand("hp-const", "asymptotic constant c(b) of HP(n) - H(n)");
    hp->add_option("-b", b_s, "offset b");

    auto* verify_cmd = app.add_subcommand("verify", "run identity sweeps, emit CheckReports");
    verify_cmd->add_option("suite", suite, "all or a module name");
    verify_cmd->add_option("--seed", st.cfg.seed, "seed for randomized grids");
    verify_cmd->add_option("--grid", grid, "small|full");
    verify_cmd->add_option("--format", fmt, "json|csv");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp")
            return app.exit(e);
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (!st.config_path.empty()) {
            std::ifstream in(st.config_path);
            if (!in) {
                std::cerr << "cannot open config file: " << st.config_path << "\n";
                return kExitUsage;
            }
            json j;
            in >> j;
            const auto seed_backup = st.cfg.seed;
            st.cfg = lerchphi::verify::config_from_json(j);
            if (!j.contains("seed")) st.cfg.seed = seed_backup;
        }
        if (const char* env = std::getenv("LERCH_KERNEL_MAX_EVALS"))
            st.cfg.max_evals = std::stol(env);
        st.cfg.grid = grid == "small" ? lerchphi::verify::run_config::grid_size::small
                                      : lerchphi::verify::run_config::grid_size::full;
        if (fmt == "csv") st.cfg.fmt = lerchphi::verify::run_config::format::csv;

        const cplx a = parse_complex(a_s), b = parse_complex(b_s), m = parse_complex(m_s);

        if (partial->parsed()) {
            const lerchphi::partial::sum_params p{a, b, m, k, n};
            const json params{{"kind", kind}, {"a", cplx_json(a)}, {"b", cplx_json(b)},
                              {"m", cplx_json(m)}, {"k", k}, {"n", n}};
            cplx v;
            if (kind == "lerch") {
                v = lerchphi::partial::lerch_partial_closed(p, st.qopt());
            } else {
                lerchphi::partial::trig_kind tk;
                if (kind == "cos-even") tk = lerchphi::partial::trig_kind::cos_even;
                else if (kind == "sin-odd") tk = lerchphi::partial::trig_kind::sin_odd;
                else if (kind == "cos-odd") tk = lerchphi::partial::trig_kind::cos_odd;
                else if (kind == "sin-even") tk = lerchphi::partial::trig_kind::sin_even;
                else {
                    std::cerr << "unknown --kind: " << kind << "\n";
                    return kExitUsage;
                }
                v = lerchphi::partial::trig_partial_closed(tk, p, st.qopt());
            }
            emit_value("partial", params, v, st.error_estimate(v));
        } else if (series->parsed()) {
            const lerchphi::series::series_spec spec{
                trig == "sin" ? lerchphi::series::trig::sin : lerchphi::series::trig::cos,
                order, m, b};
            const auto sv = lerchphi::series::fourier_series_b(spec, st.qopt());
            const json params{{"trig", trig}, {"order", order}, {"m", cplx_json(m)},
                              {"b", cplx_json(b)}};
            emit_value("series", params, sv.value, st.error_estimate(sv.value),
                       json{{"best_effort", sv.best_effort}});
        } else if (lerch_cmd->parsed()) {
            const lerchphi::lerch::lerch_params p{m, k, b};
            const auto cv = lerch_sum_only ? lerchphi::lerch::lerch_e_sum(p, st.qopt())
                                           : lerchphi::lerch::lerch_phi(p, st.qopt());
            const json params{{"m", cplx_json(m)}, {"k", k}, {"b", cplx_json(b)}};
            emit_value(lerch_sum_only ? "lerch-sum" : "lerch", params, cv.value,
                       st.error_estimate(cv.value),
                       json{{"is_continuation", cv.is_continuation}});
        } else if (polylog_cmd->parsed()) {
            const auto cv = lerchphi::lerch::polylog(k, m, st.qopt());
            const json params{{"k", k}, {"m", cplx_json(m)}};
            emit_value("polylog", params, cv.value, st.error_estimate(cv.value),
                       json{{"is_continuation", cv.is_continuation}});
        } else if (hz->parsed()) {
            const cplx v = lerchphi::hurwitz::hurwitz_zeta_neg(k, b);
            const json params{{"k", k}, {"b", cplx_json(b)}};
            emit_value("hurwitz-neg", params, v, 1e-12 * std::max(1.0, std::abs(v)));
        } else if (hp->parsed()) {
            const auto c = lerchphi::harmonic::hp_asymptotic_constant(b);
            const json params{{"b", cplx_json(b)}};
            const char* regime = c.regime == lerchphi::BRegime::Generic       ? "generic"
                                 : c.regime == lerchphi::BRegime::HalfInteger ? "half-integer"
                                                                              : "integer";
            emit_value("hp-const", params, c.value, st.error_estimate(c.value),
                       json{{"regime", regime}});
        } else if (verify_cmd->parsed()) {
            return run_verify(st, suite);
        }
        return 0;
    } catch (const lerchphi::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const lerchphi::convergence_error& e) {
        std::cerr << "convergence failure: " << e.what() << "\n";
        return kExitConvergence;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid argument: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
}

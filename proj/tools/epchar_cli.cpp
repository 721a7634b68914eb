// File-driven front end: parses Cartan-datum and weight inputs, dispatches
// the verification commands and emits exact JSON/TSV reports.

#include <CLI11.hpp>

#include <complex>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>

#include "epchar/charlat.hpp"
#include "epchar/clifford.hpp"
#include "epchar/dirac.hpp"
#include "epchar/epcore.hpp"
#include "epchar/errors.hpp"
#include "epchar/io.hpp"
#include "epchar/selftest.hpp"

namespace {

using namespace epchar;
using nlohmann::ordered_json;

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty() || !out.empty()) out.push_back(cur);
    return out;
}

std::string strip(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

// "1,0" or "1/2,-1" in true coordinates
Weight parse_weight(const std::string& text, int rank) {
    std::vector<Rational> coords;
    for (const std::string& part : split(text, ','))
        coords.push_back(parse_rational(strip(part)));
    if (rank > 0 && static_cast<int>(coords.size()) != rank)
        fail(errc::rank_mismatch, "weight '" + text + "' does not have rank " +
                                      std::to_string(rank));
    return weight_from_true(coords);
}

// semicolon-separated weights: "1;2" or "1,0;0,1"
std::vector<Weight> parse_weight_list(const std::string& text, int rank) {
    std::vector<Weight> out;
    if (strip(text).empty()) return out;
    for (const std::string& part : split(text, ';')) out.push_back(parse_weight(part, rank));
    return out;
}

// "w" or "w*mult", semicolon-separated terms: "2*1;-2*1"
VirtualCharacter parse_character(const std::string& text, int rank) {
    VirtualCharacter c(rank);
    for (const std::string& part : split(text, ';')) {
        std::string term = strip(part);
        if (term.empty()) continue;
        Int mult = 1;
        auto star = term.find('*');
        if (star != std::string::npos) {
            mult = Int(strip(term.substr(star + 1)));
            term = strip(term.substr(0, star));
        }
        c.add_term(parse_weight(term, rank), mult);
    }
    return c;
}

TorusPoint parse_angles(const std::string& text) {
    TorusPoint t;
    for (const std::string& part : split(text, ','))
        t.angles.push_back(std::stod(strip(part)));
    return t;
}

std::vector<double> parse_doubles(const std::string& text) {
    std::vector<double> out;
    if (strip(text).empty()) return out;
    for (const std::string& part : split(text, ','))
        out.push_back(std::stod(strip(part)));
    return out;
}

std::vector<Rational> parse_rationals(const std::string& text) {
    std::vector<Rational> out;
    if (strip(text).empty()) return out;
    for (const std::string& part : split(text, ','))
        out.push_back(parse_rational(strip(part)));
    return out;
}

// semicolon-separated rows of a rational matrix in true coordinates
RationalMatrix parse_gram(const std::string& text) {
    auto rows = split(text, ';');
    RationalMatrix m(rows.size(), rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        auto entries = parse_rationals(rows[i]);
        if (entries.size() != rows.size())
            fail(errc::gram_not_symmetric, "gram matrix must be square");
        for (std::size_t j = 0; j < entries.size(); ++j) m(i, j) = entries[j] / 4;
    }
    return m;
}

struct Session {
    std::string command;
    std::string format = "json";
    std::string digest_input;
    Report report;

    CartanDatum load(const std::string& path) {
        std::string text = read_file(path);
        digest_input += text;
        return parse_datum(text);
    }

    int finish() {
        report.command = command;
        char buf[32];
        std::snprintf(buf, sizeof buf, "%016llx",
                      static_cast<unsigned long long>(fnv1a(digest_input)));
        report.inputs_digest = buf;
        std::cout << emit_report(report,
                                 format == "tsv" ? ReportFormat::tsv : ReportFormat::json);
        return report.pass() ? 0 : 1;
    }
};

DiracModel parse_dirac_model(const std::string& text) {
    ordered_json j = ordered_json::parse(text);
    auto mat = [](const ordered_json& mj) {
        RationalMatrix m(mj.size(), mj.size());
        for (std::size_t i = 0; i < mj.size(); ++i)
            for (std::size_t k = 0; k < mj[i].size(); ++k) {
                const auto& e = mj[i][k];
                m(i, k) = e.is_string() ? parse_rational(e.get<std::string>())
                                        : Rational(e.get<std::int64_t>());
            }
        return m;
    };
    auto rat = [](const ordered_json& e) {
        return e.is_string() ? parse_rational(e.get<std::string>())
                             : Rational(e.get<std::int64_t>());
    };
    DiracModel m;
    m.dim = j.at("dim").get<int>();
    m.pi_x1 = mat(j.at("pi_x1"));
    m.pi_x2 = mat(j.at("pi_x2"));
    m.pi_casimir = mat(j.at("pi_casimir"));
    m.tau_casimir_k = rat(j.at("tau_casimir_k"));
    m.b_rho = rat(j.at("b_rho"));
    m.b_rho_k = rat(j.at("b_rho_k"));
    return m;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Euler-Poincare / pseudo-coefficient calculator"};
    app.require_subcommand(1);

    Session s;
    {
        std::ostringstream cmd;
        for (int i = 1; i < argc; ++i) cmd << (i > 1 ? " " : "") << argv[i];
        s.command = cmd.str();
        s.digest_input = s.command + "\n";
    }

    std::string datum_path, weights, tau_str, sigma_str, p_minus_str, that_str, theta_str;
    std::string highest_str, model_path, roots_str, rho_str, a_str, gram_str, tauval_str;
    std::string rho_g_str;
    int dim = 0, rank = 1, real_rank = 0;
    int n_pos = 0, n_nc = 0, nu = 0;
    long weyl_order = 1;
    double vol_ratio = 1.0, cg = 1.0;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", s.format, "json or tsv")
            ->check(CLI::IsMember({"json", "tsv"}));
    };

    auto* c_validate = app.add_subcommand("validate", "parse a datum file and echo it");
    c_validate->add_option("--datum", datum_path)->required();
    add_format(c_validate);

    auto* c_spinch = app.add_subcommand("spin-chars", "half spin characters of given weights");
    c_spinch->add_option("--weights", weights)->required();
    c_spinch->add_option("--rank", rank);
    add_format(c_spinch);

    auto* c_sq = app.add_subcommand("spin-square", "(chS+ - chS-)^2 against Lambda_-1 chV");
    c_sq->add_option("--weights", weights)->required();
    c_sq->add_option("--rank", rank);
    add_format(c_sq);

    auto* c_eps = app.add_subcommand("epsilon-check", "chS+- e^eps against Lambda^+- chV+");
    c_eps->add_option("--weights", weights)->required();
    c_eps->add_option("--rank", rank);
    add_format(c_eps);

    auto* c_spin = app.add_subcommand("spinoriality", "does the spin lift exist on the torus");
    c_spin->add_option("--datum", datum_path)->required();
    add_format(c_spin);

    auto* c_orient = app.add_subcommand("orientation", "is Lambda^top p trivial");
    c_orient->add_option("--datum", datum_path)->required();
    add_format(c_orient);

    auto* c_ep = app.add_subcommand("ep-index", "Euler-Poincare index");
    c_ep->add_option("--datum", datum_path)->required();
    c_ep->add_option("--tau", tau_str)->required();
    c_ep->add_option("--sigma", sigma_str)->required();
    add_format(c_ep);

    auto* c_eph = app.add_subcommand("ep-index-half", "index against Lambda p_minus");
    c_eph->add_option("--datum", datum_path)->required();
    c_eph->add_option("--p-minus", p_minus_str)->required();
    c_eph->add_option("--tau", tau_str)->required();
    c_eph->add_option("--sigma", sigma_str)->required();
    add_format(c_eph);

    auto* c_delta = app.add_subcommand("delta", "'Delta_c, 'Delta_n and their product");
    c_delta->add_option("--datum", datum_path)->required();
    add_format(c_delta);

    auto* c_exp = app.add_subcommand("discrete-expand", "expand tau 'Delta over numerators");
    c_exp->add_option("--datum", datum_path)->required();
    c_exp->add_option("--tau", tau_str)->required();
    add_format(c_exp);

    auto* c_theta = app.add_subcommand("theta", "normalized kernel value N/'Delta");
    c_theta->add_option("--datum", datum_path)->required();
    c_theta->add_option("--that", that_str)->required();
    c_theta->add_option("--theta", theta_str)->required();
    add_format(c_theta);

    auto* c_orb = app.add_subcommand("orbital", "orbital integral at a regular point");
    c_orb->add_option("--datum", datum_path)->required();
    c_orb->add_option("--tau", tau_str)->required();
    c_orb->add_option("--theta", theta_str)->required();
    add_format(c_orb);

    auto* c_orbg = app.add_subcommand("orbital-general", "nonregular closed form");
    c_orbg->add_option("--tau-value", tauval_str)->required();
    c_orbg->add_option("--cg", cg)->required();
    c_orbg->add_option("--weyl-order", weyl_order)->required();
    c_orbg->add_option("--rho-g", rho_g_str)->required();
    c_orbg->add_option("--roots-g", roots_str);
    c_orbg->add_option("--gram", gram_str)->required();
    add_format(c_orbg);

    auto* c_pseudo = app.add_subcommand("pseudo-orbital", "tr tau / tr(.|S+-S-)");
    c_pseudo->add_option("--datum", datum_path)->required();
    c_pseudo->add_option("--tau", tau_str)->required();
    c_pseudo->add_option("--theta", theta_str)->required();
    add_format(c_pseudo);

    auto* c_cas = app.add_subcommand("casimir-shift", "dual Casimir minus B(rho)+B(rho_K)");
    c_cas->add_option("--datum", datum_path)->required();
    c_cas->add_option("--tau-highest", highest_str)->required();
    add_format(c_cas);

    auto* c_hc = app.add_subcommand("hc-constant", "Harish-Chandra constant");
    c_hc->add_option("--pos-roots", n_pos)->required();
    c_hc->add_option("--noncompact", n_nc)->required();
    c_hc->add_option("--nu", nu)->required();
    c_hc->add_option("--weyl-order", weyl_order)->required();
    c_hc->add_option("--vol-ratio", vol_ratio)->required();
    add_format(c_hc);

    auto* c_wf = app.add_subcommand("weyl-factor", "|det(1 - t | g/h)|");
    c_wf->add_option("--datum", datum_path)->required();
    c_wf->add_option("--theta", theta_str)->required();
    add_format(c_wf);

    auto* c_dp = app.add_subcommand("delta-plus", "split-Cartan normalization factors");
    c_dp->add_option("--real-rank", real_rank)->required();
    c_dp->add_option("--roots", roots_str, "semicolon-separated functionals on A");
    c_dp->add_option("--rho-p", rho_str, "functional; derived from roots when omitted");
    c_dp->add_option("--a", a_str, "log-coordinates of the split part")->required();
    add_format(c_dp);

    auto* c_dirac = app.add_subcommand("dirac-check", "Parthasarathy square, exact");
    c_dirac->add_option("--dim", dim, "built-in sl(2) model of this dimension");
    c_dirac->add_option("--model", model_path, "model file (JSON)");
    add_format(c_dirac);

    auto* c_self = app.add_subcommand("selftest", "full invariant suite of all modules");
    add_format(c_self);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (*c_validate) {
            CartanDatum d = s.load(datum_path);
            s.report.add("name", d.name);
            s.report.add("rank", d.rank);
            s.report.add("weyl_order", json_int(Int(d.weyl_order())));
            s.report.add("rho", json_weight(d.rho));
            s.report.add("rho_k", json_weight(d.rho_k));
            s.report.add("rho_n", json_weight(d.rho_n));
            s.report.add("p_char", json_character(d.p_char));
            s.report.assert_that("p_char self-dual", d.p_char == dual(d.p_char));
            s.report.assert_that("validated", true);
        } else if (*c_spinch) {
            std::vector<Weight> mu = parse_weight_list(weights, 0);
            int r = mu.empty() ? rank : mu.front().rank();
            auto [plus, minus] = half_spin_characters(mu, r);
            s.report.add("s_plus", json_character(plus));
            s.report.add("s_minus", json_character(minus));
            s.report.add("dim_plus", json_int(plus.dimension()));
            s.report.add("dim_minus", json_int(minus.dimension()));
            if (!mu.empty())
                s.report.assert_that("dimensions 2^(m-1)",
                                     plus.dimension() == (Int(1) << (mu.size() - 1)) &&
                                         minus.dimension() == (Int(1) << (mu.size() - 1)));
        } else if (*c_sq) {
            std::vector<Weight> mu = parse_weight_list(weights, 0);
            int r = mu.empty() ? rank : mu.front().rank();
            SpinSquareReport rep = spin_square_report(mu, r);
            s.report.add("lhs", json_character(rep.lhs));
            s.report.add("rhs", json_character(rep.rhs));
            s.report.add("sign", rep.sign);
            s.report.assert_that("equal", rep.equal);
        } else if (*c_eps) {
            std::vector<Weight> mu = parse_weight_list(weights, 0);
            int r = mu.empty() ? rank : mu.front().rank();
            EpsilonTwistReport rep = epsilon_twist_report(mu, r);
            s.report.add("epsilon", json_weight(epsilon_weight(mu, r)));
            s.report.add("flipped", rep.flipped);
            s.report.add("even_side", json_character(rep.even_side));
            s.report.add("odd_side", json_character(rep.odd_side));
            s.report.add("s_plus_twisted", json_character(rep.s_plus_twisted));
            s.report.add("s_minus_twisted", json_character(rep.s_minus_twisted));
            s.report.assert_that("parity_matched", rep.parity_matched);
        } else if (*c_spin) {
            CartanDatum d = s.load(datum_path);
            SpinorialityReport rep = spinoriality(d);
            s.report.add("epsilon", json_weight(rep.epsilon));
            s.report.add("lifts", rep.lifts);
        } else if (*c_orient) {
            CartanDatum d = s.load(datum_path);
            bool orient = orientation_preserving(d);
            s.report.add("orientation_preserving", orient);
            s.report.assert_that("orientation_preserving", orient);
        } else if (*c_ep) {
            CartanDatum d = s.load(datum_path);
            Int v = ep_index(d, parse_character(tau_str, d.rank),
                             parse_character(sigma_str, d.rank));
            s.report.add("ep_index", json_int(v));
        } else if (*c_eph) {
            CartanDatum d = s.load(datum_path);
            Int v = ep_index_half(d, parse_character(p_minus_str, d.rank),
                                  parse_character(tau_str, d.rank),
                                  parse_character(sigma_str, d.rank));
            s.report.add("ep_index_half", json_int(v));
        } else if (*c_delta) {
            CartanDatum d = s.load(datum_path);
            DeltaCharacters delta = delta_characters(d);
            s.report.add("delta_c", json_character(delta.delta_c));
            s.report.add("delta_n", json_character(delta.delta_n));
            s.report.add("delta_full", json_character(delta.delta_full));
        } else if (*c_exp) {
            CartanDatum d = s.load(datum_path);
            VirtualCharacter tau = parse_character(tau_str, d.rank);
            DiscreteExpansion ex = discrete_expansion(d, tau);
            ordered_json coeffs = ordered_json::array();
            VirtualCharacter recon = ex.remainder;
            for (auto it = ex.coefficients.rbegin(); it != ex.coefficients.rend(); ++it) {
                ordered_json entry = ordered_json::array();
                entry.push_back(json_weight(it->first));
                entry.push_back(it->second.str());
                coeffs.push_back(entry);
                recon = linear_combination(recon, discrete_series_numerator(d, it->first), 1,
                                           it->second);
            }
            s.report.add("coefficients", coeffs);
            s.report.add("remainder", json_character(ex.remainder));
            s.report.assert_that(
                "reconstruction",
                recon == tensor(tau, delta_characters(d).delta_full));
        } else if (*c_theta) {
            CartanDatum d = s.load(datum_path);
            RegularCharacter that = make_regular_character(d, parse_weight(that_str, d.rank));
            s.report.add("theta", json_complex(theta_evaluate(d, that, parse_angles(theta_str))));
        } else if (*c_orb) {
            CartanDatum d = s.load(datum_path);
            s.report.add("orbital",
                         json_complex(orbital_regular(d, parse_character(tau_str, d.rank),
                                                      parse_angles(theta_str))));
        } else if (*c_orbg) {
            auto tv = parse_doubles(tauval_str);
            std::complex<double> tau_value(tv.at(0), tv.size() > 1 ? tv.at(1) : 0.0);
            RationalMatrix gram = parse_gram(gram_str);
            Weight rho_g = parse_weight(rho_g_str, static_cast<int>(gram.rows));
            std::vector<Weight> roots =
                parse_weight_list(roots_str, static_cast<int>(gram.rows));
            s.report.add("orbital_general",
                         json_complex(orbital_general_formula(tau_value, cg, weyl_order, rho_g,
                                                              roots, gram)));
        } else if (*c_pseudo) {
            CartanDatum d = s.load(datum_path);
            s.report.add("pseudo_orbital",
                         json_complex(pseudo_orbital(d, parse_character(tau_str, d.rank),
                                                     parse_angles(theta_str))));
        } else if (*c_cas) {
            CartanDatum d = s.load(datum_path);
            s.report.add("casimir_shift",
                         json_rational(casimir_shift(d, parse_weight(highest_str, d.rank))));
        } else if (*c_hc) {
            double v = harish_chandra_constant({n_pos, n_nc, nu, weyl_order, vol_ratio});
            s.report.add("hc_constant", v);
        } else if (*c_wf) {
            CartanDatum d = s.load(datum_path);
            s.report.add("weyl_factor",
                         weyl_integration_factor(d, parse_angles(theta_str)));
        } else if (*c_dp) {
            std::vector<SplitRoot> roots;
            for (const std::string& part : split(roots_str, ';')) {
                if (strip(part).empty()) continue;
                roots.push_back(SplitRoot{parse_rationals(part), Weight()});
            }
            SplitCartanDatum sd =
                make_split_datum(real_rank, roots, parse_rationals(rho_str), CartanDatum{});
            std::vector<double> a = parse_doubles(a_str);
            s.report.add("delta_plus", delta_plus_evaluate(sd, a, TorusPoint{}));
            s.report.add("normalized_factor",
                         json_complex(normalized_orbital_factor(sd, a, TorusPoint{})));
        } else if (*c_dirac) {
            DiracModel model;
            if (!model_path.empty()) {
                std::string text = read_file(model_path);
                s.digest_input += text;
                model = parse_dirac_model(text);
            } else if (dim > 0) {
                model = sl2_dirac_model(dim);
            } else {
                fail(errc::validation_error, "need --dim or --model");
            }
            DiracReport rep = dirac_square_check(model, PolarizedSpace{1});
            s.report.add("max_defect", json_rational(rep.max_defect));
            s.report.add("defect_plus", json_rational(rep.defect_plus));
            s.report.add("defect_minus", json_rational(rep.defect_minus));
            s.report.add("lemma_scalar_ok", rep.lemma_scalar_ok);
            s.report.assert_that("defect_zero", rep.ok);
        } else if (*c_self) {
            for (const CheckResult& c : run_selftest()) {
                if (!c.detail.empty()) s.report.add(c.name, c.detail);
                s.report.assert_that(c.name, c.pass);
            }
        }
    } catch (const calc_error& e) {
        if (e.kind() == errc::parse_error || e.kind() == errc::validation_error ||
            e.kind() == errc::gram_not_symmetric || e.kind() == errc::bad_classification) {
            std::cerr << "error: " << e.what() << "\n";
            return 2;
        }
        s.report.add("error", std::string(e.what()));
        s.report.assert_that(errc_name(e.kind()), false);
        return s.finish();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    return s.finish();
}

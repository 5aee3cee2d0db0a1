#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>

#include "dynstab/dynqg.hpp"
#include "dynstab/json_io.hpp"
#include "dynstab/suites.hpp"
#include "dynstab/xibasis.hpp"

using namespace dynstab;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitCheckFailed = 1;

int max_n_limit() {
    if (const char* env = std::getenv("DYNSTAB_MAX_N")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return 4;
}

std::vector<int> parse_csv(const std::string& s) {
    std::vector<int> out;
    if (s.empty()) return out;
    size_t pos = 0;
    while (pos < s.size()) {
        size_t comma = s.find(',', pos);
        std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos
                                                                   : comma - pos);
        out.push_back(std::stoi(tok));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

// num factored over the dictionary, denominator factors as stored
std::string ratf_factored_str(const RatF& f) {
    if (f.is_zero()) return "0";
    RatF::Factors nf;
    mpq_class s = factor_dictionary(f.num(), nf);
    std::string out;
    if (nf.empty()) {
        out = s.get_str();
    } else {
        if (s == -1)
            out += "-";
        else if (s != 1)
            out += s.get_str() + "*";
        for (size_t i = 0; i < nf.size(); ++i) {
            if (i) out += "*";
            out += "(" + nf[i].first.str() + ")";
            if (nf[i].second > 1) out += "^" + std::to_string(nf[i].second);
        }
    }
    if (!f.den_factors().empty()) {
        out += "/(";
        bool first = true;
        for (const auto& [p, m] : f.den_factors()) {
            if (!first) out += "*";
            first = false;
            out += "(" + p.str() + ")";
            if (m > 1) out += "^" + std::to_string(m);
        }
        out += ")";
    }
    return out;
}

std::string render_weight(Context& ctx, const Perm& sigma, const SubsetIndex& I,
                          const std::string& format) {
    const VarTablePtr& vt = ctx.vt();
    if (format == "json") return poly_to_json(ctx.weight_value(sigma, I)).dump();
    if (I.k() == 1) {
        // factored single-variable form
        SubsetIndex K = sigma.inverse().apply(I);
        std::string out = "y";
        for (int a = 1; a <= ctx.n(); ++a) {
            Poly f = l_factor(vt, K, 1, a).substitute({{vt->z(a), zv(vt, sigma(a))}});
            out += "*(" + (format == "latex" ? f.latex() : f.str()) + ")";
        }
        return out;
    }
    Poly w = ctx.weight_value(sigma, I);
    return format == "latex" ? w.latex() : w.str();
}

std::string render_modified(Context& ctx, WeightVariant v, const Perm& sigma,
                            const SubsetIndex& I, const std::string& format) {
    ModifiedWeight m = modified_weight(ctx.vt(), v, sigma, I);
    if (format == "json") return ratf_to_json(m.value).dump();
    if (format == "latex") return m.value.latex();
    if (I.k() == 1) return ratf_factored_str(m.value);
    return m.value.str();
}

std::string render_tensor(const TensorVector& v, const std::string& format) {
    if (format == "json") {
        nlohmann::json j = nlohmann::json::object();
        for (const auto& [I, c] : v.coeffs()) j[I.str()] = ratf_to_json(c);
        return j.dump();
    }
    if (v.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& I : vbasis_order(v.slots())) {
        RatF c = v.coeff(I);
        if (c.is_zero()) continue;
        if (!first) out += " + ";
        first = false;
        if (format == "latex")
            out += "\\left(" + c.latex() + "\\right) v_{" + I.str() + "}";
        else
            out += "(" + ratf_factored_str(c) + ")*v" + I.str();
    }
    return out;
}

std::string render_matrix(const RatMatrix& m, const std::string& format) {
    if (format == "json") {
        nlohmann::json rows = nlohmann::json::array();
        for (int i = 0; i < m.rows(); ++i) {
            nlohmann::json row = nlohmann::json::array();
            for (int j = 0; j < m.cols(); ++j) row.push_back(ratf_to_json(m.at(i, j)));
            rows.push_back(std::move(row));
        }
        return rows.dump();
    }
    if (format == "latex") {
        std::string out = "\\begin{pmatrix}\n";
        for (int i = 0; i < m.rows(); ++i) {
            for (int j = 0; j < m.cols(); ++j)
                out += m.at(i, j).latex() + (j + 1 < m.cols() ? " & " : "");
            out += " \\\\\n";
        }
        return out + "\\end{pmatrix}";
    }
    return m.str();
}

std::string render_shiftop(const ShiftOp& op, const std::string& format) {
    if (format == "json") {
        nlohmann::json j = nlohmann::json::object();
        for (const auto& [m, blk] : op.blocks()) {
            RatMatrix mat = blk.full_matrix();
            nlohmann::json rows = nlohmann::json::array();
            for (int i = 0; i < mat.rows(); ++i) {
                nlohmann::json row = nlohmann::json::array();
                for (int c = 0; c < mat.cols(); ++c) row.push_back(ratf_to_json(mat.at(i, c)));
                rows.push_back(std::move(row));
            }
            j["delta^" + std::to_string(m)] = std::move(rows);
        }
        return j.dump();
    }
    std::string out;
    for (const auto& [m, blk] : op.blocks()) {
        out += render_matrix(blk.full_matrix(), format);
        out += (format == "latex" ? "\\delta^{" + std::to_string(m) + "}\n"
                                  : "* delta^" + std::to_string(m) + "\n");
    }
    return out.empty() ? "0" : out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations with dynamical weight functions, stable envelopes and "
                 "the rational dynamical quantum group on cotangent bundles of Grassmannians"};
    app.require_subcommand(1);

    // compute
    auto* compute = app.add_subcommand("compute", "compute and print one object");
    std::string object, format = "text", sigma_str, i_str;
    int n = 2, k = -1, trunc = 0;
    compute->add_option("object", object,
                        "one of: weight, wplus, wminus, kappa, xi, rmatrix, loperator, det")
        ->required();
    compute->add_option("--n", n, "number of tensor factors / z variables");
    compute->add_option("--k", k, "weight (subset size)");
    compute->add_option("--sigma", sigma_str, "permutation in one-line notation, e.g. 2,1");
    compute->add_option("--I", i_str, "index subset as a comma list, e.g. 1,3");
    compute->add_option("--format", format, "text | json | latex");
    compute->add_option("--trunc", trunc, "series truncation order (coefficient listings)");

    // verify
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    int vn = 0, jobs = 1, vtrunc = 0;
    bool unsafe = false;
    verify->add_option("suite", suite, "suite name or 'all'")->required();
    verify->add_option("--n", vn, "size parameter (default: the suite's cap)");
    verify->add_option("--jobs", jobs, "parallel worker count");
    verify->add_option("--trunc", vtrunc, "series truncation order (default n+2)");
    verify->add_option("--format", format, "text | json");
    verify->add_flag("--unsafe", unsafe, "override the per-suite n cap");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    if (format != "text" && format != "json" && format != "latex") {
        std::cerr << "error: unknown format '" << format << "'\n";
        return kExitUsage;
    }

    try {
        if (compute->parsed()) {
            if (n < 1 || n > max_n_limit()) {
                std::cerr << "error: n out of range (max " << max_n_limit()
                          << ", raise DYNSTAB_MAX_N to override)\n";
                return kExitUsage;
            }
            Context ctx(n);
            Perm sigma = sigma_str.empty() ? Perm::identity(n)
                                           : Perm::from_one_line(parse_csv(sigma_str));
            if (sigma.n() != n) {
                std::cerr << "error: --sigma length disagrees with --n\n";
                return kExitUsage;
            }
            std::vector<int> elems = parse_csv(i_str);
            if (k >= 0 && !i_str.empty() && static_cast<int>(elems.size()) != k) {
                std::cerr << "error: --I size disagrees with --k\n";
                return kExitUsage;
            }
            if (k > n) {
                std::cerr << "error: k exceeds n\n";
                return kExitUsage;
            }
            SubsetIndex I(n, elems);
            bool needs_index = object == "weight" || object == "wplus" || object == "wminus" ||
                               object == "kappa" || object == "xi";
            if (needs_index && i_str.empty() && k > 0) {
                std::cerr << "error: --I required for this object\n";
                return kExitUsage;
            }

            if (object == "weight") {
                std::cout << render_weight(ctx, sigma, I, format) << "\n";
            } else if (object == "wplus") {
                std::cout << render_modified(ctx, WeightVariant::plus, sigma, I, format) << "\n";
            } else if (object == "wminus") {
                std::cout << render_modified(ctx, WeightVariant::minus, sigma, I, format)
                          << "\n";
            } else if (object == "kappa") {
                LocalizedClass c = kappa_class(ctx, sigma, I);
                if (format == "json") {
                    std::cout << c.to_json().dump() << "\n";
                } else {
                    std::cout << c.str();
                    if (I.k() == 1) {
                        RatF rep = gamma_representative_k1(ctx, c);
                        std::cout << "representative (root rendered as w): "
                                  << (format == "latex" ? rep.latex() : rep.str()) << "\n";
                    }
                }
            } else if (object == "xi") {
                std::cout << render_tensor(ctx.xi(I), format) << "\n";
            } else if (object == "rmatrix") {
                if (n < 2) {
                    std::cerr << "error: rmatrix needs n >= 2\n";
                    return kExitUsage;
                }
                RatF z = rf(zv(ctx.vt(), 1) - zv(ctx.vt(), 2));
                std::cout << render_matrix(rmat(ctx.vt(), rf(lam(ctx.vt())), z), format);
            } else if (object == "loperator") {
                LOperator L = ctx.loperator(sigma);
                for (int i = 1; i <= 2; ++i)
                    for (int j = 1; j <= 2; ++j) {
                        std::cout << "L" << i << j << ":\n";
                        std::cout << render_matrix(L.block(i, j).full_matrix(), format) << "\n";
                    }
            } else if (object == "det") {
                LOperator L = ctx.loperator(sigma);
                if (trunc > 0) {
                    auto coeffs = gz_det_coeffs(L, trunc);
                    for (int s = 0; s <= trunc; ++s) {
                        std::cout << "coefficient " << s << ":\n"
                                  << render_shiftop(coeffs[static_cast<size_t>(s)], format);
                    }
                } else {
                    std::cout << render_shiftop(det_element(L), format);
                }
            } else {
                std::cerr << "error: unknown object '" << object << "'\n";
                return kExitUsage;
            }
            return 0;
        }

        // verify
        if (!is_suite_name(suite)) {
            std::cerr << "error: unknown suite '" << suite << "'\n";
            return kExitUsage;
        }
        int cap = suite_default_max_n(suite);
        int run_n = vn > 0 ? vn : std::min(cap, 3);
        if (run_n > max_n_limit()) {
            std::cerr << "error: n out of range (max " << max_n_limit()
                      << ", raise DYNSTAB_MAX_N to override)\n";
            return kExitUsage;
        }
        if (run_n > cap && !unsafe) {
            std::cerr << "refused: suite '" << suite << "' is capped at n = " << cap
                      << " (expression swell); pass --unsafe to override\n";
            return kExitUsage;
        }
        SuiteOptions opts;
        opts.jobs = jobs;
        opts.trunc = vtrunc;
        SuiteReport rep = run_suite(suite, run_n, opts);
        if (format == "json") {
            nlohmann::json j;
            j["suite"] = rep.suite;
            j["n"] = rep.n;
            j["pass"] = rep.pass();
            nlohmann::json checks = nlohmann::json::array();
            for (const auto& c : rep.checks)
                checks.push_back({{"id", c.id}, {"pass", c.pass}, {"ms", c.ms}});
            j["checks"] = std::move(checks);
            std::cout << j.dump() << "\n";
        } else {
            std::cout << rep.summary();
        }
        return rep.pass() ? 0 : kExitCheckFailed;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    }
}

#include "verify/commands.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

#include "ellpl/dvariant_sections.hpp"
#include "ellpl/eisenstein_classes.hpp"
#include "ellpl/eisenstein_modular.hpp"
#include "ellpl/jacobi_kronecker.hpp"
#include "ellpl/level_deck.hpp"
#include "ellpl/weierstrass_theta.hpp"
#include "verify/complex_literal.hpp"
#include "verify/suites.hpp"

namespace ellpl::verify {

using json = nlohmann::ordered_json;

namespace {


std::vector<long long> parse_ints(const std::string& text, std::size_t count, const char* what) {
    std::vector<long long> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoll(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw DomainError(std::string("malformed ") + what + " '" + text + "'");
        }
    }
    if (out.size() != count)
        throw DomainError(std::string(what) + " needs " + std::to_string(count) +
                          " comma-separated integers, got '" + text + "'");
    return out;
}

json complex_json(Complex v) { return format_complex(v); }

json modular_json(const ModularValue& m) {
    json j;
    j["value"] = complex_json(m.value);
    j["weight"] = m.weight;
    j["level"] = m.level;
    j["a"] = m.a;
    j["b"] = m.b;
    j["component"] = m.component;
    j["route"] = route_name(m.route);
    return j;
}

json matrix_json(const CMatrix& m) {
    json rows = json::array();
    for (int r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(complex_json(m(r, c)));
        rows.push_back(row);
    }
    return rows;
}

}  // namespace

json evaluate(const EvalArgs& e, const Precision& prec) {
    json out;
    out["function"] = e.function;
    const std::string& f = e.function;
    if (f == "theta") {
        out["value"] = complex_json(
            theta_elementary(parse_complex(e.z), parse_tau(e.tau), prec));
    } else if (f == "J") {
        out["value"] = complex_json(jacobi_J(
            {parse_complex(e.z), parse_complex(e.w), parse_tau(e.tau)}, prec));
    } else if (f == "r_k") {
        const TruncatedLaurent l =
            laurent_r(parse_complex(e.z), parse_tau(e.tau), e.k, prec);
        json vals = json::array();
        for (int k = -1; k <= e.k; ++k) vals.push_back(complex_json(l.coeff(k)));
        out["first_index"] = -1;
        out["values"] = vals;
        out["contour_radius"] = l.radius_used;
    } else if (f == "s_D") {
        out["value"] = complex_json(
            s_D(e.k, e.D, parse_complex(e.z), parse_tau(e.tau), prec));
    } else if (f == "e_k") {
        out["value"] = complex_json(
            eisenstein_kronecker_e(e.k, parse_complex(e.z), parse_tau(e.tau), prec));
    } else if (f == "E") {
        out["value"] =
            complex_json(eisenstein_E(e.k, e.x, e.y, e.N, parse_tau(e.tau), prec));
    } else if (f == "F") {
        out.update(modular_json(modular_F(e.k, e.a, e.b, e.N, parse_tau(e.tau), prec)));
    } else if (f == "DF") {
        out.update(modular_json(modular_DF(e.k, e.a, e.b, e.N, e.D, parse_tau(e.tau), prec)));
    } else if (f == "A_n") {
        const auto g = parse_ints(e.gamma, 4, "--gamma");
        const auto s = parse_ints(e.shift, 2, "--shift");
        DeckElement d{s[0], s[1], {g[0], g[1], g[2], g[3]}};
        require_sl2z(d.gamma);
        if (!in_gamma(d.gamma, e.N))
            throw DomainError("--gamma is not in Gamma(" + std::to_string(e.N) + ")");
        out["matrix"] = matrix_json(automorphy_tensor(e.n, d, parse_complex(e.z),
                                                      parse_tau(e.tau).value(),
                                                      parse_tensor_kind(e.kind)));
    } else if (f == "eis_class") {
        const EisensteinClass c =
            eisenstein_class_coefficient(e.n, e.a, e.b, e.N, parse_tau(e.tau), prec);
        out["n"] = c.n;
        out["level"] = c.level;
        out["a"] = c.a;
        out["b"] = c.b;
        out["algebraic_coefficient"] = complex_json(c.algebraic_coefficient);
        out["representative_coefficient"] = complex_json(c.representative.coefficient);
        out["provenance"] = modular_json(c.representative.provenance);
    } else {
        throw DomainError("unknown function '" + f +
                          "' (expected theta, J, r_k, s_D, e_k, E, F, DF, A_n, eis_class)");
    }
    return out;
}


Complex table_value(const TableArgs& t, const UpperHalfPoint& tau, const Precision& prec) {
    const std::string& f = t.function;
    if (f == "theta") return theta_elementary(parse_complex(t.z), tau, prec);
    if (f == "e_k") return eisenstein_kronecker_e(t.k, parse_complex(t.z), tau, prec);
    if (f == "s_D") return s_D(t.k, t.D, parse_complex(t.z), tau, prec);
    if (f == "F") return modular_F(t.k, t.a, t.b, t.N, tau, prec).value;
    if (f == "DF") return modular_DF(t.k, t.a, t.b, t.N, t.D, tau, prec).value;
    if (f == "eis_class")
        return eisenstein_class_coefficient(t.n, t.a, t.b, t.N, tau, prec).algebraic_coefficient;
    throw DomainError("unknown table function '" + f +
                      "' (expected theta, e_k, s_D, F, DF, eis_class)");
}

std::string table_hash(const TableArgs& t, const Precision& prec) {
    char buf[512];
    std::snprintf(buf, sizeof buf, "table:%s;re=%a;from=%a;to=%a;step=%a;z=%s;k=%d;a=%d;b=%d;N=%d;D=%d;n=%d",
                  t.function.c_str(), t.tau_re, t.im_from, t.im_to, t.im_step, t.z.c_str(), t.k, t.a,
                  t.b, t.N, t.D, t.n);
    RunConfig cfg;
    cfg.prec = prec;
    return config_hash(buf, cfg);
}

std::string make_table(const TableArgs& t, const Precision& prec, const std::string& version) {
    if (!(t.im_step > 0.0)) throw DomainError("--im-step must be positive");
    std::vector<std::pair<Complex, Complex>> rows;
    const int count = static_cast<int>(std::floor((t.im_to - t.im_from) / t.im_step + 1e-9)) + 1;
    for (int r = 0; r < count; ++r) {
        const UpperHalfPoint tau(Complex(t.tau_re, t.im_from + r * t.im_step));
        rows.emplace_back(tau.value(), table_value(t, tau, prec));
    }
    const std::string hash = table_hash(t, prec);
    std::ostringstream os;
    if (t.format == "json") {
        json j;
        j["version"] = version;
        j["function"] = t.function;
        j["config_hash"] = hash;
        j["precision"] = {{"q_tail_eps", prec.q_tail_eps},
                          {"quad_points", prec.quad_points},
                          {"lattice_radius", prec.lattice_radius},
                          {"deriv_radius_frac", prec.deriv_radius_frac}};
        j["rows"] = json::array();
        for (auto [tau, v] : rows)
            j["rows"].push_back({{"tau", complex_json(tau)}, {"value", complex_json(v)}});
        os << j.dump(2) << "\n";
    } else if (t.format == "csv") {
        char line[256];
        std::snprintf(line, sizeof line,
                      "# ellpl %s function=%s config_hash=%s q_tail_eps=%.17g quad_points=%d "
                      "lattice_radius=%d deriv_radius_frac=%.17g\n",
                      version.c_str(), t.function.c_str(), hash.c_str(), prec.q_tail_eps,
                      prec.quad_points, prec.lattice_radius, prec.deriv_radius_frac);
        os << line << "tau_re,tau_im,value_re,value_im\n";
        for (auto [tau, v] : rows) {
            std::snprintf(line, sizeof line, "%.17g,%.17g,%.17g,%.17g\n", tau.real(), tau.imag(),
                          v.real(), v.imag());
            os << line;
        }
    } else {
        throw DomainError("unknown format '" + t.format + "' (expected csv or json)");
    }
    return os.str();
}


}  // namespace ellpl::verify

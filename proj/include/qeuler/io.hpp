#pragma once

#include "qeuler/lfunc.hpp"
#include "qeuler/qeuler.hpp"
#include "qeuler/verify.hpp"

#include <json.hpp>

#include <complex>
#include <string>
#include <variant>

namespace qeuler {

using nlohmann::json;

// Exact values serialize as decimal strings, never as floats; numeric
// (double) evaluations are separate, clearly named fields.

inline json poly_coords_json(const PolyQ& p, unsigned order) {
    json arr = json::array();
    for (const auto& c : p.coeffs()) {
        Cyclotomic lifted = c.lifted(order);
        json coords = json::array();
        for (const auto& r : lifted.coords()) coords.push_back(r.to_string());
        arr.push_back(std::move(coords));
    }
    return arr;
}

inline json ratfun_to_json(const RatFunQ& f) {
    unsigned order = f.common_order();
    return json{{"num", poly_coords_json(f.num(), order)},
                {"den", poly_coords_json(f.den(), order)},
                {"order", order},
                {"string", f.to_string()}};
}

inline PolyQ poly_from_coords_json(const json& arr, unsigned order) {
    std::vector<Cyclotomic> coeffs;
    for (const auto& coords : arr) {
        std::vector<Rational> c;
        for (const auto& s : coords) c.push_back(Rational::from_string(s.get<std::string>()));
        coeffs.push_back(Cyclotomic::from_coords(order, std::move(c)));
    }
    return PolyQ(std::move(coeffs));
}

inline RatFunQ ratfun_from_json(const json& j) {
    unsigned order = j.at("order").get<unsigned>();
    return RatFunQ(poly_from_coords_json(j.at("num"), order), poly_from_coords_json(j.at("den"), order));
}

inline json polyinx_to_json(const PolyInX& p) {
    json coeffs = json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(ratfun_to_json(c));
    return json{{"coeffs", std::move(coeffs)}, {"string", p.to_string()}};
}

inline PolyInX polyinx_from_json(const json& j) {
    std::vector<RatFunQ> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(ratfun_from_json(c));
    return PolyInX(std::move(coeffs));
}

inline json cyclotomic_to_json(const Cyclotomic& c) {
    json coords = json::array();
    for (const auto& r : c.coords()) coords.push_back(r.to_string());
    auto z = c.to_complex();
    return json{{"order", c.order()}, {"coords", std::move(coords)}, {"re", z.real()}, {"im", z.imag()}};
}

inline json char_to_json(const DirichletChar& chi) {
    json values = json::array();
    for (const auto& v : chi.values()) values.push_back(cyclotomic_to_json(v));
    return json{{"modulus", chi.modulus()},
                {"index", chi.index()},
                {"order", chi.order()},
                {"principal", chi.is_principal()},
                {"values", std::move(values)}};
}

inline json series_estimate_to_json(const SeriesEstimate& s) {
    return json{{"value_re", s.value.real()},
                {"value_im", s.value.imag()},
                {"tail_bound", s.tail_bound},
                {"terms_used", s.terms_used}};
}

inline json congruence_report_to_json(const CongruenceReport& r) {
    auto coeffs = [](const ResidueElem& e) {
        json a = json::array();
        for (const auto& c : e.coeffs()) a.push_back(c.get_str());
        return a;
    };
    return json{{"modulus", r.modulus.get_str()}, {"q", r.q_used.get_str()},
                {"mode", to_string(r.mode)},     {"lhs", coeffs(r.lhs)},
                {"rhs", coeffs(r.rhs)},          {"holds", r.holds}};
}

/// "a/b" or "a" with arbitrary-precision parts.
inline Rational parse_rational(const std::string& s) { return Rational::from_string(s); }

/// "re", "rei"? No: "re+imi" / "re-imi" / "imi" / "re", e.g. "0.2+0.2i", "-0.4", "0.5i".
inline std::complex<double> parse_complex(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty complex literal");
    size_t split = std::string::npos;
    for (size_t i = 1; i < s.size(); ++i)
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') split = i;
    auto parse_part = [](const std::string& t) {
        size_t pos = 0;
        double v = std::stod(t, &pos);
        if (pos != t.size()) throw std::invalid_argument("bad numeric literal: " + t);
        return v;
    };
    if (!s.empty() && s.back() == 'i') {
        std::string imag = s.substr(0, s.size() - 1);
        if (split == std::string::npos)
            return {0.0, imag.empty() || imag == "+" || imag == "-" ? (imag == "-" ? -1.0 : 1.0)
                                                                    : parse_part(imag)};
        std::string im = imag.substr(split);
        if (im == "+" || im.empty()) im = "1";
        if (im == "-") im = "-1";
        return {parse_part(s.substr(0, split)), parse_part(im)};
    }
    return {parse_part(s), 0.0};
}

using QValue = std::variant<Rational, std::complex<double>>;

/// Exact when the literal is an integer or a fraction "a/b"; complex double
/// when it contains '.', 'e', or 'i'.
inline QValue parse_q_value(const std::string& s) {
    if (s.find('/') != std::string::npos) return Rational::from_string(s);
    if (s.find('.') == std::string::npos && s.find('i') == std::string::npos &&
        s.find('e') == std::string::npos && s.find('E') == std::string::npos)
        return Rational::from_string(s);
    return parse_complex(s);
}

}  // namespace qeuler

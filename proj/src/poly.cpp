#include "eulerpoly/poly.hpp"

#include <nlohmann/json.hpp>

#include <stdexcept>

namespace eulerpoly {

std::string to_human(const RatPoly& p, const std::string& var) {
    if (p.is_zero()) {
        return "0";
    }
    std::string out;
    const auto& c = p.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i].is_zero()) {
            continue;
        }
        const bool negative = c[i].sign() < 0;
        const Rational magnitude = negative ? -c[i] : c[i];
        if (out.empty()) {
            out += negative ? "-" : "";
        } else {
            out += negative ? " - " : " + ";
        }
        std::string monomial;
        if (i == 1) {
            monomial = var;
        } else if (i > 1) {
            monomial = var + "^" + std::to_string(i);
        }
        if (monomial.empty()) {
            out += magnitude.to_string();
        } else if (magnitude == Rational(1)) {
            out += monomial;
        } else {
            out += magnitude.to_string() + "*" + monomial;
        }
    }
    return out;
}

std::string to_json(const RatPoly& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : p.coeffs()) {
        arr.push_back(c.to_string());
    }
    return arr.dump();
}

RatPoly parse_json_poly(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("polynomial JSON: ") + e.what());
    }
    if (!doc.is_array()) {
        throw std::invalid_argument("polynomial JSON must be an array");
    }
    std::vector<Rational> coeffs;
    coeffs.reserve(doc.size());
    for (const auto& item : doc) {
        if (item.is_string()) {
            coeffs.push_back(Rational::parse(item.get<std::string>()));
        } else if (item.is_number_integer()) {
            coeffs.emplace_back(item.get<long>());
        } else {
            throw std::invalid_argument("polynomial JSON entries must be rational strings");
        }
    }
    return RatPoly(std::move(coeffs));
}

}  // namespace eulerpoly

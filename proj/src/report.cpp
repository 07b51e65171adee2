#include "eulerpoly/report.hpp"

#include <sstream>
#include <stdexcept>

namespace eulerpoly {

namespace {

using nlohmann::ordered_json;

ordered_json rational_to_json(const Rational& r) {
    if (r.is_integer() && r.numerator().fits_slong_p()) {
        return r.numerator().get_si();
    }
    return r.to_string();
}

Rational rational_from_json(const ordered_json& j) {
    if (j.is_number_integer()) {
        return Rational(j.get<long>());
    }
    if (j.is_string()) {
        return Rational::parse(j.get<std::string>());
    }
    throw std::invalid_argument("expected an integer or rational string");
}

CheckMode parse_mode(std::string_view name) {
    for (const CheckMode mode : {CheckMode::symbolic, CheckMode::pointwise, CheckMode::valuation}) {
        if (to_string(mode) == name) {
            return mode;
        }
    }
    throw std::invalid_argument("unknown mode '" + std::string(name) + "'");
}

ordered_json residual_to_json(const Residual& residual) {
    return std::visit(
        [](const auto& r) -> ordered_json {
            using T = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<T, RatPoly>) {
                ordered_json arr = ordered_json::array();
                for (const auto& c : r.coeffs()) {
                    arr.push_back(c.to_string());
                }
                return arr;
            } else if constexpr (std::is_same_v<T, Rational>) {
                return r.to_string();
            } else {
                if (r.is_infinite()) {
                    return "+inf";
                }
                return r.value();
            }
        },
        residual);
}

std::string params_text(const IdentityReport& r, const char* separator) {
    std::string out;
    for (const auto& p : r.params) {
        if (!out.empty()) {
            out += separator;
        }
        out += p.name + "=" + p.value.to_string();
    }
    return out;
}

std::string csv_quote(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) {
        return field;
    }
    std::string out = "\"";
    for (const char c : field) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + "\"";
}

}  // namespace

OutputFormat parse_format(std::string_view name) {
    if (name == "json") return OutputFormat::json;
    if (name == "csv") return OutputFormat::csv;
    if (name == "md") return OutputFormat::md;
    if (name == "text") return OutputFormat::text;
    throw std::invalid_argument("unknown format '" + std::string(name) + "'");
}

ordered_json report_to_json(const IdentityReport& report) {
    ordered_json params = ordered_json::object();
    for (const auto& p : report.params) {
        params[p.name] = rational_to_json(p.value);
    }
    ordered_json out;
    out["id"] = std::string(to_string(report.id));
    out["params"] = std::move(params);
    out["mode"] = std::string(to_string(report.mode));
    out["residual"] = residual_to_json(report.residual);
    out["pass"] = report.pass;
    out["elapsed_ms"] = report.elapsed_ms;
    return out;
}

IdentityReport report_from_json(const ordered_json& doc) {
    try {
        IdentityReport report{parse_checker_id(doc.at("id").get<std::string>()),
                              {},
                              parse_mode(doc.at("mode").get<std::string>()),
                              Rational(0),
                              doc.at("pass").get<bool>(),
                              doc.at("elapsed_ms").get<double>()};
        for (const auto& [name, value] : doc.at("params").items()) {
            report.params.push_back(Param{name, rational_from_json(value)});
        }
        const auto& residual = doc.at("residual");
        if (report.mode == CheckMode::valuation) {
            if (residual.is_string() && residual.get<std::string>() == "+inf") {
                report.residual = Valuation::infinite();
            } else {
                report.residual = Valuation(residual.get<long>());
            }
        } else if (residual.is_array()) {
            std::vector<Rational> coeffs;
            for (const auto& c : residual) {
                coeffs.push_back(rational_from_json(c));
            }
            report.residual = RatPoly(std::move(coeffs));
        } else {
            report.residual = rational_from_json(residual);
        }
        return report;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("report JSON: ") + e.what());
    }
}

std::string summary_line(std::span<const IdentityReport> reports) {
    std::size_t failures = 0;
    for (const auto& r : reports) {
        failures += r.pass ? 0 : 1;
    }
    const std::string total = std::to_string(reports.size());
    if (failures == 0) {
        return "PASS " + total + "/" + total;
    }
    return "FAIL " + std::to_string(failures) + "/" + total;
}

std::string render_reports(std::span<const IdentityReport> reports, OutputFormat format) {
    std::ostringstream os;
    switch (format) {
        case OutputFormat::json: {
            ordered_json arr = ordered_json::array();
            for (const auto& r : reports) {
                arr.push_back(report_to_json(r));
            }
            os << arr.dump(2) << '\n';
            break;
        }
        case OutputFormat::csv:
            os << "id,params,mode,residual,pass,elapsed_ms\n";
            for (const auto& r : reports) {
                os << to_string(r.id) << ',' << csv_quote(params_text(r, ";")) << ','
                   << to_string(r.mode) << ',' << csv_quote(residual_to_string(r.residual)) << ','
                   << (r.pass ? "true" : "false") << ',' << r.elapsed_ms << '\n';
            }
            break;
        case OutputFormat::md:
            os << "| id | params | mode | residual | pass |\n";
            os << "|---|---|---|---|---|\n";
            for (const auto& r : reports) {
                os << "| " << to_string(r.id) << " | " << params_text(r, ", ") << " | "
                   << to_string(r.mode) << " | " << residual_to_string(r.residual) << " | "
                   << (r.pass ? "PASS" : "FAIL") << " |\n";
            }
            break;
        case OutputFormat::text:
            for (const auto& r : reports) {
                os << (r.pass ? "PASS " : "FAIL ") << to_string(r.id) << ' ' << params_text(r, " ")
                   << " residual=" << residual_to_string(r.residual) << '\n';
            }
            break;
    }
    return os.str();
}

}  // namespace eulerpoly

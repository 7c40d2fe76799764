#include "bkforms/report.hpp"

#include <cmath>
#include <cstdio>

#include "bkforms/errors.hpp"

namespace bkforms {

namespace {

void dump_value(const Json& v, std::string& out, int depth) {
    const std::string pad(static_cast<size_t>(depth) * 2, ' ');
    const std::string pad_in(static_cast<size_t>(depth + 1) * 2, ' ');
    switch (v.type()) {
        case Json::value_t::object: {
            if (v.empty()) {
                out += "{}";
                return;
            }
            out += "{\n";
            size_t i = 0;
            for (auto it = v.begin(); it != v.end(); ++it, ++i) {
                out += pad_in + Json(it.key()).dump() + ": ";
                dump_value(it.value(), out, depth + 1);
                if (i + 1 < v.size()) out += ",";
                out += "\n";
            }
            out += pad + "}";
            return;
        }
        case Json::value_t::array: {
            if (v.empty()) {
                out += "[]";
                return;
            }
            out += "[\n";
            for (size_t i = 0; i < v.size(); ++i) {
                out += pad_in;
                dump_value(v[i], out, depth + 1);
                if (i + 1 < v.size()) out += ",";
                out += "\n";
            }
            out += pad + "]";
            return;
        }
        case Json::value_t::number_float:
            out += format_double(v.get<double>());
            return;
        default:
            out += v.dump();
            return;
    }
}

std::string circle_function_text(const CircleFunction& f) {
    std::string out;
    auto append = [&out](const std::string& term, bool negative) {
        if (out.empty()) {
            out = negative ? "-" + term : term;
        } else {
            out += (negative ? " - " : " + ") + term;
        }
    };
    if (f.constant() != 0.0) append(format_double(std::abs(f.constant())), f.constant() < 0);
    for (const auto& h : f.harmonics()) {
        const std::string arg = std::to_string(2 * h.frequency) + "*pi*theta";
        if (h.cos_amp != 0.0) {
            append(format_double(std::abs(h.cos_amp)) + "*cos(" + arg + ")", h.cos_amp < 0);
        }
        if (h.sin_amp != 0.0) {
            append(format_double(std::abs(h.sin_amp)) + "*sin(" + arg + ")", h.sin_amp < 0);
        }
    }
    return out.empty() ? "0" : out;
}

std::string json_circle_function_text(const Json& doc) {
    return circle_function_text(circle_function_from_json(doc, "report"));
}

std::string json_series_text(const Json& doc) {
    std::string out;
    const auto& coeffs = doc["coeffs"];
    for (size_t j = 0; j < coeffs.size(); ++j) {
        const std::string term = json_circle_function_text(coeffs[j]);
        if (term == "0") continue;
        if (!out.empty()) out += " + ";
        out += "(" + term + ")";
        if (j == 1) out += " y";
        if (j > 1) out += " y^" + std::to_string(j);
    }
    return out.empty() ? "0" : out;
}

std::string vector_text(const Json& arr) {
    std::string out = "[";
    for (size_t i = 0; i < arr.size(); ++i) {
        if (i) out += ", ";
        out += arr[i].is_number_float() ? format_double(arr[i].get<double>()) : arr[i].dump();
    }
    return out + "]";
}

}  // namespace

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string canonical_dump(const Json& doc) {
    std::string out;
    dump_value(doc, out, 0);
    out += "\n";
    return out;
}

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& err) {
        throw ValidationError(std::string("invalid JSON: ") + err.what());
    }
}

std::string render_text(const Json& report) {
    const std::string command = report.value("command", "");
    std::string out;
    if (command == "decompose") {
        out += "k = " + report["k"].dump() + "\n";
        for (const auto& circle : report["normal_form"]["circles"]) {
            out += "circle '" + circle["id"].get<std::string>() + "':\n";
            const auto& alphas = circle["alpha"];
            for (size_t i = 0; i < alphas.size(); ++i) {
                out += "  alpha_{-" + std::to_string(i + 1) +
                       "} = " + json_circle_function_text(alphas[i]) + "  (dtheta density)\n";
            }
            out += "  beta = " + json_series_text(circle["beta"]) + "  (dy^dtheta density)\n";
        }
        for (const auto& row : report["residue_integrals"]) {
            out += "residue integrals over '" + row["id"].get<std::string>() +
                   "': " + vector_text(row["integrals"]) + "\n";
        }
        return out;
    }
    if (command == "volume") {
        out += "k = " + report["k"].dump() + "\n";
        out += report["volume_polynomial"]["rendered"].get<std::string>() + "\n";
        out += "Liouville volume: " + format_double(report["liouville_volume"].get<double>()) + "\n";
        out += "smooth part integral: " +
               format_double(report["smooth_part_integral"].get<double>()) + "\n";
        if (report.contains("asymptotic_gaps")) {
            out += "asymptotic gaps |P(1/eps) - vol_cutoff(eps)|:\n";
            for (const auto& pair : report["asymptotic_gaps"]) {
                out += "  eps = " + format_double(pair[0].get<double>()) + ": " +
                       format_double(pair[1].get<double>()) + "\n";
            }
        }
        return out;
    }
    if (command == "classify") {
        out += "mode: " + report["mode"].get<std::string>() + "\n";
        out += "verdict: " + report["verdict"].get<std::string>() + "\n";
        out += "exit code: " + report["exit_code"].dump() + "\n";
        if (report.contains("invariants")) {
            const auto& inv = report["invariants"];
            out += "Liouville volumes: " +
                   format_double(inv["first"]["liouville_volume"].get<double>()) + " vs " +
                   format_double(inv["second"]["liouville_volume"].get<double>()) + "\n";
            const auto& r0 = inv["first"]["residues"];
            const auto& r1 = inv["second"]["residues"];
            for (size_t i = 0; i < r0.size(); ++i) {
                out += "residues '" + r0[i]["id"].get<std::string>() +
                       "': " + vector_text(r0[i]["integrals"]) + " vs " +
                       vector_text(r1[i]["integrals"]) + "\n";
            }
        }
        return out;
    }
    if (command == "normalize") {
        out += "k = " + report["k"].dump() + "\n";
        out += report["polynomial"]["rendered"].get<std::string>() + "\n";
        const auto& b = report["expansion"]["principal_coefficients"];
        for (size_t i = 0; i < b.size(); ++i) {
            out += "b_{" + b[i]["degree"].dump() +
                   "} = " + format_double(b[i]["value"].get<double>()) + "\n";
        }
        out += "residue = " + format_double(report["expansion"]["residue"].get<double>()) + "\n";
        return out;
    }
    return canonical_dump(report);
}

}  // namespace bkforms

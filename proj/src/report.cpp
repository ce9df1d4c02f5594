#include "polar/report.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace polar {
namespace {

using ojson = nlohmann::ordered_json;

ojson params_json(const ClaimParams& params) {
    ojson o = ojson::object();
    for (const auto& [key, value] : params) {
        std::visit([&](const auto& v) { o[key] = v; }, value);
    }
    return o;
}

std::string params_text(const ClaimParams& params) {
    std::string s;
    for (const auto& [key, value] : params) {
        if (!s.empty()) s += ';';
        s += key + '=';
        std::visit(
            [&](const auto& v) {
                if constexpr (std::is_same_v<std::decay_t<decltype(v)>, long>) {
                    s += std::to_string(v);
                } else {
                    s += v;
                }
            },
            value);
    }
    return s;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + '"';
}

ClaimStatus parse_status(const std::string& s) {
    if (s == "PASS") return ClaimStatus::Pass;
    if (s == "FAIL") return ClaimStatus::Fail;
    if (s == "NOT_APPLICABLE") return ClaimStatus::NotApplicable;
    throw std::invalid_argument("unknown claim status '" + s + "'");
}

}  // namespace

ReportFormat parse_format(std::string_view name) {
    if (name == "json") return ReportFormat::Json;
    if (name == "csv") return ReportFormat::Csv;
    if (name == "text") return ReportFormat::Text;
    throw std::invalid_argument("unknown format '" + std::string(name) + "'");
}

std::string render_report(const std::vector<ClaimResult>& results, ReportFormat format) {
    std::ostringstream os;
    switch (format) {
        case ReportFormat::Json: {
            ojson arr = ojson::array();
            for (const auto& r : results) {
                ojson o;
                o["claim"] = r.claim;
                o["params"] = params_json(r.params);
                o["status"] = std::string(to_string(r.status));
                o["lhs"] = r.lhs;
                o["rhs"] = r.rhs;
                o["note"] = r.note;
                arr.push_back(std::move(o));
            }
            os << arr.dump(2) << '\n';
            break;
        }
        case ReportFormat::Csv:
            os << "claim,params,status,lhs,rhs,note\n";
            for (const auto& r : results) {
                os << csv_field(r.claim) << ',' << csv_field(params_text(r.params)) << ',' << to_string(r.status)
                   << ',' << csv_field(r.lhs) << ',' << csv_field(r.rhs) << ',' << csv_field(r.note) << '\n';
            }
            break;
        case ReportFormat::Text:
            for (const auto& r : results) {
                os << to_string(r.status) << ' ' << r.claim;
                if (!r.params.empty()) os << " [" << params_text(r.params) << ']';
                if (!r.lhs.empty() || !r.rhs.empty()) os << ": " << r.lhs << " vs " << r.rhs;
                if (!r.note.empty()) os << " (" << r.note << ')';
                os << '\n';
            }
            break;
    }
    return os.str();
}

std::vector<ClaimResult> parse_report_json(std::string_view text) {
    const ojson arr = ojson::parse(text);
    std::vector<ClaimResult> out;
    for (const auto& o : arr) {
        ClaimResult r;
        r.claim = o.at("claim").get<std::string>();
        for (const auto& [key, value] : o.at("params").items()) {
            if (value.is_number_integer()) {
                r.params.emplace_back(key, value.get<long>());
            } else {
                r.params.emplace_back(key, value.get<std::string>());
            }
        }
        r.status = parse_status(o.at("status").get<std::string>());
        r.lhs = o.at("lhs").get<std::string>();
        r.rhs = o.at("rhs").get<std::string>();
        r.note = o.at("note").get<std::string>();
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace polar

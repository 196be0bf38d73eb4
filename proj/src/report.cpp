#include "weylverify/report.hpp"

#include <json.hpp>

#include <iomanip>
#include <map>
#include <sstream>
#include <stdexcept>

namespace wv {

using nlohmann::json;

ReportRecord to_record(const VerificationReport& r) {
    ReportRecord out;
    out.instance = r.instance;
    out.d_w = r.dW_camus;
    out.candidates = r.candidates;
    out.survivors = r.survivors;
    out.surplus = r.surplus;
    for (const auto& e : r.exclusions) out.exclusions.push_back({e.weight, e.lambda, {e.es1, e.es2, e.es3, e.es4}});
    out.final_set = r.final_set;
    out.status = r.status;
    out.notes = r.notes;
    return out;
}

TorusChoice parse_torus_label(const std::string& s) {
    if (s == "full") return TorusChoice::full();
    if (s == "derived") return TorusChoice::derived();
    if (s.size() >= 3 && (s[0] == 'a' || s[0] == 'b') && s[1] == '=') {
        std::size_t used = 0;
        long p = std::stol(s.substr(2), &used);
        if (used == s.size() - 2) return TorusChoice::with_param(p);
    }
    throw std::invalid_argument("bad torus label: " + s);
}

std::optional<Format> parse_format(const std::string& s) {
    if (s == "json") return Format::Json;
    if (s == "csv") return Format::Csv;
    if (s == "table") return Format::Table;
    return std::nullopt;
}

namespace {

json int_json(const Int& x) {
    if (x.fits_slong_p()) return x.get_si();
    return x.get_str();
}

Int int_from(const json& j) {
    if (j.is_string()) return Int(j.get<std::string>());
    return Int(j.get<long>());
}

json weight_json(const Weight& w) {
    json a = json::array();
    for (const auto& x : w) a.push_back(int_json(x));
    return a;
}

Weight weight_from(const json& j) {
    Weight w;
    for (const auto& x : j) w.push_back(int_from(x));
    return w;
}

json weights_json(const std::vector<Weight>& ws) {
    json a = json::array();
    for (const auto& w : ws) a.push_back(weight_json(w));
    return a;
}

std::vector<Weight> weights_from(const json& j) {
    std::vector<Weight> out;
    for (const auto& w : j) out.push_back(weight_from(w));
    return out;
}

json record_json(const ReportRecord& r) {
    json j;
    j["instance"] = {{"family", r.instance.family},
                     {"m", r.instance.m},
                     {"n", r.instance.n},
                     {"torus", torus_label(r.instance)}};
    j["d_w"] = r.d_w;
    j["candidates"] = weights_json(r.candidates);
    j["survivors"] = weights_json(r.survivors);
    j["surplus"] = weights_json(r.surplus);
    json ex = json::array();
    for (const auto& e : r.exclusions)
        ex.push_back({{"weight", weight_json(e.weight)},
                      {"lambda_index", e.lambda_index},
                      {"es", {e.es[0], e.es[1], e.es[2], e.es[3]}}});
    j["exclusions"] = ex;
    j["final"] = weights_json(r.final_set);
    j["status"] = status_name(r.status);
    j["notes"] = r.notes;
    return j;
}

ReportRecord record_from(const json& j) {
    ReportRecord r;
    const auto& in = j.at("instance");
    r.instance.family = in.at("family").get<int>();
    r.instance.m = in.at("m").get<int>();
    r.instance.n = in.at("n").get<int>();
    r.instance.torus = parse_torus_label(in.at("torus").get<std::string>());
    r.d_w = j.at("d_w").get<int>();
    r.candidates = weights_from(j.at("candidates"));
    r.survivors = weights_from(j.at("survivors"));
    if (j.contains("surplus")) r.surplus = weights_from(j.at("surplus"));
    for (const auto& e : j.at("exclusions")) {
        ExclusionRecord x;
        x.weight = weight_from(e.at("weight"));
        x.lambda_index = e.at("lambda_index").get<int>();
        const auto& es = e.at("es");
        if (es.size() != 4) throw std::invalid_argument("es must have four entries");
        for (int i = 0; i < 4; ++i) x.es[i] = es[i].get<bool>();
        r.exclusions.push_back(std::move(x));
    }
    r.final_set = weights_from(j.at("final"));
    auto st = parse_status(j.at("status").get<std::string>());
    if (!st) throw std::invalid_argument("unknown status");
    r.status = *st;
    if (j.contains("notes")) r.notes = j.at("notes").get<std::vector<std::string>>();
    return r;
}

std::string weight_cell(const Weight& w) {
    std::string s = "[";
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? " " : "") + w[i].get_str();
    return s + "]";
}

std::string weights_cell(const std::vector<Weight>& ws) {
    std::string s;
    for (std::size_t i = 0; i < ws.size(); ++i) s += (i ? ";" : "") + weight_cell(ws[i]);
    return s;
}

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace

std::string emit_json(const ReportRecord& r) { return record_json(r).dump(2) + "\n"; }

std::string emit_json(const std::vector<ReportRecord>& rs) {
    json a = json::array();
    for (const auto& r : rs) a.push_back(record_json(r));
    return a.dump(2) + "\n";
}

std::vector<ReportRecord> parse_json(const std::string& text) {
    json j = json::parse(text);
    std::vector<ReportRecord> out;
    if (j.is_array()) {
        for (const auto& x : j) out.push_back(record_from(x));
    } else {
        out.push_back(record_from(j));
    }
    return out;
}

std::string csv_header() {
    return "family,m,n,torus,d_w,n_candidates,n_survivors,n_surplus,n_exclusions,exclusions_all_true,final,status";
}

std::string emit_csv(const std::vector<ReportRecord>& rs) {
    std::string out = csv_header() + "\n";
    for (const auto& r : rs) {
        bool all = true;
        for (const auto& e : r.exclusions)
            for (bool b : e.es) all = all && b;
        std::ostringstream row;
        row << r.instance.family << ',' << r.instance.m << ',' << r.instance.n << ',' << torus_label(r.instance)
            << ',' << r.d_w << ',' << r.candidates.size() << ',' << r.survivors.size() << ',' << r.surplus.size()
            << ',' << r.exclusions.size() << ',' << (all ? "true" : "false") << ','
            << csv_quote(weights_cell(r.final_set)) << ',' << status_name(r.status);
        out += row.str() + "\n";
    }
    return out;
}

std::string emit_table(const std::vector<ReportRecord>& rs) {
    std::ostringstream os;
    os << std::left << std::setw(4) << "fam" << std::setw(4) << "m" << std::setw(4) << "n" << std::setw(10) << "torus"
       << std::setw(5) << "d_w" << std::setw(7) << "cands" << std::setw(6) << "surv" << std::setw(6) << "extra"
       << std::setw(6) << "excl" << "status\n";
    std::map<std::string, int> counts;
    for (const auto& r : rs) {
        os << std::setw(4) << r.instance.family << std::setw(4) << r.instance.m << std::setw(4) << r.instance.n
           << std::setw(10) << torus_label(r.instance) << std::setw(5) << r.d_w << std::setw(7) << r.candidates.size()
           << std::setw(6) << r.survivors.size() << std::setw(6) << r.surplus.size() << std::setw(6)
           << r.exclusions.size() << status_name(r.status) << "\n";
        ++counts[status_name(r.status)];
    }
    os << rs.size() << " instances:";
    for (const auto& [k, v] : counts) os << ' ' << k << '=' << v;
    os << "\n";
    return os.str();
}

std::string emit(const std::vector<ReportRecord>& rs, Format f) {
    switch (f) {
        case Format::Json: return emit_json(rs);
        case Format::Csv: return emit_csv(rs);
        case Format::Table: return emit_table(rs);
    }
    return {};
}

}  // namespace wv

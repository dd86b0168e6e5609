#include "specdl/report.hpp"

#include <cstdio>
#include <cstdlib>

namespace specdl {

double round12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return std::strtod(buf, nullptr);
}

json json_number(double v) { return round12(v); }

json json_spectrum(const std::vector<double>& descending) {
    json arr = json::array();
    for (double v : descending) arr.push_back(round12(v));
    return arr;
}

json to_json(const EnergyReport& r) {
    json j;
    j["n"] = r.n;
    j["m"] = r.m;
    j["wiener"] = r.wiener;
    j["dle"] = json_number(r.dle);
    j["le"] = json_number(r.le);
    j["de"] = json_number(r.de);
    j["sigma"] = r.sigma;
    j["t"] = r.t_param;
    j["avg_transmission"] = json_number(r.avg_transmission);
    j["avg_degree"] = json_number(r.avg_degree);
    j["exact"] = r.exact;
    if (r.exact) j["dle_exact"] = r.dle_exact_str;
    return j;
}

json to_json(const BoundCheck& c) {
    json j;
    j["theorem"] = theorem_name(c.theorem);
    j["case"] = c.case_label;
    if (c.index >= 0) j["index"] = c.index;
    j["applicable"] = c.applicable;
    if (!c.applicable) return j;
    j["lhs"] = json_number(c.lhs);
    j["rhs"] = json_number(c.rhs);
    j["holds"] = c.holds;
    j["equality"] = c.equality;
    j["equality_predicted"] = c.equality_predicted;
    if (c.has_printed_form) {
        j["printed_rhs"] = json_number(c.printed_rhs);
        j["printed_form_differs"] = c.printed_form_differs;
    }
    return j;
}

json to_json(const AnalyticSpectrum& s) {
    json arr = json::array();
    for (const auto& e : s.entries) {
        json entry;
        entry["value"] = e.value.str();
        entry["multiplicity"] = e.multiplicity;
        arr.push_back(entry);
    }
    return arr;
}

json to_json(const ExtremalResult& r) {
    json j;
    j["class"] = r.cls.name();
    j["n"] = r.n;
    j["graphs_scanned"] = r.graphs_scanned;
    if (r.evidence_only) {
        // Maximizer runs: empirical evidence only, no extremal family is
        // asserted.
        j["max_dle"] = json_number(r.min_dle);
        j["maximizers_graph6"] = r.minimizer_graph6;
        j["non_normative"] = true;
    } else {
        j["min_dle"] = json_number(r.min_dle);
        j["minimizers_graph6"] = r.minimizer_graph6;
        if (r.witness_t >= 0) j["witness_t"] = r.witness_t;
        j["matches_predicted_family"] = r.matches_predicted_family;
    }
    return j;
}

json to_json(const SigmaCensus& c) {
    json j;
    j["n"] = c.n;
    j["graphs_scanned"] = c.graphs_scanned;
    json hist;
    for (size_t s = 0; s < c.histogram.size(); ++s)
        hist[std::to_string(s)] = c.histogram[s];
    j["sigma_histogram"] = hist;
    j["sigma_1_graph6"] = c.sigma_one;
    j["sigma_n_minus_2_graph6"] = c.sigma_n_minus_2;
    j["sigma_n_minus_1_graph6"] = c.sigma_n_minus_1;
    j["transmission_regular_count"] = c.transmission_regular_count;
    j["transmission_regular_sigma_matches"] = c.transmission_regular_sigma_matches;
    return j;
}

json report_shell(const std::string& command, const json& input) {
    json j;
    j["schema_version"] = report_schema_version;
    j["command"] = command;
    j["input"] = input;
    return j;
}

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += "\"";
    return out;
}

std::string fmt12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

} // namespace

std::string bound_checks_csv(const std::vector<std::pair<std::string, BoundCheck>>& rows) {
    std::string out =
        "graph,theorem,case,index,applicable,lhs,rhs,holds,equality,"
        "equality_predicted,printed_rhs,printed_form_differs\n";
    for (const auto& [graph, c] : rows) {
        out += csv_escape(graph);
        out += ',';
        out += theorem_name(c.theorem);
        out += ',';
        out += csv_escape(c.case_label);
        out += ',';
        out += c.index >= 0 ? std::to_string(c.index) : "";
        out += ',';
        out += c.applicable ? "true" : "false";
        if (!c.applicable) {
            out += ",,,,,,,\n";
            continue;
        }
        out += ',';
        out += fmt12(round12(c.lhs));
        out += ',';
        out += fmt12(round12(c.rhs));
        out += ',';
        out += c.holds ? "true" : "false";
        out += ',';
        out += c.equality ? "true" : "false";
        out += ',';
        out += c.equality_predicted ? "true" : "false";
        out += ',';
        out += c.has_printed_form ? fmt12(round12(c.printed_rhs)) : "";
        out += ',';
        out += c.has_printed_form ? (c.printed_form_differs ? "true" : "false") : "";
        out += '\n';
    }
    return out;
}

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t hash = 14695981039346656037ull;
    for (unsigned char b : bytes) {
        hash ^= b;
        hash *= 1099511628211ull;
    }
    char buf[20];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(hash));
    return buf;
}

} // namespace specdl

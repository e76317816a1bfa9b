#include "dhseq/report_io.hpp"

#include <sstream>

namespace dhseq {

namespace {

using nlohmann::ordered_json;

ordered_json params_to_json(const Params& p) {
    return ordered_json{{"p", p.p}, {"q", p.q}, {"N", p.N}, {"n", p.n},
                        {"e", p.e}, {"g", p.g}, {"x", p.x}};
}

ordered_json verdict_to_json(const LemmaVerdict& v) {
    ordered_json ces = ordered_json::array();
    for (const Counterexample& ce : v.counterexamples) {
        ordered_json inputs = ordered_json::object();
        for (const auto& [name, value] : ce.inputs) inputs[name] = value;
        ces.push_back(ordered_json{
            {"inputs", inputs}, {"observed", ce.observed}, {"expected", ce.expected}});
    }
    return ordered_json{{"claim", to_string(v.claim)},
                        {"reading", to_string(v.reading)},
                        {"status", to_string(v.status)},
                        {"counterexamples", ces},
                        {"note", v.note}};
}

BinarySequence regenerate_sequence(std::uint64_t p, std::uint64_t q) {
    return generate(build_partition(derive_params(p, q)));
}

ordered_json sequence_to_json(const BinarySequence& seq) {
    return ordered_json{{"bits", bit_string(seq)}, {"hex", hex_string(seq)}};
}

const char* kCsvHeader =
    "p,q,n,N,weight,lc,bound,theorem_holds,pqr,di,pqz,zn,bspq,pq_printed,pq_proved,"
    "spq_printed,spq_proved,st_printed,st_proved,s1,theorem,error";

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string verdict_status_or_empty(const AnalysisReport& rep, ClaimId id, Reading r) {
    const LemmaVerdict* v = rep.verdict(id, r);
    return v ? to_string(v->status) : std::string{};
}

std::string csv_row(const SweepItem& item, bool emit_sequence) {
    std::ostringstream row;
    row << item.p << ',' << item.q << ',';
    if (item.report) {
        const AnalysisReport& rep = *item.report;
        row << rep.params.n << ',' << rep.params.N << ',' << rep.weight << ',' << rep.lc_gcd
            << ',' << rep.theorem_bound << ',' << (rep.theorem_holds ? "true" : "false") << ','
            << verdict_status_or_empty(rep, ClaimId::PQR, Reading::Single) << ','
            << verdict_status_or_empty(rep, ClaimId::DI, Reading::Single) << ','
            << verdict_status_or_empty(rep, ClaimId::PQZ, Reading::Single) << ','
            << verdict_status_or_empty(rep, ClaimId::ZN, Reading::Single) << ','
            << verdict_status_or_empty(rep, ClaimId::BSPQ, Reading::Single) << ','
            << verdict_status_or_empty(rep, ClaimId::PQ, Reading::AsPrinted) << ','
            << verdict_status_or_empty(rep, ClaimId::PQ, Reading::AsProved) << ','
            << verdict_status_or_empty(rep, ClaimId::SPQ, Reading::AsPrinted) << ','
            << verdict_status_or_empty(rep, ClaimId::SPQ, Reading::AsProved) << ','
            << verdict_status_or_empty(rep, ClaimId::ST, Reading::AsPrinted) << ','
            << verdict_status_or_empty(rep, ClaimId::ST, Reading::AsProved) << ','
            << verdict_status_or_empty(rep, ClaimId::S1, Reading::Single) << ','
            << verdict_status_or_empty(rep, ClaimId::THEOREM, Reading::Single) << ',';
    } else {
        row << ",,,,,,,,,,,,,,,,,,," << csv_quote(item.error);
    }
    if (item.report && emit_sequence)
        row << ',' << hex_string(regenerate_sequence(item.p, item.q));
    else if (emit_sequence)
        row << ',';
    return row.str();
}

std::string text_report(const AnalysisReport& rep, bool emit_sequence) {
    std::ostringstream out;
    const Params& p = rep.params;
    out << "pair (" << p.p << ", " << p.q << ")\n";
    out << "  params: N = " << p.N << ", 2n = " << p.order() << ", e = " << p.e
        << ", g = " << p.g << ", x = " << p.x << "\n";
    out << "  weight: " << rep.weight << " of " << p.N << "\n";
    out << "  linear complexity: bm = " << rep.lc_bm << ", gcd = " << rep.lc_gcd
        << ", spectrum = " << rep.lc_spectrum << "\n";
    out << "  theorem bound (pq-1)/2 = " << rep.theorem_bound << ": "
        << (rep.theorem_holds ? "holds" : "VIOLATED") << "\n";
    out << "  zeros of S(alpha^k): k=0: " << rep.zero_counts.k0 << ", P: "
        << rep.zero_counts.in_p << ", Q: " << rep.zero_counts.in_q << ", units: "
        << rep.zero_counts.units << "\n";
    out << "  minimal polynomial: degree "
        << (rep.minimal_poly.degree() ? std::to_string(*rep.minimal_poly.degree()) : "-")
        << ", " << rep.minimal_poly.term_count() << " terms, hex "
        << rep.minimal_poly.hex_string() << "\n";
    out << "  verdicts:\n";
    for (const LemmaVerdict& v : rep.verdicts) {
        out << "    " << to_string(v.claim) << " [" << to_string(v.reading)
            << "]: " << to_string(v.status);
        if (!v.note.empty()) out << " -- " << v.note;
        out << "\n";
        for (const Counterexample& ce : v.counterexamples) {
            out << "      counterexample:";
            for (const auto& [name, value] : ce.inputs) out << ' ' << name << '=' << value;
            out << " observed=" << ce.observed << " expected=" << ce.expected << "\n";
        }
    }
    if (emit_sequence) {
        const BinarySequence seq = regenerate_sequence(p.p, p.q);
        out << "  sequence bits: " << bit_string(seq) << "\n";
        out << "  sequence hex:  " << hex_string(seq) << "\n";
    }
    return out.str();
}

}  // namespace

std::optional<Format> format_from_string(const std::string& name) {
    if (name == "json") return Format::Json;
    if (name == "csv") return Format::Csv;
    if (name == "text") return Format::Text;
    return std::nullopt;
}

nlohmann::ordered_json to_json(const AnalysisReport& rep) {
    ordered_json verdicts = ordered_json::array();
    for (const LemmaVerdict& v : rep.verdicts) verdicts.push_back(verdict_to_json(v));
    return ordered_json{{"params", params_to_json(rep.params)},
                        {"lc_bm", rep.lc_bm},
                        {"lc_gcd", rep.lc_gcd},
                        {"lc_spectrum", rep.lc_spectrum},
                        {"weight", rep.weight},
                        {"zero_counts", ordered_json{{"k0", rep.zero_counts.k0},
                                                     {"P", rep.zero_counts.in_p},
                                                     {"Q", rep.zero_counts.in_q},
                                                     {"units", rep.zero_counts.units}}},
                        {"minimal_poly", rep.minimal_poly.exponents()},
                        {"verdicts", verdicts},
                        {"theorem_bound", rep.theorem_bound},
                        {"theorem_holds", rep.theorem_holds}};
}

nlohmann::ordered_json to_json(const SweepItem& item) {
    ordered_json out{{"p", item.p}, {"q", item.q}};
    if (item.report)
        out["report"] = to_json(*item.report);
    else
        out["error"] = item.error;
    return out;
}

std::string render_report(const AnalysisReport& rep, Format format, bool emit_sequence) {
    switch (format) {
        case Format::Json: {
            ordered_json doc = to_json(rep);
            if (emit_sequence)
                doc["sequence"] =
                    sequence_to_json(regenerate_sequence(rep.params.p, rep.params.q));
            return doc.dump(2) + "\n";
        }
        case Format::Csv: {
            std::string head(kCsvHeader);
            if (emit_sequence) head += ",sequence_hex";
            SweepItem item;
            item.p = rep.params.p;
            item.q = rep.params.q;
            item.report = rep;
            return head + "\n" + csv_row(item, emit_sequence) + "\n";
        }
        case Format::Text:
            return text_report(rep, emit_sequence);
    }
    throw Error("render_report: unknown format");
}

std::string render_sweep(const std::vector<SweepItem>& items, Format format,
                         bool emit_sequence) {
    switch (format) {
        case Format::Json: {
            ordered_json arr = ordered_json::array();
            for (const SweepItem& item : items) {
                ordered_json entry = to_json(item);
                if (item.report && emit_sequence)
                    entry["sequence"] = sequence_to_json(regenerate_sequence(item.p, item.q));
                arr.push_back(std::move(entry));
            }
            return arr.dump(2) + "\n";
        }
        case Format::Csv: {
            std::string out(kCsvHeader);
            if (emit_sequence) out += ",sequence_hex";
            out += "\n";
            for (const SweepItem& item : items) out += csv_row(item, emit_sequence) + "\n";
            return out;
        }
        case Format::Text: {
            std::string out;
            std::uint64_t failures = 0;
            for (const SweepItem& item : items) {
                if (item.report) {
                    out += text_report(*item.report, emit_sequence);
                } else {
                    out += "pair (" + std::to_string(item.p) + ", " + std::to_string(item.q) +
                           ")\n  error: " + item.error + "\n";
                    ++failures;
                }
                out += "\n";
            }
            out += std::to_string(items.size()) + " pair(s), " + std::to_string(failures) +
                   " error(s)\n";
            return out;
        }
    }
    throw Error("render_sweep: unknown format");
}

}  // namespace dhseq

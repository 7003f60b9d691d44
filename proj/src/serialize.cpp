#include "qmds/serialize.hpp"

#include <sstream>

namespace qmds {

using nlohmann::json;

Format parse_format(const std::string& name) {
    if (name == "json") return Format::json;
    if (name == "csv") return Format::csv;
    if (name == "text") return Format::text;
    fail(errc::invalid_argument, "unknown format '" + name + "' (expected json, csv, or text)");
}

Family parse_family_tag(const std::string& name) {
    if (name == "even") return Family::even;
    if (name == "odd") return Family::odd;
    fail(errc::invalid_argument, "unknown family '" + name + "' (expected even or odd)");
}

json field_to_json(const Field& f) {
    return json{{"p", f.p()}, {"m", f.m()}, {"modulus", f.modulus()}};
}

json element_to_json(const Field& f, felt a) { return json(f.coeffs(a)); }

json poly_to_json(const Field& f, const Poly& p) {
    json coeffs = json::array();
    for (felt c : p.coeffs()) coeffs.push_back(element_to_json(f, c));
    return coeffs;
}

json defining_set_to_json(const DefiningSet& z) {
    return json{{"q", z.shape.q},       {"r", z.shape.r},   {"lambda", z.shape.lambda},
                {"n", z.shape.n},       {"family", family_name(z.family)},
                {"delta", z.delta},     {"elements", z.elements}};
}

json code_to_json(const ConstacyclicCode& code) {
    return json{{"shape", json{{"q", code.shape.q},
                               {"r", code.shape.r},
                               {"lambda", code.shape.lambda},
                               {"n", code.shape.n}}},
                {"eta", element_to_json(*code.field, code.eta)},
                {"defining_set", defining_set_to_json(code.zset)},
                {"generator", poly_to_json(*code.field, code.gen)},
                {"k", code.k}};
}

namespace {

json proof_to_json(const DistanceProof& p) {
    switch (p.kind) {
        case ProofKind::none: return json{{"kind", "none"}};
        case ProofKind::minor_exhaustive: return json{{"kind", "minor-exhaustive"}, {"count", p.count}};
        case ProofKind::minor_sampled:
            return json{{"kind", "minor-sampled"}, {"count", p.count}, {"seed", p.seed}};
    }
    return json{{"kind", "none"}};
}

}  // namespace

json params_to_json(const QuantumCodeParams& p) {
    return json{{"q", p.q},
                {"family", family_tag(p.family)},
                {"lambda", p.lambda},
                {"r", p.r},
                {"n", p.n},
                {"k", p.k},
                {"d", p.d},
                {"delta", p.delta},
                {"defining_set", p.defining_set},
                {"new_range", p.new_range()},
                {"checks", json{{"dual_containing", p.verified.dual_containing},
                                {"bch_bound", p.verified.bch},
                                {"distance_proof", proof_to_json(p.verified.distance_proof)},
                                {"mds", p.mds()}}}};
}

std::string params_to_row(const QuantumCodeParams& p) {
    std::ostringstream os;
    os << p.lambda << ' ' << p.r << ' ' << p.n << " [[" << p.n << ',' << p.k << ',' << p.d << "]]_" << p.q;
    return os.str();
}

json mds_report_to_json(const QuantumCodeParams& p, const MdsReport& r) {
    json out{{"instance", params_to_json(p)},
             {"method", r.exhaustive ? "exhaustive" : "sampled"},
             {"subsets_checked", r.subsets_checked},
             {"result", mds_result_name(r.result)}};
    if (!r.witness.empty()) out["witness"] = r.witness;
    if (!r.exhaustive) out["seed"] = r.seed;
    return out;
}

json crosscheck_to_json(const CrosscheckReport& r) {
    return json{{"q", r.q},         {"r", r.r},
                {"trials", r.trials}, {"seed", r.seed},
                {"true_cases", r.true_cases}, {"false_cases", r.false_cases}};
}

std::string render_enumeration(const std::vector<QuantumCodeParams>& records, Format format) {
    std::ostringstream os;
    switch (format) {
        case Format::json: {
            json arr = json::array();
            for (const auto& p : records) arr.push_back(params_to_json(p));
            os << arr.dump(2) << '\n';
            break;
        }
        case Format::csv:
            os << "lambda,r,n,code\n";
            for (const auto& p : records)
                os << p.lambda << ',' << p.r << ',' << p.n << ",[[" << p.n << ',' << p.k << ',' << p.d
                   << "]]_" << p.q << '\n';
            break;
        case Format::text:
            for (const auto& p : records) {
                os << params_to_row(p);
                if (!p.new_range()) os << " (previously known)";
                os << '\n';
            }
            break;
    }
    return os.str();
}

std::string render_build_record(const ConstacyclicCode& code, const QuantumCodeParams& params, Format format) {
    switch (format) {
        case Format::json: {
            json rec = params_to_json(params);
            rec["field"] = field_to_json(*code.field);
            rec["code"] = code_to_json(code);
            return rec.dump(2) + '\n';
        }
        case Format::csv:
            return render_enumeration({params}, Format::csv);
        case Format::text:
            return params_to_row(params) + '\n';
    }
    return {};
}

std::string render_verification(const std::vector<FamilyVerification>& instances,
                                const std::vector<CrosscheckReport>& crosschecks, bool verified,
                                Format format) {
    std::ostringstream os;
    if (format == Format::json) {
        json arr = json::array();
        for (const auto& inst : instances) arr.push_back(mds_report_to_json(inst.params, inst.proof));
        json checks = json::array();
        for (const auto& c : crosschecks) checks.push_back(crosscheck_to_json(c));
        os << json{{"instances", arr}, {"crosschecks", checks}, {"verified", verified}}.dump(2) << '\n';
        return os.str();
    }
    // csv and text both fall back to the line report
    for (const auto& inst : instances) {
        os << params_to_row(inst.params) << ' ' << mds_result_name(inst.proof.result) << " subsets="
           << inst.proof.subsets_checked;
        if (!inst.proof.exhaustive) os << " seed=" << inst.proof.seed;
        if (!inst.proof.witness.empty()) os << " witness=" << elements_to_string(inst.proof.witness);
        os << '\n';
    }
    for (const auto& c : crosschecks)
        os << "crosscheck q=" << c.q << " r=" << c.r << " trials=" << c.trials << " seed=" << c.seed
           << " true=" << c.true_cases << " false=" << c.false_cases << " violations=0\n";
    os << (verified ? "VERIFIED" : "FALSIFIED") << '\n';
    return os.str();
}

}  // namespace qmds

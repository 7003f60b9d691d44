#ifndef QMDS_SERIALIZE_HPP
#define QMDS_SERIALIZE_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "qmds/oracle.hpp"

namespace qmds {

enum class Format { json, csv, text };

// Throws errc::invalid_argument on unknown names.
Format parse_format(const std::string& name);
Family parse_family_tag(const std::string& name);  // "even" | "odd" only

nlohmann::json field_to_json(const Field& f);                      // {p, m, modulus}
nlohmann::json element_to_json(const Field& f, felt a);            // little-endian coefficients
nlohmann::json poly_to_json(const Field& f, const Poly& p);        // array of coefficient vectors
nlohmann::json defining_set_to_json(const DefiningSet& z);         // {q, r, lambda, n, family, delta, elements}
nlohmann::json code_to_json(const ConstacyclicCode& code);         // {shape, eta, defining_set, generator, k}
nlohmann::json params_to_json(const QuantumCodeParams& p);         // {q, family, ..., checks:{...}}
nlohmann::json mds_report_to_json(const QuantumCodeParams& p, const MdsReport& r);
nlohmann::json crosscheck_to_json(const CrosscheckReport& r);

// One table row in the table layout used by the text and csv formats: "lambda r n [[n,k,d]]_q".
std::string params_to_row(const QuantumCodeParams& p);

std::string render_enumeration(const std::vector<QuantumCodeParams>& records, Format format);
std::string render_build_record(const ConstacyclicCode& code, const QuantumCodeParams& params, Format format);
std::string render_verification(const std::vector<FamilyVerification>& instances,
                                const std::vector<CrosscheckReport>& crosschecks, bool verified,
                                Format format);

}  // namespace qmds

#endif

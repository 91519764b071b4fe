#pragma once

// JSON formats. Complex scalars are always [re, im] pairs; field order is
// fixed, so serialization uses ordered json throughout:
//   element   {"factor": {"kind":"type1","m":2,"n":2}, "coords": [[re,im],...]}
//   sum       {"factors": [...], "parts": [[[re,im],...], ...]}
//   operator  {"domain": {"factors":[...]}, "codomain": {...},
//              "matrix": [row-major reals]}
//   preserver {"source": ..., "target": ..., "sigma": [...], "gammas": [...],
//              "isos": [{"flag": "linear", "kind": "type1", "u": ...,
//                        "v": ..., "transpose": false} | {"flag": ...,
//                        "source": ..., "target": ..., "matrix": [...]}]}

#include <nlohmann/json.hpp>

#include "triplekit/exactcheck.hpp"
#include "triplekit/preservers.hpp"

namespace triplekit {

using njson = nlohmann::ordered_json;

njson to_json(const FactorDescriptor& f);
FactorDescriptor factor_from_json(const njson& j);

njson to_json(const AtomicTriple& t);
AtomicTriple triple_from_json(const njson& j);

njson to_json(const Element& e);
Element element_from_json(const njson& j);

njson to_json(const AtomicElement& e);
AtomicElement atomic_element_from_json(const njson& j);
// accepts either a single-factor element or a sum
AtomicElement any_element_from_json(const njson& j);

njson to_json(const RealLinearOperator& op);
RealLinearOperator operator_from_json(const njson& j);

njson to_json(const PreserverSpec& spec);
PreserverSpec preserver_spec_from_json(const njson& j);

njson to_json(const VerifyReport& rep);
njson to_json(const LemmaCertificate& cert);
njson to_json(const WildDemoReport& rep);

njson load_json_file(const std::string& path);
void save_json_file(const std::string& path, const njson& j);

}  // namespace triplekit

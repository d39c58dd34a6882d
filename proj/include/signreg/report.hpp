#pragma once

// JSON views of results. Keys keep insertion order so identical inputs give
// byte-identical output.

#include "signreg/classify.hpp"
#include "signreg/signvar.hpp"
#include "signreg/vdcert.hpp"

#include <json.hpp>

namespace signreg {

using Json = nlohmann::ordered_json;

Json to_json(const RatVector& v);
Json to_json(const RatMatrix& a);
Json to_json(const IndexSet& s);
Json to_json(const Classification& c);
Json to_json(const VdReport& r, bool include_records = true);
Json to_json(const Witness& w);
Json to_json(const VariationResult& v);

}  // namespace signreg

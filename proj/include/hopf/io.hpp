#pragma once

#include "hopf/prebialgebra.hpp"

#include <json.hpp>

namespace hopf::io {

using Json = nlohmann::ordered_json;

// Scalars travel as power-basis coefficient strings "c0,c1,...", each an
// exact rational "p" or "p/q", relative to the file's field_order. Decoding
// accepts fewer components (zero-padded); encoding always emits phi(n).
std::string encodeScalar(const Cyc& c, long fieldOrder);
Cyc decodeScalar(const std::string& s, long fieldOrder);

Json encodePresentation(const Presentation& p);
std::shared_ptr<Presentation> decodePresentation(const Json& j);

// Sparse (i, j, value) triples over a named base presentation.
Json encodeBilForm(const BilForm& f, const std::string& baseName, long fieldOrder);
BilForm decodeBilForm(const Json& j, int expectedDim);

// H, pi and sigma of a splitting datum; the base algebra travels separately.
Json encodeSplitting(const SplittingDatum& d);
SplittingDatum decodeSplitting(const Json& j, PresPtr a);

Json encodePreBialgebra(const PreBialgebra& p);
PreBialgebra decodePreBialgebra(const Json& j);

void writeJsonFile(const std::string& path, const Json& j);
Json readJsonFile(const std::string& path);

// Malformed or version-mismatched inputs surface as this error; the CLI
// maps it to exit code 2.
struct CodecError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace hopf::io

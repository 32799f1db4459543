#pragma once

/// @file json_io.hpp
/// @brief JSON codecs for the library types.  Scalars encode as four decimal
/// integer strings [re_num, re_den, im_num, im_den] with positive
/// denominators, so round trips stay exact at any size.  Composite objects
/// use ordered_json with pinned field order for byte-stable output.

#include <json.hpp>

#include <string>

#include "gramspec/bounds.hpp"

namespace gramspec {

using Json = nlohmann::ordered_json;

Json scalar_json(const GaussianRational& z);
GaussianRational scalar_from_json(const Json& j);

/// {"degree": d, "coeffs": [scalar...]}
Json form_json(const BinaryForm& f);
BinaryForm form_from_json(const Json& j);

/// {"lead": scalar, "points": [scalar | "inf", ...]}
Json roots_json(const RootList& roots);
RootList roots_from_json(const Json& j);

/// {"rows": r, "cols": c, "entries": [scalar...]} row-major
Json matrix_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

/// {"degree": d, "basis": matrix}
Json subspace_json(const Subspace& u);
Subspace subspace_from_json(const Json& j);

/// {"flavor": "...", "degree": d, "matrix": matrix}
Json tensor_json(const GramTensor& t);
GramTensor tensor_from_json(const Json& j);

Json face_report_json(const FaceReport& r);

/// {"k", "flavor", "f": {"roots", "coeffs"}, "generators", "report", "trace"}
Json certificate_json(const ConstructionCertificate& c);

Json diagram_json(int d, Flavor flavor);
Json root_certificate_json(const RootCertificate& c);
Json density_json(const DensityReport& r);

Flavor flavor_from_json(const Json& j);

/// Canonical rendering used everywhere output must be byte-stable:
/// two-space indentation plus a trailing newline.
std::string dump_pretty(const Json& j);

} // namespace gramspec

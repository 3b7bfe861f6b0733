#pragma once

#include <filesystem>

#include "json.hpp"

#include "jshapes/conformal.hpp"
#include "jshapes/curve.hpp"
#include "jshapes/dynamics.hpp"
#include "jshapes/rational.hpp"
#include "jshapes/render.hpp"
#include "jshapes/shape_polynomial.hpp"

namespace jshapes {

using Json = nlohmann::json;

// Complex numbers are written as [re, im]. Doubles are printed with enough
// digits to round-trip exactly.
Json to_json(Complex z);
Complex complex_from_json(const Json& j);

Json to_json(const JordanCurve& curve);
JordanCurve curve_from_json(const Json& j);

Json to_json(const AnnulusSpec& annulus);
AnnulusSpec annulus_from_json(const Json& j);

Json to_json(const ExteriorMap& map);
ExteriorMap map_from_json(const Json& j);

// The annulus is optional; when present, loading checks that the roots lie
// strictly inside it.
Json to_json(const ShapePolynomial& poly, const AnnulusSpec* annulus = nullptr);
ShapePolynomial polynomial_from_json(const Json& j);
std::optional<AnnulusSpec> polynomial_annulus_from_json(const Json& j);

Json to_json(const EscapeCertificate& cert);
Json to_json(const MultiCertificate& cert);
Json to_json(const AnnulusCertificate& cert);

Json to_json(const MultiShapeSystem& sys);
MultiShapeSystem system_from_json(const Json& j);

Json to_json(const AnnulusSystem& sys);
AnnulusSystem annulus_system_from_json(const Json& j);

Json to_json(const EscapeField& field);
EscapeField field_from_json(const Json& j);

Json to_json(const VerifyReport& report);

// File helpers. Throw IO_ERROR on filesystem failures and PARSE_ERROR on
// malformed content.
Json read_json(const std::filesystem::path& path);
void write_json(const Json& j, const std::filesystem::path& path);

}  // namespace jshapes

#pragma once

#include <json.hpp>

#include "ddt/artinian.hpp"
#include "ddt/bicomplex.hpp"
#include "ddt/dgalgebra.hpp"
#include "ddt/dgla.hpp"
#include "ddt/simplicial.hpp"

namespace ddt {

using Json = nlohmann::ordered_json;

/// Canonical scalar form: plain integer when the denominator is 1 and the
/// value is small, the string "p/q" otherwise.
Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Field& f, const Json& j);

Json field_to_json(const Field& f);
Field field_from_json(const Json& j);

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Field& f, const Json& j);

Json complex_to_json(const GradedComplex& c);
GradedComplex complex_from_json(const Json& j);

Json graded_space_to_json(const GradedVectorSpace& v);

Json bicomplex_to_json(const Bicomplex& b);
Bicomplex bicomplex_from_json(const Json& j);

Json simplicial_to_json(const SimplicialVS& v);
SimplicialVS simplicial_from_json(const Json& j);

/// Artinian DG algebra, as named structure constants.
Json artinian_to_json(const ArtinianDGAlgebra& a);
ArtinianDGAlgebra artinian_from_json(const Json& j);

DGLA dgla_from_json(const Json& j);

/// Non-negatively graded cochain DG algebra.
DGAlgebra dgalgebra_from_json(const Json& j);

/// Surjection between Artinian algebras; if "map" is omitted the basis
/// names are matched (absent names map to zero).
struct SurjectionSpec {
    ArtinianDGAlgebra source;
    ArtinianDGAlgebra target;
    Matrix map;
};
SurjectionSpec surjection_from_json(const Json& j);

/// FNV-1a hash of a byte string, as "fnv1a:<hex>".
std::string content_hash(const std::string& bytes);

}  // namespace ddt

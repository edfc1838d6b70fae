#pragma once

#include <stdexcept>
#include <string>

namespace hyper {

/// Construction of a value type from non-finite (NaN/Inf) input.
struct NonFiniteValue : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Axis/direction argument is not a unit 3-vector.
struct BadAxis : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A scalar product that must be real carries i/j/ij residues above tolerance.
struct NonRealResult : std::domain_error {
    using std::domain_error::domain_error;
};

/// g x g-dagger left the paravector subspace; the transform is invalid.
struct NotParavector : std::domain_error {
    using std::domain_error::domain_error;
};

/// Generator basis matrix is not Hermitian.
struct NotHermitian : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Plane wave does not fit the periodic box with integer wave numbers.
struct IncommensurateWave : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Two lattice fields with different grids were combined.
struct GridMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Component counts do not match the generator basis.
struct SizeMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

} // namespace hyper

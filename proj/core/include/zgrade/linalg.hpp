#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <vector>

// Boost.Rational's mixed integer == recurses under C++20 rewritten comparisons.
// Exact-match overloads win overload resolution; they live in boost so that
// argument-dependent lookup finds them from any namespace.
namespace boost {
inline bool operator==(const rational<std::int64_t>& a, int b) { return a == rational<std::int64_t>(b); }
inline bool operator==(const rational<std::int64_t>& a, std::int64_t b) { return a == rational<std::int64_t>(b); }
}  // namespace boost

namespace zgrade {

using Rational = boost::rational<std::int64_t>;
using IntMatrix = std::vector<std::vector<std::int64_t>>;
using RatMatrix = std::vector<std::vector<Rational>>;

/// Exact determinant by fraction-free (Bareiss) elimination.
std::int64_t determinant(const IntMatrix& m);

/// Elementary divisors d_1 | d_2 | ... of a square integer matrix (zeros for
/// a singular matrix). Their product equals |det|.
std::vector<std::int64_t> smith_diagonal(IntMatrix m);

/// Inverse over Q; throws InputError when singular.
RatMatrix inverse(const RatMatrix& m);

/// Primitive integer generator of the right kernel of a corank-1 matrix,
/// sign-normalized so the first nonzero entry is positive.
std::vector<std::int64_t> primitive_kernel_vector(const IntMatrix& m);

/// Scales a rational vector to a primitive integer vector with the same direction.
std::vector<std::int64_t> primitive_integer(const std::vector<Rational>& v);

RatMatrix to_rational(const IntMatrix& m);

/// Submatrix on the given rows/columns (same index list for both).
IntMatrix principal_submatrix(const IntMatrix& m, const std::vector<int>& indices);

}  // namespace zgrade

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "penner/errors.hpp"
#include "penner/matrix.hpp"
#include "penner/numeric.hpp"
#include "penner/polynomial.hpp"

namespace penner {

enum class RadiusMethod { automatic, charpoly, collatz_wielandt };

std::string to_string(RadiusMethod m);

/// Certified two-sided bound lo <= value <= hi.
struct RadiusEnclosure {
    Rational lo;
    Rational hi;
    RadiusMethod method = RadiusMethod::charpoly;

    Rational width() const { return hi - lo; }
    Rational midpoint() const { return (lo + hi) / 2; }
    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
    bool intersects(const RadiusEnclosure& o) const { return lo <= o.hi && o.lo <= hi; }
    bool operator==(const RadiusEnclosure&) const = default;
};

class IterationLimitError : public Error {
public:
    IterationLimitError(const std::string& message, RadiusEnclosure best)
        : Error(ErrorCode::IterationLimit, message), best_(std::move(best)) {}
    const RadiusEnclosure& best() const { return best_; }

private:
    RadiusEnclosure best_;
};

/// Largest real root of p, isolated with a Sturm sequence. Integer roots are
/// returned exactly (lo == hi). nullopt when p has no real root.
std::optional<RadiusEnclosure> largest_real_root(const IntPolynomial& p, const Rational& tol);

/// Maximum modulus over all complex roots of p, by bisection on r with an
/// exact Schur-Cohn test "every root satisfies |z| < r".
RadiusEnclosure max_root_modulus(const IntPolynomial& p, const Rational& tol);

/// True iff every root of p lies in the open disk |z| < r (r > 0).
bool roots_inside_disk(const IntPolynomial& p, const Rational& r);

/// Tarjan's algorithm; components come out in reverse topological order.
std::vector<std::vector<std::size_t>> strongly_connected_components(
    const std::vector<std::vector<std::size_t>>& graph);

/// Components of the graph with an edge i -> j iff a(i,j) != 0.
template <class T>
std::vector<std::vector<std::size_t>> strongly_connected_components(const Matrix<T>& a) {
    std::vector<std::vector<std::size_t>> graph(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < a.size(); ++j) {
            if (!ZeroTraits<T>::is_zero(a(i, j))) graph[i].push_back(j);
        }
    }
    return strongly_connected_components(graph);
}

/// Perron root of a nonnegative matrix: Collatz-Wielandt bounds per strongly
/// connected block, certified in exact rational arithmetic.
RadiusEnclosure collatz_wielandt(const Matrix<Rational>& a, const Rational& tol);

/// Spectral radius of an integer matrix. automatic: nonnegative matrices with
/// at most 12 rows use the Perron root of the characteristic polynomial,
/// larger ones Collatz-Wielandt; matrices with negative entries use the
/// root-modulus route.
RadiusEnclosure spectral_radius(const Matrix<BigInt>& a, const Rational& tol,
                                RadiusMethod method = RadiusMethod::automatic);

inline constexpr std::size_t kCharpolyCutoff = 12;

}  // namespace penner

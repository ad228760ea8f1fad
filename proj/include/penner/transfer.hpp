#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>

#include "penner/matrix.hpp"
#include "penner/numeric.hpp"
#include "penner/plumbing.hpp"
#include "penner/polynomial.hpp"
#include "penner/shift.hpp"
#include "penner/spectral.hpp"
#include "penner/word.hpp"

namespace penner {

/// Formal sum of exp(t * shift) terms with multiplicities. At t = 0 it is the
/// plain count; evaluation at (t, n) happens only at reporting boundaries.
class Weight {
public:
    Weight() = default;
    static Weight unit(ShiftExpr shift, long multiplicity = 1);

    bool is_zero() const { return terms_.empty(); }
    const std::map<ShiftExpr, BigInt>& terms() const { return terms_; }
    BigInt total() const;
    double evaluate(double t, long n) const;

    Weight& operator+=(const Weight& o);
    Weight operator*(const Weight& o) const;
    bool operator==(const Weight& o) const { return terms_ == o.terms_; }

    /// "E(0)+2E(1-n)"; "0" when empty.
    std::string to_string() const;

private:
    std::map<ShiftExpr, BigInt> terms_;
};

template <>
struct ZeroTraits<Weight> {
    static bool is_zero(const Weight& x) { return x.is_zero(); }
    static Weight zero() { return Weight{}; }
    static Weight one() { return Weight::unit(ShiftExpr{}); }
};

enum class MatrixKind { signed_homology, unsigned_count, weighted };

std::string to_string(MatrixKind k);

/// Which transfer matrix to build. signed needs n; weighted needs n and is
/// evaluated at t (when given) for spectral computations.
struct TransferKind {
    MatrixKind kind = MatrixKind::unsigned_count;
    std::optional<long> n;
    std::optional<double> t;

    static TransferKind unsigned_count() { return {MatrixKind::unsigned_count, std::nullopt, std::nullopt}; }
    static TransferKind signed_at(long n) { return {MatrixKind::signed_homology, n, std::nullopt}; }
    static TransferKind weighted_at(double t, long n) { return {MatrixKind::weighted, n, t}; }
};

struct TransferMatrix {
    TransferKind kind;
    std::variant<Matrix<BigInt>, Matrix<Weight>> entries;

    std::size_t size() const;
    const Matrix<BigInt>& integers() const;  // throws WeightedUnsupported for weighted kinds
    const Matrix<Weight>& weights() const;
};

/// Matrix of a single twist: identity outside column u.
TransferMatrix elementary_matrix(VertexIndex u, int sign, const TransferKind& kind, const PlumbingSpec& spec);

/// Product over repeat_word(word, m) with later-applied letters on the left.
TransferMatrix word_matrix(const TwistWord& word, long m, const TransferKind& kind, const PlumbingSpec& spec);

TransferMatrix matrix_power(const TransferMatrix& matrix, long m);

/// Characteristic polynomial of a signed or unsigned transfer matrix.
IntPolynomial char_poly(const TransferMatrix& matrix);

/// Weighted entries evaluated at (t, n) and converted exactly to rationals.
Matrix<Rational> evaluate_weighted(const Matrix<Weight>& m, double t, long n);

/// Certified radius for signed/unsigned kinds. Weighted kinds are evaluated at
/// their (t, n) first; the enclosure is then certified for the rounded entries.
RadiusEnclosure spectral_radius(const TransferMatrix& matrix, const Rational& tol,
                                RadiusMethod method = RadiusMethod::automatic);

}  // namespace penner

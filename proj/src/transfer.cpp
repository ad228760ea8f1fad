#include "penner/transfer.hpp"

#include <cmath>

#include "penner/errors.hpp"

namespace penner {

Weight Weight::unit(ShiftExpr shift, long multiplicity) {
    Weight w;
    if (multiplicity != 0) w.terms_.emplace(shift, BigInt(multiplicity));
    return w;
}

BigInt Weight::total() const {
    BigInt sum = 0;
    for (const auto& [shift, count] : terms_) sum += count;
    return sum;
}

double Weight::evaluate(double t, long n) const {
    double sum = 0.0;
    for (const auto& [shift, count] : terms_) {
        sum += count.get_d() * std::exp(t * static_cast<double>(shift.eval(n)));
    }
    return sum;
}

Weight& Weight::operator+=(const Weight& o) {
    for (const auto& [shift, count] : o.terms_) {
        auto& slot = terms_[shift];
        slot += count;
        if (slot == 0) terms_.erase(shift);
    }
    return *this;
}

Weight Weight::operator*(const Weight& o) const {
    Weight out;
    for (const auto& [s1, c1] : terms_) {
        for (const auto& [s2, c2] : o.terms_) out.terms_[s1 + s2] += c1 * c2;
    }
    return out;
}

std::string Weight::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [shift, count] : terms_) {
        if (!out.empty()) out += "+";
        if (count != 1) out += count.get_str();
        out += "E(" + penner::to_string(shift) + ")";
    }
    return out;
}

std::string to_string(MatrixKind k) {
    switch (k) {
        case MatrixKind::signed_homology: return "signed";
        case MatrixKind::unsigned_count: return "unsigned";
        case MatrixKind::weighted: return "weighted";
    }
    return "unsigned";
}

std::size_t TransferMatrix::size() const {
    return std::visit([](const auto& m) { return m.size(); }, entries);
}

const Matrix<BigInt>& TransferMatrix::integers() const {
    if (auto* m = std::get_if<Matrix<BigInt>>(&entries)) return *m;
    throw Error(ErrorCode::WeightedUnsupported, "operation needs an integer (signed or unsigned) matrix");
}

const Matrix<Weight>& TransferMatrix::weights() const {
    if (auto* m = std::get_if<Matrix<Weight>>(&entries)) return *m;
    throw Error(ErrorCode::WeightedUnsupported, "matrix is not weighted");
}

namespace {

const ShiftExpr kOneMinusN{1, -1};

// Shift of the component spawned at `to` by twisting L_from.
ShiftExpr column_shift(const PlumbingSpec& spec, VertexIndex from, VertexIndex to, int sign) {
    if (from == to) return sign > 0 ? kOneMinusN : -kOneMinusN;
    ShiftExpr s = spec.s(from, to);
    return sign > 0 ? kOneMinusN + s : s - ShiftExpr::constant(1);
}

long required_dimension(const TransferKind& kind) {
    if (!kind.n) {
        throw Error(ErrorCode::DimensionRequired, to_string(kind.kind) + " matrices need a concrete dimension n");
    }
    return *kind.n;
}

}  // namespace

TransferMatrix elementary_matrix(VertexIndex u, int sign, const TransferKind& kind, const PlumbingSpec& spec) {
    if (u >= spec.size()) throw Error(ErrorCode::UnknownVertex, "unknown vertex index " + std::to_string(u));
    const std::size_t size = spec.size();
    std::vector<VertexIndex> column{u};
    for (const auto& nb : spec.neighbors(u)) column.push_back(nb.vertex);

    switch (kind.kind) {
        case MatrixKind::unsigned_count: {
            auto m = Matrix<BigInt>::identity(size);
            for (auto row : column) m(row, u) = 1;
            return {kind, std::move(m)};
        }
        case MatrixKind::signed_homology: {
            long n = required_dimension(kind);
            spec.with_dimension(n);  // grading must be valid at this n
            auto m = Matrix<BigInt>::identity(size);
            for (auto row : column) {
                // [X[k]] = (-1)^k [X]
                auto shift = column_shift(spec, u, row, sign).eval(n);
                m(row, u) = (shift % 2 == 0) ? 1 : -1;
            }
            return {kind, std::move(m)};
        }
        case MatrixKind::weighted: {
            long n = required_dimension(kind);
            spec.with_dimension(n);
            auto m = Matrix<Weight>::identity(size);
            for (auto row : column) m(row, u) = Weight::unit(column_shift(spec, u, row, sign));
            return {kind, std::move(m)};
        }
    }
    throw Error(ErrorCode::DimensionRequired, "unknown matrix kind");
}

TransferMatrix word_matrix(const TwistWord& word, long m, const TransferKind& kind, const PlumbingSpec& spec) {
    auto expanded = repeat_word(word, m);
    if (kind.kind != MatrixKind::unsigned_count) spec.with_dimension(required_dimension(kind));
    TransferMatrix out{kind, Matrix<BigInt>::identity(spec.size())};
    if (kind.kind == MatrixKind::weighted) out.entries = Matrix<Weight>::identity(spec.size());
    for (const auto& letter : expanded) {
        TransferMatrix e = elementary_matrix(letter.vertex, letter.sign, kind, spec);
        std::visit(
            [&](auto& acc) {
                using M = std::decay_t<decltype(acc)>;
                acc = std::get<M>(e.entries) * acc;
            },
            out.entries);
    }
    return out;
}

TransferMatrix matrix_power(const TransferMatrix& matrix, long m) {
    if (m < 0) throw Error(ErrorCode::NegativePower, "power " + std::to_string(m) + " is negative");
    TransferMatrix out = matrix;
    std::visit([&](auto& acc) { acc = power(acc, static_cast<unsigned long>(m)); }, out.entries);
    return out;
}

IntPolynomial char_poly(const TransferMatrix& matrix) { return char_poly(matrix.integers()); }

Matrix<Rational> evaluate_weighted(const Matrix<Weight>& m, double t, long n) {
    return m.map([&](const Weight& w) { return Rational(w.evaluate(t, n)); });
}

RadiusEnclosure spectral_radius(const TransferMatrix& matrix, const Rational& tol, RadiusMethod method) {
    if (matrix.kind.kind == MatrixKind::weighted) {
        long n = required_dimension(matrix.kind);
        double t = matrix.kind.t.value_or(0.0);
        return collatz_wielandt(evaluate_weighted(matrix.weights(), t, n), tol);
    }
    return spectral_radius(matrix.integers(), tol, method);
}

}  // namespace penner

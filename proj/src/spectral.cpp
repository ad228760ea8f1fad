#include "penner/spectral.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace penner {

std::string to_string(RadiusMethod m) {
    switch (m) {
        case RadiusMethod::automatic: return "automatic";
        case RadiusMethod::charpoly: return "charpoly";
        case RadiusMethod::collatz_wielandt: return "collatz_wielandt";
    }
    return "automatic";
}

namespace {

// ---------------------------------------------------------------------------
// Rational polynomial helpers for Sturm sequences.

using RatPoly = std::vector<Rational>;  // ascending, no trailing zeros

void trim(RatPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

RatPoly to_rational(const IntPolynomial& p) {
    RatPoly out;
    for (const auto& c : p.coefficients()) out.emplace_back(c);
    trim(out);
    return out;
}

RatPoly derivative(const RatPoly& p) {
    RatPoly out;
    for (std::size_t k = 1; k < p.size(); ++k) out.push_back(p[k] * static_cast<long>(k));
    trim(out);
    return out;
}

// Returns {quotient, remainder} of a / b, b nonzero.
std::pair<RatPoly, RatPoly> divide(RatPoly a, const RatPoly& b) {
    RatPoly q;
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, 0);
    while (!a.empty() && a.size() >= b.size()) {
        std::size_t shift = a.size() - b.size();
        Rational factor = a.back() / b.back();
        q[shift] = factor;
        for (std::size_t k = 0; k < b.size(); ++k) a[k + shift] -= factor * b[k];
        a.pop_back();  // leading term cancels exactly
        trim(a);
    }
    trim(q);
    return {q, a};
}

RatPoly gcd(RatPoly a, RatPoly b) {
    while (!b.empty()) {
        auto r = divide(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

Rational evaluate(const RatPoly& p, const Rational& x) {
    Rational acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

class SturmChain {
public:
    explicit SturmChain(const RatPoly& squarefree) {
        chain_.push_back(squarefree);
        chain_.push_back(derivative(squarefree));
        while (!chain_.back().empty()) {
            auto r = divide(chain_[chain_.size() - 2], chain_.back()).second;
            for (auto& c : r) c = -c;
            if (r.empty()) break;
            chain_.push_back(std::move(r));
        }
        if (chain_.back().empty()) chain_.pop_back();
    }

    // Number of distinct roots strictly greater than x.
    int roots_above(const Rational& x) const { return changes_at(x) - changes_at_infinity(); }

private:
    static int count_changes(const std::vector<int>& signs) {
        int changes = 0;
        int last = 0;
        for (int s : signs) {
            if (s == 0) continue;
            if (last != 0 && s != last) ++changes;
            last = s;
        }
        return changes;
    }

    int changes_at(const Rational& x) const {
        std::vector<int> signs;
        for (const auto& p : chain_) signs.push_back(sgn(evaluate(p, x)));
        return count_changes(signs);
    }

    int changes_at_infinity() const {
        std::vector<int> signs;
        for (const auto& p : chain_) signs.push_back(sgn(p.back()));
        return count_changes(signs);
    }

    std::vector<RatPoly> chain_;
};

Rational cauchy_bound(const RatPoly& p) {
    Rational m = 0;
    for (std::size_t k = 0; k + 1 < p.size(); ++k) m = std::max(m, Rational(abs(p[k] / p.back())));
    return m + 1;
}

Rational floor_of(const Rational& q) {
    BigInt out;
    mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return Rational(out);
}

}  // namespace

std::optional<RadiusEnclosure> largest_real_root(const IntPolynomial& p, const Rational& tol) {
    if (p.degree() < 1) return std::nullopt;
    RatPoly full = to_rational(p);
    RatPoly squarefree = divide(full, gcd(full, derivative(full))).first;
    if (squarefree.size() < 2) return std::nullopt;
    SturmChain sturm(squarefree);
    Rational bound = cauchy_bound(squarefree);
    if (sturm.roots_above(-bound) == 0) return std::nullopt;

    // invariant: the largest root r satisfies lo < r <= hi
    Rational lo = -bound;
    Rational hi = bound;
    auto exact = [](const Rational& x) { return RadiusEnclosure{x, x, RadiusMethod::charpoly}; };
    auto step = [&](const Rational& mid) -> bool {
        if (sturm.roots_above(mid) >= 1) {
            lo = mid;
        } else {
            hi = mid;
            if (evaluate(squarefree, mid) == 0) return true;
        }
        return false;
    };
    // integer grid first so integer roots are found exactly
    lo = floor_of(lo);
    while (hi - lo > 1) {
        if (step(floor_of((lo + hi) / 2))) return exact(hi);
    }
    if (evaluate(squarefree, hi) == 0) return exact(hi);
    while (hi - lo > tol) {
        if (step((lo + hi) / 2)) return exact(hi);
    }
    return RadiusEnclosure{lo, hi, RadiusMethod::charpoly};
}

bool roots_inside_disk(const IntPolynomial& p, const Rational& r) {
    if (r <= 0) return false;
    const long d = p.degree();
    if (d < 0) return false;
    // q(z) = Q^d p(r z) with r = P/Q, integer coefficients
    const BigInt& num = r.get_num();
    const BigInt& den = r.get_den();
    std::vector<BigInt> b(static_cast<std::size_t>(d) + 1);
    for (long k = 0; k <= d; ++k) {
        BigInt pk, qk;
        mpz_pow_ui(pk.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(k));
        mpz_pow_ui(qk.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(d - k));
        b[static_cast<std::size_t>(k)] = p.coefficient(k) * pk * qk;
    }
    // Schur-Cohn reduction: q stable iff |b_0| < |b_d| and (b_d q - b_0 q*)/z stable.
    while (b.size() > 1) {
        const std::size_t deg = b.size() - 1;
        if (abs(b[0]) >= abs(b[deg])) return false;
        std::vector<BigInt> c(deg);
        for (std::size_t k = 0; k < deg; ++k) c[k] = b[deg] * b[k + 1] - b[0] * b[deg - 1 - k];
        BigInt content = 0;
        for (const auto& x : c) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), x.get_mpz_t());
        if (content > 1) {
            for (auto& x : c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), content.get_mpz_t());
        }
        b = std::move(c);
    }
    return b[0] != 0;
}

RadiusEnclosure max_root_modulus(const IntPolynomial& p, const Rational& tol) {
    if (p.degree() < 1) return {0, 0, RadiusMethod::charpoly};
    // exact lower bound from the real roots of p(x) and p(-x)
    auto modulus_floor = [](const RadiusEnclosure& e) -> Rational {
        if (e.lo >= 0) return e.lo;
        if (e.hi <= 0) return -e.hi;
        return 0;
    };
    Rational lo = 0;
    if (auto top = largest_real_root(p, tol)) lo = std::max(lo, modulus_floor(*top));
    std::vector<BigInt> mirrored = p.coefficients();
    for (std::size_t k = 1; k < mirrored.size(); k += 2) mirrored[k] = -mirrored[k];
    if (auto bottom = largest_real_root(IntPolynomial(mirrored), tol)) lo = std::max(lo, modulus_floor(*bottom));
    Rational hi = cauchy_bound(to_rational(p));
    while (hi - lo > tol) {
        Rational mid = (lo + hi) / 2;
        if (roots_inside_disk(p, mid)) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return RadiusEnclosure{lo, hi, RadiusMethod::charpoly};
}

std::vector<std::vector<std::size_t>> strongly_connected_components(
    const std::vector<std::vector<std::size_t>>& graph) {
    const std::size_t n = graph.size();
    constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
    std::vector<std::size_t> number(n, unvisited), low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<std::size_t> stack;
    std::vector<std::vector<std::size_t>> components;
    std::size_t counter = 0;

    std::function<void(std::size_t)> visit = [&](std::size_t v) {
        number[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack[v] = true;
        for (auto w : graph[v]) {
            if (number[w] == unvisited) {
                visit(w);
                low[v] = std::min(low[v], low[w]);
            } else if (on_stack[w]) {
                low[v] = std::min(low[v], number[w]);
            }
        }
        if (low[v] == number[v]) {
            std::vector<std::size_t> component;
            std::size_t w;
            do {
                w = stack.back();
                stack.pop_back();
                on_stack[w] = false;
                component.push_back(w);
            } while (w != v);
            std::sort(component.begin(), component.end());
            components.push_back(std::move(component));
        }
    };
    for (std::size_t v = 0; v < n; ++v) {
        if (number[v] == unvisited) visit(v);
    }
    return components;
}

namespace {

struct Bounds {
    Rational lo;
    Rational hi;
};

// min/max of (S x)_i / x_i over a strictly positive x; valid for any such x.
Bounds certify(const Matrix<Rational>& s, const std::vector<double>& approx) {
    const std::size_t k = s.size();
    double largest = *std::max_element(approx.begin(), approx.end());
    std::vector<Rational> x(k);
    for (std::size_t i = 0; i < k; ++i) {
        double xi = std::isfinite(approx[i]) ? approx[i] / largest : 1.0;
        x[i] = Rational(std::max(xi, 1e-300));
    }
    Bounds out;
    for (std::size_t i = 0; i < k; ++i) {
        Rational y = 0;
        for (std::size_t j = 0; j < k; ++j) {
            if (s(i, j) != 0) y += s(i, j) * x[j];
        }
        Rational ratio = y / x[i];
        if (i == 0 || ratio < out.lo) out.lo = ratio;
        if (i == 0 || ratio > out.hi) out.hi = ratio;
    }
    return out;
}

std::vector<double> normalized(std::vector<double> v) {
    double m = 0;
    for (double x : v) m = std::max(m, std::abs(x));
    if (m > 0) {
        for (double& x : v) x /= m;
    }
    return v;
}

std::vector<double> apply(const std::vector<double>& d, std::size_t k, const std::vector<double>& x) {
    std::vector<double> y(k, 0.0);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) y[i] += d[i * k + j] * x[j];
    }
    return y;
}

// Irreducible nonnegative block; S = B + I is primitive with Perron root rho(B) + 1.
Bounds irreducible_bounds(const Matrix<Rational>& block, const Rational& tol) {
    const std::size_t k = block.size();
    Matrix<Rational> shifted = block;
    for (std::size_t i = 0; i < k; ++i) shifted(i, i) += 1;

    std::vector<double> base(k * k);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) base[i * k + j] = shifted(i, j).get_d();
    }
    std::vector<double> squared = normalized(base);
    std::vector<double> ones(k, 1.0);
    Bounds best = certify(shifted, ones);
    auto consider = [&](const std::vector<double>& x) {
        Bounds b = certify(shifted, x);
        if (b.hi - b.lo < best.hi - best.lo) best = b;
        return best.hi - best.lo <= tol;
    };

    // A^(2^j) * 1 by repeated squaring, then plain power steps to polish.
    constexpr int kSquarings = 40;
    constexpr int kPowerSteps = 2000;
    for (int j = 0; j < kSquarings; ++j) {
        std::vector<double> next(k * k, 0.0);
        for (std::size_t r = 0; r < k; ++r) {
            for (std::size_t m = 0; m < k; ++m) {
                double a = squared[r * k + m];
                if (a == 0) continue;
                for (std::size_t c = 0; c < k; ++c) next[r * k + c] += a * squared[m * k + c];
            }
        }
        squared = normalized(std::move(next));
        auto x = normalized(apply(squared, k, ones));
        if (consider(x)) return {best.lo - 1, best.hi - 1};
        if (j >= 6) {
            for (int step = 0; step < 4; ++step) x = normalized(apply(base, k, x));
            if (consider(x)) return {best.lo - 1, best.hi - 1};
        }
    }
    auto x = normalized(apply(squared, k, ones));
    for (int step = 0; step < kPowerSteps; ++step) {
        x = normalized(apply(base, k, x));
        if (step % 16 == 0 && consider(x)) return {best.lo - 1, best.hi - 1};
    }
    if (consider(x)) return {best.lo - 1, best.hi - 1};
    throw IterationLimitError("Collatz-Wielandt bounds did not reach the requested tolerance",
                              RadiusEnclosure{best.lo - 1, best.hi - 1, RadiusMethod::collatz_wielandt});
}

}  // namespace

RadiusEnclosure collatz_wielandt(const Matrix<Rational>& a, const Rational& tol) {
    const std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (a(i, j) < 0) throw std::invalid_argument("Collatz-Wielandt bounds need a nonnegative matrix");
        }
    }
    RadiusEnclosure out{0, 0, RadiusMethod::collatz_wielandt};
    for (const auto& component : strongly_connected_components(a)) {
        Bounds b;
        if (component.size() == 1) {
            Rational d = a(component[0], component[0]);
            b = {d, d};
        } else {
            Matrix<Rational> block(component.size());
            for (std::size_t r = 0; r < component.size(); ++r) {
                for (std::size_t c = 0; c < component.size(); ++c) block(r, c) = a(component[r], component[c]);
            }
            try {
                b = irreducible_bounds(block, tol);
            } catch (const IterationLimitError& e) {
                RadiusEnclosure partial = out;
                partial.lo = std::max(partial.lo, e.best().lo);
                partial.hi = std::max(partial.hi, e.best().hi);
                throw IterationLimitError(e.what(), partial);
            }
        }
        out.lo = std::max(out.lo, b.lo);
        out.hi = std::max(out.hi, b.hi);
    }
    return out;
}

RadiusEnclosure spectral_radius(const Matrix<BigInt>& a, const Rational& tol, RadiusMethod method) {
    if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
    if (a.size() == 0) return {0, 0, RadiusMethod::charpoly};
    bool nonnegative = true;
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < a.size(); ++j) nonnegative = nonnegative && a(i, j) >= 0;
    }
    if (method == RadiusMethod::automatic) {
        method = nonnegative && a.size() > kCharpolyCutoff ? RadiusMethod::collatz_wielandt : RadiusMethod::charpoly;
    }
    if (method == RadiusMethod::collatz_wielandt) {
        return collatz_wielandt(a.map([](const BigInt& x) { return Rational(x); }), tol);
    }
    IntPolynomial p = char_poly(a);
    if (nonnegative) {
        // Perron-Frobenius: the spectral radius is itself the largest real eigenvalue.
        auto root = largest_real_root(p, tol);
        if (!root) return {0, 0, RadiusMethod::charpoly};
        if (root->lo < 0) root->lo = 0;
        return *root;
    }
    return max_root_modulus(p, tol);
}

}  // namespace penner

#pragma once

#include <cmath>
#include <future>
#include <numbers>
#include <utility>
#include <vector>

#include "lapglue/laplacian.hpp"
#include "lapglue/matrix.hpp"
#include "lapglue/polynomial.hpp"

namespace lapglue {

// Characteristic polynomial det(M - lambda I) with exact integer
// coefficients, via the Berkowitz vector recursion. Division-free, so it
// works for any integer matrix without pivoting concerns. O(n^4).
inline IntPoly charpoly(const IntMatrix& M) {
    require(M.square(), errc::not_square, "characteristic polynomial needs a square matrix");
    const int n = M.rows();

    // poly holds det(lambda I - A_k) for the leading principal k x k
    // submatrix, coefficients descending from lambda^k.
    std::vector<Int> poly{Int(1)};
    for (int k = 0; k < n; ++k) {
        // Split the (k+1) x (k+1) principal block as [[B, C], [R, a]].
        // items = (1, -a, -R C, -R B C, -R B^2 C, ...), length k+2.
        std::vector<Int> items(static_cast<size_t>(k) + 2);
        items[0] = 1;
        items[1] = -M(k, k);
        std::vector<Int> w(k);
        for (int i = 0; i < k; ++i) w[i] = M(i, k);
        for (int j = 0; j + 2 <= k + 1; ++j) {
            Int s = 0;
            for (int i = 0; i < k; ++i) s += M(k, i) * w[i];
            items[j + 2] = -s;
            if (j + 3 <= k + 1) {
                std::vector<Int> nw(k);
                for (int r = 0; r < k; ++r) {
                    Int t = 0;
                    for (int c = 0; c < k; ++c) t += M(r, c) * w[c];
                    nw[r] = std::move(t);
                }
                w = std::move(nw);
            }
        }
        // New polynomial = leading k+2 coefficients of items (*) poly.
        std::vector<Int> np(static_cast<size_t>(k) + 2);
        for (int i = 0; i < static_cast<int>(np.size()); ++i) {
            Int s = 0;
            for (int j = 0; j <= i && j < static_cast<int>(poly.size()); ++j)
                if (i - j < static_cast<int>(items.size())) s += items[i - j] * poly[j];
            np[i] = std::move(s);
        }
        poly = std::move(np);
    }

    // det(M - lambda I) = (-1)^n det(lambda I - M); reorder ascending.
    std::vector<Int> asc(static_cast<size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) asc[j] = (n % 2) ? -poly[n - j] : poly[n - j];
    return IntPoly(std::move(asc));
}

// Characteristic polynomial of M with row v and column v removed.
inline IntPoly minor_charpoly(const IntMatrix& M, int v) {
    require(M.square(), errc::not_square, "minor charpoly needs a square matrix");
    require(v >= 0 && v < M.rows(), errc::index_out_of_range, "minor index out of range");
    return charpoly(M.minor_at(v, v));
}

// Exact integer determinant (Bareiss fraction-free elimination).
inline Int int_det(IntMatrix A) {
    require(A.square(), errc::not_square, "determinant needs a square matrix");
    const int n = A.rows();
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (A(k, k) == 0) {
            int pivot = -1;
            for (int r = k + 1; r < n; ++r)
                if (A(r, k) != 0) {
                    pivot = r;
                    break;
                }
            if (pivot < 0) return 0;
            for (int c = k; c < n; ++c) std::swap(A(k, c), A(pivot, c));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                A(i, j) = (A(i, j) * A(k, k) - A(i, k) * A(k, j)) / prev;
        prev = A(k, k);
    }
    return sign > 0 ? A(n - 1, n - 1) : -A(n - 1, n - 1);
}

// det((M - lambda I) with row v1 and column v2 removed), as an exact
// polynomial. Evaluated at lambda = 0..n-1 and reconstructed by Newton
// interpolation over exact rationals; the true degree is at most n-2, so the
// n-th sample is a built-in consistency check and every coefficient must
// clear to an integer.
inline IntPoly offdiag_minor_det(const IntMatrix& M, int v1, int v2) {
    require(M.square(), errc::not_square, "minor determinant needs a square matrix");
    require(v1 != v2, errc::same_index, "off-diagonal minor needs two distinct indices");
    require(v1 >= 0 && v1 < M.rows() && v2 >= 0 && v2 < M.rows(), errc::index_out_of_range,
            "minor index out of range");
    const int n = M.rows();

    std::vector<Int> values(n);
    for (int t = 0; t < n; ++t) {
        IntMatrix shifted = M;
        for (int i = 0; i < n; ++i) shifted(i, i) -= t;
        values[t] = int_det(shifted.minor_at(v1, v2));
    }

    // Divided differences at nodes 0..n-1.
    std::vector<Rational> dd(values.begin(), values.end());
    for (int level = 1; level < n; ++level)
        for (int i = n - 1; i >= level; --i)
            dd[i] = (dd[i] - dd[i - 1]) / level; // node spacing is 1, gap = level

    // Newton form to monomial basis.
    std::vector<Rational> coeffs(n);
    std::vector<Rational> basis{Rational(1)}; // product (x - 0)(x - 1)...
    for (int k = 0; k < n; ++k) {
        for (size_t j = 0; j < basis.size(); ++j) coeffs[j] += dd[k] * basis[j];
        if (k + 1 < n) {
            basis.push_back(Rational(0));
            for (int j = static_cast<int>(basis.size()) - 1; j > 0; --j)
                basis[j] = basis[j - 1] - Rational(k) * basis[j];
            basis[0] = -Rational(k) * basis[0];
        }
    }

    std::vector<Int> out(n);
    for (int j = 0; j < n; ++j) {
        if (denominator(coeffs[j]) != 1)
            throw std::logic_error("minor-determinant interpolation did not clear to integers");
        out[j] = numerator(coeffs[j]);
    }
    IntPoly result(std::move(out));
    if (result.degree() > n - 2)
        throw std::logic_error("minor-determinant interpolation exceeded the degree bound");
    return result;
}

// Characteristic polynomial of gluing two graphs at a single shared vertex,
// from the four polynomials p1 = p(L1), p1v = p(L1 minus the glued vertex),
// and likewise for side 2:  p1*p2v + p1v*p2 + lambda*p1v*p2v.
inline IntPoly vertex_interface_charpoly(const IntPoly& p1, const IntPoly& p1v,
                                         const IntPoly& p2, const IntPoly& p2v) {
    return p1 * p2v + p1v * p2 + (p1v * p2v).shifted_up(1);
}

// Characteristic polynomial after inserting an edge between two nonadjacent
// vertices of the graph behind the even Laplacian L:
//   p + p_(v1,v1) + p_(v2,v2) - 2 (-1)^(v1+v2) det((L - lambda I)_(v1,v2)).
// The parity factor is insensitive to a uniform index shift, so 0-based
// indices are used directly.
inline IntPoly add_edge_charpoly(const IntMatrix& L, int v1, int v2) {
    require(v1 != v2, errc::same_index, "edge endpoints must differ");
    require(L.square(), errc::not_square, "even Laplacian must be square");
    require(v1 >= 0 && v1 < L.rows() && v2 >= 0 && v2 < L.rows(), errc::index_out_of_range,
            "vertex index out of range");
    require(L(v1, v2) == 0, errc::vertices_adjacent, "vertices are already adjacent");
    const Int sign = ((v1 + v2) % 2) ? Int(-1) : Int(1);
    return charpoly(L) + minor_charpoly(L, v1) + minor_charpoly(L, v2) -
           offdiag_minor_det(L, v1, v2) * (2 * sign);
}

// Characteristic polynomial of a single-bridge gluing:
//   p1*p2 + p1*p2v + p1v*p2.
inline IntPoly bridge_charpoly(const IntPoly& p1, const IntPoly& p1v, const IntPoly& p2,
                               const IntPoly& p2v) {
    return p1 * p2 + p1 * p2v + p1v * p2;
}

enum class Execution { sequential, concurrent };

// k-bridge gluing: the first bridge uses the single-bridge formula, every
// further bridge is an edge insertion into the growing glued graph, with
// endpoint indices taken in the glued layout (side 1 block, then side 2).
// In concurrent mode the independent summands of each step are evaluated on
// separate tasks; the arithmetic is exact, so both modes are bit-identical.
inline IntPoly multi_bridge_charpoly(const OrientedGraph& g1, const OrientedGraph& g2,
                                     const BridgeSpec& b,
                                     Execution exec = Execution::sequential) {
    validate_bridge(g1, g2, b);
    const int n1 = g1.vertex_count();
    const IntMatrix L1 = even_laplacian(g1);
    const IntMatrix L2 = even_laplacian(g2);

    const int a1 = b.pairs[0].first;
    const int b1 = b.pairs[0].second;
    IntPoly p;
    if (exec == Execution::concurrent) {
        auto f1 = std::async(std::launch::async, [&] { return charpoly(L1); });
        auto f1v = std::async(std::launch::async, [&] { return minor_charpoly(L1, a1); });
        auto f2 = std::async(std::launch::async, [&] { return charpoly(L2); });
        auto f2v = std::async(std::launch::async, [&] { return minor_charpoly(L2, b1); });
        p = bridge_charpoly(f1.get(), f1v.get(), f2.get(), f2v.get());
    } else {
        p = bridge_charpoly(charpoly(L1), minor_charpoly(L1, a1), charpoly(L2),
                            minor_charpoly(L2, b1));
    }

    // Laplacian of the growing glued graph, in the (g1 ++ g2) vertex layout.
    IntMatrix L = even_laplacian_bridge_glued(L1, L2, BridgeSpec{{b.pairs[0]}});
    for (int i = 1; i < b.count(); ++i) {
        const int u = b.pairs[i].first;
        const int w = n1 + b.pairs[i].second;
        require(L(u, w) == 0, errc::invalid_bridge, "bridge endpoints already adjacent");
        const Int sign = ((u + w) % 2) ? Int(-1) : Int(1);
        IntPoly mu, mw, od;
        if (exec == Execution::concurrent) {
            auto fu = std::async(std::launch::async, [&] { return minor_charpoly(L, u); });
            auto fw = std::async(std::launch::async, [&] { return minor_charpoly(L, w); });
            auto fo = std::async(std::launch::async, [&] { return offdiag_minor_det(L, u, w); });
            mu = fu.get();
            mw = fw.get();
            od = fo.get();
        } else {
            mu = minor_charpoly(L, u);
            mw = minor_charpoly(L, w);
            od = offdiag_minor_det(L, u, w);
        }
        p = p + mu + mw - od * (2 * sign);

        L(u, u) += 1;
        L(w, w) += 1;
        L(u, w) = -1;
        L(w, u) = -1;
    }
    return p;
}

struct EulerRatio {
    int exponent = 0; // Euler characteristic |V| - |E|
    bool exact = false;
};

// Ratio of the even and odd characteristic polynomials. The quotient is
// always (-lambda)^chi with chi = |V| - |E|; anything else signals a bug, so
// the division is performed and checked rather than assumed.
inline EulerRatio euler_ratio(const OrientedGraph& g) {
    const IntPoly p_plus = charpoly(even_laplacian(g));
    const IntPoly p_minus = charpoly(odd_laplacian(g));
    const int chi = euler_characteristic(g);

    const IntPoly& num = chi >= 0 ? p_plus : p_minus;
    const IntPoly& den = chi >= 0 ? p_minus : p_plus;
    auto [quot, rem] = divided_by(num, den);
    require(rem.is_zero(), errc::inexact_division, "even/odd charpoly ratio has a remainder");
    require(quot == IntPoly::neg_lambda_pow(chi >= 0 ? chi : -chi), errc::inexact_division,
            "even/odd charpoly ratio is not (-lambda)^chi");
    return {chi, true};
}

namespace detail {
inline IntPoly linear_factor_power(const Int& root, int power) {
    // (lambda - root)^power
    IntPoly base({-root, Int(1)});
    IntPoly acc = IntPoly::one();
    for (int i = 0; i < power; ++i) acc = acc * base;
    return acc;
}
} // namespace detail

// Closed forms for complete graphs and their gluings, expanded exactly.
inline IntPoly complete_charpoly(int n) {
    require(n >= 2, errc::too_small, "complete-graph forms need n >= 2");
    // (-1)^n lambda (lambda - n)^(n-1)
    IntPoly p = detail::linear_factor_power(n, n - 1).shifted_up(1);
    return (n % 2) ? -p : p;
}

inline IntPoly complete_minor_charpoly(int n) {
    require(n >= 2, errc::too_small, "complete-graph forms need n >= 2");
    // (-1)^(n-1) (lambda - 1) (lambda - n)^(n-2)
    IntPoly p = detail::linear_factor_power(1, 1) * detail::linear_factor_power(n, n - 2);
    return (n % 2) ? p : -p;
}

inline IntPoly complete_interface_glue_charpoly(int m, int n) {
    require(m >= 2 && n >= 2, errc::too_small, "complete-graph forms need m, n >= 2");
    // (-1)^(m+n-1) lambda (lambda-m)^(m-2) (lambda-n)^(n-2) (lambda-1) (lambda-(m+n-1))
    IntPoly p = detail::linear_factor_power(m, m - 2) * detail::linear_factor_power(n, n - 2) *
                detail::linear_factor_power(1, 1) * detail::linear_factor_power(m + n - 1, 1);
    p = p.shifted_up(1);
    return ((m + n - 1) % 2) ? -p : p;
}

inline IntPoly q_poly(int m, int n) {
    require(m >= 2 && n >= 2, errc::too_small, "q polynomial needs m, n >= 2");
    return IntPoly{Int(-(m + n)), Int(1 + (m + 1) * (n + 1)), Int(-(m + n + 2)), Int(1)};
}

inline IntPoly complete_bridge_glue_charpoly(int m, int n) {
    require(m >= 2 && n >= 2, errc::too_small, "complete-graph forms need m, n >= 2");
    // (-1)^(m+n) lambda (lambda-m)^(m-2) (lambda-n)^(n-2) q_{m,n}(lambda)
    IntPoly p = detail::linear_factor_power(m, m - 2) * detail::linear_factor_power(n, n - 2) *
                q_poly(m, n);
    p = p.shifted_up(1);
    return ((m + n) % 2) ? -p : p;
}

// Trigonometric product form of the cycle-graph characteristic polynomial,
// evaluated numerically; a floating-point oracle against the exact route.
inline double cycle_charpoly_eval(int n, double lam) {
    require(n >= 3, errc::too_small, "cycle forms need n >= 3");
    double prod = 1.0;
    for (int j = 0; j < n; ++j)
        prod *= 2.0 * (1.0 - std::cos(2.0 * std::numbers::pi * j / n)) - lam;
    return prod;
}

// Same for the cycle with one vertex deleted.
inline double cycle_minor_charpoly_eval(int n, double lam) {
    require(n >= 3, errc::too_small, "cycle forms need n >= 3");
    double prod = 1.0;
    for (int j = 1; j < n; ++j)
        prod *= 2.0 * (1.0 - std::cos(std::numbers::pi * j / n)) - lam;
    return prod;
}

} // namespace lapglue

#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <vector>

#include "lapglue/charpoly.hpp"
#include "lapglue/graph.hpp"
#include "lapglue/laplacian.hpp"
#include "lapglue/matrix.hpp"

namespace lapglue {

struct EigenSystem {
    std::vector<double> values;  // ascending
    RealMatrix vectors;          // column k is the eigenvector of values[k]
};

namespace detail {
inline double frobenius_norm(const RealMatrix& m) {
    double s = 0.0;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) s += m(i, j) * m(i, j);
    return std::sqrt(s);
}

inline double max_offdiag(const RealMatrix& m) {
    double best = 0.0;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (i != j) best = std::max(best, std::abs(m(i, j)));
    return best;
}
} // namespace detail

// Cyclic Jacobi diagonalization of a real symmetric matrix. Sweeps rotate
// every off-diagonal pair in row order until all off-diagonal magnitudes
// drop below tol * ||M||_F (Frobenius norm of the input).
inline EigenSystem jacobi_eigensystem(RealMatrix A, double tol = 1e-12, int max_sweeps = 100) {
    require(A.square(), errc::not_symmetric, "eigensolver needs a square matrix");
    const int n = A.rows();
    const double threshold = tol * detail::frobenius_norm(A);

    RealMatrix V = RealMatrix::identity(n);
    bool converged = detail::max_offdiag(A) <= threshold;
    for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = A(p, q);
                if (std::abs(apq) <= threshold) continue;
                const double theta = (A(q, q) - A(p, p)) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const double tau = s / (1.0 + c);

                A(p, p) -= t * apq;
                A(q, q) += t * apq;
                A(p, q) = 0.0;
                A(q, p) = 0.0;
                for (int r = 0; r < n; ++r) {
                    if (r != p && r != q) {
                        const double arp = A(r, p), arq = A(r, q);
                        A(r, p) = arp - s * (arq + tau * arp);
                        A(p, r) = A(r, p);
                        A(r, q) = arq + s * (arp - tau * arq);
                        A(q, r) = A(r, q);
                    }
                    const double vrp = V(r, p), vrq = V(r, q);
                    V(r, p) = vrp - s * (vrq + tau * vrp);
                    V(r, q) = vrq + s * (vrp - tau * vrq);
                }
            }
        }
        converged = detail::max_offdiag(A) <= threshold;
    }
    require(converged, errc::no_convergence, "Jacobi iteration did not converge");

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return A(a, a) < A(b, b); });

    EigenSystem out;
    out.values.resize(n);
    out.vectors = RealMatrix(n, n);
    for (int k = 0; k < n; ++k) {
        out.values[k] = A(order[k], order[k]);
        for (int r = 0; r < n; ++r) out.vectors(r, k) = V(r, order[k]);
    }
    return out;
}

// Exact count of zero eigenvalues of an integer matrix: the nullity over the
// rationals, from fraction-free elimination. No numeric thresholds involved.
inline int exact_nullity(const IntMatrix& M) {
    const int n = M.rows(), c = M.cols();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(c));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < c; ++j) a[i][j] = M(i, j);
    int rank = 0;
    for (int col = 0; col < c && rank < n; ++col) {
        int pivot = -1;
        for (int r = rank; r < n; ++r)
            if (a[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[rank], a[pivot]);
        for (int r = rank + 1; r < n; ++r) {
            if (a[r][col] == 0) continue;
            const Rational f = a[r][col] / a[rank][col];
            for (int j = col; j < c; ++j) a[r][j] -= f * a[rank][j];
        }
        ++rank;
    }
    return c - rank;
}

struct Spectrum {
    std::vector<double> eigenvalues; // ascending
    int zero_count = 0;              // exact, never thresholded
};

inline Spectrum eigenvalues_sym(const IntMatrix& M, double tol = 1e-12) {
    require(is_symmetric(M), errc::not_symmetric, "matrix is not symmetric");
    Spectrum out;
    out.eigenvalues = jacobi_eigensystem(to_real(M), tol).values;
    out.zero_count = exact_nullity(M);
    return out;
}

struct BettiNumbers {
    int b0 = 0; // connected components; zero multiplicity of the even Laplacian
    int b1 = 0; // independent cycles; zero multiplicity of the odd Laplacian
};

inline BettiNumbers betti_numbers(const OrientedGraph& g) {
    const int b0 = connected_components(g).count;
    return {b0, b0 - euler_characteristic(g)};
}

// Even/odd Laplacian spectra with the zero multiplicity pinned by the graph
// combinatorics (b0 and b1 respectively).
inline Spectrum even_spectrum(const OrientedGraph& g, double tol = 1e-12) {
    Spectrum out;
    out.eigenvalues = jacobi_eigensystem(to_real(even_laplacian(g)), tol).values;
    out.zero_count = betti_numbers(g).b0;
    return out;
}

inline Spectrum odd_spectrum(const OrientedGraph& g, double tol = 1e-12) {
    Spectrum out;
    out.eigenvalues = jacobi_eigensystem(to_real(odd_laplacian(g)), tol).values;
    out.zero_count = betti_numbers(g).b1;
    return out;
}

// Smallest nonzero eigenvalue of the even Laplacian. The zero multiplicity is
// b0, so this is simply the ascending spectrum at index b0. Defined for
// disconnected graphs too (the literal smallest nonzero eigenvalue); an
// edgeless graph has none.
inline double fiedler_value(const OrientedGraph& g, double tol = 1e-12) {
    require(g.vertex_count() >= 2, errc::too_small, "Fiedler value needs at least 2 vertices");
    require(g.edge_count() >= 1, errc::no_edges, "edgeless graph has no nonzero eigenvalue");
    const Spectrum s = even_spectrum(g, tol);
    return s.eigenvalues[s.zero_count];
}

struct FiedlerBounds {
    double lower = 0.0;
    double upper = 0.0;
};

// Bounds for the Fiedler value of two complete graphs joined by one bridge.
// The nonzero spectrum is {m, n, roots of the cubic
// x^3 - (m+n+2)x^2 + (1+(m+1)(n+1))x - (m+n)}, whose roots are all real, so
// the Laguerre-Samuelson inequality confines them to
//   (m+n+2 -+ 2 sqrt((m+n+2)^2 - 3(1+(m+1)(n+1)))) / 3,
// radicand m^2+n^2-mn+m+n-2. (A radicand of ...-6 sometimes quoted for this
// bound drops the +4 of (m+n+2)^2 and already fails at m=n=2, where the
// smallest root 2-sqrt(2) lies below the resulting interval.)
inline FiedlerBounds fiedler_bounds_complete_bridge(int m, int n) {
    require(m >= 2 && n >= 2, errc::too_small, "bounds need m, n >= 2");
    const double mn = std::min(m, n);
    const double root = std::sqrt(static_cast<double>(m) * m + static_cast<double>(n) * n -
                                  static_cast<double>(m) * n + m + n - 2);
    FiedlerBounds out;
    out.lower = std::min(mn, (m + n + 2 - 2 * root) / 3.0);
    out.upper = std::min(mn, (m + n + 2 + 2 * root) / 3.0);
    return out;
}

// Number of spanning trees, exactly. For a connected n-vertex graph the
// lambda^1 coefficient of the even charpoly is -n*T, so T = -c1/n; a
// disconnected graph has c1 = 0. The division is exact by construction.
inline Int spanning_tree_count(const OrientedGraph& g) {
    const int n = g.vertex_count();
    if (n == 0) return 0;
    const Int c1 = charpoly(even_laplacian(g)).coeff(1);
    if (c1 == 0) return 0;
    require((-c1) % n == 0, errc::inexact_division, "tree count division is not exact");
    return (-c1) / n;
}

// True when the even and odd spectra agree: identical nonzero parts within
// tol, and zero multiplicities equal to b0 and b1.
inline bool isospectral_check(const OrientedGraph& g, double tol) {
    require(g.edge_count() >= 1, errc::no_edges, "isospectrality needs at least one edge");
    const BettiNumbers b = betti_numbers(g);
    const Spectrum sp = even_spectrum(g);
    const Spectrum sm = odd_spectrum(g);

    for (int i = 0; i < b.b0; ++i)
        if (std::abs(sp.eigenvalues[i]) > tol) return false;
    for (int i = 0; i < b.b1; ++i)
        if (std::abs(sm.eigenvalues[i]) > tol) return false;

    const int nz_even = static_cast<int>(sp.eigenvalues.size()) - b.b0;
    const int nz_odd = static_cast<int>(sm.eigenvalues.size()) - b.b1;
    if (nz_even != nz_odd) return false;
    for (int i = 0; i < nz_even; ++i) {
        if (sp.eigenvalues[b.b0 + i] <= tol) return false; // claimed nonzero
        if (std::abs(sp.eigenvalues[b.b0 + i] - sm.eigenvalues[b.b1 + i]) > tol) return false;
    }
    return true;
}

// Cheeger constant by exhaustive enumeration of vertex subsets, exactly as
// defined: min |boundary(X)| / |X| over 0 < |X| < |V|/2, strict bound. The
// strict bound admits no subset at all when |V| = 2.
inline Rational cheeger_constant(const OrientedGraph& g) {
    const int n = g.vertex_count();
    require(n >= 2, errc::too_small, "Cheeger constant needs at least 2 vertices");
    require(n <= 20, errc::too_large, "Cheeger enumeration is limited to 20 vertices");
    require(connected_components(g).count == 1, errc::disconnected,
            "Cheeger constant is defined for connected graphs");
    require(n >= 3, errc::too_small,
            "no admissible subset: the strict bound |X| < |V|/2 is empty for |V| = 2");

    bool found = false;
    Rational best;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        const int size = std::popcount(mask);
        if (2 * size >= n) continue;
        int boundary = 0;
        for (const Edge& e : g.edges()) {
            const bool t_in = (mask >> e.tail) & 1u;
            const bool h_in = (mask >> e.head) & 1u;
            boundary += (t_in != h_in);
        }
        Rational candidate(boundary, size);
        if (!found || candidate < best) {
            best = candidate;
            found = true;
        }
    }
    return best;
}

} // namespace lapglue

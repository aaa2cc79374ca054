#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "lapglue/laplacian.hpp"
#include "lapglue/matrix.hpp"
#include "lapglue/spectra.hpp"

namespace lapglue {

// Complex amplitude per vertex.
struct WaveFunction {
    std::vector<std::complex<double>> amplitudes;

    double norm() const {
        double s = 0.0;
        for (const auto& a : amplitudes) s += std::norm(a);
        return std::sqrt(s);
    }
};

struct EvolutionParams {
    double coeff = 1.0; // the single scalar in front of the Laplacian
    double dt = 0.0;    // elapsed time
};

using Propagator = ComplexMatrix;

// Time-evolution operator exp(i * coeff * dt * L) for the even Laplacian L,
// built from the real symmetric eigendecomposition: with orthonormal
// eigenbasis E and eigenvalues l_k, K(x, y) = sum_k E(x,k) e^{i s l_k} E(y,k).
// The k-sum runs in ascending order so results are reproducible bit for bit.
inline Propagator propagator(const OrientedGraph& g, const EvolutionParams& p) {
    require(g.vertex_count() >= 1, errc::too_small, "propagator needs at least one vertex");
    const int n = g.vertex_count();
    EigenSystem es;
    try {
        es = jacobi_eigensystem(to_real(even_laplacian(g)));
    } catch (const Error&) {
        fail(errc::eigendecomposition_failure, "eigendecomposition did not converge");
    }
    const double s = p.coeff * p.dt;
    Propagator K(n, n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            std::complex<double> acc = 0.0;
            for (int k = 0; k < n; ++k)
                acc += es.vectors(x, k) * std::polar(1.0, s * es.values[k]) * es.vectors(y, k);
            K(x, y) = acc;
        }
    return K;
}

inline WaveFunction evolve(const WaveFunction& psi0, const OrientedGraph& g,
                           const EvolutionParams& p) {
    require(static_cast<int>(psi0.amplitudes.size()) == g.vertex_count(),
            errc::dimension_mismatch, "wave function length must match the vertex count");
    const Propagator K = propagator(g, p);
    WaveFunction out;
    out.amplitudes.assign(psi0.amplitudes.size(), 0.0);
    for (int x = 0; x < K.rows(); ++x)
        for (int y = 0; y < K.cols(); ++y) out.amplitudes[x] += K(x, y) * psi0.amplitudes[y];
    return out;
}

// Truncated power series sum_{j < terms} (i s L)^j / j!; the independent
// oracle for the eigendecomposition propagator. Terms accumulate in
// ascending order with plain row-major products, so the result is
// deterministic.
inline Propagator propagator_series(const OrientedGraph& g, const EvolutionParams& p,
                                    int terms) {
    require(terms >= 1, errc::too_small, "series needs at least one term");
    const int n = g.vertex_count();
    const std::complex<double> scale(0.0, p.coeff * p.dt);

    ComplexMatrix A(n, n);
    {
        const IntMatrix L = even_laplacian(g);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) A(i, j) = scale * to_double(L(i, j));
    }

    Propagator acc = ComplexMatrix::identity(n);
    ComplexMatrix term = ComplexMatrix::identity(n);
    for (int j = 1; j < terms; ++j) {
        term = term * A;
        term *= std::complex<double>(1.0 / j, 0.0);
        acc += term;
    }
    return acc;
}

} // namespace lapglue

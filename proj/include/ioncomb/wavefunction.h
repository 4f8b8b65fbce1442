// Copyright 2026 The ioncomb Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef IONCOMB_WAVEFUNCTION_H
#define IONCOMB_WAVEFUNCTION_H

#include <complex>
#include <cstddef>
#include <vector>

namespace ioncomb {

using Complex = std::complex<double>;

enum class Axis { position, momentum };

const char *axis_name(Axis axis);

/// Complex amplitude sampled on a uniform 1-D grid.
///
/// Coordinates are dimensionless (x in units of the motional ground-state
/// spread sqrt(hbar / M omega_a), p its conjugate). `normalized` records
/// whether `step * sum |a|^2 == 1` was enforced when the samples were made.
struct Wavefunction {
    Axis axis = Axis::position;
    double start = 0.0;
    double step = 1.0;
    std::vector<Complex> amplitudes;
    bool normalized = false;

    std::size_t size() const {
        return amplitudes.size();
    }
    double coordinate(std::size_t i) const {
        return start + static_cast<double>(i) * step;
    }
    double end() const {
        return amplitudes.empty() ? start : coordinate(amplitudes.size() - 1);
    }

    /// Whether both wavefunctions live on the same axis and the same grid.
    bool same_grid(const Wavefunction &other) const;
};

/// step * sum |a|^2.
double norm_squared(const Wavefunction &wf);

/// Rescales to unit norm and sets `normalized`. Throws DegenerateStateError
/// if the norm is zero.
void normalize(Wavefunction &wf);

/// <wf1|wf2> = step * sum conj(a1) a2. Throws DomainError on grid mismatch.
Complex overlap(const Wavefunction &wf1, const Wavefunction &wf2);

/// a * wf1 + b * wf2 on the shared grid (unnormalized).
Wavefunction linear_combination(Complex a, const Wavefunction &wf1, Complex b, const Wavefunction &wf2);

/// Integral of |a|^2 over [lo, hi], treating |a|^2 as piecewise linear
/// between samples. Parts of [lo, hi] outside the grid contribute nothing.
double probability_in(const Wavefunction &wf, double lo, double hi);

/// psi(p) = (2 pi)^{-1/2} int phi(x) e^{-i p x} dx on the momentum grid
/// p_start + j p_step, j < count, by trapezoidal summation over the position
/// grid. The position samples must decay to negligible values at both ends.
Wavefunction fourier_transform(const Wavefunction &position, double p_start, double p_step, std::size_t count);

/// Multiplies every sample by the phase that makes the largest-magnitude
/// sample real and positive.
void remove_global_phase(Wavefunction &wf);

}  // namespace ioncomb

#endif

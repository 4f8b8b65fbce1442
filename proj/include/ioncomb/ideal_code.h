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

#ifndef IONCOMB_IDEAL_CODE_H
#define IONCOMB_IDEAL_CODE_H

#include <string_view>

namespace ioncomb {

enum class Codeword { zero, one, plus, minus };

/// Parses "0", "1", "+", "-" (also "zero", "one", "plus", "minus").
/// Throws DomainError otherwise.
Codeword parse_codeword(std::string_view text);
const char *codeword_symbol(Codeword c);

enum class SignPattern { uniform, alternating };

/// Spike lattices of an ideal (infinitely squeezed) codeword. Spikes sit at
/// offset + s * spacing for every integer s, in x and in p; an alternating
/// pattern carries (-1)^s on spike s.
struct LatticeDescriptor {
    double spacing_x = 0.0;
    double offset_x = 0.0;
    SignPattern signs_x = SignPattern::uniform;
    double spacing_p = 0.0;
    double offset_p = 0.0;
    SignPattern signs_p = SignPattern::uniform;
};

struct SyndromeResult {
    /// Signed distance from the nearest lattice point.
    double residue = 0.0;
    /// spacing * round((value - offset) / spacing), ties rounded down.
    double nearest_multiple = 0.0;
    /// |residue| < spacing / 2 (strict).
    bool correctable = false;
};

LatticeDescriptor ideal_lattice(Codeword label, double theta);

/// Modular syndrome of `value` against the lattice offset + spacing * Z.
/// A value exactly half-way between two lattice points resolves to the lower
/// one and is reported as not correctable.
SyndromeResult syndrome(double value, double spacing, double offset = 0.0);

/// Moves `value` onto its nearest lattice point.
double correct_shift(double value, double spacing, double offset = 0.0);

}  // namespace ioncomb

#endif

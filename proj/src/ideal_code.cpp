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

#include "ioncomb/ideal_code.h"

#include <cmath>
#include <numbers>
#include <string>

#include "ioncomb/errors.h"

namespace ioncomb {

Codeword parse_codeword(std::string_view text) {
    if (text == "0" || text == "zero") {
        return Codeword::zero;
    }
    if (text == "1" || text == "one") {
        return Codeword::one;
    }
    if (text == "+" || text == "plus") {
        return Codeword::plus;
    }
    if (text == "-" || text == "minus") {
        return Codeword::minus;
    }
    throw DomainError("unknown codeword label '" + std::string(text) + "' (expected 0, 1, + or -)");
}

const char *codeword_symbol(Codeword c) {
    switch (c) {
        case Codeword::zero:
            return "0";
        case Codeword::one:
            return "1";
        case Codeword::plus:
            return "+";
        case Codeword::minus:
            return "-";
    }
    return "?";
}

LatticeDescriptor ideal_lattice(Codeword label, double theta) {
    if (!(theta > 0.0) || !std::isfinite(theta)) {
        throw DomainError("ideal_lattice: theta must be positive and finite");
    }
    const double pi = std::numbers::pi;
    LatticeDescriptor d;
    switch (label) {
        case Codeword::zero:
            d.spacing_x = 2.0 * theta;
            d.spacing_p = pi / theta;
            break;
        case Codeword::one:
            d.spacing_x = 2.0 * theta;
            d.offset_x = theta;
            d.spacing_p = pi / theta;
            d.signs_p = SignPattern::alternating;
            break;
        case Codeword::plus:
            d.spacing_x = theta;
            d.spacing_p = 2.0 * pi / theta;
            break;
        case Codeword::minus:
            d.spacing_x = theta;
            d.signs_x = SignPattern::alternating;
            d.spacing_p = 2.0 * pi / theta;
            d.offset_p = pi / theta;
            break;
        default:
            throw DomainError("ideal_lattice: invalid codeword label");
    }
    return d;
}

SyndromeResult syndrome(double value, double spacing, double offset) {
    if (!(spacing > 0.0) || !std::isfinite(spacing)) {
        throw DomainError("syndrome: spacing must be positive and finite");
    }
    const double shifted = value - offset;
    double k = std::floor(shifted / spacing);
    double residue = shifted - spacing * k;
    // floor() on a rounded quotient can land one cell off.
    if (residue < 0.0) {
        k -= 1.0;
        residue = shifted - spacing * k;
    } else if (residue >= spacing) {
        k += 1.0;
        residue = shifted - spacing * k;
    }
    if (residue > 0.5 * spacing) {
        k += 1.0;
        residue = shifted - spacing * k;
    }
    SyndromeResult out;
    out.residue = residue;
    out.nearest_multiple = spacing * k;
    out.correctable = std::abs(residue) < 0.5 * spacing;
    return out;
}

double correct_shift(double value, double spacing, double offset) {
    return syndrome(value, spacing, offset).nearest_multiple + offset;
}

}  // namespace ioncomb

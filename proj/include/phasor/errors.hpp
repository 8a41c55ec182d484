// SPDX-License-Identifier: Apache-2.0
//
// phasor -- phase-only array response adjustment via polygon construction
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <stdexcept>
#include <string>

namespace phasor {

/// Base class of all library errors.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Vector lengths do not agree (weights vs. geometry, gains vs. geometry, ...).
class LengthMismatch : public Error {
  public:
    using Error::Error;
};

/// 1-based index arguments violate 1 <= k <= l <= N.
class IndexOutOfRange : public Error {
  public:
    using Error::Error;
};

/// |w^H a(theta0)| is too small to normalize a pattern against.
class DegenerateMainBeam : public Error {
  public:
    using Error::Error;
};

/// Base class for "this adjustment cannot be done" conditions.
class Infeasible : public Error {
  public:
    using Error::Error;
};

/// The sorted edge lengths cannot close into a polygon (longest edge
/// exceeds the sum of the others).
class InfeasibleEdges : public Infeasible {
  public:
    using Infeasible::Infeasible;
};

/// Fewer than three nonzero edges and no special-case closure exists.
class TooFewActiveEdges : public Infeasible {
  public:
    using Infeasible::Infeasible;
};

/// Every candidate of the psi grid search was infeasible.
class NoFeasiblePsi : public Infeasible {
  public:
    using Infeasible::Infeasible;
};

/// Feasible-modulus interval came out empty; signals upstream corruption.
class EmptyInterval : public Error {
  public:
    using Error::Error;
};

/// Chain modulus is zero where a direction is required.
class ZeroModulus : public Error {
  public:
    using Error::Error;
};

/// Closing triangle violates the triangle inequality beyond tolerance;
/// signals numerical drift upstream.
class BrokenTriangle : public Error {
  public:
    using Error::Error;
};

/// Phase selection was asked to pick from an empty arc set.
class EmptyArcSet : public Error {
  public:
    using Error::Error;
};

/// Scenario / result file could not be parsed; message names the field.
class ParseError : public Error {
  public:
    using Error::Error;
};

} // namespace phasor

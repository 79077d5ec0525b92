// Copyright 2026 The nonlincp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Hamiltonian functions of density matrices and the Lie-Poisson structure
// they generate.
//
// Gradient convention: for a function H(rho), the gradient matrix DH has
// entries (DH)_{k'k} = dH / d rho_{kk'}, with rho_{kk'} treated as
// independent complex coordinates. Under this convention the bracket
//
//   {A, B} = delta_{kl'} dA/d rho_{kk'} rho_{lk'} dB/d rho_{ll'} - (A <-> B)
//
// collapses to Tr([DA, DB] rho), and the equation of motion
// i d rho_{kk'}/dt = {rho_{kk'}, H} becomes d rho/dt = -i [DH, rho].

#pragma once

#include "nonlincp/io.hpp"
#include "nonlincp/qalg.hpp"

#include <functional>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace nonlincp::poisson {

struct Analytic {};
struct FiniteDifference {
  /// <= 0 selects the default 1e-5 * (1 + ||rho||_2).
  double step = 0.0;
};
using GradMode = std::variant<Analytic, FiniteDifference>;

enum class Factor { First, Second };

struct GradMat {
  CMat mat;
};

/// Immutable Hamiltonian function H(rho) with an evaluable gradient.
class HamFn {
 public:
  struct HartreeSquare {
    CMat h;  // (Tr h rho)^2 / Tr rho
  };
  struct Trace {};  // Tr rho
  struct Linear {
    CMat h;  // Tr h rho
  };
  struct Term;
  struct Composite {
    int n = 0;
    int m = 0;
    std::vector<Term> terms;  // sum_i H_i(Tr_other rho)
  };
  struct Custom {
    std::function<double(const CMat&)> fn;  // must be reentrant
    std::string label;
  };
  using Kind = std::variant<HartreeSquare, Trace, Linear, Composite, Custom>;

  static HamFn hartree_square(CMat h);
  static HamFn trace();
  static HamFn linear(CMat h);
  /// H = sum of terms, each acting on the reduced density of its factor.
  static HamFn composite(int n, int m, std::vector<Term> terms);
  /// Custom functions always use finite-difference gradients.
  static HamFn custom(std::function<double(const CMat&)> fn, std::string label = "custom");

  /// H1 o Tr_2 + H2 o Tr_1.
  static HamFn lift_pair(int n, int m, const HamFn& on_first, const HamFn& on_second);
  static HamFn local(int n, int m, const HamFn& fn, Factor factor);

  HamFn with_grad_mode(GradMode mode) const;

  const Kind& kind() const { return kind_; }
  const GradMode& grad_mode() const { return grad_mode_; }
  std::string name() const;

 private:
  HamFn(Kind kind, GradMode mode) : kind_(std::move(kind)), grad_mode_(mode) {}

  Kind kind_;
  GradMode grad_mode_;
};

struct HamFn::Term {
  std::shared_ptr<const HamFn> fn;
  Factor factor = Factor::First;
};

/// Throws DomainError for trace-ratio kinds on a traceless input.
double evaluate(const HamFn& fn, const CMat& rho);
inline double evaluate(const HamFn& fn, const Density& rho) { return evaluate(fn, rho.mat()); }

GradMat gradient(const HamFn& fn, const CMat& rho);
inline GradMat gradient(const HamFn& fn, const Density& rho) { return gradient(fn, rho.mat()); }

/// Central differences along Hermitian directions, assembled into the
/// Hermitian gradient matrix. Independent of the analytic formulas.
GradMat finite_difference_gradient(const std::function<double(const CMat&)>& fn,
                                   const CMat& rho, double step = 0.0);

/// Tr([DA, DB] rho). Purely imaginary when DA, DB and rho are Hermitian.
Complex bracket(const GradMat& da, const GradMat& db, const CMat& rho);
Complex bracket(const HamFn& a, const HamFn& b, const CMat& rho);

/// d rho / dt = -i [DH, rho].
CMat eom_rhs(const HamFn& fn, const CMat& rho);

/// Tr(rho^2).
double casimir2(const CMat& rho);

io::Json to_json(const HamFn& fn);
/// Custom functions cannot be decoded; throws io::FormatError.
HamFn hamfn_from_json(const io::Json& j);

}  // namespace nonlincp::poisson

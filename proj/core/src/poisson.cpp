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

#include "nonlincp/poisson.hpp"

#include <cmath>
#include <type_traits>

namespace nonlincp::poisson {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

double checked_trace(const CMat& rho, const char* who) {
  const double tr = rho.trace().real();
  if (tr == 0.0) throw DomainError(std::string(who) + ": zero trace");
  return tr;
}

CMat reduce_for(const HamFn::Composite& c, const HamFn::Term& term, const CMat& rho) {
  return term.factor == Factor::First ? qalg::partial_trace_2(rho, c.n, c.m)
                                      : qalg::partial_trace_1(rho, c.n, c.m);
}

GradMat analytic_gradient(const HamFn& fn, const CMat& rho);

}  // namespace

HamFn HamFn::hartree_square(CMat h) {
  qalg::require_square_finite(h, "hartree_square");
  if (!qalg::is_hermitian(h)) throw LinalgError("hartree_square: h must be Hermitian");
  return HamFn(HartreeSquare{std::move(h)}, Analytic{});
}

HamFn HamFn::trace() { return HamFn(Trace{}, Analytic{}); }

HamFn HamFn::linear(CMat h) {
  qalg::require_square_finite(h, "linear");
  if (!qalg::is_hermitian(h)) throw LinalgError("linear: h must be Hermitian");
  return HamFn(Linear{std::move(h)}, Analytic{});
}

HamFn HamFn::composite(int n, int m, std::vector<Term> terms) {
  if (n <= 0 || m <= 0) throw LinalgError("composite: factor dimensions must be positive");
  for (const Term& t : terms) {
    if (!t.fn) throw LinalgError("composite: null term");
  }
  return HamFn(Composite{n, m, std::move(terms)}, Analytic{});
}

HamFn HamFn::custom(std::function<double(const CMat&)> fn, std::string label) {
  if (!fn) throw LinalgError("custom: empty evaluator");
  return HamFn(Custom{std::move(fn), std::move(label)}, FiniteDifference{});
}

HamFn HamFn::lift_pair(int n, int m, const HamFn& on_first, const HamFn& on_second) {
  return composite(n, m,
                   {Term{std::make_shared<const HamFn>(on_first), Factor::First},
                    Term{std::make_shared<const HamFn>(on_second), Factor::Second}});
}

HamFn HamFn::local(int n, int m, const HamFn& fn, Factor factor) {
  return composite(n, m, {Term{std::make_shared<const HamFn>(fn), factor}});
}

HamFn HamFn::with_grad_mode(GradMode mode) const {
  if (std::holds_alternative<Custom>(kind_) && std::holds_alternative<Analytic>(mode)) {
    throw LinalgError("custom Hamiltonian functions have no analytic gradient");
  }
  HamFn out = *this;
  out.grad_mode_ = mode;
  return out;
}

std::string HamFn::name() const {
  return std::visit(Overloaded{
                        [](const HartreeSquare&) -> std::string { return "hartree_square"; },
                        [](const Trace&) -> std::string { return "trace"; },
                        [](const Linear&) -> std::string { return "linear"; },
                        [](const Composite&) -> std::string { return "composite"; },
                        [](const Custom& c) -> std::string { return c.label; },
                    },
                    kind_);
}

double evaluate(const HamFn& fn, const CMat& rho) {
  qalg::require_square_finite(rho, "evaluate");
  return std::visit(
      Overloaded{
          [&](const HamFn::HartreeSquare& k) {
            const double tr = checked_trace(rho, "hartree_square");
            const double mean = (k.h * rho).trace().real();
            return mean * mean / tr;
          },
          [&](const HamFn::Trace&) { return rho.trace().real(); },
          [&](const HamFn::Linear& k) { return (k.h * rho).trace().real(); },
          [&](const HamFn::Composite& c) {
            double total = 0.0;
            for (const HamFn::Term& term : c.terms) total += evaluate(*term.fn, reduce_for(c, term, rho));
            return total;
          },
          [&](const HamFn::Custom& k) { return k.fn(rho); },
      },
      fn.kind());
}

GradMat finite_difference_gradient(const std::function<double(const CMat&)>& fn,
                                   const CMat& rho, double step) {
  qalg::require_square_finite(rho, "finite_difference_gradient");
  const double h = step > 0.0 ? step : 1e-5 * (1.0 + qalg::norm_op2(rho));
  const Eigen::Index n = rho.rows();
  const auto central = [&](const CMat& dir) {
    return (fn(rho + h * dir) - fn(rho - h * dir)) / (2.0 * h);
  };
  // For Hermitian directions E, dH = Tr(DH E). With DH Hermitian:
  //   E = E_kk                 -> DH_kk
  //   E = E_kk' + E_k'k        -> 2 Re DH_kk'
  //   E = i (E_kk' - E_k'k)    -> 2 Im DH_kk'
  CMat grad = CMat::Zero(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    CMat e = CMat::Zero(n, n);
    e(k, k) = 1.0;
    grad(k, k) = central(e);
    for (Eigen::Index kp = k + 1; kp < n; ++kp) {
      CMat sym = CMat::Zero(n, n);
      sym(k, kp) = 1.0;
      sym(kp, k) = 1.0;
      CMat anti = CMat::Zero(n, n);
      anti(k, kp) = Complex(0.0, 1.0);
      anti(kp, k) = Complex(0.0, -1.0);
      const Complex entry(0.5 * central(sym), 0.5 * central(anti));
      grad(k, kp) = entry;
      grad(kp, k) = std::conj(entry);
    }
  }
  return GradMat{grad};
}

namespace {

GradMat analytic_gradient(const HamFn& fn, const CMat& rho) {
  const Eigen::Index dim = rho.rows();
  return std::visit(
      Overloaded{
          [&](const HamFn::HartreeSquare& k) {
            const double tr = checked_trace(rho, "hartree_square");
            const double c = (k.h * rho).trace().real() / tr;
            return GradMat{2.0 * c * k.h - c * c * CMat::Identity(dim, dim)};
          },
          [&](const HamFn::Trace&) { return GradMat{CMat::Identity(dim, dim)}; },
          [&](const HamFn::Linear& k) { return GradMat{k.h}; },
          [&](const HamFn::Composite& c) {
            CMat total = CMat::Zero(dim, dim);
            for (const HamFn::Term& term : c.terms) {
              const CMat local = gradient(*term.fn, reduce_for(c, term, rho)).mat;
              total += term.factor == Factor::First
                           ? qalg::kron(local, CMat::Identity(c.m, c.m))
                           : qalg::kron(CMat::Identity(c.n, c.n), local);
            }
            return GradMat{total};
          },
          [&](const HamFn::Custom&) -> GradMat {
            throw LinalgError("custom Hamiltonian functions have no analytic gradient");
          },
      },
      fn.kind());
}

}  // namespace

GradMat gradient(const HamFn& fn, const CMat& rho) {
  qalg::require_square_finite(rho, "gradient");
  if (const auto* fd = std::get_if<FiniteDifference>(&fn.grad_mode())) {
    return finite_difference_gradient([&fn](const CMat& x) { return evaluate(fn, x); }, rho,
                                      fd->step);
  }
  return analytic_gradient(fn, rho);
}

Complex bracket(const GradMat& da, const GradMat& db, const CMat& rho) {
  return (qalg::commutator(da.mat, db.mat) * rho).trace();
}

Complex bracket(const HamFn& a, const HamFn& b, const CMat& rho) {
  return bracket(gradient(a, rho), gradient(b, rho), rho);
}

CMat eom_rhs(const HamFn& fn, const CMat& rho) {
  return Complex(0.0, -1.0) * qalg::commutator(gradient(fn, rho).mat, rho);
}

double casimir2(const CMat& rho) { return (rho * rho).trace().real(); }

io::Json to_json(const HamFn& fn) {
  io::Json j = std::visit(
      Overloaded{
          [](const HamFn::HartreeSquare& k) {
            return io::Json{{"kind", "hartree_square"}, {"h", io::cmat_to_json(k.h)}};
          },
          [](const HamFn::Trace&) { return io::Json{{"kind", "trace"}}; },
          [](const HamFn::Linear& k) {
            return io::Json{{"kind", "linear"}, {"h", io::cmat_to_json(k.h)}};
          },
          [](const HamFn::Composite& c) {
            io::Json terms = io::Json::array();
            for (const HamFn::Term& t : c.terms) {
              terms.push_back({{"factor", t.factor == Factor::First ? 1 : 2}, {"fn", to_json(*t.fn)}});
            }
            return io::Json{{"kind", "composite"}, {"n", c.n}, {"m", c.m}, {"terms", terms}};
          },
          [](const HamFn::Custom&) -> io::Json {
            throw io::FormatError("custom Hamiltonian functions are not serialisable");
          },
      },
      fn.kind());
  if (const auto* fd = std::get_if<FiniteDifference>(&fn.grad_mode())) {
    j["grad"] = {{"finite_difference", fd->step}};
  }
  return j;
}

namespace {

HamFn decode_hamfn(const io::Json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string()) {
    throw io::FormatError("Hamiltonian JSON must carry a string 'kind'");
  }
  const std::string kind = j.at("kind").get<std::string>();
  HamFn fn = [&] {
    if (kind == "hartree_square") return HamFn::hartree_square(io::cmat_from_json(j.at("h")));
    if (kind == "trace") return HamFn::trace();
    if (kind == "linear") return HamFn::linear(io::cmat_from_json(j.at("h")));
    if (kind == "composite") {
      std::vector<HamFn::Term> terms;
      for (const io::Json& t : j.at("terms")) {
        const int factor = t.at("factor").get<int>();
        if (factor != 1 && factor != 2) throw io::FormatError("composite term factor must be 1 or 2");
        terms.push_back({std::make_shared<const HamFn>(decode_hamfn(t.at("fn"))),
                         factor == 1 ? Factor::First : Factor::Second});
      }
      return HamFn::composite(j.at("n").get<int>(), j.at("m").get<int>(), std::move(terms));
    }
    throw io::FormatError("unknown Hamiltonian kind '" + kind + "'");
  }();
  if (j.contains("grad")) {
    const io::Json& g = j.at("grad");
    if (g.is_object() && g.contains("finite_difference")) {
      fn = fn.with_grad_mode(FiniteDifference{g.at("finite_difference").get<double>()});
    } else if (!(g.is_string() && g.get<std::string>() == "analytic")) {
      throw io::FormatError("'grad' must be \"analytic\" or {\"finite_difference\": step}");
    }
  }
  return fn;
}

}  // namespace

HamFn hamfn_from_json(const io::Json& j) {
  try {
    return decode_hamfn(j);
  } catch (const io::Json::exception& e) {
    throw io::FormatError(std::string("Hamiltonian JSON: ") + e.what());
  }
}

}  // namespace nonlincp::poisson

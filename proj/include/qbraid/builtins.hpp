#pragma once

/// @file builtins.hpp
/// Ready-made representations, braidings and relation sets.

#include "qbraid/ncalg.hpp"
#include "qbraid/uqg.hpp"

#include <string>
#include <utility>
#include <vector>

namespace qbraid {

struct Builtin {
  Representation rep;
  BraidedSpace space;
};

/// R = q Σ e_ii⊗e_ii + Σ_{i≠j} e_ii⊗e_jj + (q - q^-1) Σ_{i<j} e_ij⊗e_ji, in RTT form.
SymMatrix sl_rtt_matrix(int n);

/// The vector representation of U_q(sl_n) (K_i = q^-1 e_ii + q e_{i+1,i+1} + ...,
/// E_i = e_{i+1,i}, F_i = e_{i,i+1}) with its braiding Ψ = R∘τ. Throws for n < 2.
Builtin builtin_sl(int n);

/// Parses "sl:n" or "adjoint:sl2".
Builtin builtin_by_name(const std::string& name);

/// Three-dimensional representation of U_q(sl_2) (E = e21 + e32, F = [2](e12 + e23),
/// K = diag(q^-2, 1, q^2)) with the braiding Σ λ_J P_J on the summands of V⊗V,
/// normalized to eigenvalues q^2, -q^-2, q^-4 for J = 2, 1, 0.
Builtin adjoint_sl2();

/// The flip braiding on an n-dimensional space.
BraidedSpace flip_space(int n);

/// e = e12, f = e21, h = e11 - e22 acting on span{x_1, x_2}.
std::vector<std::pair<std::string, SymMatrix>> classical_sl2_actions();

/// Sym_q sp_4: six quadratic relations in x_1..x_4, ordered with precedence
/// x_2 > x_3 > x_4 > x_1 so that x_2 x_3 rewrites to q^2 x_3 x_2 + (q - q^-1) x_1 x_4.
RelationSet sp4_symmetric_relations();
std::vector<std::string> sp4_symmetric_relation_text();

}  // namespace qbraid

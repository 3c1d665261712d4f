#pragma once

// Text front end for scalars, A_q(n;R) elements and U_q words.
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*          '/' only by a scalar
//   unary   := '-' unary | postfix
//   postfix := primary ('^' ['-'] int | '\'')*     negative powers on scalars, R, Q only
//   primary := int | 'i' | 'q0' | 'q' | 'lambda' | yk | xk | Rk | Qk
//            | Kk | Ek | Fk | 'eps(' expr ')' | 'S(' expr ')' | '(' expr ')'
//
// Qk is sigma_k Rk^2 (Q_{n+1} = 1) and ' is the involution. Printing is the to_string of
// each type, which this grammar reads back to the same canonical element.

#include <string_view>
#include <variant>

#include "qweyl/coeff.hpp"
#include "qweyl/uq.hpp"
#include "qweyl/weyl.hpp"

namespace qweyl {

using ParsedExpression = std::variant<AlgebraElement, HopfElement>;

/// Scalars only; eps(...) of a Hopf expression is a scalar. Throws SyntaxError.
Scalar parse_scalar(std::string_view text);
/// Algebra letters and scalars. Throws SyntaxError, IndexOutOfRange.
AlgebraElement parse_algebra(std::string_view text, AlgebraDescriptor d);
/// Hopf letters and scalars, plus S(...). Throws SyntaxError.
HopfElement parse_hopf(std::string_view text);
/// Either kind; a pure scalar is returned as an AlgebraElement.
ParsedExpression parse_expression(std::string_view text, AlgebraDescriptor d);

}  // namespace qweyl

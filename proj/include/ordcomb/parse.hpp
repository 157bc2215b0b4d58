#pragma once

#include <string_view>

#include "ordcomb/fraisse.hpp"
#include "ordcomb/linear_order.hpp"
#include "ordcomb/omega.hpp"
#include "ordcomb/theta.hpp"

namespace ordcomb {

// Text parsers for the forms printed by the str() members. Each consumes
// the whole input (surrounding whitespace allowed) and throws ParseError
// with the byte offset and the expected token otherwise. Parsing is purely
// syntactic: element ranges and normal forms are checked by the callers.

BaseOrder parse_base_order(std::string_view text);   // fin:3 | omega | omega* | lex(X,Y)
Element parse_element(std::string_view text);        // 7 | (a,b)
OmegaTerm parse_omega_term(std::string_view text);   // w(e1 e2 ...)
ThetaTerm parse_theta_term(std::string_view text);   // 0 | W | e(x) | p(t) | s(t1 t2 ...) | th(t)
OrderTerm parse_order_term(std::string_view text);   // 1 | n:k | w | w* | q, joined by +

}  // namespace ordcomb

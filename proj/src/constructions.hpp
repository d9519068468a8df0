#pragma once

#include <map>
#include <string>

#include "automaton.hpp"
#include "compressed.hpp"
#include "expr.hpp"
#include "positions.hpp"

namespace butree {

enum class ConstructionKind { Position, Father, CompressedPosition, CompressedFather };

const char* constructionName(ConstructionKind kind);

// Delinearization morphism h of a linearized expression, as a symbol map
// total on the positions (identity on nullary symbols).
std::map<Symbol, Symbol> delinearizerOf(const LinearExpr& e);

// P_E: states Pos(E), finals Root(E), transition ((f1,...,fn),g,g) present
// iff (g,i) in Father(E,f_i) for every i. Deterministic for linear E.
TreeAutomaton positionAutomaton(const LinearExpr& e);
TreeAutomaton positionAutomatonGeneral(const Expr& e);

// Kernel of the augmented-Father map: positions sharing Father($(E),.) share
// a block.
StatePartition fatherCongruence(const LinearExpr& e);

// F_E: states are the augmented-Father classes, finality is ($,1) membership.
// Isomorphic to the quotient of P_E by the Father congruence.
TreeAutomaton fatherAutomaton(const LinearExpr& e);
TreeAutomaton fatherAutomatonGeneral(const Expr& e);

// One transition per position f of arity k, with i-th origin set
// {g | (f,i) in Father(E,g)} and target {f}.
CompressedTreeAutomaton compressedPositionAutomaton(const LinearExpr& e);
CompressedTreeAutomaton compressedPositionAutomatonGeneral(const Expr& e);

// Compressed Father automaton over the congruence blocks.
CompressedTreeAutomaton compressedFatherAutomaton(const LinearExpr& e);
CompressedTreeAutomaton compressedFatherAutomatonGeneral(const Expr& e);

}  // namespace butree

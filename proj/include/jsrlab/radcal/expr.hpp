#pragma once

#include <memory>
#include <string>
#include <vector>

namespace jsrlab::radcal {

/// Expression language for radical-valued operators on Banach algebras.
///
///   atoms        Rad Rcq Rhc Rhf Rsc Rbw Rsbw Rgcr Sa Sb
///   postfix      P^a (centralization), P^* (star closure), P^o (circ closure)
///   infix        P * R (convolution), P o R (superposition)   [binds tighter]
///                P v R (join),        P ^ R (meet)            [binds looser]
///   families     H{P, R, ...} (pointwise sup), B{P, R, ...} (pointwise inf)
///
/// '^' immediately followed by 'a', '*' or 'o' is a postfix; with whitespace
/// or any other continuation it is the meet operator.
enum class NodeKind {
    Atom,
    Conv,      // binary
    Comp,      // binary
    Join,      // n-ary
    Meet,      // n-ary
    Cent,      // unary postfix ^a
    StarClose, // unary postfix ^*
    CircClose, // unary postfix ^o
    FamilyH,   // n-ary
    FamilyB,   // n-ary
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    NodeKind kind;
    std::string atom;          // Atom only
    std::vector<ExprPtr> args; // everything else
};

ExprPtr make_atom(const std::string& name); // validates the atom name
ExprPtr make_node(NodeKind kind, std::vector<ExprPtr> args);

const std::vector<std::string>& atom_names();

/// Total structural order (used for canonical operand sorting) and equality.
int expr_cmp(const ExprPtr& a, const ExprPtr& b);
bool expr_equal(const ExprPtr& a, const ExprPtr& b);

/// Parse / print. Printing emits a form that parses back to the same tree.
ExprPtr parse_expr(const std::string& text); // ParseError carries "char N"
std::string to_string(const ExprPtr& e);

} // namespace jsrlab::radcal

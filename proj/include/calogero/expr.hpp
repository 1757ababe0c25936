#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "calogero/algebra.hpp"
#include "calogero/rational.hpp"

namespace calogero {

// Parse tree for the element input language:
//
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := atom | '(' expr ')'
//   atom   := 'a0_'INT | 'a1_'INT | 's_'INT | 'w[' (s_INT)+ ']'
//           | RATIONAL | 'nu' ('_'INT)?
//
// Indices are written 1-based. RATIONAL is an unsigned 'p' or 'p/q'; negative
// values are spelled with the sum-level minus. Parentheses are transparent:
// the tree keeps only sums, products, and atoms, so '((x))' parses equal to
// 'x'. Sums of one unsigned term and products of one factor collapse to the
// inner node.
struct ExprAst {
    enum class Kind { sum, product, generator, group_word, scalar, coupling };

    Kind kind = Kind::scalar;

    std::vector<ExprAst> children;  // sum, product
    std::vector<int> signs;         // sum only: +1 or -1 per child

    unsigned alpha = 0;          // generator: which family, 0 or 1
    unsigned index = 0;          // generator or indexed coupling: 1-based
    bool coupling_indexed = false;  // 'nu_k' vs plain 'nu'
    std::vector<unsigned> word;  // group_word: 1-based simple-reflection indices
    Rational value = 0;          // scalar

    // Byte span [begin, end) in the source text; ignored by equality so that
    // reparsing a pretty-printed tree compares equal.
    std::size_t begin = 0;
    std::size_t end = 0;

    bool operator==(const ExprAst& o) const;
    bool operator!=(const ExprAst& o) const { return !(*this == o); }
};

// Parses the full text as one expression. Throws SyntaxError carrying the
// byte offset of the offending character; trailing garbage is an error.
ExprAst parse_expr(const std::string& text);

// Canonical text form; parse_expr(pretty_print(ast)) == ast for every tree
// produced by parse_expr.
std::string pretty_print(const ExprAst& ast);

// Evaluates the tree over a context. Throws UnknownGenerator when a
// generator, simple-reflection, or coupling index is out of range for the
// context's root system.
AlgebraElement to_element(const ExprAst& ast, const AlgebraContext& ctx);

}  // namespace calogero

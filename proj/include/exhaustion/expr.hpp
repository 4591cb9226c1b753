#ifndef EXHAUSTION_EXPR_HPP
#define EXHAUSTION_EXPR_HPP

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

namespace exhaustion {

/// Syntax or lookup failure while parsing an expression; `offset` is the
/// byte position in the input that triggered it.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, std::size_t offset)
        : std::runtime_error(std::move(message) + " at offset " +
                             std::to_string(offset)),
          offset_(offset) {}

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

struct ExprNode;
using ExprPtr = std::shared_ptr<const ExprNode>;

/// Expression tree over the single variable x.
///
/// Grammar (binding tightest first): ^ (right-associative), unary minus,
/// * /, + - (left-associative); parentheses group. So -2^2 reads as
/// -(2^2) and 2^3^2 as 2^(3^2). Functions: sin cos tan exp ln sqrt abs.
/// Constants: pi, e.
struct ExprAst {
    ExprPtr root;

    /// Standard real semantics; division by zero, ln of a non-positive
    /// value and friends surface as non-finite results, never as thrown
    /// errors.
    double eval(double x) const;

    /// Minimal-parenthesis rendering; parsing it back yields a
    /// structurally identical tree.
    std::string to_string() const;

    bool structurally_equal(const ExprAst& other) const;
};

/// Parses `text` into an ExprAst. Throws ParseError on syntax errors,
/// unknown identifiers, or empty input.
ExprAst parse_expression(std::string_view text);

}  // namespace exhaustion

#endif

#pragma once

// Small arithmetic-expression parser shared by the scalar textual form and
// the curve registry: integers, identifiers, + - * / ^ and parentheses.
// Evaluation substitutes rational bindings for all identifiers except one
// designated free variable, producing a rational function in that variable.

#include "voa/scalar.hpp"

#include <map>
#include <memory>
#include <string>

namespace voa {

struct ParseError : std::runtime_error {
    size_t pos;
    ParseError(const std::string& msg, size_t at)
        : std::runtime_error(msg + " at position " + std::to_string(at)), pos(at) {}
};

class Formula {
  public:
    static Formula parse(const std::string& text);

    // identifiers: the free variable maps to the polynomial generator, "h" to
    // eta, anything else must appear in bindings
    Scalar eval(const std::string& free_var, const std::map<std::string, Rat>& bindings) const;

    // fully bound evaluation (no free variable)
    CycRat eval_value(const std::map<std::string, Rat>& bindings) const;

    const std::string& text() const { return text_; }

    struct Node;

  private:
    std::shared_ptr<const Node> root_;
    std::string text_;
};

}  // namespace voa

#pragma once
#include <memory>
#include <string>
#include <vector>

namespace rgm {

// Arithmetic expressions describing recursive trees and infinite paths.
// Variables: len and last (position-dependent), n (path step index).
// Subtraction truncates at zero; comparisons yield 0 or 1.
struct TreeExpr;
using TreeExprPtr = std::shared_ptr<const TreeExpr>;

struct TreeExpr {
  enum class Op { Num, Len, Last, N, Add, Sub, Mul, Min, Max, Lt, Le, Gt, Ge, Eq, Ne, If };
  Op op;
  unsigned long num = 0;
  TreeExprPtr x, y, z;  // If uses all three: cond, then, else
};

// Grammar: if <e> then <e> else <e> | comparison over +,-,* with
// min(e,e), max(e,e), parentheses, naturals, len, last, n.
TreeExprPtr parse_tree_expr(const std::string& text);
unsigned long eval_tree_expr(const TreeExprPtr& e, unsigned long len, unsigned long last,
                             unsigned long n);

// branching function: position sigma (a word over child indices) -> arity
struct RecTree {
  TreeExprPtr spec;
  std::string text;
  unsigned long branching(const std::vector<unsigned long>& sigma) const;
};

// infinite path: step index -> chosen branch
struct PathSpec {
  TreeExprPtr spec;
  std::string text;
  unsigned long at(unsigned long n) const;
};

RecTree parse_rec_tree(const std::string& text);
PathSpec parse_path_spec(const std::string& text);

}  // namespace rgm

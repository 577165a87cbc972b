#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "graphdelta/graph.hpp"

namespace graphdelta {

enum class StepKind {
  Empty,              // push empty(a)
  Path,               // push path(a)
  Cycle,              // push cycle(a)
  Complete,           // push complete(a)
  CompleteBipartite,  // push complete_bipartite(a, b)
  DisjointUnion,      // pop rhs, pop lhs, push disjoint_union(lhs, rhs)
  Join,               // pop rhs, pop lhs, push join(lhs, rhs)
  DuplicateVertex,    // top = duplicate_vertex(top, a, b)
  AddEdge,            // top = top.with_edge(a, b)
  RemoveEdge,         // top = top.without_edge(a, b)
};

/// One instruction of the stack program. Vertex operands are 1-based,
/// exactly as printed.
struct RecipeStep {
  StepKind kind;
  int a = 0;
  int b = 0;

  friend bool operator==(const RecipeStep&, const RecipeStep&) = default;
};

/// Audit trail of a witness construction: a small stack program whose
/// replay reproduces the witness graph bit for bit.
struct WitnessRecipe {
  std::string family_tag;
  std::string note;
  std::vector<RecipeStep> steps;

  friend bool operator==(const WitnessRecipe&, const WitnessRecipe&) = default;
};

/// Executes the program. Throws FormatError unless exactly one graph is
/// left on the stack; construction errors propagate unchanged.
Graph replay(const WitnessRecipe& recipe);

/// Line-oriented text form, e.g.
///   family Thm-kappa1-f1-dup
///   path 6
///   duplicate 2 2
std::string to_text(const WitnessRecipe& recipe);
WitnessRecipe parse_recipe(std::string_view text);

std::string to_json(const WitnessRecipe& recipe);

/// Records steps while applying them, so the recipe and the graph can
/// never drift apart during construction.
class RecipeBuilder {
 public:
  explicit RecipeBuilder(std::string family_tag);

  RecipeBuilder& empty(int m);
  RecipeBuilder& path(int m);
  RecipeBuilder& cycle(int m);
  RecipeBuilder& complete(int m);
  RecipeBuilder& complete_bipartite(int a, int b);
  RecipeBuilder& disjoint_union();
  RecipeBuilder& join();
  RecipeBuilder& duplicate(int vertex, int times = 1);
  RecipeBuilder& add_edge(int u, int v);
  RecipeBuilder& remove_edge(int u, int v);
  /// Adds every missing edge among `vertices` (1-based).
  RecipeBuilder& make_clique(const std::vector<int>& vertices);
  RecipeBuilder& note(std::string text);

  /// Order of the graph on top of the stack.
  int order() const;
  const Graph& top() const;

  struct Result {
    Graph graph;
    WitnessRecipe recipe;
  };
  Result finish() &&;

 private:
  void apply(RecipeStep step);

  WitnessRecipe recipe_;
  std::vector<Graph> stack_;
};

}  // namespace graphdelta

#include "graphdelta/recipe.hpp"

#include <json.hpp>
#include <sstream>
#include <utility>

#include "graphdelta/constructions.hpp"
#include "graphdelta/error.hpp"

namespace graphdelta {

namespace {

struct StepSpelling {
  StepKind kind;
  std::string_view word;
  int operands;
};

constexpr StepSpelling kSpellings[] = {
    {StepKind::Empty, "empty", 1},
    {StepKind::Path, "path", 1},
    {StepKind::Cycle, "cycle", 1},
    {StepKind::Complete, "complete", 1},
    {StepKind::CompleteBipartite, "bipartite", 2},
    {StepKind::DisjointUnion, "union", 0},
    {StepKind::Join, "join", 0},
    {StepKind::DuplicateVertex, "duplicate", 2},
    {StepKind::AddEdge, "add", 2},
    {StepKind::RemoveEdge, "remove", 2},
};

const StepSpelling& spelling(StepKind kind) {
  for (const auto& s : kSpellings) {
    if (s.kind == kind) return s;
  }
  throw Error(Errc::FormatError, "unknown step kind");
}

// Stack machine shared by replay() and RecipeBuilder.
void execute(std::vector<Graph>& stack, const RecipeStep& step) {
  auto pop = [&stack]() {
    if (stack.empty()) throw Error(Errc::FormatError, "recipe step needs a graph on the stack");
    Graph g = stack.back();
    stack.pop_back();
    return g;
  };
  auto top = [&stack]() -> Graph& {
    if (stack.empty()) throw Error(Errc::FormatError, "recipe step needs a graph on the stack");
    return stack.back();
  };

  switch (step.kind) {
    case StepKind::Empty: stack.push_back(Graph::empty(step.a)); break;
    case StepKind::Path: stack.push_back(path(step.a)); break;
    case StepKind::Cycle: stack.push_back(cycle(step.a)); break;
    case StepKind::Complete: stack.push_back(complete(step.a)); break;
    case StepKind::CompleteBipartite: stack.push_back(complete_bipartite(step.a, step.b)); break;
    case StepKind::DisjointUnion: {
      Graph rhs = pop();
      Graph lhs = pop();
      stack.push_back(disjoint_union(lhs, rhs));
      break;
    }
    case StepKind::Join: {
      Graph rhs = pop();
      Graph lhs = pop();
      stack.push_back(join(lhs, rhs));
      break;
    }
    case StepKind::DuplicateVertex: top() = duplicate_vertex(top(), step.a - 1, step.b); break;
    case StepKind::AddEdge: top() = top().with_edge(step.a - 1, step.b - 1); break;
    case StepKind::RemoveEdge: top() = top().without_edge(step.a - 1, step.b - 1); break;
  }
}

}  // namespace

Graph replay(const WitnessRecipe& recipe) {
  std::vector<Graph> stack;
  for (const auto& step : recipe.steps) execute(stack, step);
  if (stack.size() != 1) {
    throw Error(Errc::FormatError, "recipe leaves " + std::to_string(stack.size()) + " graphs on the stack");
  }
  return stack.front();
}

std::string to_text(const WitnessRecipe& recipe) {
  std::ostringstream out;
  out << "family " << recipe.family_tag << '\n';
  if (!recipe.note.empty()) out << "note " << recipe.note << '\n';
  for (const auto& step : recipe.steps) {
    const auto& s = spelling(step.kind);
    out << s.word;
    if (s.operands >= 1) out << ' ' << step.a;
    if (s.operands >= 2) out << ' ' << step.b;
    out << '\n';
  }
  return out.str();
}

WitnessRecipe parse_recipe(std::string_view text) {
  WitnessRecipe recipe;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream words(line);
    std::string word;
    words >> word;
    if (word == "family" || word == "note") {
      std::string rest;
      std::getline(words >> std::ws, rest);
      (word == "family" ? recipe.family_tag : recipe.note) = rest;
      continue;
    }
    const StepSpelling* match = nullptr;
    for (const auto& s : kSpellings) {
      if (s.word == word) match = &s;
    }
    if (match == nullptr) throw Error(Errc::FormatError, "unknown recipe step '" + word + "'");
    RecipeStep step{match->kind};
    if (match->operands >= 1 && !(words >> step.a)) throw Error(Errc::FormatError, "missing operand in '" + line + "'");
    if (match->operands >= 2 && !(words >> step.b)) throw Error(Errc::FormatError, "missing operand in '" + line + "'");
    std::string extra;
    if (words >> extra) throw Error(Errc::FormatError, "trailing text in '" + line + "'");
    recipe.steps.push_back(step);
  }
  return recipe;
}

std::string to_json(const WitnessRecipe& recipe) {
  nlohmann::ordered_json doc;
  doc["family"] = recipe.family_tag;
  if (!recipe.note.empty()) doc["note"] = recipe.note;
  doc["steps"] = nlohmann::ordered_json::array();
  for (const auto& step : recipe.steps) {
    const auto& s = spelling(step.kind);
    nlohmann::ordered_json entry = nlohmann::ordered_json::array({s.word});
    if (s.operands >= 1) entry.push_back(step.a);
    if (s.operands >= 2) entry.push_back(step.b);
    doc["steps"].push_back(entry);
  }
  return doc.dump();
}

RecipeBuilder::RecipeBuilder(std::string family_tag) { recipe_.family_tag = std::move(family_tag); }

void RecipeBuilder::apply(RecipeStep step) {
  execute(stack_, step);
  recipe_.steps.push_back(step);
}

RecipeBuilder& RecipeBuilder::empty(int m) { apply({StepKind::Empty, m}); return *this; }
RecipeBuilder& RecipeBuilder::path(int m) { apply({StepKind::Path, m}); return *this; }
RecipeBuilder& RecipeBuilder::cycle(int m) { apply({StepKind::Cycle, m}); return *this; }
RecipeBuilder& RecipeBuilder::complete(int m) { apply({StepKind::Complete, m}); return *this; }
RecipeBuilder& RecipeBuilder::complete_bipartite(int a, int b) { apply({StepKind::CompleteBipartite, a, b}); return *this; }
RecipeBuilder& RecipeBuilder::disjoint_union() { apply({StepKind::DisjointUnion}); return *this; }
RecipeBuilder& RecipeBuilder::join() { apply({StepKind::Join}); return *this; }
RecipeBuilder& RecipeBuilder::duplicate(int vertex, int times) { apply({StepKind::DuplicateVertex, vertex, times}); return *this; }
RecipeBuilder& RecipeBuilder::add_edge(int u, int v) { apply({StepKind::AddEdge, u, v}); return *this; }
RecipeBuilder& RecipeBuilder::remove_edge(int u, int v) { apply({StepKind::RemoveEdge, u, v}); return *this; }

RecipeBuilder& RecipeBuilder::make_clique(const std::vector<int>& vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (!top().has_edge(vertices[i] - 1, vertices[j] - 1)) add_edge(vertices[i], vertices[j]);
    }
  }
  return *this;
}

RecipeBuilder& RecipeBuilder::note(std::string text) {
  recipe_.note = std::move(text);
  return *this;
}

int RecipeBuilder::order() const { return top().order(); }

const Graph& RecipeBuilder::top() const {
  if (stack_.empty()) throw Error(Errc::FormatError, "recipe has no graph yet");
  return stack_.back();
}

RecipeBuilder::Result RecipeBuilder::finish() && {
  if (stack_.size() != 1) {
    throw Error(Errc::FormatError, "recipe leaves " + std::to_string(stack_.size()) + " graphs on the stack");
  }
  return Result{stack_.front(), std::move(recipe_)};
}

}  // namespace graphdelta

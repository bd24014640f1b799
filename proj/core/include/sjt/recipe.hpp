#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sjt/supermodule.hpp"

namespace sjt {

/// Construction expression, e.g. "tensor(kac0, dual(kac0))",
/// "omega(trivial(ev), 2)", "sum(w(3), pi(free(1, ev)))", "file(\"m.json\")".
struct RecipeNode {
  using Arg = std::variant<RecipeNode, long long, std::string>;
  std::string tag;
  std::vector<Arg> args;
  std::size_t position = 0;
};

RecipeNode parse_recipe(std::string_view text);

/// sl11 when the recipe uses kac0 / dual_kac0, the algebra of the first
/// file leaf otherwise, else exterior(2).
AlgebraSpec infer_algebra(const RecipeNode& recipe, const std::function<Supermodule(const std::string&)>& loader);

using ModuleLoader = std::function<Supermodule(const std::string&)>;

/// Evaluates a recipe. Leaves without their own algebra (trivial, free, w,
/// random) are built over `algebra` (inferred when absent). kac0 and
/// dual_kac0 are also accepted over exterior(2), through x -> z1, y -> z2.
Supermodule build_recipe(std::string_view text, std::optional<AlgebraSpec> algebra = std::nullopt,
                         const ModuleLoader& loader = {});

}  // namespace sjt

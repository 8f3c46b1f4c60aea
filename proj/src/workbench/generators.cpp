#include <algorithm>

#include "elw/workbench.hpp"

namespace elw {

Formula FormulaGenerator::exact(std::size_t size, VarIndex vars, bool modal) {
  // Propositional trees have odd size.
  if (!modal && size % 2 == 0) --size;
  if (size <= 1) {
    const std::size_t pick = below(vars + 1);
    return pick == vars ? Formula::bottom() : Formula::var(static_cast<VarIndex>(pick));
  }
  const std::size_t kinds = modal ? 5 : 3;
  const std::size_t k = size == 2 ? 3 + below(2) : below(kinds);
  if (k >= 3) {
    Formula inner = exact(size - 1, vars, modal);
    return k == 3 ? Formula::box(std::move(inner)) : Formula::know(std::move(inner));
  }
  const std::size_t left = modal ? 1 + below(size - 2) : 1 + 2 * below((size - 1) / 2);
  Formula l = exact(left, vars, modal);
  Formula r = exact(size - 1 - left, vars, modal);
  switch (k) {
    case 0:
      return Formula::conj(std::move(l), std::move(r));
    case 1:
      return Formula::disj(std::move(l), std::move(r));
    default:
      return Formula::implies(std::move(l), std::move(r));
  }
}

Formula FormulaGenerator::upto(std::size_t max_size, VarIndex vars, bool modal) {
  return exact(1 + below(std::max<std::size_t>(max_size, 1)), vars, modal);
}

}  // namespace elw

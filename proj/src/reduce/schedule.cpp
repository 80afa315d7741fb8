#include <algorithm>
#include <array>

#include "precubical/reduce.hpp"

namespace precubical {

ReductionResult apply_step(const Complex& p, const RecipeStep& step, Mode mode, ApplyOptions options) {
  switch (step.kind) {
    case ReductionKind::edge_collapse: return edge_collapse(p, step.cell, step.b, mode, options);
    case ReductionKind::square_one_free: return square_one_free(p, step.cell, step.b, mode, options);
    case ReductionKind::square_two_free:
      return square_two_free(p, step.cell, step.a, step.b, mode, options);
  }
  throw Error("unknown reduction kind");
}

namespace {

// Candidate reductions in the order the greedy policy tries them.
std::vector<RecipeStep> candidates_for(const CellRef& c) {
  std::vector<RecipeStep> out;
  if (c.degree == 2) {
    out.push_back({ReductionKind::square_one_free, c.id, 0, 1});
    out.push_back({ReductionKind::square_one_free, c.id, 0, 0});
    static constexpr std::array<std::pair<int, int>, 4> kTwoFree{{{2, 0}, {1, 1}, {1, 0}, {2, 1}}};
    for (auto [a, b] : kTwoFree) out.push_back({ReductionKind::square_two_free, c.id, a, b});
  } else if (c.degree == 1) {
    out.push_back({ReductionKind::edge_collapse, c.id, 0, 0});
    out.push_back({ReductionKind::edge_collapse, c.id, 0, 1});
  }
  return out;
}

std::optional<ReductionResult> first_guaranteed(const Complex& p) {
  auto cells = p.cells();
  std::stable_sort(cells.begin(), cells.end(), [](const CellRef& a, const CellRef& b) {
    if (a.degree != b.degree) return a.degree > b.degree;
    return a.id < b.id;
  });
  for (const auto& c : cells) {
    for (const auto& step : candidates_for(c)) {
      auto checked = apply_step(p, step, Mode::check);
      if (checked.certificate.conditions_hold() && checked.certificate.fbg_guaranteed) {
        return apply_step(p, step, Mode::apply);
      }
    }
  }
  return std::nullopt;
}

ReductionCertificate missing_cell_certificate(const RecipeStep& step) {
  ReductionCertificate cert;
  cert.kind = step.kind;
  cert.cell = {step.kind == ReductionKind::edge_collapse ? 1 : 2, step.cell};
  cert.a = step.a;
  cert.b = step.b;
  cert.conditions.push_back({"exists", "'" + step.cell + "' is a cell of the current complex", false, {}});
  return cert;
}

}  // namespace

AutoReduceResult auto_reduce(const Complex& p, Policy policy, const std::vector<RecipeStep>& recipe) {
  AutoReduceResult out{p, {}};
  if (policy == Policy::greedy) {
    while (auto step = first_guaranteed(out.complex)) {
      out.complex = std::move(*step->complex);
      out.trail.push_back(std::move(step->certificate));
    }
    return out;
  }

  for (std::size_t index = 0; index < recipe.size(); ++index) {
    const auto& step = recipe[index];
    ReductionResult checked;
    try {
      checked = apply_step(out.complex, step, Mode::check);
    } catch (const UnknownCell& e) {
      throw RecipeStepFailed(index, step, missing_cell_certificate(step), e.what());
    } catch (const WrongDegree& e) {
      throw RecipeStepFailed(index, step, missing_cell_certificate(step), e.what());
    }
    const auto& cert = checked.certificate;
    if (!cert.conditions_hold()) {
      throw RecipeStepFailed(index, step, cert, ConditionsFailed(cert).what());
    }
    if (!cert.fbg_guaranteed) {
      throw RecipeStepFailed(index, step, cert, GuaranteeLost(cert).what());
    }
    auto applied = apply_step(out.complex, step, Mode::apply);
    out.complex = std::move(*applied.complex);
    out.trail.push_back(std::move(applied.certificate));
  }
  return out;
}

}  // namespace precubical

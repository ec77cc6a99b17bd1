#pragma once

#include <map>

#include "coeff_poly.hpp"
#include "nc_poly.hpp"
#include "scheme.hpp"

namespace splitoc {

using Substitution = std::map<Unknown, CoeffPoly>;

/// Identifications forced by the structural ansatz. Each dependent unknown
/// maps to zero or to its lowest-indexed mirror; free unknowns are absent.
inline Substitution structural_identifications(const SchemeSpec& spec) {
  spec.validate();
  const int s = spec.stages;
  Substitution out;
  auto tie = [&](Family f, int j, int mirror) {
    if (j > mirror)
      out[{f, j}] = CoeffPoly::variable({f, mirror});
  };
  switch (spec.ansatz) {
  case Ansatz::symmetric_a1_zero:
    out[{Family::a, 1}] = CoeffPoly();
    for (int j = 2; j <= s; ++j)
      tie(Family::a, j, s + 2 - j);
    for (int j = 1; j <= s; ++j)
      tie(Family::b, j, s + 1 - j);
    break;
  case Ansatz::symmetric_bs_zero:
    out[{Family::b, s}] = CoeffPoly();
    for (int j = 1; j <= s; ++j)
      tie(Family::a, j, s + 1 - j);
    for (int j = 1; j < s; ++j)
      tie(Family::b, j, s - j);
    break;
  case Ansatz::palindromic:
    for (int j = 1; j <= s; ++j)
      out[{Family::b, j}] = CoeffPoly::variable({Family::a, s + 1 - j});
    break;
  case Ansatz::plain:
  case Ansatz::fixed_subset:
    break;
  }
  return out;
}

/// Full substitution: structural identifications followed by the fixed
/// values. Fixing two identified unknowns to different values, or fixing
/// an unknown the ansatz pins to zero to something else, is rejected.
inline Substitution ansatz_substitution(const SchemeSpec& spec) {
  Substitution structural = structural_identifications(spec);
  Assignment representative_values;
  for (const auto& [u, value] : spec.fixed) {
    auto it = structural.find(u);
    CoeffPoly image = it == structural.end() ? CoeffPoly::variable(u) : it->second;
    if (image.is_constant()) {
      if (image.constant_term() != value)
        throw invalid_input("fixed value " + u.name() + "=" + to_string(value) +
                            " contradicts the ansatz, which sets it to " +
                            to_string(image.constant_term()));
      continue;
    }
    Unknown rep = image.terms().begin()->first.factors().front().first;
    auto [pos, inserted] = representative_values.emplace(rep, value);
    if (!inserted && pos->second != value)
      throw invalid_input("contradictory fixed values for identified unknowns " + rep.name() +
                          " and " + u.name());
  }
  if (representative_values.empty())
    return structural;

  Substitution fixed_images;
  for (const auto& [u, v] : representative_values)
    fixed_images[u] = CoeffPoly(v);
  Substitution out;
  for (Unknown u : spec.unknowns()) {
    auto it = structural.find(u);
    CoeffPoly image = it == structural.end() ? CoeffPoly::variable(u) : it->second;
    image = substitute(image, fixed_images);
    if (image != CoeffPoly::variable(u))
      out[u] = image;
  }
  return out;
}

inline CoeffPoly apply_ansatz(const SchemeSpec& spec, const CoeffPoly& p) {
  return substitute(p, ansatz_substitution(spec));
}

inline NCPoly apply_ansatz(const SchemeSpec& spec, const NCPoly& p) {
  const Substitution sub = ansatz_substitution(spec);
  return map_coefficients<CoeffPoly>(p, [&](const CoeffPoly& c) { return substitute(c, sub); });
}

/// Full coefficient vector for values of the free unknowns. Unknowns neither
/// free nor determined by the ansatz must be present in `free_values`.
inline Assignment expand_free_values(const SchemeSpec& spec, const Assignment& free_values) {
  const Substitution sub = ansatz_substitution(spec);
  Assignment out;
  for (Unknown u : spec.unknowns()) {
    auto it = sub.find(u);
    out[u] = it == sub.end() ? evaluate(CoeffPoly::variable(u), free_values)
                             : evaluate(it->second, free_values);
  }
  return out;
}

} // namespace splitoc

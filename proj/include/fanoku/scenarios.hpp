#pragma once

#include "fanoku/report.hpp"
#include "fanoku/wallengine.hpp"

#include <string>
#include <vector>

namespace fanoku {

/// Deterministic sample of V: beta = -k/n_beta (0 < k < n_beta) and n_alpha
/// values of alpha^2 below the upper boundary (the closed branch includes it).
std::vector<TiltQ> region_V_grid(int n_beta = 24, int n_alpha = 4);

/// Sign table for O_X, O_X(H), O_X(-H)[1], O_X(-2H)[1] at pt.
Report verify_theorem_U(const FanoQ& X, const TiltQ& pt);
Report verify_lines(const FanoQ& X);
Report verify_J(const FanoQ& X);
Report verify_numclass(const FanoQ& X);
Report verify_mutation(const FanoQ& X);
Report verify_orbit(const FanoQ& X);

/// thmU, lines, jcomplex, numclass, mutation, orbit.
const std::vector<std::string>& scenario_ids();

/// One scenario id or "all" (every scenario, in registry order).
/// pt is used by thmU only.
std::vector<Report> run_scenarios(const FanoQ& X, const std::string& id, const TiltQ& pt);

}  // namespace fanoku

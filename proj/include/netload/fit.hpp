#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "netload/theory.hpp"

namespace netload {

// Least-squares fit of one law's functional form. Coefficients are in the
// published order, leading term first:
//   Sarnoff  y = a n + b
//   Odlyzko  y = a n ln n + b n + c
//   Metcalfe y = a n^2 + b n + c
//   Cube     y = a n^3 + b n^2 + c n + d
struct FitModel {
    LawKind law = LawKind::Other;
    std::vector<double> coefficients;
    double r_squared = 0.0;
    double adj_r_squared = 0.0;
    double rmse = 0.0;

    double evaluate(double n) const;
};

int basis_size(LawKind law);

// Normal equations with per-column scaling; throws "underdetermined fit" when
// there are fewer distinct n than basis columns.
FitModel fit(std::span<const std::pair<double, double>> points, LawKind law);

// All four laws ordered by descending adjusted R-squared; near-ties go to the
// model with fewer parameters.
std::vector<FitModel> rank_models(std::span<const std::pair<double, double>> points);

// CSV line "law,a,b,c,d,r2,adj_r2" with blanks for absent coefficients.
std::string fit_csv_row(const FitModel& model);

} // namespace netload

#pragma once

#include <span>
#include <utility>

#include "netload/order.hpp"
#include "netload/params.hpp"

namespace netload {

enum class LawKind { Sarnoff, Odlyzko, Metcalfe, Cube, Other };

const char* law_name(LawKind law);

// Which factor of the per-session tree-length law to report: the dependence
// on the destination count r, or the n-dependent prefactor.
enum class LpMode { InR, InN };

// Per-session EMST length over r anchor points at separation exponent s:
// always sqrt(r) in r; the n-part switches at s = 1 and s = 2.
AsymptoticOrder lp_order(double separation, LpMode mode);

// Closed-form order of the destination-count normalization sum G(i, d).
AsymptoticOrder g_order(double influence, double destination);

// Closed-form order of the total destination count W(i, d) = sum_k r_k.
AsymptoticOrder w_order(double influence, double destination);

// Lower-bound order of the aggregate traffic load, i.e. the full table cell
// times the lambda class. Valid only for uniform geography (g = 0).
AsymptoticOrder ln_order(LambdaClass lambda, const ExponentParams& params);

struct LawClass {
    LawKind kind = LawKind::Other;
    AsymptoticOrder order;
};

// Maps the traffic-load order onto the named laws where the exponents match
// exactly: n -> Sarnoff, n log n -> Odlyzko, n^2 -> Metcalfe, n^3 -> Cube.
LawClass classify_law(LambdaClass lambda, const ExponentParams& params);

// Least-squares slope of ln(value / order_eval(theory, n)) against ln n.
// Near zero means the theoretical order matches the measurements.
double ratio_slope(std::span<const std::pair<int, double>> samples,
                   const AsymptoticOrder& theory);

} // namespace netload

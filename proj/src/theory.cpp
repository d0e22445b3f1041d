#include "netload/theory.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

namespace netload {

namespace {

const Rational kHalf{1, 2};
const Rational kThreeHalves{3, 2};
const Rational kFiveHalves{5, 2};

AsymptoticOrder theta(Rational n_exp, Rational log_exp) {
    return AsymptoticOrder{n_exp, log_exp, BoundKind::Theta};
}

AsymptoticOrder omega(Rational n_exp, Rational log_exp) {
    return AsymptoticOrder{n_exp, log_exp, BoundKind::Omega};
}

Rational snap(double v, const char* what) {
    if (!std::isfinite(v) || v < 0.0)
        throw std::invalid_argument(std::string(what) + " exponent must be finite and >= 0");
    return rational_from_double(v);
}

} // namespace

const char* law_name(LawKind law) {
    switch (law) {
        case LawKind::Sarnoff: return "Sarnoff";
        case LawKind::Odlyzko: return "Odlyzko";
        case LawKind::Metcalfe: return "Metcalfe";
        case LawKind::Cube: return "Cube";
        case LawKind::Other: return "Other";
    }
    throw std::logic_error("unreachable law kind");
}

AsymptoticOrder lp_order(double separation, LpMode mode) {
    const Rational s = snap(separation, "separation");
    if (mode == LpMode::InR) return theta(kHalf, 0);
    if (s > 2) return theta(0, 0);
    if (s == Rational(2)) return theta(0, 1);
    if (s > 1) return theta(Rational(1) - s * kHalf, 0); // 1 < s < 2
    if (s == Rational(1)) return theta(kHalf, -kHalf);
    return theta(kHalf, 0); // 0 <= s < 1
}

// Destination-count normalization sum. Rows follow the destination exponent,
// branches the influence exponent; first match wins, mirroring the published
// table cell for cell.
AsymptoticOrder g_order(double influence, double destination) {
    const Rational i = snap(influence, "influence");
    const Rational d = snap(destination, "destination");

    if (d > kThreeHalves) {
        return theta(0, 0); // i >= 0
    }
    if (d == kThreeHalves) {
        if (i > 1) return theta(0, 0);
        return theta(0, 1); // 0 <= i <= 1
    }
    if (d > 1) { // 1 < d < 3/2
        if (i > kFiveHalves - d) return theta(0, 0);
        if (i == kFiveHalves - d) return theta(0, 1);
        if (i > 1) return theta(kFiveHalves - i - d, 0); // 1 < i < 5/2 - d
        if (i == Rational(1)) return theta(kThreeHalves - d, -1);
        return theta(kThreeHalves - d, 0); // 0 <= i < 1
    }
    if (d == Rational(1)) {
        if (i >= kThreeHalves) return theta(0, 0);
        if (i > 1) return theta(kThreeHalves - i, -1); // 1 < i < 3/2
        if (i == Rational(1)) return theta(kHalf, -2);
        return theta(kHalf, -1); // 0 <= i < 1
    }
    // 0 <= d < 1
    if (i > kThreeHalves) return theta(0, 0);
    if (i == kThreeHalves) return theta(0, 1);
    if (i > 1) return theta(kThreeHalves - i, 0); // 1 < i < 3/2
    if (i == Rational(1)) return theta(kHalf, -1);
    return theta(kHalf, 0); // 0 <= i < 1
}

// Total destination count sum_k r_k. Same transcription discipline as above.
AsymptoticOrder w_order(double influence, double destination) {
    const Rational i = snap(influence, "influence");
    const Rational d = snap(destination, "destination");

    if (d > 2) {
        return theta(1, 0); // i >= 0
    }
    if (d == Rational(2)) {
        if (i > 1) return theta(1, 0);
        return theta(1, 1); // 0 <= i <= 1
    }
    if (d > 1) { // 1 < d < 2
        if (i > Rational(3) - d) return theta(1, 0);
        if (i == Rational(3) - d) return theta(1, 1);
        if (i > 1) return theta(Rational(4) - i - d, 0); // 1 < i < 3 - d
        if (i == Rational(1)) return theta(Rational(3) - d, -1);
        return theta(Rational(3) - d, 0); // 0 <= i < 1
    }
    if (d == Rational(1)) {
        if (i >= 2) return theta(1, 0);
        if (i > 1) return theta(Rational(3) - i, -1); // 1 < i < 2
        if (i == Rational(1)) return theta(2, -2);
        return theta(2, -1); // 0 <= i < 1
    }
    // 0 <= d < 1
    if (i > 2) return theta(1, 0);
    if (i == Rational(2)) return theta(1, 1);
    if (i > 1) return theta(Rational(3) - i, 0); // 1 < i < 2
    if (i == Rational(1)) return theta(2, -1);
    return theta(2, 0); // 0 <= i < 1
}

namespace {

// Traffic-load table at lambda = Theta(1). Outer branches walk the
// destination-exponent rows, inner branches the separation columns, then the
// influence splits, in the same order as the published table.
AsymptoticOrder load_order_base(const Rational& i, const Rational& s, const Rational& d) {
    if (d > 2) {
        if (s > 2) return omega(1, 0);                             // i >= 0
        if (s == Rational(2)) return omega(1, 1);                  // i >= 0
        if (s > 1) return omega(Rational(2) - s * kHalf, 0);       // i >= 0
        if (s == Rational(1)) return omega(kThreeHalves, -kHalf);  // i >= 0
        return omega(kThreeHalves, 0);                             // i >= 0
    }

    if (d == Rational(2)) {
        if (s > 2) {
            if (i > 1) return omega(1, 0);
            return omega(1, 1); // 0 <= i <= 1
        }
        if (s == Rational(2)) return omega(1, 1);
        if (s > 1) return omega(Rational(2) - s * kHalf, 0);
        if (s == Rational(1)) return omega(kThreeHalves, -kHalf);
        return omega(kThreeHalves, 0);
    }

    if (d > kThreeHalves) { // 3/2 < d < 2
        if (s > 2) {
            if (i > Rational(3) - d) return omega(1, 0);
            if (i == Rational(3) - d) return omega(1, 1);
            if (i > 1) return omega(Rational(4) - i - d, 0); // 1 < i < 3 - d
            if (i == Rational(1)) return omega(Rational(3) - d, -1);
            return omega(Rational(3) - d, 0); // 0 <= i < 1
        }
        if (s == Rational(2)) {
            if (i >= Rational(3) - d) return omega(1, 1);
            if (i > 1) return omega(Rational(4) - i - d, 0);
            if (i == Rational(1)) return omega(Rational(3) - d, -1);
            return omega(Rational(3) - d, 0);
        }
        if (s > 1) { // 1 < s < 2
            if (i >= Rational(3) - d) return omega(Rational(2) - s * kHalf, 0);
            if (i > 1) return omega(Rational(4) - i - d, 0);
            if (i == Rational(1)) return omega(Rational(3) - d, -1);
            return omega(Rational(3) - d, 0);
        }
        if (s == Rational(1)) return omega(kThreeHalves, -kHalf); // i >= 0
        return omega(kThreeHalves, 0);                            // i >= 0
    }

    if (d == kThreeHalves) {
        if (s > 2) {
            if (i > kThreeHalves) return omega(1, 0);
            if (i == kThreeHalves) return omega(1, 1);
            if (i > 1) return omega(kFiveHalves - i, 0); // 1 < i < 3/2
            if (i == Rational(1)) return omega(kThreeHalves, -1);
            return omega(kThreeHalves, 0); // 0 <= i < 1
        }
        if (s == Rational(2)) {
            if (i >= kThreeHalves) return omega(1, 1);
            if (i > 1) return omega(kFiveHalves - i, 0);
            if (i == Rational(1)) return omega(kThreeHalves, -1);
            return omega(kThreeHalves, 0);
        }
        if (s > 1) {
            if (i >= kThreeHalves) return omega(Rational(2) - s * kHalf, 0);
            if (i > 1) return omega(kFiveHalves - i, 0);
            if (i == Rational(1)) return omega(kThreeHalves, -1);
            return omega(kThreeHalves, 0);
        }
        if (s == Rational(1)) {
            if (i > 1) return omega(kThreeHalves, -kHalf);
            return omega(kThreeHalves, kHalf); // 0 <= i <= 1
        }
        if (i > 1) return omega(kThreeHalves, 0);
        return omega(kThreeHalves, 1); // 0 <= i <= 1
    }

    if (d > 1) { // 1 < d < 3/2
        if (s > 2) {
            if (i > Rational(3) - d) return omega(1, 0);
            if (i == Rational(3) - d) return omega(1, 1);
            if (i > 1) return omega(Rational(4) - i - d, 0); // 1 < i < 3 - d
            if (i == Rational(1)) return omega(Rational(3) - d, -1);
            return omega(Rational(3) - d, 0); // 0 <= i < 1
        }
        if (s == Rational(2)) {
            if (i >= Rational(3) - d) return omega(1, 1);
            if (i > 1) return omega(Rational(4) - i - d, 0);
            if (i == Rational(1)) return omega(Rational(3) - d, -1);
            return omega(Rational(3) - d, 0);
        }
        if (s > 1) {
            if (i >= Rational(3) - d) return omega(Rational(2) - s * kHalf, 0);
            if (i > 1) return omega(Rational(4) - i - d, 0);
            if (i == Rational(1)) return omega(Rational(3) - d, -1);
            return omega(Rational(3) - d, 0);
        }
        if (s == Rational(1)) {
            if (i > kFiveHalves - d) return omega(kThreeHalves, -kHalf);
            if (i == kFiveHalves - d) return omega(kThreeHalves, kHalf);
            if (i > 1) return omega(Rational(4) - i - d, 0); // 1 < i < 5/2 - d
            if (i == Rational(1)) return omega(Rational(3) - d, -1);
            return omega(Rational(3) - d, 0);
        }
        if (i > kFiveHalves - d) return omega(kThreeHalves, 0);
        if (i == kFiveHalves - d) return omega(kThreeHalves, 1);
        if (i > 1) return omega(Rational(4) - i - d, 0);
        if (i == Rational(1)) return omega(Rational(3) - d, -1);
        return omega(Rational(3) - d, 0);
    }

    if (d == Rational(1)) {
        if (s > 2) {
            if (i >= 2) return omega(1, 0);
            if (i > 1) return omega(Rational(3) - i, -1); // 1 < i < 2
            if (i == Rational(1)) return omega(2, -2);
            return omega(2, -1); // 0 <= i < 1
        }
        if (s == Rational(2)) {
            if (i >= 2) return omega(1, 1);
            if (i > 1) return omega(Rational(3) - i, -1);
            if (i == Rational(1)) return omega(2, -2);
            return omega(2, -1);
        }
        if (s > 1) {
            if (i >= 2) return omega(Rational(2) - s * kHalf, 0);
            if (i > 1) return omega(Rational(3) - i, -1);
            if (i == Rational(1)) return omega(2, -2);
            return omega(2, -1);
        }
        if (s == Rational(1)) {
            if (i >= 2) return omega(kThreeHalves, -kHalf);
            if (i > 1) return omega(Rational(3) - i, -1);
            if (i == Rational(1)) return omega(2, -2);
            return omega(2, -1);
        }
        if (i >= 2) return omega(kThreeHalves, 0);
        if (i > 1) return omega(Rational(3) - i, -1);
        if (i == Rational(1)) return omega(2, -2);
        return omega(2, -1);
    }

    // 0 <= d < 1. The published s > 2 cell prints the linear entry without
    // its influence condition; i > 2 is forced by the i = 2 row below it and
    // matches the law-condition table.
    if (s > 2) {
        if (i > 2) return omega(1, 0);
        if (i == Rational(2)) return omega(1, 1);
        if (i > 1) return omega(Rational(3) - i, 0); // 1 < i < 2
        if (i == Rational(1)) return omega(2, -1);
        return omega(2, 0); // 0 <= i < 1
    }
    if (s == Rational(2)) {
        if (i >= 2) return omega(1, 1);
        if (i > 1) return omega(Rational(3) - i, 0);
        if (i == Rational(1)) return omega(2, -1);
        return omega(2, 0);
    }
    if (s > 1) {
        if (i >= 2) return omega(Rational(2) - s * kHalf, 0);
        if (i > 1) return omega(Rational(3) - i, 0);
        if (i == Rational(1)) return omega(2, -1);
        return omega(2, 0);
    }
    if (s == Rational(1)) {
        if (i > kThreeHalves) return omega(kThreeHalves, -kHalf);
        if (i == kThreeHalves) return omega(kThreeHalves, kHalf);
        if (i > 1) return omega(Rational(3) - i, 0); // 1 < i < 3/2
        if (i == Rational(1)) return omega(2, -1);
        return omega(2, 0);
    }
    if (i > kThreeHalves) return omega(kThreeHalves, 0);
    if (i == kThreeHalves) return omega(kThreeHalves, 1);
    if (i > 1) return omega(Rational(3) - i, 0);
    if (i == Rational(1)) return omega(2, -1);
    return omega(2, 0);
}

Rational lambda_shift(LambdaClass lambda) {
    switch (lambda) {
        case LambdaClass::Const: return Rational(0);
        case LambdaClass::SqrtN: return kHalf;
        case LambdaClass::LinearN: return Rational(1);
    }
    throw std::logic_error("unreachable lambda class");
}

} // namespace

AsymptoticOrder ln_order(LambdaClass lambda, const ExponentParams& params) {
    if (params.geography != 0.0)
        throw std::invalid_argument("theory valid only for uniform geography");
    const Rational i = snap(params.influence, "influence");
    const Rational s = snap(params.separation, "separation");
    const Rational d = snap(params.destination, "destination");
    AsymptoticOrder base = load_order_base(i, s, d);
    base.n_exp = base.n_exp + lambda_shift(lambda);
    return base;
}

LawClass classify_law(LambdaClass lambda, const ExponentParams& params) {
    const AsymptoticOrder order = ln_order(lambda, params);
    LawKind kind = LawKind::Other;
    if (order.log_exp == Rational(0)) {
        if (order.n_exp == Rational(1)) kind = LawKind::Sarnoff;
        if (order.n_exp == Rational(2)) kind = LawKind::Metcalfe;
        if (order.n_exp == Rational(3)) kind = LawKind::Cube;
    } else if (order.log_exp == Rational(1) && order.n_exp == Rational(1)) {
        kind = LawKind::Odlyzko;
    }
    return LawClass{kind, order};
}

double ratio_slope(std::span<const std::pair<int, double>> samples,
                   const AsymptoticOrder& theory) {
    std::set<int> distinct;
    for (const auto& [n, v] : samples) {
        if (n < 3) throw std::invalid_argument("log regime undefined");
        if (!(v > 0.0)) throw std::invalid_argument("ratio_slope needs positive values");
        distinct.insert(n);
    }
    if (distinct.size() < 3) throw std::invalid_argument("ratio_slope needs >= 3 distinct n");

    double sx = 0.0, sy = 0.0;
    for (const auto& [n, v] : samples) {
        sx += std::log(static_cast<double>(n));
        sy += std::log(v / order_eval(theory, n));
    }
    const double m = static_cast<double>(samples.size());
    const double mx = sx / m;
    const double my = sy / m;
    double sxx = 0.0, sxy = 0.0;
    for (const auto& [n, v] : samples) {
        const double dx = std::log(static_cast<double>(n)) - mx;
        const double dy = std::log(v / order_eval(theory, n)) - my;
        sxx += dx * dx;
        sxy += dx * dy;
    }
    return sxy / sxx;
}

} // namespace netload

#include "netload/fit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <set>
#include <stdexcept>

namespace netload {

namespace {

// basis values for one n, leading term first
void basis_row(LawKind law, double n, double* out) {
    switch (law) {
        case LawKind::Sarnoff:
            out[0] = n;
            out[1] = 1.0;
            return;
        case LawKind::Odlyzko:
            out[0] = n * std::log(n);
            out[1] = n;
            out[2] = 1.0;
            return;
        case LawKind::Metcalfe:
            out[0] = n * n;
            out[1] = n;
            out[2] = 1.0;
            return;
        case LawKind::Cube:
            out[0] = n * n * n;
            out[1] = n * n;
            out[2] = n;
            out[3] = 1.0;
            return;
        case LawKind::Other: break;
    }
    throw std::invalid_argument("no fitting basis for this law");
}

// Gaussian elimination with partial pivoting on the p x p normal system.
bool solve_normal(std::vector<double>& a, std::vector<double>& b, int p) {
    for (int col = 0; col < p; ++col) {
        int pivot = col;
        for (int row = col + 1; row < p; ++row)
            if (std::fabs(a[row * p + col]) > std::fabs(a[pivot * p + col])) pivot = row;
        if (std::fabs(a[pivot * p + col]) < 1e-13) return false;
        if (pivot != col) {
            for (int j = 0; j < p; ++j) std::swap(a[col * p + j], a[pivot * p + j]);
            std::swap(b[col], b[pivot]);
        }
        for (int row = col + 1; row < p; ++row) {
            const double f = a[row * p + col] / a[col * p + col];
            for (int j = col; j < p; ++j) a[row * p + j] -= f * a[col * p + j];
            b[row] -= f * b[col];
        }
    }
    for (int col = p - 1; col >= 0; --col) {
        double v = b[col];
        for (int j = col + 1; j < p; ++j) v -= a[col * p + j] * b[j];
        b[col] = v / a[col * p + col];
    }
    return true;
}

} // namespace

int basis_size(LawKind law) {
    switch (law) {
        case LawKind::Sarnoff: return 2;
        case LawKind::Odlyzko: return 3;
        case LawKind::Metcalfe: return 3;
        case LawKind::Cube: return 4;
        case LawKind::Other: break;
    }
    throw std::invalid_argument("no fitting basis for this law");
}

double FitModel::evaluate(double n) const {
    double row[4];
    basis_row(law, n, row);
    double y = 0.0;
    for (std::size_t j = 0; j < coefficients.size(); ++j) y += coefficients[j] * row[j];
    return y;
}

FitModel fit(std::span<const std::pair<double, double>> points, LawKind law) {
    const int p = basis_size(law);
    const int m = static_cast<int>(points.size());
    std::set<double> distinct;
    for (const auto& [n, y] : points) {
        if (law == LawKind::Odlyzko && n < 2.0)
            throw std::invalid_argument("n must be >= 2 for the n*log(n) basis");
        distinct.insert(n);
    }
    if (static_cast<int>(distinct.size()) < p) throw std::invalid_argument("underdetermined fit");

    // design matrix, then per-column scaling to tame n^3 against 1
    std::vector<double> design(static_cast<std::size_t>(m) * p);
    for (int row = 0; row < m; ++row) basis_row(law, points[static_cast<std::size_t>(row)].first,
                                                &design[static_cast<std::size_t>(row) * p]);
    std::vector<double> scale(static_cast<std::size_t>(p), 0.0);
    for (int row = 0; row < m; ++row)
        for (int j = 0; j < p; ++j)
            scale[j] = std::max(scale[j], std::fabs(design[static_cast<std::size_t>(row) * p + j]));
    for (int j = 0; j < p; ++j)
        if (scale[j] == 0.0) scale[j] = 1.0;
    for (int row = 0; row < m; ++row)
        for (int j = 0; j < p; ++j) design[static_cast<std::size_t>(row) * p + j] /= scale[j];

    std::vector<double> normal(static_cast<std::size_t>(p) * p, 0.0);
    std::vector<double> rhs(static_cast<std::size_t>(p), 0.0);
    for (int row = 0; row < m; ++row) {
        const double* b = &design[static_cast<std::size_t>(row) * p];
        const double y = points[static_cast<std::size_t>(row)].second;
        for (int a = 0; a < p; ++a) {
            rhs[a] += b[a] * y;
            for (int c = 0; c < p; ++c) normal[static_cast<std::size_t>(a) * p + c] += b[a] * b[c];
        }
    }
    std::vector<double> bt_y = rhs;
    if (!solve_normal(normal, rhs, p)) throw std::invalid_argument("underdetermined fit");

    FitModel model;
    model.law = law;
    model.coefficients.resize(static_cast<std::size_t>(p));
    for (int j = 0; j < p; ++j) model.coefficients[j] = rhs[j] / scale[j];

    double mean_y = 0.0;
    for (const auto& [n, y] : points) mean_y += y;
    mean_y /= m;
    double ssr = 0.0, sst = 0.0;
    std::vector<double> bt_r(static_cast<std::size_t>(p), 0.0);
    for (int row = 0; row < m; ++row) {
        const auto& [n, y] = points[static_cast<std::size_t>(row)];
        const double res = y - model.evaluate(n);
        ssr += res * res;
        sst += (y - mean_y) * (y - mean_y);
        for (int j = 0; j < p; ++j) bt_r[j] += design[static_cast<std::size_t>(row) * p + j] * res;
    }
    double nr = 0.0, ny = 0.0;
    for (int j = 0; j < p; ++j) {
        nr += bt_r[j] * bt_r[j];
        ny += bt_y[j] * bt_y[j];
    }
    if (ny > 0.0 && std::sqrt(nr) > 1e-8 * std::sqrt(ny))
        throw std::logic_error("least-squares residual not orthogonal to the basis");

    model.r_squared = sst > 0.0 ? 1.0 - ssr / sst : (ssr == 0.0 ? 1.0 : 0.0);
    model.rmse = std::sqrt(ssr / m);
    if (m - p - 1 > 0)
        model.adj_r_squared = 1.0 - (1.0 - model.r_squared) * (m - 1) / (m - p - 1);
    else
        model.adj_r_squared = -std::numeric_limits<double>::infinity();
    return model;
}

std::vector<FitModel> rank_models(std::span<const std::pair<double, double>> points) {
    std::vector<FitModel> models;
    for (LawKind law : {LawKind::Sarnoff, LawKind::Odlyzko, LawKind::Metcalfe, LawKind::Cube})
        models.push_back(fit(points, law));
    // Quantize so near-ties in adjusted R^2 resolve to the smaller basis while
    // the comparator stays a strict weak ordering.
    auto key = [](const FitModel& f) {
        const double clamped = std::isfinite(f.adj_r_squared)
                                   ? std::max(f.adj_r_squared, -1e6)
                                   : -1e6 - 1.0;
        return std::llround(clamped * 1e9);
    };
    std::stable_sort(models.begin(), models.end(), [&](const FitModel& a, const FitModel& b) {
        const long long ka = key(a), kb = key(b);
        if (ka != kb) return ka > kb;
        return a.coefficients.size() < b.coefficients.size();
    });
    return models;
}

std::string fit_csv_row(const FitModel& model) {
    std::string row = law_name(model.law);
    char buf[64];
    for (int slot = 0; slot < 4; ++slot) {
        row += ',';
        if (slot < static_cast<int>(model.coefficients.size())) {
            std::snprintf(buf, sizeof(buf), "%.17g", model.coefficients[static_cast<std::size_t>(slot)]);
            row += buf;
        }
    }
    std::snprintf(buf, sizeof(buf), ",%.17g,%.17g", model.r_squared, model.adj_r_squared);
    row += buf;
    return row;
}

} // namespace netload

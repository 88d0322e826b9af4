#include "seasonwarp/dtw.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "seasonwarp/error.hpp"

namespace seasonwarp::dtw {

namespace {

using Index = Eigen::Index;

std::size_t length_gap(std::size_t n, std::size_t m) { return n > m ? n - m : m - n; }

void check_band(std::size_t n, std::size_t m, std::optional<std::size_t> radius) {
    if (radius && *radius < length_gap(n, m)) {
        throw NoValidPathError("band radius " + std::to_string(*radius) +
                               " is narrower than the length difference " +
                               std::to_string(length_gap(n, m)) + "; no warping path exists");
    }
}

}  // namespace

std::string_view to_string(LocalMetric metric) {
    return metric == LocalMetric::Euclidean ? "euclidean" : "absolute";
}

std::string_view to_string(Normalization normalization) {
    return normalization == Normalization::ZScore ? "zscore" : "none";
}

Matrix local_distance_matrix(std::span<const double> x, std::span<const double> y, LocalMetric) {
    if (x.empty() || y.empty()) throw InsufficientDataError("DTW inputs must be non-empty");
    Matrix d(static_cast<Index>(x.size()), static_cast<Index>(y.size()));
    for (std::size_t i = 0; i < x.size(); ++i) {
        for (std::size_t j = 0; j < y.size(); ++j) {
            d(static_cast<Index>(i), static_cast<Index>(j)) = std::abs(x[i] - y[j]);
        }
    }
    return d;
}

Matrix local_distance_matrix(const Matrix& x, const Matrix& y, LocalMetric metric) {
    if (x.rows() == 0 || y.rows() == 0) throw InsufficientDataError("DTW inputs must be non-empty");
    if (x.cols() != y.cols()) {
        throw DomainError("DTW vector inputs differ in dimension (" + std::to_string(x.cols()) +
                          " vs " + std::to_string(y.cols()) + ")");
    }
    Matrix d(x.rows(), y.rows());
    for (Index i = 0; i < x.rows(); ++i) {
        for (Index j = 0; j < y.rows(); ++j) {
            const auto diff = x.row(i) - y.row(j);
            d(i, j) = metric == LocalMetric::Euclidean ? diff.norm() : diff.cwiseAbs().sum();
        }
    }
    return d;
}

Matrix cumulative_cost(const Matrix& d, std::optional<std::size_t> band_radius) {
    const Index n = d.rows();
    const Index m = d.cols();
    if (n == 0 || m == 0) throw InsufficientDataError("empty distance matrix");
    for (Index i = 0; i < n; ++i) {
        for (Index j = 0; j < m; ++j) {
            if (!(d(i, j) >= 0.0)) throw DomainError("local distances must be non-negative");
        }
    }
    check_band(static_cast<std::size_t>(n), static_cast<std::size_t>(m), band_radius);

    auto in_band = [&](Index i, Index j) {
        return !band_radius || static_cast<std::size_t>(std::abs(i - j)) <= *band_radius;
    };

    Matrix g = Matrix::Constant(n, m, kUnreachable);
    g(0, 0) = d(0, 0);
    for (Index i = 1; i < n && in_band(i, 0); ++i) g(i, 0) = g(i - 1, 0) + d(i, 0);
    for (Index j = 1; j < m && in_band(0, j); ++j) g(0, j) = g(0, j - 1) + d(0, j);
    for (Index i = 1; i < n; ++i) {
        for (Index j = 1; j < m; ++j) {
            if (!in_band(i, j)) continue;
            g(i, j) = d(i, j) + std::min({g(i - 1, j - 1), g(i - 1, j), g(i, j - 1)});
        }
    }
    return g;
}

WarpPath backtrack(const Matrix& g) {
    if (g.size() == 0) throw InsufficientDataError("empty cumulative cost matrix");
    Index i = g.rows() - 1;
    Index j = g.cols() - 1;
    if (!std::isfinite(g(i, j))) throw NoValidPathError("end cell is unreachable");

    WarpPath path;
    path.steps.reserve(static_cast<std::size_t>(g.rows() + g.cols()));
    path.steps.push_back({static_cast<std::size_t>(i) + 1, static_cast<std::size_t>(j) + 1});
    while (i > 0 || j > 0) {
        if (i == 0) {
            --j;
        } else if (j == 0) {
            --i;
        } else {
            const double diag = g(i - 1, j - 1);
            const double vert = g(i - 1, j);
            const double horiz = g(i, j - 1);
            if (diag <= vert && diag <= horiz) {
                --i;
                --j;
            } else if (vert <= horiz) {
                --i;
            } else {
                --j;
            }
        }
        path.steps.push_back({static_cast<std::size_t>(i) + 1, static_cast<std::size_t>(j) + 1});
    }
    std::reverse(path.steps.begin(), path.steps.end());
    return path;
}

double mean_cost_of(double total_cost, std::size_t path_length) {
    if (path_length == 0) throw DomainError("path length must be positive");
    return total_cost / static_cast<double>(path_length);
}

std::vector<double> zscore(std::span<const double> values) {
    if (values.empty()) return {};
    const double n = static_cast<double>(values.size());
    const double mu = std::accumulate(values.begin(), values.end(), 0.0) / n;
    double ss = 0.0;
    for (const double v : values) ss += (v - mu) * (v - mu);
    const double sd = std::sqrt(ss / n);
    std::vector<double> out;
    out.reserve(values.size());
    for (const double v : values) out.push_back(sd > 0.0 ? (v - mu) / sd : v - mu);
    return out;
}

DtwResult align_distances(const Matrix& distances, const DtwOptions& options) {
    const Matrix g = cumulative_cost(distances, options.band_radius);
    DtwResult r;
    r.path = backtrack(g);
    r.total_cost = g(g.rows() - 1, g.cols() - 1);
    r.path_length = r.path.size();
    r.mean_cost = mean_cost_of(r.total_cost, r.path_length);
    r.options = options;
    return r;
}

DtwResult dtw_align(std::span<const double> x, std::span<const double> y, const DtwOptions& options) {
    if (x.empty() || y.empty()) throw InsufficientDataError("DTW inputs must be non-empty");
    std::vector<double> xs(x.begin(), x.end());
    std::vector<double> ys(y.begin(), y.end());
    if (options.normalize_input == Normalization::ZScore) {
        xs = zscore(xs);
        ys = zscore(ys);
    }
    DtwResult r = align_distances(local_distance_matrix(xs, ys, options.local_metric), options);
    r.warped_pair[0].reserve(r.path_length);
    r.warped_pair[1].reserve(r.path_length);
    for (const auto& step : r.path.steps) {
        r.warped_pair[0].push_back(xs[step.i - 1]);
        r.warped_pair[1].push_back(ys[step.j - 1]);
    }
    return r;
}

std::string to_string(YearPair pair) {
    return std::to_string(pair.first) + " vs " + std::to_string(pair.second);
}

PairRanking rank_pairs(std::span<const PairCost> costs) {
    std::vector<std::size_t> order(costs.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const auto& ca = costs[a];
        const auto& cb = costs[b];
        if (ca.total_cost != cb.total_cost) return ca.total_cost < cb.total_cost;
        if (ca.mean_cost != cb.mean_cost) return ca.mean_cost < cb.mean_cost;
        return ca.pair < cb.pair;
    });

    PairRanking ranking;
    ranking.entries.reserve(costs.size());
    for (const auto& c : costs) {
        ranking.entries.push_back({c.pair, c.total_cost, c.mean_cost, c.path_length, 0});
    }
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
        ranking.entries[order[pos]].rank = static_cast<int>(pos) + 1;
    }
    return ranking;
}

PairRanking rank_pairs(std::span<const std::pair<YearPair, DtwResult>> results) {
    std::vector<PairCost> costs;
    costs.reserve(results.size());
    for (const auto& [pair, r] : results) {
        costs.push_back({pair, r.total_cost, r.mean_cost, r.path_length});
    }
    return rank_pairs(costs);
}

std::vector<int> ranks(const PairRanking& ranking) {
    std::vector<int> out;
    out.reserve(ranking.entries.size());
    for (const auto& e : ranking.entries) out.push_back(e.rank);
    return out;
}

std::vector<BandRun> band_sensitivity(std::span<const double> x, std::span<const double> y,
                                      std::span<const std::size_t> radii, const DtwOptions& base) {
    for (const std::size_t r : radii) check_band(x.size(), y.size(), r);
    std::vector<BandRun> runs;
    runs.reserve(radii.size() + 1);
    for (const std::size_t r : radii) {
        DtwOptions opts = base;
        opts.band_radius = r;
        runs.push_back({r, dtw_align(x, y, opts)});
    }
    DtwOptions full = base;
    full.band_radius.reset();
    runs.push_back({std::nullopt, dtw_align(x, y, full)});
    return runs;
}

}  // namespace seasonwarp::dtw

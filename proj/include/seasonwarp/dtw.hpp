#pragma once

#include <Eigen/Core>

#include <array>
#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace seasonwarp::dtw {

using Matrix = Eigen::MatrixXd;

enum class LocalMetric {
    AbsoluteDifference,  ///< |x - y|; L1 for vector samples
    Euclidean,           ///< sqrt(sum_k (x_k - y_k)^2)
};

enum class Normalization { None, ZScore };

[[nodiscard]] std::string_view to_string(LocalMetric metric);
[[nodiscard]] std::string_view to_string(Normalization normalization);

struct DtwOptions {
    /// Sakoe-Chiba radius: cells with |i - j| > radius are unreachable.
    /// Absent means the full window.
    std::optional<std::size_t> band_radius;
    LocalMetric local_metric = LocalMetric::AbsoluteDifference;
    Normalization normalize_input = Normalization::None;

    friend bool operator==(const DtwOptions&, const DtwOptions&) = default;
};

/// 1-based cell of the cost matrix.
struct PathStep {
    std::size_t i = 0;
    std::size_t j = 0;

    friend bool operator==(const PathStep&, const PathStep&) = default;
};

struct WarpPath {
    std::vector<PathStep> steps;

    [[nodiscard]] std::size_t size() const noexcept { return steps.size(); }

    friend bool operator==(const WarpPath&, const WarpPath&) = default;
};

struct DtwResult {
    double total_cost = 0.0;  ///< cumulative cost at (n, m)
    double mean_cost = 0.0;   ///< total_cost / path_length
    WarpPath path;
    std::size_t path_length = 0;
    DtwOptions options;
    /// x and y sampled along the path: warped_pair[0][k] = x[i_k],
    /// warped_pair[1][k] = y[j_k].
    std::array<std::vector<double>, 2> warped_pair;

    friend bool operator==(const DtwResult&, const DtwResult&) = default;
};

/// Unreachable marker for cells outside the band.
inline constexpr double kUnreachable = std::numeric_limits<double>::infinity();

/// d(i, j) = |x_i - y_j| (both metrics agree on scalars).
[[nodiscard]] Matrix local_distance_matrix(std::span<const double> x, std::span<const double> y,
                                           LocalMetric metric = LocalMetric::AbsoluteDifference);

/// Row-per-sample vector series; x and y must have the same column count.
[[nodiscard]] Matrix local_distance_matrix(const Matrix& x, const Matrix& y,
                                           LocalMetric metric = LocalMetric::Euclidean);

/// gamma(i, j) = d(i, j) + min(gamma(i-1, j-1), gamma(i-1, j), gamma(i, j-1))
/// with running sums along the first row and column. Cells outside the band
/// hold kUnreachable. Throws NoValidPathError when the band is narrower than
/// |n - m| and DomainError for negative or NaN distances.
[[nodiscard]] Matrix cumulative_cost(const Matrix& distances,
                                     std::optional<std::size_t> band_radius = std::nullopt);

/// Walks from (n, m) back to (1, 1) through the cheapest predecessor.
/// Ties prefer the diagonal, then vertical (i-1, j), then horizontal (i, j-1).
[[nodiscard]] WarpPath backtrack(const Matrix& cumulative);

[[nodiscard]] DtwResult dtw_align(std::span<const double> x, std::span<const double> y,
                                  const DtwOptions& options = {});

/// Cost and path of a precomputed distance matrix; warped_pair stays empty.
[[nodiscard]] DtwResult align_distances(const Matrix& distances, const DtwOptions& options = {});

/// total / path_length; the "mean distance" column of a DTW summary table.
[[nodiscard]] double mean_cost_of(double total_cost, std::size_t path_length);

[[nodiscard]] std::vector<double> zscore(std::span<const double> values);

struct YearPair {
    int first = 0;
    int second = 0;

    friend auto operator<=>(const YearPair&, const YearPair&) = default;
};

[[nodiscard]] std::string to_string(YearPair pair);

struct RankedPair {
    YearPair pair;
    double total_cost = 0.0;
    double mean_cost = 0.0;
    std::size_t path_length = 0;
    int rank = 0;

    friend bool operator==(const RankedPair&, const RankedPair&) = default;
};

/// Entries keep the input order; `rank` is the 1-based position under
/// ascending total cost, ties broken by mean cost then year pair.
struct PairRanking {
    std::vector<RankedPair> entries;

    friend bool operator==(const PairRanking&, const PairRanking&) = default;
};

struct PairCost {
    YearPair pair;
    double total_cost = 0.0;
    double mean_cost = 0.0;
    std::size_t path_length = 0;
};

[[nodiscard]] PairRanking rank_pairs(std::span<const PairCost> costs);
[[nodiscard]] PairRanking rank_pairs(std::span<const std::pair<YearPair, DtwResult>> results);

/// Rank positions of a ranking in entry order, e.g. {3, 1, 2}.
[[nodiscard]] std::vector<int> ranks(const PairRanking& ranking);

struct BandRun {
    std::optional<std::size_t> radius;  ///< absent = unbanded
    DtwResult result;
};

/// One alignment per radius followed by the unbanded alignment. Throws
/// NoValidPathError naming the first infeasible radius.
[[nodiscard]] std::vector<BandRun> band_sensitivity(std::span<const double> x,
                                                    std::span<const double> y,
                                                    std::span<const std::size_t> radii,
                                                    const DtwOptions& base = {});

}  // namespace seasonwarp::dtw

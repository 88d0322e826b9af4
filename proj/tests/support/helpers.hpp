#pragma once

#include <unistd.h>

#include <atomic>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "seasonwarp/series.hpp"

namespace testing {

// Dense series of `values` starting at `start`, one point per ISO week.
inline seasonwarp::WeeklySeries dense_series(const std::vector<double>& values,
                                             seasonwarp::WeekKey start = {2015, 1},
                                             seasonwarp::Variable v = seasonwarp::Variable::ModalPrice) {
    std::vector<seasonwarp::SeriesPoint> pts;
    for (std::size_t k = 0; k < values.size(); ++k) {
        pts.push_back({seasonwarp::advance(start, static_cast<long>(k)), values[k]});
    }
    return seasonwarp::WeeklySeries(v, std::move(pts));
}

// Fresh empty directory under the system temp dir, removed on destruction.
class TempDir {
public:
    explicit TempDir(const std::string& tag) {
        static std::atomic<int> counter{0};
        path_ = std::filesystem::temp_directory_path() /
                ("seasonwarp-test-" + tag + "-" + std::to_string(::getpid()) + "-" +
                 std::to_string(counter++));
        std::filesystem::remove_all(path_);
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    [[nodiscard]] const std::filesystem::path& path() const { return path_; }
    [[nodiscard]] std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

private:
    std::filesystem::path path_;
};

inline std::string slurp(const std::filesystem::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

inline void spit(const std::filesystem::path& p, const std::string& text) {
    std::ofstream f(p, std::ios::binary);
    f << text;
}

}  // namespace testing

#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <vector>

#include "habfuse/date.hpp"
#include "habfuse/georaster.hpp"
#include "habfuse/matrix.hpp"

namespace habfuse {

struct PixelCoord {
    std::uint32_t scene_id = 0;
    std::uint32_t row = 0;
    std::uint32_t col = 0;

    bool operator==(const PixelCoord&) const = default;
};

/// Flattened 3x3 neighborhood vectors, one row per valid interior pixel.
/// Each vector is channel-major, then row-major over the window, so its
/// width is 9 * channels.
struct SampleSet {
    MatrixF vectors;
    std::vector<PixelCoord> coords;
    std::vector<Date> dates;

    std::size_t size() const { return vectors.rows(); }
    std::size_t dim() const { return vectors.cols(); }

    void append(const SampleSet& other);
    SampleSet select(const std::vector<std::size_t>& indices) const;

    bool operator==(const SampleSet&) const = default;
};

/// Per-dimension standardization statistics.
struct Normalizer {
    std::vector<double> means;
    std::vector<double> stds;

    bool operator==(const Normalizer&) const = default;
};

struct KmeansModel {
    std::size_t k = 0;
    MatrixD centroids;
    double inertia = 0.0;
    std::size_t iterations = 0;
};

struct KmeansResult {
    KmeansModel model;
    std::vector<std::uint32_t> labels;
};

/// Extracts one vector per pixel whose whole 3x3 window is fill-free in
/// every channel. Pixel coords are tagged with `scene_id`.
SampleSet extract_neighborhoods(const Scene& scene, std::uint32_t scene_id = 0);

/// Population mean/std over the concatenation of all sets. Dimensions with
/// zero spread get std 1.0.
Normalizer fit_normalizer(const std::vector<const SampleSet*>& sets);
Normalizer fit_normalizer(const SampleSet& set);

SampleSet apply_normalizer(const SampleSet& set, const Normalizer& norm);
void apply_normalizer_inplace(MatrixF& vectors, const Normalizer& norm);

/// Called after every Lloyd iteration with (iteration, inertia).
using KmeansObserver = std::function<void(std::size_t, double)>;

/// Lloyd's algorithm with seeded k-means++ initialization. Stops when no
/// label changes or after `max_iter` iterations.
KmeansResult kmeans_cluster(const MatrixF& vectors, std::size_t k, std::uint64_t seed,
                            std::size_t max_iter = 300, const KmeansObserver& observer = {});

/// Index of the nearest centroid for every row (ties to the smaller index).
std::vector<std::uint32_t> kmeans_assign(const KmeansModel& model, const MatrixF& vectors);

/// Knee of a (k, inertia) curve: the interior candidate farthest from the
/// chord joining the first and last points. Ties go to the smaller k.
std::size_t elbow_from_curve(const std::vector<std::size_t>& ks, const std::vector<double>& inertias);

std::size_t select_k_elbow(const MatrixF& vectors, const std::vector<std::size_t>& candidates,
                           std::uint64_t seed);

/// Equal-quota stratified subsample without replacement. Clusters smaller
/// than floor(target_n / k) contribute all members; the deficit is spread
/// over the remaining clusters in proportion to their sizes.
SampleSet stratified_subsample(const SampleSet& set, const std::vector<std::uint32_t>& labels,
                               std::size_t target_n, std::uint64_t seed);

/// Per-cluster draw counts used by stratified_subsample.
std::vector<std::size_t> stratified_quotas(const std::vector<std::size_t>& cluster_sizes, std::size_t target_n);

// Persistence: vectors as an SFG1 scene with D channels on a 1 x N grid,
// plus a JSON sidecar {"dates": [...], "coords": [[scene_id,row,col], ...]}.
void write_sample_set(const SampleSet& set, const std::filesystem::path& path);
SampleSet read_sample_set(const std::filesystem::path& path);

void write_normalizer(const Normalizer& norm, const std::filesystem::path& path);
Normalizer read_normalizer(const std::filesystem::path& path);

}  // namespace habfuse

#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "habfuse/date.hpp"
#include "habfuse/dbn.hpp"
#include "habfuse/georaster.hpp"
#include "habfuse/matrix.hpp"
#include "habfuse/sampling.hpp"

namespace habfuse {

/// Affine map from embeddings to class logits; weights is C x E.
struct ClusterHead {
    MatrixD weights;
    std::vector<double> bias;

    std::size_t n_classes() const { return weights.rows(); }
    std::size_t input_dim() const { return weights.cols(); }

    void logits(std::span<const float> embedding, std::span<double> out) const;
    MatrixD logits(const MatrixF& embeddings) const;

    bool operator==(const ClusterHead&) const = default;
};

/// Head initialization: small random weights, or the nearest-centroid
/// partition of a k-means fit to the embeddings.
enum class HeadInit { normal, centroids };

std::string to_string(HeadInit h);
HeadInit head_init_from_string(const std::string& s);

struct HeadConfig {
    double learning_rate = 0.01;
    std::size_t epochs = 50;
    std::size_t batch_size = 1024;
    double sigma = 0.05;
    HeadInit init = HeadInit::centroids;
    std::uint64_t seed = 0;
};

/// How the per-layer scores combine into a pixel's certainty.
enum class CertaintyRule { deepest, product, minimum };

std::string to_string(CertaintyRule r);
CertaintyRule certainty_rule_from_string(const std::string& s);

/// Two-level clustering hierarchy. Child heads exist only for root labels
/// that received at least min_child_samples training samples.
struct ClusterTree {
    ClusterHead root;
    std::map<std::uint32_t, ClusterHead> children;
    std::size_t child_classes = 0;
    std::size_t min_child_samples = 0;

    bool operator==(const ClusterTree&) const = default;
};

/// Which training rows each child head was fit on (indices into the
/// embeddings passed to train_tree).
struct TreeTrainingReport {
    std::vector<std::uint32_t> root_labels;
    std::map<std::uint32_t, std::vector<std::size_t>> child_members;
};

struct LabelPath {
    std::uint32_t root_label = 0;
    std::optional<std::uint32_t> child_label;
    double certainty = 0.0;

    bool operator==(const LabelPath&) const = default;
};

/// Per-pixel hierarchy labels for one scene. Label rasters use kNoData
/// where no prediction exists; layer2 holds root * child_classes + child.
struct SegmentationProduct {
    static constexpr std::int32_t kNoData = -1;

    GridDef grid;
    Date date;
    std::string stream_id;
    std::size_t child_classes = 0;
    std::vector<std::int32_t> layer1;
    std::vector<std::int32_t> layer2;
    std::vector<float> certainty;

    SegmentationProduct() = default;
    SegmentationProduct(GridDef g, Date d, std::string stream, std::size_t child_c);

    std::int32_t label(int layer, std::size_t r, std::size_t c) const {
        return (layer == 1 ? layer1 : layer2)[r * grid.cols + c];
    }

    bool operator==(const SegmentationProduct&) const = default;
};

MatrixD softmax_rows(const MatrixD& logits);

/// Symmetrized empirical joint (1/N) sum_i a_i b_i^T over two batches of
/// probability rows.
MatrixD joint_matrix(const MatrixD& probs_a, const MatrixD& probs_b);

/// I(P) with marginals from row and column sums; entries are clamped at
/// 1e-12 before taking logs.
double mutual_information(const MatrixD& joint);

struct IicLossGrad {
    double loss = 0.0;
    MatrixD grad_a;
    MatrixD grad_b;
};

/// loss = -I(joint(softmax(a), softmax(b))) and its exact gradient with
/// respect to both logit batches.
IicLossGrad iic_loss_and_grad(const MatrixD& logits_a, const MatrixD& logits_b);

/// Adds i.i.d. N(0, sigma^2) noise.
MatrixF perturb_gaussian(const MatrixF& embeddings, double sigma, std::uint64_t seed);

/// Fits one head by seeded minibatch Adam on the IIC loss between each
/// embedding and a Gaussian-perturbed copy of it.
ClusterHead train_head(const MatrixF& embeddings, std::size_t n_classes, const HeadConfig& cfg);

ClusterTree train_tree(const MatrixF& embeddings, std::size_t root_classes, std::size_t child_classes,
                       std::size_t min_child_samples, const HeadConfig& cfg, TreeTrainingReport* report = nullptr);

std::vector<LabelPath> predict_tree(const ClusterTree& tree, const MatrixF& embeddings,
                                    CertaintyRule rule = CertaintyRule::deepest);

/// Full per-scene path: neighborhoods, standardization, encoding, tree
/// prediction and rasterization.
SegmentationProduct segment_scene(const DbnModel& dbn, const ClusterTree& tree, const Normalizer& normalizer,
                                  const Scene& scene, const std::string& stream_id,
                                  CertaintyRule rule = CertaintyRule::deepest);

std::vector<unsigned char> encode_tree(const ClusterTree& tree);
ClusterTree decode_tree(std::span<const unsigned char> bytes);
void write_tree(const ClusterTree& tree, const std::filesystem::path& path);
ClusterTree read_tree(const std::filesystem::path& path);

/// Stored as a 3-channel SFG1 scene (layer1, layer2, certainty).
Scene segmentation_to_scene(const SegmentationProduct& seg);
SegmentationProduct segmentation_from_scene(const Scene& scene);

}  // namespace habfuse

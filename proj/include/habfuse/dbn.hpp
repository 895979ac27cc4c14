#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "habfuse/matrix.hpp"

namespace habfuse {

enum class VisibleType { gaussian, bernoulli };

std::string to_string(VisibleType t);
VisibleType visible_type_from_string(const std::string& s);

/// One restricted Boltzmann machine. weights is hidden x visible.
struct RbmLayer {
    MatrixF weights;
    std::vector<float> visible_bias;
    std::vector<float> hidden_bias;
    VisibleType visible_type = VisibleType::bernoulli;

    std::size_t visible() const { return weights.cols(); }
    std::size_t hidden() const { return weights.rows(); }

    /// p(h = 1 | v) for one visible vector.
    void hidden_probs(std::span<const float> v, std::span<float> out) const;
    /// Mean of p(v | h): identity link for gaussian units, logistic for bernoulli.
    void visible_mean(std::span<const float> h, std::span<float> out) const;

    bool operator==(const RbmLayer&) const = default;
};

struct CdConfig {
    std::size_t cd_k = 1;
    double learning_rate = 1e-3;
    std::size_t epochs = 10;
    std::size_t batch_size = 128;
    double momentum = 0.5;
    double weight_decay = 1e-4;
    std::uint64_t seed = 0;

    void validate() const;

    bool operator==(const CdConfig&) const = default;
};

struct DbnModel {
    std::vector<RbmLayer> layers;
    CdConfig config;

    std::size_t input_dim() const { return layers.empty() ? 0 : layers.front().visible(); }
    std::size_t output_dim() const { return layers.empty() ? 0 : layers.back().hidden(); }

    /// Checks the layer chain and visible-unit types.
    void validate() const;

    bool operator==(const DbnModel&) const = default;
};

/// Called once per epoch with (epoch index, mean squared reconstruction error).
using EpochObserver = std::function<void(std::size_t, double)>;

/// Seeded N(0, 0.01^2) weights, zero biases.
RbmLayer init_rbm(std::size_t visible, std::size_t hidden, VisibleType type, std::uint64_t seed);

/// CD-k training from a seeded initialization.
RbmLayer train_rbm(const MatrixF& data, std::size_t hidden, VisibleType type, const CdConfig& cfg,
                   const EpochObserver& observer = {});

/// Continues CD-k training of an existing layer for cfg.epochs epochs.
void train_rbm_from(RbmLayer& layer, const MatrixF& data, const CdConfig& cfg, const EpochObserver& observer = {});

/// Hidden-layer widths used when none are configured: two layers of 4 * input_dim.
std::vector<std::size_t> default_hidden_dims(std::size_t input_dim);

/// Greedy layer-wise training: a gaussian-visible first layer on the
/// (standardized) inputs, bernoulli-visible layers above it on the hidden
/// probabilities of the layer below. Requires 2-3 layers and
/// hidden_dims[0] >= input dim unless `allow_contraction` is set.
DbnModel train_dbn(const MatrixF& samples, const std::vector<std::size_t>& hidden_dims, const CdConfig& cfg,
                   bool allow_contraction = false);

/// Deterministic mean-field pass through every layer.
MatrixF encode(const DbnModel& model, const MatrixF& vectors);

/// Exact mean log-likelihood of binary data under a bernoulli RBM, with the
/// partition function enumerated over all visible and hidden states.
double exact_log_likelihood(const RbmLayer& rbm, const MatrixF& data);

void write_dbn(const DbnModel& model, const std::filesystem::path& path);
DbnModel read_dbn(const std::filesystem::path& path);
std::vector<unsigned char> encode_dbn(const DbnModel& model);
DbnModel decode_dbn(std::span<const unsigned char> bytes);

}  // namespace habfuse

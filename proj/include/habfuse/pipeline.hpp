#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "habfuse/context.hpp"
#include "habfuse/dbn.hpp"
#include "habfuse/georaster.hpp"
#include "habfuse/iic.hpp"
#include "habfuse/productgen.hpp"
#include "habfuse/synthgen.hpp"

namespace habfuse {

/// One processing stream: a set of instruments stacked channel-wise.
struct StreamSpec {
    std::string id;
    std::vector<std::string> instruments;
};

/// Streams combined into one daily product, by precedence slot.
struct MergeSet {
    std::string id;
    std::optional<std::string> oc_sif;
    std::optional<std::string> sif;
    std::optional<std::string> oc;
};

struct SpeciesSpecConfig {
    BinScheme scheme;
    std::string region;
};

struct SamplingParams {
    std::vector<std::size_t> k_candidates{2, 4, 8, 12, 16, 24};
    /// Fixed cluster count; skips the elbow search when set.
    std::optional<std::size_t> k;
    std::size_t kmeans_fit_n = 10000;
    std::size_t target_n = 50000;
};

struct TreeParams {
    std::size_t root_classes = 12;
    std::size_t child_classes = 4;
    std::size_t min_child_samples = 50;
    HeadConfig head;
    CertaintyRule certainty = CertaintyRule::deepest;
};

struct InsituSynthParams {
    std::size_t sites = 40;
    std::size_t per_day = 40;
    double lognoise_std = 0.1;
};

struct PipelineConfig {
    std::filesystem::path config_path;
    std::filesystem::path output_dir;
    GridDef grid;
    DateRange train;
    DateRange test;
    std::map<std::string, std::filesystem::path> scene_dirs;
    std::filesystem::path mask_path;
    std::vector<std::filesystem::path> insitu_paths;
    std::vector<StreamSpec> streams;
    std::vector<MergeSet> merge_sets;
    std::vector<SpeciesSpecConfig> species;
    std::map<std::string, double> region_radius_deg;
    double max_depth_m = 1.0;
    SamplingParams sampling;
    std::vector<std::size_t> dbn_hidden_dims;  // empty: 4 * input dim, two layers
    CdConfig dbn;
    TreeParams tree;
    CompositeRule composite = CompositeRule::mean_round;
    std::optional<std::filesystem::path> palette_path;
    SynthConfig synth;
    InsituSynthParams synth_insitu;
    std::uint64_t seed = 0;

    /// Canonical JSON rendering (sorted keys) of the effective configuration.
    nlohmann::json normalized;

    std::string hash() const;
    const StreamSpec& stream(const std::string& id) const;
    const SpeciesSpecConfig& species_config(const std::string& name) const;
    double radius_for(const std::string& species) const;
};

/// Parses and validates a configuration document. Relative paths resolve
/// against `base_dir`. Every validation problem is collected into one
/// ConfigError.
PipelineConfig parse_config(const nlohmann::json& doc, const std::filesystem::path& base_dir,
                            std::optional<std::uint64_t> seed_override = std::nullopt);
PipelineConfig load_config(const std::filesystem::path& path, std::optional<std::uint64_t> seed_override = std::nullopt);

struct RunOptions {
    std::optional<std::string> stream;
    std::optional<std::string> species;
};

const std::vector<std::string>& pipeline_commands();

/// Stage runner. Every stage writes a JSON manifest under
/// <output_dir>/manifests.
class Pipeline {
public:
    explicit Pipeline(PipelineConfig cfg);

    void run(const std::string& command, const RunOptions& opts = {});

    void synth();
    void preprocess(const RunOptions& opts);
    void train_encoder(const RunOptions& opts);
    void train_tree(const RunOptions& opts);
    void segment(const RunOptions& opts);
    void assign_context(const RunOptions& opts);
    void apply_context(const RunOptions& opts);
    void merge(const RunOptions& opts);
    void composite(const RunOptions& opts);
    void validate(const RunOptions& opts);
    void render(const RunOptions& opts);

    const PipelineConfig& config() const { return cfg_; }

    // Artifact layout.
    std::filesystem::path scene_dir(const std::string& instrument) const;
    std::filesystem::path preprocessed_dir(const std::string& stream) const;
    std::filesystem::path samples_path(const std::string& stream) const;
    std::filesystem::path normalizer_path(const std::string& stream) const;
    std::filesystem::path encoder_path(const std::string& stream) const;
    std::filesystem::path tree_path(const std::string& stream) const;
    std::filesystem::path tree_audit_path(const std::string& stream) const;
    std::filesystem::path segment_dir(const std::string& stream) const;
    std::filesystem::path context_dir(const std::string& stream, const std::string& species) const;
    std::filesystem::path product_dir(const std::string& stream, const std::string& species) const;
    std::filesystem::path merged_dir(const std::string& set, const std::string& species) const;
    std::filesystem::path composite_dir(const std::string& set, const std::string& species) const;
    std::filesystem::path validate_path(const std::string& set, const std::string& species) const;
    std::filesystem::path render_dir() const;
    std::filesystem::path manifest_path(const std::string& command) const;
    std::filesystem::path mask_path() const;
    std::filesystem::path insitu_path() const;
    std::filesystem::path truth_dir() const;

    /// In-situ records for one species with the depth filter applied.
    std::vector<InSituRecord> records_for(const std::string& species, const DateRange& range) const;

private:
    struct Manifest {
        std::vector<std::string> inputs;
        std::vector<std::string> outputs;
        nlohmann::json extra = nlohmann::json::object();
    };

    std::vector<const StreamSpec*> select_streams(const RunOptions& opts) const;
    std::vector<const SpeciesSpecConfig*> select_species(const RunOptions& opts) const;
    std::vector<const MergeSet*> select_merge_sets(const RunOptions& opts) const;
    void write_manifest(const std::string& command, const RunOptions& opts, const Manifest& m) const;
    std::uint64_t stage_seed(const std::string& stage, const std::string& key) const;

    PipelineConfig cfg_;
};

/// Lists "<YYYY-MM-DD>.sfg" files in a directory, sorted by date.
std::vector<std::pair<Date, std::filesystem::path>> list_dated_files(const std::filesystem::path& dir);

/// Runs fn(i) for i in [0, n) on up to HABFUSE_THREADS threads (default 1).
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

/// Stable 64-bit FNV-1a hash, used for deriving per-stage seeds.
std::uint64_t fnv1a64(const std::string& s);

std::string sha256_hex(const std::string& data);

/// CLI entry point: habfuse <command> --config <path> [--seed N] [--stream id] [--species name].
/// Returns 0 on success, 1 on validation errors, 2 on missing inputs.
int run_cli(int argc, char** argv);

}  // namespace habfuse

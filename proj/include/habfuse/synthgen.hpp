#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "habfuse/context.hpp"
#include "habfuse/georaster.hpp"

namespace habfuse {

struct SpeciesSpec {
    std::string name;
    /// Response of each OC channel per unit of log1p(concentration) / log_scale.
    std::vector<double> signature;
    std::size_t blobs = 1;
    double amplitude = 1e6;      // cells/L at a blob center
    double radius_deg = 0.25;    // Gaussian sigma
    double drift_deg_per_day = 0.02;
    double background = 0.0;     // ambient cells/L added everywhere in the ocean
};

struct SynthConfig {
    GridDef grid{30.0, -88.0, -0.063, 0.063, 96, 96};
    Date start{2018, 6, 1};
    std::size_t days = 40;
    std::vector<SpeciesSpec> species;
    std::vector<double> baseline_spectrum;
    double log_scale = 10.0;
    double sif_baseline = 0.2;
    double sif_gain = 1.0;
    /// SIF is generated on a grid this many times coarser, then regridded.
    std::size_t sif_coarsen = 1;
    double noise_std = 0.01;
    double cloud_fraction = 0.0;
    /// Cloud field smoothing radius in cells; 0 gives independent pixels.
    std::size_t cloud_smoothing = 4;
    /// Columns at the eastern edge that are land (with a wavy coastline).
    std::size_t land_cols = 0;
    /// Every species' blobs ride the first species' tracks (mixed blooms).
    bool shared_tracks = false;
    double land_reflectance = 0.8;
    std::string oc_instrument = "oc";
    std::string sif_instrument = "sif";
    std::uint64_t seed = 0;

    void validate() const;
};

struct TruthField {
    Date date;
    GridDef grid;
    std::vector<std::string> species;
    std::vector<std::vector<double>> concentration;  // per species, row-major
    std::vector<double> total;

    double at(std::size_t species_idx, std::size_t r, std::size_t c) const {
        return concentration[species_idx][r * grid.cols + c];
    }
};

struct SynthWorld {
    std::vector<TruthField> truth;
    std::vector<Scene> oc;
    std::vector<Scene> sif;
    OceanMask mask;
};

/// The desk-scale world: 96x96 cells at 0.063 deg, 6 OC channels, 2
/// species, 40 days, 30% cloud.
SynthConfig desk_synth_config();

/// Bin schemes for the two desk-world species.
std::vector<BinScheme> desk_bin_schemes();

OceanMask make_land_mask(const SynthConfig& cfg);

/// OC reflectance of one channel for the given per-species concentrations,
/// without noise.
double oc_reflectance(const SynthConfig& cfg, std::size_t channel, const std::vector<double>& concentrations);
double sif_signal(const SynthConfig& cfg, double total_concentration);

SynthWorld gen_world(const SynthConfig& cfg);

/// Samples `per_day` of `sites` fixed ocean stations every day. Each visit
/// yields one record per species with concentration = truth * lognormal
/// noise and depth uniform in [0, 2] m.
std::vector<InSituRecord> gen_insitu(const std::vector<TruthField>& truth, const OceanMask& mask, std::size_t sites,
                                     std::size_t per_day, double lognoise_std, std::uint64_t seed);

Scene truth_to_scene(const TruthField& t);

}  // namespace habfuse

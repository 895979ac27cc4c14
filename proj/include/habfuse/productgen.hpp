#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "habfuse/context.hpp"

namespace habfuse {

/// Which stream supplied a merged pixel. Codes follow stream precedence.
enum class DqiCode : std::int32_t { oc_sif = 0, sif_only = 1, oc_only = 2 };

struct DqiRaster {
    static constexpr std::int32_t kNoData = -1;

    GridDef grid;
    Date date;
    std::vector<std::int32_t> values;

    bool operator==(const DqiRaster&) const = default;
};

struct MergedProduct {
    ConcentrationProduct product;
    DqiRaster dqi;
};

/// Per pixel, the first valid value in the order OC+SIF, SIF only, OC only.
/// Absent streams are passed as nullptr.
MergedProduct merge_streams(const ConcentrationProduct* oc_sif, const ConcentrationProduct* sif,
                            const ConcentrationProduct* oc);

enum class CompositeRule { mean_round, mode };

std::string to_string(CompositeRule r);
CompositeRule composite_rule_from_string(const std::string& s);

/// Monthly composite of daily merged products. Bins: mean of valid days
/// rounded half-up (or the per-pixel mode); DQI: per-pixel mode, ties to
/// the smaller code; certainty: mean over valid days.
MergedProduct monthly_composite(const std::vector<MergedProduct>& dailies, int year, unsigned month,
                                CompositeRule rule = CompositeRule::mean_round);

struct ConfusionMatrix {
    std::string species;
    /// rows = in-situ bin, cols = predicted bin
    std::vector<std::vector<std::uint64_t>> counts;
    std::vector<std::vector<double>> percentages;

    std::uint64_t total() const;
    /// Trace over total; 0 when the matrix is empty.
    double accuracy() const;
    /// Every row with observations has its diagonal >= each off-diagonal entry.
    bool diagonal_dominant() const;

    std::string to_json() const;
};

/// Counts every (record, matched valid pixel) pair by (record bin, pixel bin).
ConfusionMatrix confusion_matrix(const std::vector<ConcentrationProduct>& products,
                                 const std::vector<InSituRecord>& records, const BinScheme& scheme,
                                 double radius_deg);

struct Rgb {
    std::uint8_t r = 0, g = 0, b = 0;
    bool operator==(const Rgb&) const = default;
};

/// One color per bin plus a trailing nodata color.
struct Palette {
    std::vector<Rgb> bins;
    Rgb nodata;
};

Palette palette_from_json(const std::string& text);
Rgb parse_hex_color(const std::string& hex);
Palette default_palette(std::size_t n_bins);

/// 8-bit RGB PNG, one pixel per grid cell. The palette must hold exactly
/// n_classes colors; negative values use the nodata color.
std::vector<unsigned char> render_png(const std::vector<std::int32_t>& values, std::size_t rows, std::size_t cols,
                                      const Palette& palette, std::size_t n_classes);
std::vector<unsigned char> render_png(const ConcentrationProduct& product, const Palette& palette,
                                      std::size_t n_bins);
std::vector<unsigned char> encode_png_rgb(const std::vector<unsigned char>& rgb, std::size_t width, std::size_t height);

// Storage as SFG1 scenes: concentration products carry (bins, certainty);
// merged products add a dqi channel.
Scene concentration_to_scene(const ConcentrationProduct& p);
ConcentrationProduct concentration_from_scene(const Scene& s);
Scene merged_to_scene(const MergedProduct& m);
MergedProduct merged_from_scene(const Scene& s);

}  // namespace habfuse

#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "habfuse/date.hpp"
#include "habfuse/iic.hpp"

namespace habfuse {

struct InSituRecord {
    Date date;
    double lat = 0.0;
    double lon = 0.0;
    double depth_m = 0.0;
    std::string species;
    double concentration = 0.0;  // cells per liter

    bool operator==(const InSituRecord&) const = default;
};

struct CsvIssue {
    std::size_t line = 0;
    std::string message;
};

struct InSituLoad {
    std::vector<InSituRecord> records;
    std::vector<CsvIssue> rejected;
};

/// Concentration classes: bin i holds edges[i-1] <= value < edges[i].
struct BinScheme {
    std::string species;
    std::vector<double> edges;

    std::size_t n_bins() const { return edges.size() + 1; }
    void validate() const;

    bool operator==(const BinScheme&) const = default;
};

/// Standard monitoring categories for K. brevis in cells/L.
BinScheme default_kbrevis_scheme();

struct Matchup {
    std::size_t record = 0;  // index into the record list
    std::string stream_id;
    Date date;
    std::uint32_t row = 0;
    std::uint32_t col = 0;
    std::int32_t layer1_label = 0;
    std::optional<std::int32_t> layer2_label;
    std::uint32_t bin = 0;
};

struct ContextMap {
    std::string species;
    int layer = 1;
    std::string stream_id;
    std::map<std::int32_t, std::uint32_t> mapping;

    bool operator==(const ContextMap&) const = default;
};

/// Per-pixel concentration classes for one species and stream.
struct ConcentrationProduct {
    static constexpr std::int32_t kNoData = -1;

    GridDef grid;
    Date date;
    std::string species;
    std::string stream_id;
    std::vector<std::int32_t> bins;
    std::vector<float> certainty;

    ConcentrationProduct() = default;
    ConcentrationProduct(GridDef g, Date d, std::string sp, std::string stream);

    std::int32_t bin(std::size_t r, std::size_t c) const { return bins[r * grid.cols + c]; }

    bool operator==(const ConcentrationProduct&) const = default;
};

/// CSV with header date,lat,lon,depth_m,species,concentration_cells_per_l.
/// Malformed rows are skipped and reported with 1-based line numbers; a
/// missing column throws FormatError.
InSituLoad load_insitu(const std::filesystem::path& path);
InSituLoad parse_insitu(const std::string& text);
void write_insitu(const std::vector<InSituRecord>& records, const std::filesystem::path& path);

std::vector<InSituRecord> filter_depth(const std::vector<InSituRecord>& records, double max_depth_m = 1.0);
std::vector<InSituRecord> filter_species(const std::vector<InSituRecord>& records, const std::string& species);

std::uint32_t bin_value(const BinScheme& scheme, double value);

/// All (record, pixel) pairs on the record's date whose pixel center lies
/// within `radius_deg` (Euclidean, degrees) and whose layer-1 label is set.
std::vector<Matchup> matchup(const std::vector<InSituRecord>& records, const SegmentationProduct& seg,
                             double radius_deg, const BinScheme& scheme);

/// Cells of `grid` whose centers lie within radius of (lat, lon).
std::vector<std::pair<std::uint32_t, std::uint32_t>> cells_within(const GridDef& grid, double lat, double lon,
                                                                  double radius_deg);

/// Histogram of layer-1 labels against in-situ bins; each label goes to its
/// most frequent bin (ties to the lower bin).
ContextMap assign_layer1(const std::vector<Matchup>& matchups, const std::string& species, const std::string& stream_id,
                         std::size_t n_bins);

/// Layer-2 assignment: direct layer-2/in-situ counts plus, over every
/// training scene, co-occurrence of each layer-2 label with the bin that
/// the layer-1 map gives the same pixel.
ContextMap assign_layer2_tiered(const std::vector<Matchup>& matchups, const ContextMap& layer1_map,
                                const std::vector<SegmentationProduct>& segs, std::size_t n_bins);

/// Streaming form of the layer-2 supplement so callers need not hold every
/// training segmentation in memory.
class Layer2Histogram {
public:
    explicit Layer2Histogram(std::size_t n_bins) : n_bins_(n_bins) {}
    void add_matchups(const std::vector<Matchup>& matchups);
    void add_supplement(const SegmentationProduct& seg, const ContextMap& layer1_map);
    ContextMap finish(const std::string& species, const std::string& stream_id) const;

private:
    std::size_t n_bins_;
    std::map<std::int32_t, std::vector<std::uint64_t>> counts_;
};

ConcentrationProduct apply_context(const SegmentationProduct& seg, const ContextMap& map, int layer);

void write_context_map(const ContextMap& map, const std::filesystem::path& path);
ContextMap read_context_map(const std::filesystem::path& path);
std::string context_map_json(const ContextMap& map);
ContextMap context_map_from_json(const std::string& text);

}  // namespace habfuse

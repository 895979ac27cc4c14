#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "habfuse/date.hpp"

namespace habfuse {

/// Equirectangular lat/lon grid. Cell (r, c) is centered at
/// (lat0 + r * dlat, lon0 + c * dlon); dlat is negative for north-up grids.
struct GridDef {
    double lat0 = 0.0;
    double lon0 = 0.0;
    double dlat = -0.063;
    double dlon = 0.063;
    std::size_t rows = 0;
    std::size_t cols = 0;

    double lat(std::size_t r) const { return lat0 + static_cast<double>(r) * dlat; }
    double lon(std::size_t c) const { return lon0 + static_cast<double>(c) * dlon; }
    std::size_t cells() const { return rows * cols; }

    /// Throws std::invalid_argument when the invariants do not hold.
    void validate() const;

    bool operator==(const GridDef&) const = default;
};

/// Multi-channel raster on a GridDef. Layout is channel-major, then row-major.
struct Scene {
    std::string instrument_id;
    Date date;
    GridDef grid;
    std::vector<std::string> channel_names;
    std::vector<float> data;
    float fill_value = -9999.0f;
    /// Free-form string attributes carried in the container header
    /// (stream id, species, label encodings, ...).
    std::map<std::string, std::string> attributes;

    Scene() = default;
    Scene(std::string instrument, Date day, GridDef g, std::vector<std::string> names,
          float fill = -9999.0f);

    std::size_t channels() const { return channel_names.size(); }

    float& at(std::size_t ch, std::size_t r, std::size_t c) {
        return data[(ch * grid.rows + r) * grid.cols + c];
    }
    float at(std::size_t ch, std::size_t r, std::size_t c) const {
        return data[(ch * grid.rows + r) * grid.cols + c];
    }
    std::span<float> channel(std::size_t ch) {
        return {data.data() + ch * grid.cells(), grid.cells()};
    }
    std::span<const float> channel(std::size_t ch) const {
        return {data.data() + ch * grid.cells(), grid.cells()};
    }

    bool is_fill(float v) const { return v == fill_value; }
    /// True when any channel holds the fill value at (r, c).
    bool any_fill(std::size_t r, std::size_t c) const;

    /// Throws std::invalid_argument when dimensions, finiteness or channel
    /// name uniqueness are violated.
    void validate() const;

    bool operator==(const Scene&) const = default;
};

/// Boolean raster, true = ocean (keep).
struct OceanMask {
    GridDef grid;
    std::vector<unsigned char> keep;

    bool at(std::size_t r, std::size_t c) const { return keep[r * grid.cols + c] != 0; }

    Scene to_scene() const;
    static OceanMask from_scene(const Scene& scene);
};

Scene resample_nearest(const Scene& scene, const GridDef& target);

Scene apply_mask(const Scene& scene, const OceanMask& mask);

/// Channel-wise stack of co-registered scenes. Output channel names are
/// "<instrument_id>:<channel>"; a cell that is fill in any input is fill in
/// every output channel.
Scene colocate_stack(const std::vector<Scene>& scenes);

/// SFG1 container: "SFG1", u32 LE header length, JSON header, then
/// channels x rows x cols little-endian f32.
void write_scene(const Scene& scene, const std::filesystem::path& path);
Scene read_scene(const std::filesystem::path& path);

std::vector<unsigned char> encode_scene(const Scene& scene);
Scene decode_scene(std::span<const unsigned char> bytes);

}  // namespace habfuse

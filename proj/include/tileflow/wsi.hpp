#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tileflow::wsi {

enum class ArtifactClass : int { Blood = 0, Blur = 1, Fold = 2, Damage = 3, Bubble = 4 };
constexpr int kClassCount = 5;

const char* class_name(ArtifactClass c);
std::optional<ArtifactClass> class_from_name(const std::string& name);

// Rectangle in tile-grid coordinates, [row, row+rows) x [col, col+cols).
struct GridRect {
    int row = 0;
    int col = 0;
    int rows = 1;
    int cols = 1;
};

struct PlantedArtifact {
    ArtifactClass cls = ArtifactClass::Blood;
    GridRect region;
};

// Marker string every synthetic header carries; leak scans grep for it.
inline constexpr const char* kDefaultSentinel = "TFLW-VAULT-SENTINEL";

struct MetadataVault {
    std::string patient_id;
    std::string scanner_id;
    std::string acquisition_date;
    std::string site_name;
    std::string sentinel = kDefaultSentinel;
};

struct SlideImage {
    int width = 0;
    int height = 0;
    std::vector<uint8_t> pixels;  // row-major RGB8, width * height * 3 bytes
    std::optional<MetadataVault> header;
    // Ground truth for the synthetic corpus. Stays on the trusted side,
    // never enters a partition payload.
    std::vector<PlantedArtifact> planted;
    int planted_tile_size = 0;  // tile size the planted regions refer to
};

struct Tile {
    int tile_id = 0;
    std::vector<uint8_t> pixels;  // tile_size * tile_size * 3, zero-padded at edges
};

struct TileGrid {
    int tile_size = 0;
    int rows = 0;
    int cols = 0;
    std::vector<Tile> tiles;  // row-major, tile_id == index
};

struct TileRef {
    int tile_id = 0;
    int row = 0;
    int col = 0;
};

struct CoordinateMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<TileRef> entries;  // row-major
    const TileRef& at(int r, int c) const { return entries[static_cast<size_t>(r) * cols + c]; }
};

// Deterministic synthetic slide. tile_size scopes the planted regions
// (they are grid-aligned rectangles); pass any positive value when
// artifacts is empty.
SlideImage generate_slide(uint64_t seed, int width, int height, int tile_size,
                          const std::vector<PlantedArtifact>& artifacts);

// Removes the header; pixels untouched. Throws if already stripped.
std::pair<SlideImage, MetadataVault> strip_metadata(const SlideImage& slide);

// Requires a stripped slide. Edge tiles are zero-padded to tile_size.
std::pair<TileGrid, CoordinateMatrix> split_tiles(const SlideImage& slide, int tile_size);

// --- container file ("TFLW1") ---------------------------------------------
std::vector<uint8_t> serialize_slide(const SlideImage& slide);
SlideImage parse_slide(const std::vector<uint8_t>& bytes);
void write_slide(const std::filesystem::path& path, const SlideImage& slide);
SlideImage read_slide(const std::filesystem::path& path);

uint64_t pixel_checksum(const SlideImage& slide);

// Co-designed pixel signatures: the generator paints these and the default
// detector thresholds sit at least 20% below/above the statistics they
// produce (see detectors.hpp).
struct Rgb {
    uint8_t r, g, b;
};
namespace palette {
inline constexpr Rgb kBackground{230, 200, 210};
inline constexpr Rgb kBlood{200, 60, 60};
inline constexpr Rgb kFold{70, 30, 90};
inline constexpr Rgb kDamageBase{225, 205, 215};
inline constexpr Rgb kDamageCrack{60, 45, 70};
inline constexpr Rgb kBubble{247, 246, 246};
inline constexpr int kNoiseAmplitude = 6;      // +-6 on all channels
inline constexpr int kBlurNoiseAmplitude = 1;  // +-1 inside blur regions
inline constexpr int kCrackPeriod = 6;         // damage crack stripe spacing
}  // namespace palette

}  // namespace tileflow::wsi

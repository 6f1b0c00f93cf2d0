#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tileflow/detectors.hpp"
#include "tileflow/privacy.hpp"
#include "tileflow/wsi.hpp"

namespace tileflow::agg {

// Per-class tile-level bit planes aligned to the true grid.
struct ArtifactMask {
    int rows = 0;
    int cols = 0;
    std::array<std::vector<uint8_t>, wsi::kClassCount> planes;  // row-major 0/1

    uint8_t at(int cls, int r, int c) const {
        return planes[cls][static_cast<size_t>(r) * cols + c];
    }
};

// Decodes outputs through the secret and fills one mask cell per tile.
// Pure; output order does not matter.
ArtifactMask aggregate(const std::vector<detect::DetectionOutput>& outputs,
                       const privacy::PerturbationSecret& secret, int rows, int cols,
                       const std::map<int, int>* shard_of = nullptr);

// Color-coded overlay, one 8x8 pixel cell per tile, fixed palette
// (blood red, blur cyan, fold purple, damage orange, bubble yellow,
// multi-class white). Deterministic bytes.
wsi::SlideImage render_mask(const ArtifactMask& mask);
inline constexpr int kOverlayCellPx = 8;

struct ClassMetrics {
    long tp = 0, fp = 0, fn = 0;
    double precision = 0, recall = 0, f1 = 0;
};

// Tile-level binary metrics per class against planted ground truth.
// Convention: a class with no predictions and no positives scores 1.0.
std::array<ClassMetrics, wsi::kClassCount> evaluate(
    const ArtifactMask& mask, const std::vector<wsi::PlantedArtifact>& planted);

struct SummaryReport {
    std::array<long, wsi::kClassCount> class_tiles{};
    std::array<double, wsi::kClassCount> class_fractions{};
    double artifact_free_fraction = 1.0;
    std::optional<std::array<ClassMetrics, wsi::kClassCount>> metrics;
    double plan_f1 = 0;
    double plan_f2 = 0;
    int64_t simulated_completion_us = 0;
    privacy::PrivacyAudit audit;
};

SummaryReport summarize(const ArtifactMask& mask,
                        const std::vector<wsi::PlantedArtifact>* planted, double plan_f1,
                        double plan_f2, int64_t completion_us,
                        const privacy::PrivacyAudit& audit);

std::string mask_to_json(const ArtifactMask& mask);
ArtifactMask mask_from_json(const std::string& text);
std::string report_to_json(const SummaryReport& report);

}  // namespace tileflow::agg

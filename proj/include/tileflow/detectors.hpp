#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "tileflow/wsi.hpp"

namespace tileflow::detect {

// Per-class thresholds for the five heuristic detectors. The defaults are
// co-designed with the slide generator's pixel signatures.
struct DetectorSet {
    double theta_blood = 60.0;    // mean R minus mean (G+B)/2, 8-bit levels
    double theta_blur = 4.0;      // mean local luminance variance, levels^2
    double theta_fold = 70.0;     // mean luminance, levels
    double theta_fold_sat = 0.4;  // mean saturation, 0..1
    double theta_grad = 40.0;     // |dx|+|dy| luminance edge threshold, levels
    double theta_damage = 0.15;   // edge-pixel fraction
    double theta_bubble = 0.6;    // near-white pixel fraction
    int window = 5;               // local-statistics window, odd, >= 3
};

// Pixels with min(R,G,B) >= this count as near-white (air bubble test).
inline constexpr int kNearWhiteMin = 238;

// Bit order: (blood, blur, fold, damage, bubble).
using Verdicts = std::array<bool, 5>;

struct DetectionOutput {
    int encoded_id = 0;
    Verdicts verdicts{};
};

// Scalar statistics detect() thresholds against; exposed for calibration
// and for independent checks in tests.
struct TileStats {
    double red_excess = 0;
    double mean_local_var = 0;
    double mean_luminance = 0;
    double mean_saturation = 0;
    double edge_fraction = 0;
    double near_white_fraction = 0;
};

TileStats tile_stats(const std::vector<uint8_t>& tile_rgb, int tile_size, int window,
                     double theta_grad);

// Pure function of (tile bytes, thresholds).
Verdicts detect(const std::vector<uint8_t>& tile_rgb, int tile_size, const DetectorSet& set);

// Grid-search thresholds maximizing per-class tile F1 against planted
// ground truth. Classes with no positive tiles in the corpus keep the
// default thresholds.
DetectorSet calibrate(const std::vector<wsi::SlideImage>& corpus, int tile_size, int window = 5);

std::string detector_set_to_json(const DetectorSet& set);
DetectorSet detector_set_from_json(const std::string& text);

}  // namespace tileflow::detect

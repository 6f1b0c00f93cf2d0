#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tileflow/detectors.hpp"
#include "tileflow/wsi.hpp"

namespace tileflow::privacy {

// Trusted-server secret: keyed permutation over tile ids plus additive
// integer noise on coordinate values. Never serialized to the cloud side.
struct PerturbationSecret {
    std::array<uint8_t, 32> key{};
    // Per-cell [d_row, d_col] offsets, row-major, same shape as the
    // coordinate matrix. Generated offsets are never zero.
    std::vector<std::array<int, 2>> noise;
    std::vector<int> perm;  // tile_id -> encoded id, bijection
    int rows = 0;
    int cols = 0;

    std::vector<int> inverse_perm() const;
};

PerturbationSecret make_secret(uint64_t seed, int rows, int cols);
// Zero noise, identity permutation; encode() becomes the identity map.
PerturbationSecret identity_secret(int rows, int cols);

struct EncodedEntry {
    int encoded_id = 0;
    int noisy_row = 0;
    int noisy_col = 0;
};

struct EncodedMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<EncodedEntry> entries;  // row-major over the true grid
};

EncodedMatrix encode(const wsi::CoordinateMatrix& ax, const PerturbationSecret& secret);
// Exact inverse of encode; verifies noise consistency.
wsi::CoordinateMatrix decode_matrix(const EncodedMatrix& enc, const PerturbationSecret& secret);

enum class ScatterPolicy { LatinScatter, Random };
const char* policy_name(ScatterPolicy p);
ScatterPolicy policy_from_name(const std::string& name);

struct PartitionEntry {
    int encoded_id = 0;
    int noisy_row = 0;
    int noisy_col = 0;
    // True tile id, kept in memory for the trusted-side audit only; the
    // serializers below never write it.
    int tile_id = 0;
};

struct EncodedPartition {
    int shard_index = 0;
    std::vector<PartitionEntry> entries;  // keyed within-shard shuffle order
    // Tile pixel blocks sorted by encoded id; matches the payload file layout.
    std::vector<std::pair<int, std::vector<uint8_t>>> payload;
    int size() const { return static_cast<int>(entries.size()); }
};

// Latin-scatter: base shard (i + j) mod K, keyed within-shard shuffle, then a
// balance pass that only applies moves which keep 4-adjacent tiles on
// distinct shards. Random: keyed global shuffle dealt round-robin.
std::vector<EncodedPartition> partition(const EncodedMatrix& enc, const wsi::TileGrid& grid,
                                        int shard_count, ScatterPolicy policy,
                                        const PerturbationSecret& secret);

struct PlacedVerdicts {
    int row = 0;
    int col = 0;
    detect::Verdicts verdicts{};
};

// Maps detector outputs back to true grid coordinates. Outputs must cover
// every encoded id exactly once; shard_of (encoded id -> shard) is used to
// attribute coverage errors when provided.
std::vector<PlacedVerdicts> decode(const std::vector<detect::DetectionOutput>& outputs,
                                   const PerturbationSecret& secret,
                                   const std::map<int, int>* shard_of = nullptr);

struct PrivacyAudit {
    long adjacency_violations = 0;  // same-shard 4-adjacent tile pairs
    double coord_correlation = 0;   // Pearson r, true vs encoded coordinates
    long sentinel_leaks = 0;        // sentinel occurrences in serialized shards
};

PrivacyAudit audit(const std::vector<EncodedPartition>& partitions,
                   const wsi::CoordinateMatrix& ax,
                   const std::string& sentinel = wsi::kDefaultSentinel);

// --- serialization ----------------------------------------------------------
std::string shard_to_json(const EncodedPartition& p, const std::string& payload_file);
// Parses a shard file; payload blocks are read from payload_bytes.
EncodedPartition shard_from_json(const std::string& text,
                                 const std::vector<uint8_t>& payload_bytes);
std::vector<uint8_t> payload_bytes(const EncodedPartition& p);

std::string secret_to_json(const PerturbationSecret& s);
PerturbationSecret secret_from_json(const std::string& text);

}  // namespace tileflow::privacy

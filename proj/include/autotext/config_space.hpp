#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"

#include "autotext/text_transform.hpp"
#include "autotext/tokenizer.hpp"
#include "autotext/vector_space.hpp"

namespace autotext {

// A configuration is one value index per slot of a SpaceDescriptor.
using ConfigValues = std::vector<int>;

struct Slot {
    std::string name;
    std::vector<std::string> domain;
};

struct SpaceDescriptor {
    std::vector<Slot> slots;
    // Indices of binary tokenizer switches; at least one of them must be
    // "on" for a configuration to be valid. Empty means unconstrained.
    std::vector<std::size_t> tokenizer_slots;

    bool is_valid(const ConfigValues& values) const;
    std::size_t find_slot(const std::string& name) const;  // npos when absent
};

// "on" sits at index 0 of every tokenizer slot domain.
inline constexpr int kTokenizerOn = 0;

// The full 27-slot space: 8 preprocessing, 15 tokenizer switches,
// alpha, min_freq, scheme, and the singleton classifier slot.
SpaceDescriptor default_space();

// Number of valid configurations (invalid all-off tokenizer settings
// excluded). Overflow-checked product.
std::uint64_t space_size(const SpaceDescriptor& desc);

// Slot-level comparison: 1 when the two values of the given slot differ.
// Throws std::invalid_argument on out-of-range slot or values.
int delta(const SpaceDescriptor& desc, std::size_t slot, int a, int b);

int hamming_distance(const SpaceDescriptor& desc, const ConfigValues& u, const ConfigValues& v);

// All valid configurations at distance in (0, r]; deterministic order
// (slot order, then domain order).
std::vector<ConfigValues> neighborhood(const SpaceDescriptor& desc, const ConfigValues& c, int r = 1);

// Uniform per-slot sampling; tokenizer switches are resampled until valid.
ConfigValues random_config(const SpaceDescriptor& desc, std::mt19937_64& rng);

// Every valid configuration, in lexicographic slot-value order. Intended
// for small spaces (tests, exhaustive baselines).
std::vector<ConfigValues> enumerate_space(const SpaceDescriptor& desc);

// Fixed-order "name=value;..." string; memo key and tie-break order.
std::string canonical_encoding(const SpaceDescriptor& desc, const ConfigValues& values);

// Decoded form consumed by the scoring pipeline. Slots are matched by name,
// so reduced spaces fall back to identity/defaults for missing slots.
struct PipelineConfig {
    PreprocessConfig prep;
    TokenizerSet tokenizers;
    WeightingConfig weighting;
};

PipelineConfig decode_pipeline(const SpaceDescriptor& desc, const ConfigValues& values);

nlohmann::ordered_json config_to_json(const SpaceDescriptor& desc, const ConfigValues& values);
ConfigValues config_from_json(const SpaceDescriptor& desc, const nlohmann::json& j);

}  // namespace autotext

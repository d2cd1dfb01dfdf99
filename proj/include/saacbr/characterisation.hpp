#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace saacbr {

// Canonical attribute slot order. Every super-feature name lists its value
// codes in this order, joined by underscores.
enum class Slot : int { Size = 0, Colour = 1, Material = 2, Shape = 3, Side = 4 };
inline constexpr int kSlotCount = 5;

const char* slot_name(Slot slot);

struct ObjectRecord {
    std::string size;
    std::string colour;
    std::string material;
    std::string shape;
    double x = 0.0;          // horizontal coordinate, consistent units
    double confidence = 1.0; // aggregate per-object score in [0, 1]
};

struct SceneRecord {
    std::string image_id;
    std::optional<int> class_label;
    std::vector<ObjectRecord> objects;
};

// Value codes per slot. Codes contain no underscores and must be unique
// across the whole vocabulary so canonical feature names parse back
// unambiguously. The shape slot is always populated; side is optional.
class AttributeVocabulary {
public:
    AttributeVocabulary(std::vector<std::string> sizes,
                        std::vector<std::string> colours,
                        std::vector<std::string> materials,
                        std::vector<std::string> shapes,
                        std::vector<std::string> sides = {});

    static AttributeVocabulary clevr();

    const std::vector<std::string>& values(Slot slot) const {
        return values_[static_cast<int>(slot)];
    }
    bool has_side() const { return !values(Slot::Side).empty(); }
    std::optional<int> index_of(Slot slot, std::string_view code) const;

private:
    std::array<std::vector<std::string>, kSlotCount> values_;
};

// Partial attribute assignment. value[slot] indexes into the vocabulary's
// codes for that slot, or -1 when unassigned.
struct SuperFeature {
    std::array<std::int8_t, kSlotCount> value{-1, -1, -1, -1, -1};

    bool assigns(Slot slot) const { return value[static_cast<int>(slot)] >= 0; }
    int assigned_count() const;
    std::vector<int> assigned_slots() const;

    bool operator==(const SuperFeature&) const = default;
};

std::string feature_name(const SuperFeature& feature, const AttributeVocabulary& vocabulary);
SuperFeature parse_feature(std::string_view name, const AttributeVocabulary& vocabulary);

// The active super-features of one binary model, held in a deterministic
// canonical order (sorted by name).
class FeatureSelection {
public:
    FeatureSelection(std::vector<SuperFeature> features, const AttributeVocabulary& vocabulary);

    static FeatureSelection from_names(const std::vector<std::string>& names,
                                       const AttributeVocabulary& vocabulary);

    std::size_t size() const { return features_.size(); }
    const SuperFeature& feature(std::size_t i) const { return features_[i]; }
    const std::string& name(std::size_t i) const { return names_[i]; }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<std::size_t> index_of(std::string_view name) const;

private:
    std::vector<SuperFeature> features_;
    std::vector<std::string> names_;
};

// All partial assignments with 1..max_slots assigned slots, shape always
// included; side participates only when include_side and the vocabulary
// defines side codes.
std::vector<SuperFeature> enumerate_superfeatures(const AttributeVocabulary& vocabulary,
                                                  int max_slots,
                                                  bool include_side = false);

// One single-slot feature per attribute value (no combination), as used by
// the no-feature-combination ablation.
std::vector<SuperFeature> single_attribute_features(const AttributeVocabulary& vocabulary,
                                                    bool include_side = false);

enum class Kind { Set, Count };

const char* kind_name(Kind kind);

// Symbolic content of a case: a set of super-feature names, or a
// feature -> count mapping with zero counts omitted.
class Characterisation {
public:
    using Entry = std::pair<std::string, int>;

    static Characterisation empty(Kind kind) { return Characterisation(kind, {}); }
    static Characterisation set_of(std::vector<std::string> names);
    static Characterisation count_of(std::vector<Entry> entries);

    Kind kind() const { return kind_; }
    bool is_empty() const { return entries_.empty(); }
    const std::vector<Entry>& entries() const { return entries_; }
    int count_of_feature(std::string_view name) const;

    // "{a, b}" for sets, "(a:2, b:1)" for counts.
    std::string to_string() const;

    bool operator==(const Characterisation&) const = default;
    bool operator<(const Characterisation& other) const; // lexicographic, for ordered containers

private:
    Characterisation(Kind kind, std::vector<Entry> entries);

    Kind kind_;
    std::vector<Entry> entries_; // sorted by name, counts >= 1
};

// Strict exceptionality order: a ≻ b. Set kind: proper superset. Count
// kind: every per-feature count of a is >= b's and at least one is strictly
// greater (absent features read as 0). Throws on mixed kinds.
bool more_exceptional(const Characterisation& a, const Characterisation& b);

// a ≽ b (strictly more exceptional or equal).
bool at_least_as_exceptional(const Characterisation& a, const Characterisation& b);

// Regular AA-CBR irrelevance: NOT (x_new ≽ x_case).
bool irrelevant(const Characterisation& x_new, const Characterisation& x_case);

// Least element of the order: empty set / all-zero count mapping.
Characterisation default_characterisation(Kind kind);

struct Case {
    Characterisation characterisation;
    std::string outcome;     // class label token or binary outcome token
    double confidence = 1.0; // in [0, 1]
    std::string provenance;  // source image id or centroid id
};

// Derived left/right side of an object: left iff x < midpoint (strictly).
std::string_view side_of(double x, double midpoint);

struct CharacteriseOptions {
    bool use_position = false;
    double scene_midpoint = 0.5;
};

// Maps each object to its most specific matching active super-feature
// (maximal assigned-slot count; ties resolved by the lexicographically
// smallest assigned-slot sequence in canonical order). Unmatched objects
// contribute nothing. Set kind collapses duplicates; Count kind tallies.
Characterisation characterise(const SceneRecord& scene,
                              const FeatureSelection& selection,
                              Kind kind,
                              const AttributeVocabulary& vocabulary,
                              const CharacteriseOptions& options = {});

} // namespace saacbr

#include "saacbr/characterisation.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "saacbr/error.hpp"
#include "saacbr/log.hpp"

namespace saacbr {

const char* slot_name(Slot slot) {
    switch (slot) {
    case Slot::Size: return "size";
    case Slot::Colour: return "colour";
    case Slot::Material: return "material";
    case Slot::Shape: return "shape";
    case Slot::Side: return "side";
    }
    return "?";
}

const char* kind_name(Kind kind) { return kind == Kind::Set ? "set" : "count"; }

AttributeVocabulary::AttributeVocabulary(std::vector<std::string> sizes,
                                         std::vector<std::string> colours,
                                         std::vector<std::string> materials,
                                         std::vector<std::string> shapes,
                                         std::vector<std::string> sides) {
    values_[static_cast<int>(Slot::Size)] = std::move(sizes);
    values_[static_cast<int>(Slot::Colour)] = std::move(colours);
    values_[static_cast<int>(Slot::Material)] = std::move(materials);
    values_[static_cast<int>(Slot::Shape)] = std::move(shapes);
    values_[static_cast<int>(Slot::Side)] = std::move(sides);

    if (values(Slot::Shape).empty()) {
        throw Error(ErrorKind::Config, "vocabulary must define at least one shape code");
    }
    std::set<std::string> seen;
    for (const auto& slot_values : values_) {
        for (const auto& code : slot_values) {
            if (code.empty() || code.find('_') != std::string::npos) {
                throw Error(ErrorKind::Config,
                            "value code '" + code + "' must be non-empty and contain no underscores");
            }
            if (!seen.insert(code).second) {
                throw Error(ErrorKind::Config,
                            "value code '" + code + "' appears in more than one slot; "
                            "codes must be unique for canonical names to parse back");
            }
        }
    }
}

AttributeVocabulary AttributeVocabulary::clevr() {
    return AttributeVocabulary(
        {"sm", "l"},
        {"gray", "red", "blue", "green", "brown", "purple", "cyan", "yellow"},
        {"ru", "m"},
        {"cu", "sp", "cy"},
        {"left", "right"});
}

std::optional<int> AttributeVocabulary::index_of(Slot slot, std::string_view code) const {
    const auto& slot_values = values(slot);
    for (std::size_t i = 0; i < slot_values.size(); ++i) {
        if (slot_values[i] == code) return static_cast<int>(i);
    }
    return std::nullopt;
}

int SuperFeature::assigned_count() const {
    int count = 0;
    for (auto v : value) count += (v >= 0);
    return count;
}

std::vector<int> SuperFeature::assigned_slots() const {
    std::vector<int> slots;
    for (int s = 0; s < kSlotCount; ++s) {
        if (value[s] >= 0) slots.push_back(s);
    }
    return slots;
}

std::string feature_name(const SuperFeature& feature, const AttributeVocabulary& vocabulary) {
    std::string name;
    for (int s = 0; s < kSlotCount; ++s) {
        if (feature.value[s] < 0) continue;
        if (!name.empty()) name.push_back('_');
        name += vocabulary.values(static_cast<Slot>(s))[feature.value[s]];
    }
    return name;
}

SuperFeature parse_feature(std::string_view name, const AttributeVocabulary& vocabulary) {
    SuperFeature feature;
    int slot = 0;
    std::size_t pos = 0;
    while (pos <= name.size()) {
        const std::size_t sep = std::min(name.find('_', pos), name.size());
        const std::string_view code = name.substr(pos, sep - pos);
        bool matched = false;
        for (; slot < kSlotCount; ++slot) {
            if (auto idx = vocabulary.index_of(static_cast<Slot>(slot), code)) {
                feature.value[slot] = static_cast<std::int8_t>(*idx);
                ++slot;
                matched = true;
                break;
            }
        }
        if (!matched) {
            throw Error(ErrorKind::UnknownValue,
                        "super-feature name '" + std::string(name) +
                            "': code '" + std::string(code) +
                            "' matches no vocabulary slot in canonical order");
        }
        if (sep == name.size()) break;
        pos = sep + 1;
    }
    if (feature.assigned_count() == 0) {
        throw Error(ErrorKind::UnknownValue, "empty super-feature name");
    }
    return feature;
}

FeatureSelection::FeatureSelection(std::vector<SuperFeature> features,
                                   const AttributeVocabulary& vocabulary) {
    std::map<std::string, SuperFeature> by_name;
    for (const auto& f : features) {
        if (f.assigned_count() == 0) {
            throw Error(ErrorKind::Config, "feature selection contains an empty super-feature");
        }
        by_name.emplace(feature_name(f, vocabulary), f);
    }
    for (auto& [name, f] : by_name) {
        names_.push_back(name);
        features_.push_back(f);
    }
}

FeatureSelection FeatureSelection::from_names(const std::vector<std::string>& names,
                                              const AttributeVocabulary& vocabulary) {
    std::vector<SuperFeature> features;
    features.reserve(names.size());
    for (const auto& name : names) features.push_back(parse_feature(name, vocabulary));
    return FeatureSelection(std::move(features), vocabulary);
}

std::optional<std::size_t> FeatureSelection::index_of(std::string_view name) const {
    const auto it = std::lower_bound(names_.begin(), names_.end(), name);
    if (it != names_.end() && *it == name) {
        return static_cast<std::size_t>(it - names_.begin());
    }
    return std::nullopt;
}

std::vector<SuperFeature> enumerate_superfeatures(const AttributeVocabulary& vocabulary,
                                                  int max_slots,
                                                  bool include_side) {
    if (max_slots < 1) {
        throw Error(ErrorKind::InvalidArgument, "enumerate_superfeatures: max_slots must be >= 1");
    }
    std::vector<Slot> optional_slots;
    for (Slot s : {Slot::Size, Slot::Colour, Slot::Material, Slot::Side}) {
        if (s == Slot::Side && (!include_side || !vocabulary.has_side())) continue;
        if (!vocabulary.values(s).empty()) optional_slots.push_back(s);
    }

    std::vector<SuperFeature> features;
    const auto& shapes = vocabulary.values(Slot::Shape);
    const std::size_t combos = std::size_t{1} << optional_slots.size();
    for (std::size_t mask = 0; mask < combos; ++mask) {
        if (1 + __builtin_popcountll(mask) > max_slots) continue;
        // expand the chosen optional slots over all their value codes
        std::vector<SuperFeature> partial{SuperFeature{}};
        for (std::size_t bit = 0; bit < optional_slots.size(); ++bit) {
            if (!(mask & (std::size_t{1} << bit))) continue;
            const Slot slot = optional_slots[bit];
            std::vector<SuperFeature> next;
            for (const auto& base : partial) {
                const auto& codes = vocabulary.values(slot);
                for (std::size_t v = 0; v < codes.size(); ++v) {
                    SuperFeature f = base;
                    f.value[static_cast<int>(slot)] = static_cast<std::int8_t>(v);
                    next.push_back(f);
                }
            }
            partial = std::move(next);
        }
        for (std::size_t shape = 0; shape < shapes.size(); ++shape) {
            for (const auto& base : partial) {
                SuperFeature f = base;
                f.value[static_cast<int>(Slot::Shape)] = static_cast<std::int8_t>(shape);
                features.push_back(f);
            }
        }
    }
    return features;
}

std::vector<SuperFeature> single_attribute_features(const AttributeVocabulary& vocabulary,
                                                    bool include_side) {
    std::vector<SuperFeature> features;
    for (int s = 0; s < kSlotCount; ++s) {
        const Slot slot = static_cast<Slot>(s);
        if (slot == Slot::Side && !include_side) continue;
        for (std::size_t v = 0; v < vocabulary.values(slot).size(); ++v) {
            SuperFeature f;
            f.value[s] = static_cast<std::int8_t>(v);
            features.push_back(f);
        }
    }
    return features;
}

Characterisation::Characterisation(Kind kind, std::vector<Entry> entries)
    : kind_(kind), entries_(std::move(entries)) {
    std::sort(entries_.begin(), entries_.end());
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i].second < 1) {
            throw Error(ErrorKind::InvalidArgument,
                        "characterisation entry '" + entries_[i].first +
                            "' has non-positive count; zero counts are omitted");
        }
        if (i > 0 && entries_[i].first == entries_[i - 1].first) {
            throw Error(ErrorKind::InvalidArgument,
                        "duplicate feature '" + entries_[i].first + "' in characterisation");
        }
        if (kind_ == Kind::Set && entries_[i].second != 1) {
            throw Error(ErrorKind::InvalidArgument,
                        "set characterisation entry '" + entries_[i].first +
                            "' must have count 1");
        }
    }
}

Characterisation Characterisation::set_of(std::vector<std::string> names) {
    std::sort(names.begin(), names.end());
    names.erase(std::unique(names.begin(), names.end()), names.end());
    std::vector<Entry> entries;
    entries.reserve(names.size());
    for (auto& n : names) entries.emplace_back(std::move(n), 1);
    return Characterisation(Kind::Set, std::move(entries));
}

Characterisation Characterisation::count_of(std::vector<Entry> entries) {
    return Characterisation(Kind::Count, std::move(entries));
}

int Characterisation::count_of_feature(std::string_view name) const {
    const auto it = std::lower_bound(entries_.begin(), entries_.end(), name,
                                     [](const Entry& e, std::string_view n) { return e.first < n; });
    if (it != entries_.end() && it->first == name) return it->second;
    return 0;
}

std::string Characterisation::to_string() const {
    std::ostringstream os;
    os << (kind_ == Kind::Set ? '{' : '(');
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i > 0) os << ", ";
        os << entries_[i].first;
        if (kind_ == Kind::Count) os << ':' << entries_[i].second;
    }
    os << (kind_ == Kind::Set ? '}' : ')');
    return os.str();
}

bool Characterisation::operator<(const Characterisation& other) const {
    if (kind_ != other.kind_) return kind_ < other.kind_;
    return entries_ < other.entries_;
}

namespace {

void require_same_kind(const Characterisation& a, const Characterisation& b, const char* op) {
    if (a.kind() != b.kind()) {
        throw Error(ErrorKind::KindMismatch,
                    std::string(op) + ": characterisation kinds differ (" +
                        kind_name(a.kind()) + " vs " + kind_name(b.kind()) +
                        "); the kind is a per-model hyperparameter");
    }
}

// Merge walk over the sorted entries. Sets are count mappings with all
// counts 1, so per-feature dominance covers both kinds: proper superset and
// strict count dominance coincide with "all >= and one >".
bool dominates(const Characterisation& a, const Characterisation& b, bool strict) {
    const auto& ea = a.entries();
    const auto& eb = b.entries();
    bool strictly_greater = false;
    std::size_t i = 0, j = 0;
    while (i < ea.size() || j < eb.size()) {
        if (j == eb.size() || (i < ea.size() && ea[i].first < eb[j].first)) {
            strictly_greater = true; // feature only in a
            ++i;
        } else if (i == ea.size() || eb[j].first < ea[i].first) {
            return false; // feature only in b: a's count 0 < b's
        } else {
            if (ea[i].second < eb[j].second) return false;
            if (ea[i].second > eb[j].second) strictly_greater = true;
            ++i;
            ++j;
        }
    }
    return strict ? strictly_greater : true;
}

} // namespace

bool more_exceptional(const Characterisation& a, const Characterisation& b) {
    require_same_kind(a, b, "more_exceptional");
    return dominates(a, b, /*strict=*/true);
}

bool at_least_as_exceptional(const Characterisation& a, const Characterisation& b) {
    require_same_kind(a, b, "at_least_as_exceptional");
    return dominates(a, b, /*strict=*/false);
}

bool irrelevant(const Characterisation& x_new, const Characterisation& x_case) {
    return !at_least_as_exceptional(x_new, x_case);
}

Characterisation default_characterisation(Kind kind) { return Characterisation::empty(kind); }

std::string_view side_of(double x, double midpoint) {
    return x < midpoint ? "left" : "right";
}

namespace {

// Most-specific match: maximal assigned-slot count, ties broken by the
// lexicographically smallest assigned-slot index sequence.
bool better_match(const SuperFeature& candidate, const SuperFeature& incumbent) {
    const int cc = candidate.assigned_count();
    const int ic = incumbent.assigned_count();
    if (cc != ic) return cc > ic;
    return candidate.assigned_slots() < incumbent.assigned_slots();
}

} // namespace

Characterisation characterise(const SceneRecord& scene,
                              const FeatureSelection& selection,
                              Kind kind,
                              const AttributeVocabulary& vocabulary,
                              const CharacteriseOptions& options) {
    if (options.use_position &&
        (!vocabulary.index_of(Slot::Side, "left") || !vocabulary.index_of(Slot::Side, "right"))) {
        throw Error(ErrorKind::Config,
                    "position-aware characterisation needs side codes 'left' and 'right' "
                    "in the vocabulary");
    }
    std::map<std::string, int> tally;
    for (std::size_t obj_idx = 0; obj_idx < scene.objects.size(); ++obj_idx) {
        const auto& obj = scene.objects[obj_idx];
        std::array<int, kSlotCount> object_value{};
        const std::pair<Slot, const std::string*> slots[] = {
            {Slot::Size, &obj.size},
            {Slot::Colour, &obj.colour},
            {Slot::Material, &obj.material},
            {Slot::Shape, &obj.shape},
        };
        for (const auto& [slot, code] : slots) {
            const auto idx = vocabulary.index_of(slot, *code);
            if (!idx) {
                throw Error(ErrorKind::UnknownValue,
                            "scene '" + scene.image_id + "' object #" +
                                std::to_string(obj_idx) + ": value '" + *code +
                                "' is not in the vocabulary for slot " + slot_name(slot));
            }
            object_value[static_cast<int>(slot)] = *idx;
        }
        if (options.use_position) {
            const auto side = side_of(obj.x, options.scene_midpoint);
            object_value[static_cast<int>(Slot::Side)] = *vocabulary.index_of(Slot::Side, side);
        }

        const SuperFeature* best = nullptr;
        std::size_t best_idx = 0;
        for (std::size_t f = 0; f < selection.size(); ++f) {
            const SuperFeature& feature = selection.feature(f);
            bool matches = true;
            for (int s = 0; s < kSlotCount; ++s) {
                if (feature.value[s] < 0) continue;
                if (s == static_cast<int>(Slot::Side) && !options.use_position) {
                    matches = false;
                    break;
                }
                if (feature.value[s] != object_value[s]) {
                    matches = false;
                    break;
                }
            }
            if (matches && (!best || better_match(feature, *best))) {
                best = &feature;
                best_idx = f;
            }
        }
        if (best) {
            ++tally[selection.name(best_idx)];
        } else {
            log_debug("scene %s object #%zu matches no active super-feature; dropped",
                      scene.image_id.c_str(), obj_idx);
        }
    }

    std::vector<Characterisation::Entry> entries;
    entries.reserve(tally.size());
    for (auto& [name, count] : tally) {
        entries.emplace_back(name, kind == Kind::Set ? 1 : count);
    }
    return kind == Kind::Set
               ? Characterisation::set_of([&] {
                     std::vector<std::string> names;
                     names.reserve(entries.size());
                     for (auto& e : entries) names.push_back(e.first);
                     return names;
                 }())
               : Characterisation::count_of(std::move(entries));
}

} // namespace saacbr

#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace saacbr::af {

using ArgumentId = std::uint32_t;
using Edge = std::pair<ArgumentId, ArgumentId>;

// Abstract argumentation framework: arguments plus binary attack and
// (optional) support relations. Immutable once populated; grounded() and
// effective_attacks() are pure and safe to call concurrently.
class Framework {
public:
    Framework() = default;
    explicit Framework(std::vector<std::string> display_names);

    ArgumentId add_argument(std::string display_name);

    // Both insertions validate endpoints and drop duplicates. A support may
    // not be a self-loop and may not coexist with the same attack pair.
    void add_attack(ArgumentId attacker, ArgumentId target);
    void add_support(ArgumentId supporter, ArgumentId supported);

    std::size_t size() const { return names_.size(); }
    const std::string& name(ArgumentId id) const { return names_[id]; }
    const std::vector<std::string>& names() const { return names_; }
    const std::vector<Edge>& attacks() const { return attacks_; }
    const std::vector<Edge>& supports() const { return supports_; }
    bool has_attack(ArgumentId a, ArgumentId b) const;
    bool has_support(ArgumentId a, ArgumentId b) const;

private:
    void check_id(ArgumentId id, const char* role) const;

    std::vector<std::string> names_;
    std::vector<Edge> attacks_;
    std::vector<Edge> supports_;
    std::set<Edge> attack_set_;
    std::set<Edge> support_set_;
};

enum class Label { In, Out, Undec };

struct GroundedResult {
    // Sorted extension; cumulative layers G_0 ⊆ G_1 ⊆ … (each sorted) up to
    // the fixpoint; three-valued labelling indexed by ArgumentId.
    std::vector<ArgumentId> extension;
    std::vector<std::vector<ArgumentId>> layers;
    std::vector<Label> labelling;

    bool in_extension(ArgumentId id) const {
        return id < labelling.size() && labelling[id] == Label::In;
    }
};

// Grounded semantics over the attack relation only (supports are ignored;
// resolve them with effective_attacks first). Total on well-formed input.
GroundedResult grounded(const Framework& framework);

// Returns a support-free framework whose attacks are the originals plus
// every indirect attack (a, c) where a reaches b through one or more
// support edges and (b, c) is a direct attack. Throws on support cycles.
Framework effective_attacks(const Framework& framework);

// Graphviz DOT rendering: direct attacks solid, support-derived indirect
// attacks dashed, supports dotted; IN arguments highlighted.
std::string to_dot(const Framework& framework, const GroundedResult& result);

} // namespace saacbr::af

#include "saacbr/af.hpp"

#include <algorithm>
#include <sstream>

#include "saacbr/error.hpp"

namespace saacbr::af {

Framework::Framework(std::vector<std::string> display_names)
    : names_(std::move(display_names)) {}

ArgumentId Framework::add_argument(std::string display_name) {
    names_.push_back(std::move(display_name));
    return static_cast<ArgumentId>(names_.size() - 1);
}

void Framework::check_id(ArgumentId id, const char* role) const {
    if (id >= names_.size()) {
        throw Error(ErrorKind::InvalidArgument,
                    std::string(role) + " id " + std::to_string(id) +
                        " out of range (framework has " +
                        std::to_string(names_.size()) + " arguments)");
    }
}

void Framework::add_attack(ArgumentId attacker, ArgumentId target) {
    check_id(attacker, "attacker");
    check_id(target, "target");
    const Edge e{attacker, target};
    if (support_set_.count(e)) {
        throw Error(ErrorKind::InvalidArgument,
                    "attack (" + names_[attacker] + ", " + names_[target] +
                        ") conflicts with an existing support pair");
    }
    if (attack_set_.insert(e).second) attacks_.push_back(e);
}

void Framework::add_support(ArgumentId supporter, ArgumentId supported) {
    check_id(supporter, "supporter");
    check_id(supported, "supported");
    if (supporter == supported) {
        throw Error(ErrorKind::InvalidArgument,
                    "argument " + names_[supporter] + " may not support itself");
    }
    const Edge e{supporter, supported};
    if (attack_set_.count(e)) {
        throw Error(ErrorKind::InvalidArgument,
                    "support (" + names_[supporter] + ", " + names_[supported] +
                        ") conflicts with an existing attack pair");
    }
    if (support_set_.insert(e).second) supports_.push_back(e);
}

bool Framework::has_attack(ArgumentId a, ArgumentId b) const {
    return attack_set_.count({a, b}) != 0;
}

bool Framework::has_support(ArgumentId a, ArgumentId b) const {
    return support_set_.count({a, b}) != 0;
}

GroundedResult grounded(const Framework& framework) {
    const std::size_t n = framework.size();
    GroundedResult result;
    result.labelling.assign(n, Label::Undec);
    if (n == 0) {
        result.layers.push_back({});
        return result;
    }

    std::vector<std::vector<ArgumentId>> targets_of(n);
    std::vector<int> live_attackers(n, 0);
    for (const auto& [a, b] : framework.attacks()) {
        targets_of[a].push_back(b);
        ++live_attackers[b];
    }

    // Synchronous rounds: G_0 = unattacked; each round first marks OUT every
    // target of the newly accepted arguments, then accepts everything whose
    // attackers are now all OUT. That keeps layer i+1 exactly the arguments
    // G_i defends.
    std::vector<ArgumentId> cumulative;
    std::vector<ArgumentId> frontier;
    for (ArgumentId id = 0; id < n; ++id) {
        if (live_attackers[id] == 0) {
            frontier.push_back(id);
            result.labelling[id] = Label::In;
        }
    }
    cumulative = frontier;
    std::sort(cumulative.begin(), cumulative.end());
    result.layers.push_back(cumulative);

    while (!frontier.empty()) {
        std::vector<ArgumentId> newly_out;
        for (ArgumentId in_arg : frontier) {
            for (ArgumentId t : targets_of[in_arg]) {
                if (result.labelling[t] == Label::Undec) {
                    result.labelling[t] = Label::Out;
                    newly_out.push_back(t);
                }
            }
        }
        std::vector<ArgumentId> newly_in;
        for (ArgumentId out_arg : newly_out) {
            for (ArgumentId t : targets_of[out_arg]) {
                if (result.labelling[t] == Label::Undec && --live_attackers[t] == 0) {
                    result.labelling[t] = Label::In;
                    newly_in.push_back(t);
                }
            }
        }
        if (newly_in.empty()) break;
        cumulative.insert(cumulative.end(), newly_in.begin(), newly_in.end());
        std::sort(cumulative.begin(), cumulative.end());
        result.layers.push_back(cumulative);
        frontier = std::move(newly_in);
    }

    // Arguments marked OUT above lost to an accepted attacker; everything
    // still unresolved stays UNDEC.
    result.extension = result.layers.back();
    return result;
}

namespace {

// Ancestors of each argument in the support DAG (arguments that reach it
// through one or more support edges), or an error when supports cycle.
std::vector<std::vector<ArgumentId>> support_ancestors(const Framework& framework) {
    const std::size_t n = framework.size();
    std::vector<std::vector<ArgumentId>> supporters_of(n);
    std::vector<int> pending(n, 0); // unprocessed incoming support edges
    for (const auto& [a, b] : framework.supports()) {
        supporters_of[b].push_back(a);
        ++pending[b];
    }

    std::vector<std::vector<ArgumentId>> out_support(n);
    for (const auto& [a, b] : framework.supports()) out_support[a].push_back(b);

    std::vector<ArgumentId> order;
    order.reserve(n);
    for (ArgumentId id = 0; id < n; ++id) {
        if (pending[id] == 0) order.push_back(id);
    }
    for (std::size_t head = 0; head < order.size(); ++head) {
        for (ArgumentId next : out_support[order[head]]) {
            if (--pending[next] == 0) order.push_back(next);
        }
    }
    if (order.size() != n) {
        throw Error(ErrorKind::SupportCycle,
                    "support relation contains a cycle; supported frameworks "
                    "must be mined from a strict partial order");
    }

    std::vector<std::set<ArgumentId>> anc(n);
    for (ArgumentId id : order) {
        for (ArgumentId s : supporters_of[id]) {
            anc[id].insert(s);
            anc[id].insert(anc[s].begin(), anc[s].end());
        }
    }
    std::vector<std::vector<ArgumentId>> result(n);
    for (std::size_t i = 0; i < n; ++i) result[i].assign(anc[i].begin(), anc[i].end());
    return result;
}

std::string escape_dot(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

} // namespace

Framework effective_attacks(const Framework& framework) {
    Framework resolved(framework.names());
    for (const auto& [a, b] : framework.attacks()) resolved.add_attack(a, b);
    if (framework.supports().empty()) return resolved;

    const auto ancestors = support_ancestors(framework);
    for (const auto& [b, c] : framework.attacks()) {
        for (ArgumentId a : ancestors[b]) resolved.add_attack(a, c);
    }
    return resolved;
}

std::string to_dot(const Framework& framework, const GroundedResult& result) {
    std::ostringstream os;
    os << "digraph argumentation {\n";
    os << "  rankdir=BT;\n";
    os << "  node [shape=box, style=\"rounded,filled\", fillcolor=white];\n";
    for (ArgumentId id = 0; id < framework.size(); ++id) {
        os << "  a" << id << " [label=\"" << escape_dot(framework.name(id)) << "\"";
        switch (result.labelling[id]) {
        case Label::In:
            os << ", fillcolor=palegreen, peripheries=2";
            break;
        case Label::Out:
            os << ", fillcolor=mistyrose";
            break;
        case Label::Undec:
            os << ", fillcolor=lightgrey";
            break;
        }
        os << "];\n";
    }
    for (const auto& [a, b] : framework.attacks()) {
        os << "  a" << a << " -> a" << b << " [style=solid];\n";
    }
    if (!framework.supports().empty()) {
        const auto ancestors = support_ancestors(framework);
        std::set<Edge> indirect;
        for (const auto& [b, c] : framework.attacks()) {
            for (ArgumentId a : ancestors[b]) {
                if (!framework.has_attack(a, c)) indirect.insert({a, c});
            }
        }
        for (const auto& [a, c] : indirect) {
            os << "  a" << a << " -> a" << c << " [style=dashed];\n";
        }
        for (const auto& [a, b] : framework.supports()) {
            os << "  a" << a << " -> a" << b
               << " [style=dotted, arrowhead=onormal];\n";
        }
    }
    os << "}\n";
    return os.str();
}

} // namespace saacbr::af

namespace saacbr {

const char* error_kind_name(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::InvalidArgument: return "invalid-argument";
    case ErrorKind::KindMismatch: return "kind-mismatch";
    case ErrorKind::SupportCycle: return "support-cycle";
    case ErrorKind::MalformedJson: return "malformed-json";
    case ErrorKind::Schema: return "schema";
    case ErrorKind::UnknownValue: return "unknown-value";
    case ErrorKind::ConfidenceRange: return "confidence-range";
    case ErrorKind::DuplicateImageId: return "duplicate-image-id";
    case ErrorKind::EmptyInput: return "empty-input";
    case ErrorKind::MissingClass: return "missing-class";
    case ErrorKind::Clustering: return "clustering";
    case ErrorKind::Config: return "config";
    case ErrorKind::BundleVersion: return "bundle-version";
    case ErrorKind::BundleCorrupt: return "bundle-corrupt";
    case ErrorKind::UnsatisfiableRule: return "unsatisfiable-rule";
    case ErrorKind::Io: return "io";
    }
    return "unknown";
}

} // namespace saacbr

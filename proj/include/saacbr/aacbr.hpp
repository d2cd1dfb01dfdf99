#pragma once

#include <string>
#include <vector>

#include "saacbr/af.hpp"
#include "saacbr/characterisation.hpp"
#include "saacbr/detail/bitset.hpp"

namespace saacbr {

// Binary casebase: labelled cases over a shared characterisation kind plus
// the default argument (least characterisation, default outcome). The
// case-to-case attack and support relations depend only on the casebase, so
// they are mined once at construction; per-query mining just adds the new
// case's edges. Immutable after construction.
class Casebase {
public:
    Casebase(Kind kind,
             std::string default_outcome,
             std::string other_outcome,
             std::vector<Case> cases);

    Kind kind() const { return kind_; }
    const std::string& default_outcome() const { return default_outcome_; }
    const std::string& other_outcome() const { return other_outcome_; }
    const std::vector<Case>& cases() const { return cases_; }
    const Characterisation& default_char() const { return default_char_; }

    // Edges among case indices, with index cases().size() standing for the
    // default argument.
    const std::vector<std::pair<int, int>>& internal_attacks() const { return attacks_; }
    const std::vector<std::pair<int, int>>& internal_supports() const { return supports_; }

    std::size_t default_index() const { return cases_.size(); }

private:
    void mine_internal();

    Kind kind_;
    std::string default_outcome_;
    std::string other_outcome_;
    std::vector<Case> cases_;
    Characterisation default_char_;
    std::vector<std::pair<int, int>> attacks_;
    std::vector<std::pair<int, int>> supports_;
};

struct MinedFramework {
    af::Framework framework;
    // argument ids: 0..n-1 casebase cases (in sequence order), n the default
    // argument, n+1 the new case
    af::ArgumentId default_id = 0;
    af::ArgumentId new_case_id = 0;
    std::size_t case_count = 0;

    bool is_case(af::ArgumentId id) const { return id < case_count; }
};

// Mines the argumentation framework for a query characterisation: the
// casebase's internal attacks plus the new case's attacks on every case it
// is irrelevant to. Supports are included when with_supports.
MinedFramework mine_attacks(const Casebase& casebase,
                            const Characterisation& x_new,
                            bool with_supports = false);

// Same-outcome analogue of the attack rule: support a -> b iff the outcomes
// match, a is strictly more exceptional, and no same-outcome case sits
// strictly between them. The default argument can only be an endpoint.
std::vector<std::pair<int, int>> mine_supports(const Casebase& casebase);

struct Prediction {
    std::string outcome;
    af::GroundedResult grounded; // computed on the effective framework
    MinedFramework mined;        // original attacks + supports
    af::Framework effective;     // supports resolved into indirect attacks
};

Prediction predict(const Casebase& casebase,
                   const Characterisation& x_new,
                   bool use_supports = false);

enum class MoveKind { Challenge, Defeat, Dismiss, Stand };

const char* move_kind_name(MoveKind kind);

struct ExplanationMove {
    af::ArgumentId speaker;
    MoveKind kind;
    af::ArgumentId target;
};

struct Explanation {
    std::string text;
    std::vector<ExplanationMove> moves;
};

// Debate narrative: the default and its outcome, then per attacker whether
// it was dismissed as irrelevant, defeated by an accepted case, or stands.
// Recurses one level per grounded layer.
Explanation explain(const Prediction& prediction);

} // namespace saacbr

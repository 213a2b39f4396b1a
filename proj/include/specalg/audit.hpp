#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "specalg/laws.hpp"
#include "specalg/theory.hpp"

namespace specalg {

enum class GenMode { Random, Exhaustive };

struct GenConfig {
    std::string theory = "fa";  // fa | mts | ia
    mts::Rule mts_rule = mts::Rule::Meet;
    int max_states = 3;
    int alphabet_size = 2;
    int sample_count = 1000;
    std::uint64_t seed = 0;
    GenMode mode = GenMode::Random;
};

TheoryHandle make_handle(const GenConfig& cfg);

/// Deterministic function of (cfg.seed, index); always structurally valid.
Spec gen_random(const GenConfig& cfg, std::uint64_t index);

/// Every structurally valid specification within the bounds, each once,
/// canonical order. Throws EnumerationBound when bounds are too large.
std::vector<Spec> enumerate_all(const GenConfig& cfg);

enum class Status { Holds, Fails, Inapplicable };

std::string status_name(Status s);

struct LawVerdict {
    LawId law;
    Status status = Status::Inapplicable;
    long samples_checked = 0;
    long inapplicable_count = 0;
    long premise_hits = 0;   // implication laws only
    bool tracks_premise = false;
    std::vector<std::string> witness;  // rendered specs, failing instantiation
};

/// Draws tuples (random: sampleCount, exhaustive: all), evaluates the
/// law, shrinks and reports the first counterexample by tuple index.
LawVerdict check_law(const TheoryHandle& t, LawId law, const GenConfig& cfg);

/// Greedy single-step reductions in canonical order while the law stays
/// false; returns a locally minimal witness.
std::vector<Spec> shrink(const TheoryHandle& t, LawId law, std::vector<Spec> witness);

struct Thm2CrossCheck {
    bool applicable = false;
    std::string par_unit, thm1, precong, conj_glb;  // statuses
    std::string observation;
};

struct AuditReport {
    GenConfig config;
    std::vector<LawVerdict> verdicts;
    Thm2CrossCheck thm2;
    long duration_ms = 0;

    bool any_failure() const;
};

AuditReport audit(const TheoryHandle& t, const GenConfig& cfg);

std::string report_to_json(const AuditReport& r);
std::string report_to_text(const AuditReport& r);

}  // namespace specalg

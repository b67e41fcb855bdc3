#pragma once

#include <cstdint>
#include <vector>

#include "rt3/projective.hpp"

namespace rt3 {

// Deterministic 64-bit linear congruential generator.  The verification
// sweeps are specified down to the byte: state' = state * 6364136223846793005
// + 1442695040888963407 (mod 2^64), output = updated state.  One sequential
// stream per run, consumed in registry order.
struct Lcg64 {
    std::uint64_t state;

    explicit Lcg64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return state;
    }
};

enum class Outcome { pass, fail, skip };

// One algebraic identity over (B, vectors, scalars).  Evaluators return skip
// exactly when a stated precondition is violated; inputs are never resampled.
struct Identity {
    const char* name;
    int vecs_random;        // vectors drawn per case in random mode
    int scalars_random;     // scalars drawn per case in random mode
    int vecs_exhaustive;    // vectors enumerated in exhaustive mode; -1 = random only
    int scalars_exhaustive;
    Outcome (*eval)(const BilinearForm& B, const std::vector<Vec3>& v,
                    const std::vector<FieldElement>& s);
};

// Fixed registry; order defines both the RNG consumption order and the order
// of entries in the summary.
const std::vector<Identity>& identity_registry();

struct IdentityTally {
    const char* name;
    std::uint64_t tested = 0;
    std::uint64_t passed = 0;
    std::uint64_t skipped = 0;
    std::uint64_t failed = 0;
};

struct VerifySummary {
    bool exhaustive = false;
    std::uint64_t seed = 0;   // random mode
    std::uint64_t cases = 0;  // random mode: cases per identity
    std::vector<IdentityTally> identities;

    std::uint64_t failures() const;
};

// Random mode: `cases` tuples per identity, components drawn from one LCG
// stream (rational: integers in [-20, 20]; F_p: uniform residues).
VerifySummary verify_random(const BilinearForm& B, std::uint64_t seed, std::uint64_t cases);

// Exhaustive mode over a prime field: per identity, enumerates every tuple of
// vector components and scalars in lexicographic order (most significant
// first), provided the state space p^(3 vecs + scalars) fits the budget; the
// tally of an identity beyond the budget (or marked random-only) stays zero.
VerifySummary verify_exhaustive(const BilinearForm& B);

}  // namespace rt3

#pragma once

#include <string>
#include <vector>

#include "tpbs/core/types.hpp"

namespace tpbs {

using Challenges = std::vector<std::uint8_t>;  // symbols in {1,2,3}

// The H₂ input: length-prefixed statement binding followed by the
// length-prefixed commitment bytes.
Bytes challenge_point(ByteSpan statement, ByteSpan commitments);

// H₂: SHAKE256("TPBS-H2" ‖ point); bytes ≥ 252 are skipped, others map to (b mod 3) + 1.
Challenges h2(ByteSpan point, std::size_t kappa);

// Where Fiat–Shamir challenges come from. Production code uses the plain
// hash; the experiments substitute a programmable, logging oracle.
class ChallengeOracle {
public:
    virtual ~ChallengeOracle() = default;
    virtual Challenges query(ByteSpan point, std::size_t kappa) = 0;
};

class HashOracle final : public ChallengeOracle {
public:
    Challenges query(ByteSpan point, std::size_t kappa) override { return h2(point, kappa); }
};

std::string challenges_to_string(const Challenges& ch);

}  // namespace tpbs

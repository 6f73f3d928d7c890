#include "tpbs/sigcrypt/oracle.hpp"

#include "tpbs/core/serialize.hpp"
#include "tpbs/sigcrypt/xof.hpp"

namespace tpbs {

Bytes challenge_point(ByteSpan statement, ByteSpan commitments) {
    ByteWriter w;
    w.blob(statement);
    w.blob(commitments);
    return w.take();
}

Challenges h2(ByteSpan point, std::size_t kappa) {
    XofReader xof("TPBS-H2", point);
    Challenges out;
    out.reserve(kappa);
    while (out.size() < kappa) {
        const std::uint8_t b = xof.next_byte();
        if (b >= 252) continue;
        out.push_back(static_cast<std::uint8_t>(b % 3 + 1));
    }
    return out;
}

std::string challenges_to_string(const Challenges& ch) {
    std::string s;
    for (auto c : ch) s.push_back(static_cast<char>('0' + c));
    return s;
}

}  // namespace tpbs

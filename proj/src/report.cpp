#include "sneak/report.hpp"

#include <sstream>

namespace sneak {

const char* to_string(MsgKind k) {
    switch (k) {
        case MsgKind::dealer_data: return "dealer_data";
        case MsgKind::relay: return "relay";
        default: return "fallback_chunk";
    }
}

std::string transcript_to_csv(const std::vector<TranscriptRow>& rows) {
    std::ostringstream os;
    os << "tick,src,dst,payload_len,kind\n";
    auto name = [](NodeId v) { return v == kDealer ? std::string("D") : std::to_string(v); };
    for (const auto& r : rows)
        os << r.tick << ',' << name(r.src) << ',' << name(r.dst) << ',' << r.payload_len << ','
           << to_string(r.kind) << '\n';
    return os.str();
}

}  // namespace sneak

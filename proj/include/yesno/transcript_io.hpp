// transcript_io.hpp -- flat, diff-stable serialization of a solve session.

#pragma once

#include <string>

#include "json.hpp"
#include "yesno/core.hpp"

namespace yesno {

inline nlohmann::ordered_json transcript_to_json(const GameParams& params,
                                                 const SolveResult& result) {
    nlohmann::ordered_json doc;
    doc["params"] = {{"n", params.positions}, {"k", params.colors}};
    nlohmann::ordered_json queries = nlohmann::ordered_json::array();
    for (const TranscriptRecord& record : result.transcript.records()) {
        queries.push_back({{"seq", record.seq},
                           {"code", code_to_string(record.query)},
                           {"answer", to_string(record.answer)},
                           {"purpose", to_string(record.purpose)}});
    }
    doc["queries"] = std::move(queries);
    doc["result"] = {{"secret", code_to_string(result.secret)},
                     {"total_queries", result.transcript.total_queries()}};
    return doc;
}

inline std::string transcript_to_string(const GameParams& params, const SolveResult& result) {
    return transcript_to_json(params, result).dump(2) + "\n";
}

}  // namespace yesno

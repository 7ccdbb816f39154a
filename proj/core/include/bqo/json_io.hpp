#pragma once

#include <string>

#include "bqo/array.hpp"
#include "bqo/barrier.hpp"
#include "bqo/search.hpp"

namespace bqo::io {

// Block file: {"base": N, "maxlen": L, "elements": [[0,1],[0,2],[1],[2]]}
barrier::Block load_block(const std::string& path);
barrier::Block block_from_json_text(const std::string& text);
std::string block_to_json_text(const barrier::Block& b);

// Array file: {"block": "<path>" | {...inline...}, "target": "<structure>",
//              "values": {"0,1": "<value text>", ...}}
arrays::ArrayTable load_array(const std::string& path);
arrays::ArrayTable array_from_json_text(const std::string& text,
                                        const std::string& base_dir = "");
std::string array_to_json_text(const arrays::ArrayTable& f);

// Lift file: the base array fields plus "selector", "depth" and the values
// of every computed cell keyed by sequence.
arrays::LiftTable load_lift(const std::string& path);
std::string lift_to_json_text(const arrays::LiftTable& g);

std::string search_result_to_json_text(const search::Result& r,
                                       const barrier::Block& block,
                                       const qo::OrderSpec& q, search::Mode mode);
std::string threshold_result_to_json_text(const search::ThresholdResult& r);

void write_file(const std::string& path, const std::string& text);
std::string read_file(const std::string& path);

}  // namespace bqo::io

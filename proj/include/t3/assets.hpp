#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace t3::assets {

// Assets are embedded at build time; names mirror the repo paths,
// e.g. "prompts/order_gpt_qa.txt" or "data/stopwords.txt".
std::string_view get(std::string_view name);
bool has(std::string_view name);
std::vector<std::string> list();

}  // namespace t3::assets

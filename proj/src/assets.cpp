#include "t3/assets.hpp"

#include <array>
#include <stdexcept>
#include <utility>

#include "prompts_order_gpt_qa_txt.hpp"
#include "prompts_attribute_enrich_txt.hpp"
#include "prompts_attribute_qa_txt.hpp"
#include "prompts_referring_captions_txt.hpp"
#include "prompts_referring_qa_txt.hpp"
#include "prompts_grounding_statement_txt.hpp"
#include "prompts_frame_caption_first_txt.hpp"
#include "prompts_frame_caption_next_txt.hpp"
#include "prompts_frame_caption_brightness_txt.hpp"
#include "prompts_mc_prompt_txt.hpp"
#include "data_stopwords_txt.hpp"
#include "data_order_sentence_templates_txt.hpp"
#include "data_order_phrase_templates_txt.hpp"
#include "data_grounding_templates_txt.hpp"

namespace t3::assets {

namespace {

struct Entry {
  std::string_view name;
  std::string_view content;
};

const std::array<Entry, 14> kEntries = {{
    {"prompts/order_gpt_qa.txt", gen::prompts_order_gpt_qa_txt},
    {"prompts/attribute_enrich.txt", gen::prompts_attribute_enrich_txt},
    {"prompts/attribute_qa.txt", gen::prompts_attribute_qa_txt},
    {"prompts/referring_captions.txt", gen::prompts_referring_captions_txt},
    {"prompts/referring_qa.txt", gen::prompts_referring_qa_txt},
    {"prompts/grounding_statement.txt", gen::prompts_grounding_statement_txt},
    {"prompts/frame_caption_first.txt", gen::prompts_frame_caption_first_txt},
    {"prompts/frame_caption_next.txt", gen::prompts_frame_caption_next_txt},
    {"prompts/frame_caption_brightness.txt",
     gen::prompts_frame_caption_brightness_txt},
    {"prompts/mc_prompt.txt", gen::prompts_mc_prompt_txt},
    {"data/stopwords.txt", gen::data_stopwords_txt},
    {"data/order_sentence_templates.txt",
     gen::data_order_sentence_templates_txt},
    {"data/order_phrase_templates.txt", gen::data_order_phrase_templates_txt},
    {"data/grounding_templates.txt", gen::data_grounding_templates_txt},
}};

}  // namespace

std::string_view get(std::string_view name) {
  for (const auto& e : kEntries)
    if (e.name == name) return e.content;
  throw std::out_of_range("unknown asset: " + std::string(name));
}

bool has(std::string_view name) {
  for (const auto& e : kEntries)
    if (e.name == name) return true;
  return false;
}

std::vector<std::string> list() {
  std::vector<std::string> names;
  names.reserve(kEntries.size());
  for (const auto& e : kEntries) names.emplace_back(e.name);
  return names;
}

}  // namespace t3::assets

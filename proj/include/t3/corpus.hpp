#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "t3/rng.hpp"

namespace t3 {

// One first-sentence image caption with its extracted noun set.
// Nouns are kept sorted so set intersections are cheap and deterministic.
struct Caption {
  std::uint32_t id = 0;
  std::string text;
  std::vector<std::string> nouns;  // sorted, unique
  std::string source_id;

  bool shares_noun_with(const Caption& other) const;
};

struct IngestRecord {
  std::string caption_text;
  std::string source_id;
};

struct IngestStats {
  std::size_t accepted = 0;
  std::size_t skipped = 0;  // blank or < 3 tokens after first-sentence split
};

// Immutable after ingest; safe to share read-only across generation workers.
class CaptionPool {
 public:
  const std::vector<Caption>& captions() const { return captions_; }
  std::size_t size() const { return captions_.size(); }
  const Caption& operator[](std::size_t i) const { return captions_[i]; }

  // Caption ids containing the (singularized) noun; empty if absent.
  const std::vector<std::uint32_t>& ids_with_noun(const std::string& noun) const;

  // k distinct captions, order as sampled.
  std::vector<Caption> sample_relevant(std::size_t k, Rng& rng) const;

  // n distinct captions sharing zero nouns with any of `relevant` and not
  // themselves members of `relevant` (by id when ids refer to this pool,
  // and by text otherwise).
  std::vector<Caption> sample_distractors(const std::vector<Caption>& relevant,
                                          std::size_t n, Rng& rng) const;

  // Ids eligible as distractors for the given relevant captions, ascending.
  std::vector<std::uint32_t> eligible_distractors(
      const std::vector<Caption>& relevant) const;

  friend CaptionPool ingest(const std::vector<IngestRecord>& records,
                            IngestStats* stats);
  friend CaptionPool make_pool(std::vector<Caption> captions);

 private:
  void rebuild_index();

  std::vector<Caption> captions_;
  std::unordered_map<std::string, std::vector<std::uint32_t>> noun_index_;
};

// Splits at the first of . ! ? followed by whitespace or end of text.
std::string first_sentence(const std::string& text);

// Conservative noun over-approximation: lowercase alphabetic tokens minus the
// shipped closed-class stoplist, plural -s/-es stripped. Returned sorted and
// deduplicated. False positives only shrink the distractor pool.
std::vector<std::string> extract_nouns(const std::string& text);

// Singular form used by the extractor (exposed for tests).
std::string singularize(const std::string& token);

CaptionPool ingest(const std::vector<IngestRecord>& records,
                   IngestStats* stats = nullptr);

// Builds a pool from already-prepared captions (ids are reassigned densely).
CaptionPool make_pool(std::vector<Caption> captions);

// Wraps provider-generated caption text so it can flow through the same
// distractor filtering as pool captions. id is the sentinel for "not in pool".
Caption make_generated_caption(const std::string& text);

inline constexpr std::uint32_t kGeneratedCaptionId = 0xffffffffu;

// JSONL (objects with "caption", optional "id") and binary pool files.
CaptionPool load_pool(const std::string& path);
void save_pool(const CaptionPool& pool, const std::string& path);
CaptionPool ingest_jsonl_file(const std::string& path, IngestStats* stats = nullptr);

}  // namespace t3

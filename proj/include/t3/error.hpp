#pragma once

#include <stdexcept>
#include <string>

namespace t3 {

// Domain errors carry a stable machine-readable code next to the message;
// the CLI prints them as JSON on stderr and exits 1.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

#define T3_DEFINE_ERROR(Name, code_str)                       \
  class Name : public Error {                                 \
   public:                                                    \
    explicit Name(const std::string& message)                 \
        : Error(code_str, message) {}                         \
  }

T3_DEFINE_ERROR(EmptyCorpus, "empty_corpus");
T3_DEFINE_ERROR(PoolTooSmall, "pool_too_small");
T3_DEFINE_ERROR(PermutationExhausted, "permutation_exhausted");
T3_DEFINE_ERROR(ProviderUnavailable, "provider_unavailable");
T3_DEFINE_ERROR(MalformedReply, "malformed_reply");
T3_DEFINE_ERROR(SchemaMismatch, "schema_mismatch");
T3_DEFINE_ERROR(NoOptions, "no_options");
T3_DEFINE_ERROR(TooFewSamples, "too_few_samples");
T3_DEFINE_ERROR(SourceTooSmall, "source_too_small");
T3_DEFINE_ERROR(ExcessiveDiscards, "excessive_discards");
T3_DEFINE_ERROR(InvalidClass, "invalid_class");
T3_DEFINE_ERROR(DegenerateImage, "degenerate_image");
T3_DEFINE_ERROR(ShapeMismatch, "shape_mismatch");
T3_DEFINE_ERROR(NonFiniteLoss, "non_finite_loss");
T3_DEFINE_ERROR(IoError, "io_error");
T3_DEFINE_ERROR(ConfigError, "config_error");

#undef T3_DEFINE_ERROR

// Carries the eligible-count diagnostic so callers can shrink n or resample.
class InsufficientDistractors : public Error {
 public:
  InsufficientDistractors(std::size_t eligible, std::size_t requested)
      : Error("insufficient_distractors",
              "only " + std::to_string(eligible) +
                  " captions are eligible as distractors, need " +
                  std::to_string(requested)),
        eligible_(eligible),
        requested_(requested) {}
  std::size_t eligible() const { return eligible_; }
  std::size_t requested() const { return requested_; }

 private:
  std::size_t eligible_;
  std::size_t requested_;
};

}  // namespace t3

#pragma once

#include <stdexcept>
#include <string>

namespace corado {

enum class errc {
  empty_family,
  unequal_cardinalities,
  exchange_axiom_violation,
  rank_out_of_range,
  duplicate_edge_label,
  empty_support,
  ground_sets_overlap,
  not_a_bijection,
  ground_set_mismatch,
  rank_zero_flat,
  empty_flat,
  loopy_matroid,
  loopy_input,
  empty_member,
  degree_too_large,
  internal_inconsistency,
  rank_mismatch,
  unknown_label,
  ground_too_large,
  search_too_large,
  json_syntax,
  unknown_type,
  validation_failed,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::empty_family: return "EmptyFamily";
    case errc::unequal_cardinalities: return "UnequalCardinalities";
    case errc::exchange_axiom_violation: return "ExchangeAxiomViolation";
    case errc::rank_out_of_range: return "RankOutOfRange";
    case errc::duplicate_edge_label: return "DuplicateEdgeLabel";
    case errc::empty_support: return "EmptySupport";
    case errc::ground_sets_overlap: return "GroundSetsOverlap";
    case errc::not_a_bijection: return "NotABijection";
    case errc::ground_set_mismatch: return "GroundSetMismatch";
    case errc::rank_zero_flat: return "RankZeroFlat";
    case errc::empty_flat: return "EmptyFlat";
    case errc::loopy_matroid: return "LoopyMatroid";
    case errc::loopy_input: return "LoopyInput";
    case errc::empty_member: return "EmptyMember";
    case errc::degree_too_large: return "DegreeTooLarge";
    case errc::internal_inconsistency: return "InternalInconsistency";
    case errc::rank_mismatch: return "RankMismatch";
    case errc::unknown_label: return "UnknownLabel";
    case errc::ground_too_large: return "GroundTooLarge";
    case errc::search_too_large: return "SearchTooLarge";
    case errc::json_syntax: return "JsonSyntax";
    case errc::unknown_type: return "UnknownType";
    case errc::validation_failed: return "ValidationFailed";
  }
  return "UnknownError";
}

/// Domain error carrying a stable error code alongside the message.
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw error(code, msg); }

}  // namespace corado

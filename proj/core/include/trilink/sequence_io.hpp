#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "trilink/rewriting.hpp"

namespace trilink {

/// Optional metadata carried in the header line of a sequence file.
struct SequenceHeader {
  std::optional<std::string> provenance;
  std::optional<std::size_t> r3_count;
  std::optional<BraidWord> target;
};

/// A sequence file as read from disk, before replay checks.
struct SequenceFile {
  TransformationSequence sequence;
  SequenceHeader header;
  std::vector<std::vector<int>> recorded_words;  // word_after of each step
};

/// JSON Lines:
///   {"m":3,"start":[1,1,...], optional "provenance","r3_count","target"}
///   {"step":1,"kind":"r3","pos":3,"params":{},"word_after":[...]}
/// Insertions carry params {"pair":[k,-k]}; the other kinds carry {}.
/// Steps are numbered from 1. Every line is compact, canonical JSON.
void write_sequence_jsonl(std::ostream& out, const TransformationSequence& seq,
                          const SequenceHeader& header = {});

/// Throws parse_error on malformed JSON, missing or mistyped fields,
/// non-consecutive step numbers or letters out of range in start/target.
SequenceFile read_sequence_jsonl(std::istream& in);

/// First step whose replayed word differs from its recorded word_after, or
/// a failure message if a move does not apply. nullopt if everything replays.
struct ReplayMismatch {
  std::size_t step = 0;
  std::string message;
};
std::optional<ReplayMismatch> check_recorded_words(const SequenceFile& file);

}  // namespace trilink

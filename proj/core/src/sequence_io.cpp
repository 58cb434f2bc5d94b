#include "trilink/sequence_io.hpp"

#include <cstdlib>
#include <istream>
#include <ostream>

#include "trilink/errors.hpp"
#include "trilink/json.hpp"

namespace trilink {

namespace {

Json move_params(const Move& move) {
  Json params = Json::object();
  if (move.kind == MoveKind::insert_pair) {
    params["pair"] = {move.inserted.to_signed(), move.inserted.inverse().to_signed()};
  }
  return params;
}

BraidWord word_field(const Json& json, const char* key, int m) {
  const auto values = json.at(key).get<std::vector<int>>();
  try {
    return BraidWord::from_signed(m, values);
  } catch (const precondition_error& ex) {
    throw parse_error(std::string("field '") + key + "': " + ex.what());
  }
}

Move parse_move(const Json& line, int m) {
  const auto kind_name = line.at("kind").get<std::string>();
  const auto kind = move_kind_from_string(kind_name);
  if (!kind) {
    throw parse_error("unknown move kind '" + kind_name + "'");
  }
  const auto pos = line.at("pos").get<long long>();
  if (pos < 1) {
    throw parse_error("move positions are 1-based");
  }
  Move move{*kind, static_cast<std::size_t>(pos), {}};
  const Json& params = line.at("params");
  if (!params.is_object()) {
    throw parse_error("params must be an object");
  }
  if (*kind == MoveKind::insert_pair) {
    const auto pair = params.at("pair").get<std::vector<int>>();
    if (pair.size() != 2 || pair[0] == 0 || pair[1] != -pair[0]) {
      throw parse_error("insert params need \"pair\": [k, -k]");
    }
    const int index = std::abs(pair[0]);
    if (index > m - 1) {
      throw parse_error("inserted generator out of range");
    }
    move.inserted = {index, pair[0] > 0 ? 1 : -1};
  }
  return move;
}

}  // namespace

void write_sequence_jsonl(std::ostream& out, const TransformationSequence& seq, const SequenceHeader& header) {
  Json head;
  head["m"] = seq.start.strands();
  head["start"] = seq.start.to_signed();
  if (header.provenance) head["provenance"] = *header.provenance;
  if (header.r3_count) head["r3_count"] = *header.r3_count;
  if (header.target) head["target"] = header.target->to_signed();
  out << head.dump() << '\n';

  BraidWord word = seq.start;
  for (std::size_t t = 0; t < seq.moves.size(); ++t) {
    const Move& move = seq.moves[t];
    word = apply_move(word, move);
    Json line;
    line["step"] = t + 1;
    line["kind"] = to_string(move.kind);
    line["pos"] = move.pos;
    line["params"] = move_params(move);
    line["word_after"] = word.to_signed();
    out << line.dump() << '\n';
  }
}

SequenceFile read_sequence_jsonl(std::istream& in) {
  SequenceFile file{TransformationSequence{BraidWord(2), {}}, {}, {}};
  std::string text;
  std::size_t line_no = 0;
  bool have_header = false;
  int m = 0;
  while (std::getline(in, text)) {
    ++line_no;
    if (!text.empty() && text.back() == '\r') {
      text.pop_back();
    }
    if (text.find_first_not_of(" \t") == std::string::npos) {
      continue;
    }
    const std::string at = "line " + std::to_string(line_no) + ": ";
    try {
      const Json line = Json::parse(text);
      if (!line.is_object()) {
        throw parse_error(at + "expected a JSON object");
      }
      if (!have_header) {
        m = line.at("m").get<int>();
        if (m < 2) {
          throw parse_error(at + "m must be at least 2");
        }
        file.sequence.start = word_field(line, "start", m);
        if (line.contains("provenance")) file.header.provenance = line.at("provenance").get<std::string>();
        if (line.contains("r3_count")) file.header.r3_count = line.at("r3_count").get<std::size_t>();
        if (line.contains("target")) file.header.target = word_field(line, "target", m);
        have_header = true;
        continue;
      }
      const auto step = line.at("step").get<long long>();
      if (step != static_cast<long long>(file.sequence.moves.size()) + 1) {
        throw parse_error(at + "expected step " + std::to_string(file.sequence.moves.size() + 1));
      }
      file.sequence.moves.push_back(parse_move(line, m));
      file.recorded_words.push_back(line.at("word_after").get<std::vector<int>>());
    } catch (const Json::exception& ex) {
      throw parse_error(at + ex.what());
    } catch (const parse_error& ex) {
      const std::string what = ex.what();
      throw parse_error(what.rfind("line ", 0) == 0 ? what : at + what);
    }
  }
  if (!have_header) {
    throw parse_error("sequence file has no header line");
  }
  return file;
}

std::optional<ReplayMismatch> check_recorded_words(const SequenceFile& file) {
  BraidWord word = file.sequence.start;
  for (std::size_t t = 0; t < file.sequence.moves.size(); ++t) {
    if (auto why = move_obstruction(word, file.sequence.moves[t])) {
      return ReplayMismatch{t + 1, *why};
    }
    word = apply_move(word, file.sequence.moves[t]);
    if (word.to_signed() != file.recorded_words[t]) {
      return ReplayMismatch{t + 1, "replayed word differs from word_after"};
    }
  }
  return std::nullopt;
}

}  // namespace trilink

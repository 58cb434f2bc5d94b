#include "cli.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "trilink/constructions.hpp"
#include "trilink/errors.hpp"
#include "trilink/invariants.hpp"
#include "trilink/json.hpp"
#include "trilink/linking.hpp"
#include "trilink/permutation.hpp"
#include "trilink/rewriting.hpp"
#include "trilink/sequence_io.hpp"
#include "trilink/word_problem.hpp"

namespace trilink::cli {

namespace {

// Raised by a command to finish with a specific exit code.
struct Failure {
  int code;
  std::string message;
};

struct Options {
  int m = 3;
  std::string word;
  std::string a;
  std::string b;
  int n = 1;
  std::string emit;
  std::string file;
  bool audit = false;
  bool pretty = false;
  bool json = false;

  // sequence builders
  std::string kind = "b-delta";
  int j = 2;
  int i = 1;
  std::string w;
  int k1 = 0;
  int l1 = 0;
  int k2 = 0;
  int l2 = 0;
};

std::string render(const Json& json, const Options& opt) { return dump(json, opt.pretty ? 2 : -1); }

BraidWord require_pure(const std::string& text, int m, const char* what) {
  BraidWord word = parse_word(text, m);
  if (!is_pure(word)) {
    throw Failure{precondition_failure, std::string(what) + " is not a pure braid (precondition: is_pure)"};
  }
  return word;
}

void write_file(const std::string& path, const TransformationSequence& seq, const SequenceHeader& header) {
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    throw Failure{precondition_failure, "cannot open '" + path + "' for writing"};
  }
  write_sequence_jsonl(file, seq, header);
}

SequenceHeader header_of(const SequenceBundle& bundle) {
  return SequenceHeader{bundle.provenance, bundle.r3_count, bundle.target};
}

std::string cmd_lk(const Options& opt) {
  const BraidWord word = require_pure(opt.word, opt.m, "word");
  return render(to_json(linking_matrix(word)), opt);
}

std::string cmd_tlk(const Options& opt) {
  const BraidWord a = require_pure(opt.a, opt.m, "a");
  const BraidWord b = require_pure(opt.b, opt.m, "b");
  if (opt.m < 3) {
    throw Failure{precondition_failure, "triple linking numbers need m >= 3"};
  }
  return render(to_json(tlk_formula(CommutingPair::certify(a, b))), opt);
}

std::string cmd_oracle(const Options& opt) {
  const BraidWord b = require_pure(opt.b, opt.m, "b");
  if (opt.n < 0) {
    throw Failure{precondition_failure, "n must be non-negative"};
  }
  if (opt.m < 3) {
    throw Failure{precondition_failure, "the oracle needs m >= 3"};
  }
  const auto pair = CommutingPair::certify(b, full_twist(opt.m, opt.n));
  const TripleLinkingTensor formula = tlk_formula(pair);
  const SequenceBundle bundle = seq_b_delta_n(b, opt.n);
  const SequenceTlk extracted = tlk_from_sequence(bundle.seq, pair);
  BoundReport bound = thm2_bound(b, opt.n);
  bound.realized_r3_count = static_cast<long long>(bundle.r3_count);

  std::optional<bool> audit;
  if (opt.audit) {
    audit = validate_sequence(bundle.seq, bundle.target, true).valid();
  }

  const bool agree = formula == extracted.tensor;
  Json out;
  out["verdict"] = agree ? "agree" : "disagree";
  out["m"] = opt.m;
  out["n"] = opt.n;
  out["b"] = b.to_signed();
  out["r3_count"] = bundle.r3_count;
  out["moves"] = bundle.seq.moves.size();
  out["formula"] = to_json(formula);
  out["sequence"] = to_json(extracted.tensor);
  out["bound"] = to_json(bound);
  out["audit"] = audit ? Json(*audit ? "passed" : "failed") : Json("skipped");

  if (!agree) {
    throw Failure{oracle_disagreement, "oracle disagreement: " + out.dump()};
  }
  if (audit == false) {
    throw Failure{invalid_sequence, "audit failed: an intermediate word is not braid-equal to the start"};
  }
  if (!opt.emit.empty()) {
    write_file(opt.emit, bundle.seq, header_of(bundle));
  }
  return render(out, opt);
}

std::string cmd_verify(const Options& opt) {
  std::ifstream in(opt.file, std::ios::binary);
  if (!in) {
    throw Failure{parse_failure, "cannot open '" + opt.file + "'"};
  }
  const SequenceFile file = read_sequence_jsonl(in);
  if (auto mismatch = check_recorded_words(file)) {
    throw Failure{invalid_sequence, "step " + std::to_string(mismatch->step) + ": " + mismatch->message};
  }
  const BraidWord final_word = file.sequence.final_word();
  const BraidWord target = file.header.target.value_or(final_word);
  const ValidationReport report = validate_sequence(file.sequence, target, opt.audit);
  if (!report.valid()) {
    throw Failure{invalid_sequence, "sequence invalid: " + to_json(report).dump()};
  }
  const SequenceTlk tlk = tlk_from_sequence(file.sequence);
  if (file.header.r3_count && *file.header.r3_count != tlk.r3_count) {
    throw Failure{invalid_sequence, "header r3_count " + std::to_string(*file.header.r3_count) +
                                        " but the sequence has " + std::to_string(tlk.r3_count)};
  }

  Json out;
  out["valid"] = true;
  out["m"] = file.sequence.start.strands();
  out["moves"] = file.sequence.moves.size();
  out["r3_count"] = tlk.r3_count;
  out["endpoint_matches"] = report.endpoint_matches;
  out["audit"] = opt.audit ? "passed" : "skipped";
  Json points = Json::array();
  for (const auto& record : triple_points(file.sequence)) {
    points.push_back(to_json(record));
  }
  out["triple_points"] = std::move(points);
  out["tensor"] = to_json(tlk.tensor);
  return render(out, opt);
}

std::string cmd_bound(const Options& opt) {
  const BraidWord b = require_pure(opt.b, opt.m, "b");
  if (opt.n < 0) {
    throw Failure{precondition_failure, "n must be non-negative"};
  }
  return render(to_json(thm2_bound(b, opt.n)), opt);
}

std::string cmd_sequence(const Options& opt) {
  SequenceBundle bundle = [&] {
    if (opt.kind == "b-delta") {
      if (opt.n < 0) {
        throw Failure{precondition_failure, "n must be non-negative"};
      }
      return seq_b_delta_n(parse_word(opt.b, opt.m), opt.n);
    }
    if (opt.kind == "slide") return seq_slide(opt.j, opt.m);
    if (opt.kind == "wrap") return seq_wrap(opt.m);
    if (opt.kind == "sigma") {
      if (opt.i == 0) {
        throw Failure{parse_failure, "--i must be a nonzero signed generator"};
      }
      return seq_sigma_past_delta(std::abs(opt.i), opt.i > 0 ? 1 : -1, opt.m);
    }
    if (opt.kind == "structured") {
      if (opt.m != 3) {
        throw Failure{precondition_failure, "structured pairs live on 3 strands"};
      }
      return seq_structured3(StructuredPair3{parse_word(opt.w, 3), opt.k1, opt.l1, opt.k2, opt.l2});
    }
    throw Failure{parse_failure, "unknown sequence kind '" + opt.kind + "'"};
  }();

  std::ostringstream text;
  write_sequence_jsonl(text, bundle.seq, header_of(bundle));
  if (opt.emit.empty()) {
    return text.str();
  }
  std::ofstream file(opt.emit, std::ios::binary);
  if (!file) {
    throw Failure{precondition_failure, "cannot open '" + opt.emit + "' for writing"};
  }
  file << text.str();
  Json out;
  out["provenance"] = bundle.provenance;
  out["r3_count"] = bundle.r3_count;
  out["moves"] = bundle.seq.moves.size();
  out["path"] = opt.emit;
  return render(out, opt);
}

void add_format_flags(CLI::App* cmd, Options& opt) {
  cmd->add_flag("--json", opt.json, "Compact canonical JSON (default)");
  cmd->add_flag("--pretty", opt.pretty, "Indented JSON");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Triple linking numbers of torus-covering T^2-links from commuting pure braids"};
  app.name("trilink");
  app.require_subcommand(1);

  auto* lk = app.add_subcommand("lk", "Pairwise linking numbers of a pure braid closure");
  lk->add_option("--m", opt.m, "Number of strands")->required();
  lk->add_option("--word", opt.word, "Braid word, e.g. \"1 -2\"")->required();
  add_format_flags(lk, opt);

  auto* tlk = app.add_subcommand("tlk", "Triple linking numbers of S_m(a, b) by the closed formula");
  tlk->add_option("--m", opt.m, "Number of strands")->required();
  tlk->add_option("--a", opt.a, "First basis braid")->required();
  tlk->add_option("--b", opt.b, "Second basis braid")->required();
  add_format_flags(tlk, opt);

  auto* oracle = app.add_subcommand("oracle", "Formula vs. rewriting sequence for S_m(b, Delta^n)");
  oracle->add_option("--m", opt.m, "Number of strands")->required();
  oracle->add_option("--b", opt.b, "Pure braid b")->required();
  oracle->add_option("--n", opt.n, "Twist exponent n >= 0")->required();
  oracle->add_option("--emit", opt.emit, "Write the constructed sequence (JSON Lines) here");
  oracle->add_flag("--audit", opt.audit, "Check every intermediate word with the word problem");
  add_format_flags(oracle, opt);

  auto* verify = app.add_subcommand("verify", "Replay and check a sequence file");
  verify->add_option("file", opt.file, "Sequence file (JSON Lines)")->required();
  verify->add_flag("--audit", opt.audit, "Check every intermediate word with the word problem");
  add_format_flags(verify, opt);

  auto* bound = app.add_subcommand("bound", "Triple point lower bound 4n(mu(m-2) - nu)");
  bound->add_option("--m", opt.m, "Number of strands")->required();
  bound->add_option("--b", opt.b, "Pure braid b")->required();
  bound->add_option("--n", opt.n, "Twist exponent n >= 0")->required();
  add_format_flags(bound, opt);

  auto* sequence = app.add_subcommand("sequence", "Emit a constructed transformation sequence");
  sequence->add_option("--kind", opt.kind, "b-delta | slide | wrap | sigma | structured")
      ->check(CLI::IsMember({"b-delta", "slide", "wrap", "sigma", "structured"}));
  sequence->add_option("--m", opt.m, "Number of strands")->required();
  sequence->add_option("--b", opt.b, "Braid b (b-delta)");
  sequence->add_option("--n", opt.n, "Twist exponent (b-delta)");
  sequence->add_option("--j", opt.j, "Generator index (slide)");
  sequence->add_option("--i", opt.i, "Signed generator, e.g. -2 (sigma)");
  sequence->add_option("--w", opt.w, "Pure 3-braid w (structured)");
  sequence->add_option("--k1", opt.k1, "Delta exponent of a (structured)");
  sequence->add_option("--l1", opt.l1, "w exponent of a (structured)");
  sequence->add_option("--k2", opt.k2, "Delta exponent of b (structured)");
  sequence->add_option("--l2", opt.l2, "w exponent of b (structured)");
  sequence->add_option("--emit", opt.emit, "Write to this path instead of stdout");
  add_format_flags(sequence, opt);

  std::vector<std::string> reversed_args(args.rbegin(), args.rend());
  try {
    app.parse(reversed_args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return parse_failure;
  }

  try {
    std::string result;
    if (*lk) result = cmd_lk(opt);
    else if (*tlk) result = cmd_tlk(opt);
    else if (*oracle) result = cmd_oracle(opt);
    else if (*verify) result = cmd_verify(opt);
    else if (*bound) result = cmd_bound(opt);
    else result = cmd_sequence(opt);
    out << result;
    return ok;
  } catch (const Failure& f) {
    err << "error: " << f.message << '\n';
    return f.code;
  } catch (const parse_error& e) {
    err << "parse error: " << e.what() << '\n';
    return parse_failure;
  } catch (const not_commuting_error& e) {
    err << "error: " << e.what() << " (certified by the free-group word problem)\n";
    return not_commuting;
  } catch (const precondition_error& e) {
    err << "precondition violated: " << e.what() << '\n';
    return precondition_failure;
  }
}

}  // namespace trilink::cli

#pragma once

#include <string>
#include <vector>

#include "pcclosure/pcvseq.hpp"

namespace pcc {

/// Textual description of a sequence, as read from a .seq file:
///   rank = <r>
///   prefix = [<expr>, ...]
///   tail.u = <expr>
///   tail.b = (<int>,...,<int>)
///   tail.n0 = <int>
/// '#' starts a comment; blank lines are ignored; keys may come in any
/// order. tail.n0 must equal len(prefix) - 1.
struct SequenceSpec {
  int rank = 0;
  std::vector<std::string> prefix_exprs;
  std::string tail_u;
  std::vector<Int> tail_b;
  Int tail_n0 = 0;
};

SequenceSpec parse_sequence_spec(const std::string& content);
SequenceSpec load_sequence_file(const std::string& path);

/// Parses the expressions and assembles the sequence. Does not require
/// pseudo-convergence; callers check validation() as needed.
PCSeq build_sequence(const SequenceSpec& spec);

/// Canonical re-print; parsing it back yields a semantically identical
/// sequence.
std::string print_sequence_spec(const PCSeq& seq);

}  // namespace pcc

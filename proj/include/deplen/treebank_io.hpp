#pragma once

// CoNLL-U ingestion.
//
// Only simple word lines (integer ID) contribute words; multiword-token
// ranges ("3-4") and empty nodes ("5.1") are skipped. The root's attachment
// to HEAD 0 is not a dependency: an accepted sentence of n words yields the
// n - 1 word-word edges of a DepTree.

#include <cstdint>
#include <istream>
#include <string>
#include <variant>
#include <vector>

#include "deplen/tree.hpp"

namespace deplen::io {

struct Token {
  int position = 0;  // 1-based
  int head = 0;      // 0 = attached to the virtual root
  std::string upos;

  friend bool operator==(const Token&, const Token&) = default;
};

struct RawSentence {
  std::string id;  // from "# sent_id = ..." when present, else ordinal
  std::vector<Token> tokens;
  std::size_t first_line = 0;
};

// Parses a whole stream. Throws ParseError (with the 1-based line number) on
// a line that does not have 10 tab-separated columns or whose ID/HEAD is not
// an integer. Accepts '\n' and "\r\n" line endings.
std::vector<RawSentence> read_conllu(std::istream& in);

// With one head per word, a disconnected structure always contains a cycle
// or lacks a root, so those two reasons cover it.
enum class RejectReason { multiple_roots, no_root, cycle, too_short };

std::string to_string(RejectReason reason);

struct Rejection {
  RejectReason reason;
};

// DepTree when the heads describe a tree (one root, acyclic, connected) on
// at least two words. A well-formed single-word sentence is rejected as
// too_short. Throws StructuralError for heads outside [0, n] or positions
// that are not 1..n in order.
std::variant<DepTree, Rejection> to_dep_tree(const RawSentence& sentence);

// Removes tokens whose UPOS is "PUNCT" and renumbers the rest 1..n'.
// Dependents of a removed token are reattached to its nearest kept
// ancestor (0 when none). Expects a sentence already accepted by
// to_dep_tree.
RawSentence drop_punctuation(const RawSentence& sentence);

enum class PunctMode { keep, drop };

std::string to_string(PunctMode mode);

struct IngestReport {
  std::int64_t sentences_read = 0;
  std::int64_t sentences_kept = 0;
  std::int64_t rejected_non_tree = 0;
  std::int64_t rejected_below_n_min = 0;

  friend bool operator==(const IngestReport&, const IngestReport&) = default;
};

struct IngestOptions {
  int n_min = 3;
  PunctMode punct = PunctMode::keep;
};

struct Corpus {
  // Every accepted tree, including those shorter than n_min; length
  // filtering is applied by the statistics layer.
  std::vector<DepTree> trees;
  std::vector<std::string> ids;  // parallel to trees
  IngestReport report;
};

Corpus ingest(std::istream& in, const IngestOptions& options);

// Reads a file; throws IoError when it cannot be opened.
Corpus ingest_file(const std::string& path, const IngestOptions& options);

// Minimal CoNLL-U for a tree rooted at `root`: FORM "w<i>", UPOS "X".
void write_conllu(std::ostream& out, const DepTree& tree, int root, const std::string& sent_id);

}  // namespace deplen::io

#include "deplen/treebank_io.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <string_view>

#include "deplen/error.hpp"

namespace deplen::io {

namespace {

constexpr std::size_t kColumns = 10;

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> cols;
  std::size_t start = 0;
  for (;;) {
    const std::size_t tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      cols.push_back(line.substr(start));
      return cols;
    }
    cols.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

bool parse_int(std::string_view text, int& out) {
  if (text.empty()) return false;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc() && ptr == text.data() + text.size();
}

bool is_blank(std::string_view line) {
  return line.find_first_not_of(" \t") == std::string_view::npos;
}

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::vector<RawSentence> read_conllu(std::istream& in) {
  std::vector<RawSentence> out;
  RawSentence current;
  std::size_t line_no = 0;
  std::string line;

  auto flush = [&] {
    if (!current.tokens.empty()) {
      if (current.id.empty()) current.id = std::to_string(out.size() + 1);
      out.push_back(std::move(current));
    }
    current = RawSentence{};
  };

  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view(line);
    if (!view.empty() && view.back() == '\r') view.remove_suffix(1);

    if (is_blank(view)) {
      flush();
      continue;
    }
    if (view.front() == '#') {
      const std::string_view body = trim(view.substr(1));
      constexpr std::string_view key = "sent_id";
      if (body.starts_with(key)) {
        const std::string_view rest = trim(body.substr(key.size()));
        if (rest.starts_with('=')) current.id = std::string(trim(rest.substr(1)));
      }
      continue;
    }

    const auto cols = split_tabs(view);
    if (cols.size() != kColumns) {
      throw ParseError(line_no, "expected " + std::to_string(kColumns) + " tab-separated columns, found " +
                                    std::to_string(cols.size()));
    }
    const std::string_view id = cols[0];
    if (id.find('-') != std::string_view::npos || id.find('.') != std::string_view::npos) {
      continue;  // multiword-token range or empty node
    }
    Token tok;
    if (!parse_int(id, tok.position)) throw ParseError(line_no, "non-integer ID '" + std::string(id) + "'");
    if (!parse_int(cols[6], tok.head)) {
      throw ParseError(line_no, "non-integer HEAD '" + std::string(cols[6]) + "'");
    }
    if (tok.position != static_cast<int>(current.tokens.size()) + 1) {
      throw ParseError(line_no, "word ID " + std::to_string(tok.position) + " out of sequence, expected " +
                                    std::to_string(current.tokens.size() + 1));
    }
    tok.upos = std::string(cols[3]);
    if (current.tokens.empty()) current.first_line = line_no;
    current.tokens.push_back(std::move(tok));
  }
  flush();
  return out;
}

std::string to_string(RejectReason reason) {
  switch (reason) {
    case RejectReason::multiple_roots: return "multiple roots";
    case RejectReason::no_root: return "no root";
    case RejectReason::cycle: return "cycle";
    case RejectReason::too_short: return "too short";
  }
  return "unknown";
}

std::string to_string(PunctMode mode) { return mode == PunctMode::keep ? "keep" : "drop"; }

std::variant<DepTree, Rejection> to_dep_tree(const RawSentence& sentence) {
  const int n = static_cast<int>(sentence.tokens.size());
  int roots = 0;
  for (int i = 0; i < n; ++i) {
    const Token& t = sentence.tokens[static_cast<std::size_t>(i)];
    if (t.position != i + 1) {
      throw StructuralError("sentence " + sentence.id + ": positions are not 1..n in order");
    }
    if (t.head < 0 || t.head > n) {
      throw StructuralError("sentence " + sentence.id + ": head " + std::to_string(t.head) + " of word " +
                            std::to_string(t.position) + " outside [0, " + std::to_string(n) + "]");
    }
    if (t.head == t.position) return Rejection{RejectReason::cycle};
    if (t.head == 0) ++roots;
  }
  if (roots > 1) return Rejection{RejectReason::multiple_roots};
  if (roots == 0) return Rejection{RejectReason::no_root};

  // With one head per word and a single root, the structure is a tree
  // exactly when every head chain reaches the root. 0 = unvisited,
  // 1 = on the current chain, 2 = known to reach the root.
  std::vector<char> state(static_cast<std::size_t>(n + 1), 0);
  state[0] = 2;
  for (int start = 1; start <= n; ++start) {
    int v = start;
    std::vector<int> chain;
    while (state[static_cast<std::size_t>(v)] == 0) {
      state[static_cast<std::size_t>(v)] = 1;
      chain.push_back(v);
      v = sentence.tokens[static_cast<std::size_t>(v - 1)].head;
    }
    if (state[static_cast<std::size_t>(v)] == 1) return Rejection{RejectReason::cycle};
    for (int c : chain) state[static_cast<std::size_t>(c)] = 2;
  }

  if (n < 2) return Rejection{RejectReason::too_short};
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n - 1));
  for (const Token& t : sentence.tokens) {
    if (t.head != 0) edges.push_back({t.position, t.head});
  }
  return DepTree::from_edges(n, std::move(edges));
}

RawSentence drop_punctuation(const RawSentence& sentence) {
  const auto& tokens = sentence.tokens;
  const int n = static_cast<int>(tokens.size());
  auto is_punct = [&](int pos) { return tokens[static_cast<std::size_t>(pos - 1)].upos == "PUNCT"; };

  std::vector<int> renumber(static_cast<std::size_t>(n + 1), 0);
  int kept = 0;
  for (int pos = 1; pos <= n; ++pos) {
    if (!is_punct(pos)) renumber[static_cast<std::size_t>(pos)] = ++kept;
  }

  RawSentence out;
  out.id = sentence.id;
  out.first_line = sentence.first_line;
  for (const Token& t : tokens) {
    if (is_punct(t.position)) continue;
    int head = t.head;
    // Bounded walk: a cyclic input cannot loop forever.
    for (int steps = 0; head != 0 && is_punct(head) && steps < n; ++steps) {
      head = tokens[static_cast<std::size_t>(head - 1)].head;
    }
    Token copy = t;
    copy.position = renumber[static_cast<std::size_t>(t.position)];
    copy.head = head == 0 ? 0 : renumber[static_cast<std::size_t>(head)];
    out.tokens.push_back(std::move(copy));
  }
  return out;
}

Corpus ingest(std::istream& in, const IngestOptions& options) {
  if (options.n_min < 2) throw ValidationError("n_min must be at least 2, got " + std::to_string(options.n_min));
  Corpus corpus;
  for (RawSentence& raw : read_conllu(in)) {
    ++corpus.report.sentences_read;

    std::variant<DepTree, Rejection> parsed = Rejection{RejectReason::cycle};
    try {
      parsed = to_dep_tree(raw);
    } catch (const StructuralError&) {
      ++corpus.report.rejected_non_tree;
      continue;
    }
    if (const auto* rej = std::get_if<Rejection>(&parsed); rej && rej->reason != RejectReason::too_short) {
      ++corpus.report.rejected_non_tree;
      continue;
    }

    if (options.punct == PunctMode::drop) {
      const RawSentence filtered = drop_punctuation(raw);
      parsed = filtered.tokens.empty() ? std::variant<DepTree, Rejection>(Rejection{RejectReason::too_short})
                                       : to_dep_tree(filtered);
      if (const auto* rej = std::get_if<Rejection>(&parsed); rej && rej->reason != RejectReason::too_short) {
        ++corpus.report.rejected_non_tree;
        continue;
      }
    }

    auto* tree = std::get_if<DepTree>(&parsed);
    if (tree == nullptr) {
      ++corpus.report.rejected_below_n_min;
      continue;
    }
    if (tree->size() < options.n_min) {
      ++corpus.report.rejected_below_n_min;
    } else {
      ++corpus.report.sentences_kept;
    }
    corpus.trees.push_back(std::move(*tree));
    corpus.ids.push_back(raw.id);
  }
  return corpus;
}

Corpus ingest_file(const std::string& path, const IngestOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  return ingest(in, options);
}

void write_conllu(std::ostream& out, const DepTree& tree, int root, const std::string& sent_id) {
  const int n = tree.size();
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n + 1));
  for (const Edge& e : tree.edges()) {
    adj[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  std::vector<int> head(static_cast<std::size_t>(n + 1), -1);
  head[static_cast<std::size_t>(root)] = 0;
  std::vector<int> stack{root};
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : adj[static_cast<std::size_t>(v)]) {
      if (head[static_cast<std::size_t>(w)] == -1) {
        head[static_cast<std::size_t>(w)] = v;
        stack.push_back(w);
      }
    }
  }
  out << "# sent_id = " << sent_id << '\n';
  for (int v = 1; v <= n; ++v) {
    const int h = head[static_cast<std::size_t>(v)];
    out << v << "\tw" << v << "\t_\tX\t_\t_\t" << h << '\t' << (h == 0 ? "root" : "dep") << "\t_\t_\n";
  }
  out << '\n';
}

}  // namespace deplen::io

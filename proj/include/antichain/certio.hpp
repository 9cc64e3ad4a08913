#ifndef ANTICHAIN_CERTIO_HPP
#define ANTICHAIN_CERTIO_HPP

// Plain-text certificates for r-multiplicity antichains.
//
//   # comment
//   instance n=<n> r=<r>
//   provenance <tag>          (optional; defaults to external)
//   tool <version>            (optional)
//   levels <t1> <t2> ...
//   set <e1> <e2> ...         (one line per member, strictly increasing)
//   end
//
// A file holds any number of instance..end blocks. Parsing is strict: single
// spaces between fields, LF line endings, no leading zeros, no unknown lines.

#include "antichain/bounds.hpp"
#include "antichain/error.hpp"
#include "antichain/family.hpp"
#include "antichain/version.hpp"

#include <charconv>
#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace antichain::certio {

enum class Provenance { ConstructedStrict, ConstructedRelaxed, Search, External };

inline const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::ConstructedStrict: return "constructed-strict";
    case Provenance::ConstructedRelaxed: return "constructed-relaxed";
    case Provenance::Search: return "search";
    case Provenance::External: return "external";
  }
  return "?";
}

inline std::optional<Provenance> provenance_from_string(std::string_view s) {
  if (s == "constructed-strict") return Provenance::ConstructedStrict;
  if (s == "constructed-relaxed") return Provenance::ConstructedRelaxed;
  if (s == "search") return Provenance::Search;
  if (s == "external") return Provenance::External;
  return std::nullopt;
}

struct Certificate {
  int n = 1;
  int r = 1;
  std::vector<int> levels;  // claimed occurring sizes, ascending
  Provenance provenance = Provenance::External;
  std::string tool;  // empty: no tool line
  Family family{GroundSize(1)};
  std::vector<std::string> comments;

  bool operator==(const Certificate&) const = default;
};

/// Certificate for `f` claiming its own occurring levels.
inline Certificate make_certificate(const Family& f, int r, Provenance p, std::vector<std::string> comments = {}) {
  Certificate c;
  c.n = f.n();
  c.r = r;
  c.levels = f.profile().occurring;
  c.provenance = p;
  c.tool = tool_version();
  c.family = f;
  c.comments = std::move(comments);
  return c;
}

struct VerificationReport {
  bool antichain = false;
  bool multiplicity_ok = false;
  std::map<int, int> levels;  // size -> count
  int num_levels = 0;
  bool matches_claim = false;
  bool g_bound_consistent = false;
};

/// Re-checks a certificate from scratch using only the family predicates and
/// the closed-form bound; the provenance tag plays no part.
inline VerificationReport verify_certificate(const Certificate& c) {
  VerificationReport rep;
  const Family& f = c.family;
  rep.antichain = is_antichain(f);
  const auto prof = f.profile();
  for (int t : prof.occurring) rep.levels[t] = prof.count(t);
  rep.num_levels = prof.num_levels();
  rep.multiplicity_ok = c.r >= 1;
  for (const auto& [t, count] : rep.levels)
    if (count < c.r) rep.multiplicity_ok = false;
  rep.matches_claim =
      rep.antichain && rep.multiplicity_ok && f.n() == c.n && prof.occurring == c.levels;
  if (c.n >= 4 && c.r >= 2) {
    const int bound = bounds::g_upper_bound(c.n, c.r);
    rep.g_bound_consistent = rep.num_levels <= bound && static_cast<int>(c.levels.size()) <= bound;
  } else {
    rep.g_bound_consistent = true;  // no closed-form bound below n = 4 or for r = 1
  }
  return rep;
}

namespace detail {

inline void check_writable(const Certificate& c) {
  if (c.family.n() != c.n) throw HeaderMismatch("header n differs from the family's ground size");
  if (c.family.profile().occurring != c.levels) throw HeaderMismatch("claimed levels differ from the occurring sizes");
  if (c.r < 1) throw HeaderMismatch("r must be positive");
  if (c.tool.find_first_of("\r\n") != std::string::npos) throw HeaderMismatch("tool version spans lines");
  for (const auto& line : c.comments)
    if (line.find_first_of("\r\n") != std::string::npos) throw HeaderMismatch("comment spans lines");
}

}  // namespace detail

/// Text of one certificate block.
inline std::string format_certificate(const Certificate& c) {
  detail::check_writable(c);
  std::string out;
  for (const auto& line : c.comments) out += line.empty() ? "#\n" : "# " + line + "\n";
  out += "instance n=" + std::to_string(c.n) + " r=" + std::to_string(c.r) + "\n";
  out += std::string("provenance ") + to_string(c.provenance) + "\n";
  if (!c.tool.empty()) out += "tool " + c.tool + "\n";
  out += "levels";
  for (int t : c.levels) out += " " + std::to_string(t);
  out += "\n";
  for (const auto& s : c.family.members()) {
    out += "set";
    for (int e : s.elements()) out += " " + std::to_string(e);
    out += "\n";
  }
  out += "end\n";
  return out;
}

/// Writes one block; returns the number of bytes written.
inline std::size_t write_certificate(const Certificate& c, std::ostream& os) {
  const std::string text = format_certificate(c);
  os << text;
  if (!os) throw IoFailure("write failed");
  return text.size();
}

/// Writes every certificate to `path`, replacing the file.
inline std::size_t write_certificates(const std::vector<Certificate>& certs, const std::string& path) {
  std::string text;
  for (const auto& c : certs) text += format_certificate(c);
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw IoFailure("cannot open " + path + " for writing");
  os << text;
  os.flush();
  if (!os) throw IoFailure("write to " + path + " failed");
  return text.size();
}

inline std::size_t write_certificate(const Certificate& c, const std::string& path) {
  return write_certificates({c}, path);
}

namespace detail {

class Parser {
public:
  explicit Parser(std::string_view text) : text_(text) {}

  std::vector<Certificate> parse() {
    std::vector<Certificate> out;
    std::vector<std::string> pending_comments;
    std::optional<Block> block;
    while (next_line()) {
      const std::string_view line = line_;
      if (line.find('\r') != std::string_view::npos) fail("carriage return in line");
      if (line.empty()) continue;
      if (line[0] == '#') {
        std::string_view body = line.substr(1);
        if (!body.empty() && body[0] == ' ') body.remove_prefix(1);
        (block ? block->cert.comments : pending_comments).emplace_back(body);
        continue;
      }
      const auto tokens = split(line);
      const std::string_view head = tokens[0];
      if (!block) {
        if (head != "instance") fail("expected 'instance', found '" + std::string(head) + "'");
        block.emplace();
        block->start_line = line_no_;
        parse_instance(tokens, block->cert);
        block->cert.comments = std::move(pending_comments);
        pending_comments.clear();
        continue;
      }
      Certificate& c = block->cert;
      if (head == "provenance") {
        if (block->seen_provenance) fail("duplicate provenance line");
        if (block->seen_levels) fail("provenance must precede levels");
        if (tokens.size() != 2) fail("provenance takes one tag");
        const auto p = provenance_from_string(tokens[1]);
        if (!p) fail("unknown provenance tag '" + std::string(tokens[1]) + "'");
        c.provenance = *p;
        block->seen_provenance = true;
      } else if (head == "tool") {
        if (block->seen_tool) fail("duplicate tool line");
        if (block->seen_levels) fail("tool must precede levels");
        if (tokens.size() != 2) fail("tool takes one token");
        c.tool = std::string(tokens[1]);
        block->seen_tool = true;
      } else if (head == "levels") {
        if (block->seen_levels) fail("duplicate levels line");
        block->seen_levels = true;
        for (std::size_t i = 1; i < tokens.size(); ++i) {
          const int t = parse_int(tokens[i]);
          if (t > c.n) fail("level " + std::to_string(t) + " exceeds n");
          if (!c.levels.empty() && t <= c.levels.back()) fail("levels must be strictly increasing");
          c.levels.push_back(t);
        }
      } else if (head == "set") {
        if (!block->seen_levels) fail("set before levels");
        std::vector<int> elements;
        for (std::size_t i = 1; i < tokens.size(); ++i) {
          const int e = parse_int(tokens[i]);
          if (e == 0) fail("element 0 (elements are one-based)");
          if (e > c.n) fail("element " + std::to_string(e) + " exceeds n");
          if (!elements.empty() && e == elements.back()) fail("repeated element " + std::to_string(e));
          if (!elements.empty() && e < elements.back()) fail("elements must be strictly increasing");
          elements.push_back(e);
        }
        const auto code = SubsetCode::from_elements(GroundSize(c.n), elements);
        if (!block->seen_sets.insert(code.bits()).second) fail("duplicate set");
        block->members.push_back(code);
      } else if (head == "end") {
        if (tokens.size() != 1) fail("'end' takes no arguments");
        if (!block->seen_levels) fail("block without levels line");
        c.family = Family(GroundSize(c.n), std::move(block->members));
        if (c.family.profile().occurring != c.levels)
          throw HeaderMismatch("block at line " + std::to_string(block->start_line) +
                               ": claimed levels differ from the occurring sizes");
        out.push_back(std::move(c));
        block.reset();
      } else {
        fail("unknown directive '" + std::string(head) + "'");
      }
    }
    if (block) fail("missing 'end' before end of input");
    if (!pending_comments.empty()) fail("comment after the last block");
    return out;
  }

private:
  struct Block {
    Certificate cert;
    int start_line = 0;
    bool seen_provenance = false;
    bool seen_tool = false;
    bool seen_levels = false;
    std::vector<SubsetCode> members;
    std::set<std::uint64_t> seen_sets;
  };

  bool next_line() {
    if (pos_ >= text_.size()) return false;
    const auto nl = text_.find('\n', pos_);
    if (nl == std::string_view::npos) {
      line_ = text_.substr(pos_);
      pos_ = text_.size();
    } else {
      line_ = text_.substr(pos_, nl - pos_);
      pos_ = nl + 1;
    }
    ++line_no_;
    return true;
  }

  [[noreturn]] void fail(const std::string& why) const { throw ParseError(line_no_, why); }

  std::vector<std::string_view> split(std::string_view line) const {
    std::vector<std::string_view> out;
    std::size_t p = 0;
    for (;;) {
      const auto sp = line.find(' ', p);
      const auto tok = line.substr(p, sp == std::string_view::npos ? std::string_view::npos : sp - p);
      if (tok.empty()) fail("fields must be separated by single spaces");
      if (tok.find('\t') != std::string_view::npos) fail("tab in line");
      out.push_back(tok);
      if (sp == std::string_view::npos) break;
      p = sp + 1;
    }
    return out;
  }

  int parse_int(std::string_view tok) const {
    if (tok.size() > 1 && tok[0] == '0') fail("leading zero in '" + std::string(tok) + "'");
    int v = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || v < 0)
      fail("expected a non-negative integer, found '" + std::string(tok) + "'");
    return v;
  }

  int parse_field(std::string_view tok, std::string_view key) const {
    if (tok.substr(0, key.size()) != key || tok.size() == key.size() || tok[key.size()] != '=')
      fail("expected " + std::string(key) + "=<int>");
    return parse_int(tok.substr(key.size() + 1));
  }

  void parse_instance(const std::vector<std::string_view>& tokens, Certificate& c) const {
    if (tokens.size() != 3) fail("expected 'instance n=<int> r=<int>'");
    c.n = parse_field(tokens[1], "n");
    c.r = parse_field(tokens[2], "r");
    if (c.n < 1 || c.n > kMaxGroundSize) fail("n must be in 1..64");
    if (c.r < 1) fail("r must be positive");
    c.family = Family(GroundSize(c.n));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::string_view line_;
  int line_no_ = 0;
};

}  // namespace detail

/// Every instance block in `text`, in file order.
inline std::vector<Certificate> parse_certificates(std::string_view text) { return detail::Parser(text).parse(); }

/// Exactly one instance block.
inline Certificate read_certificate(std::string_view text) {
  auto all = parse_certificates(text);
  if (all.size() != 1) throw ParseError(1, "expected exactly one instance block, found " + std::to_string(all.size()));
  return std::move(all.front());
}

inline std::string read_file(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw IoFailure("cannot open " + path);
  std::ostringstream ss;
  ss << is.rdbuf();
  if (is.bad()) throw IoFailure("read from " + path + " failed");
  return ss.str();
}

inline std::vector<Certificate> read_certificates(const std::string& path) { return parse_certificates(read_file(path)); }

}  // namespace antichain::certio

#endif  // ANTICHAIN_CERTIO_HPP

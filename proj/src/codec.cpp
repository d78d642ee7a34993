#include "linkkit/codec.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace linkkit {

namespace {

// character scanner with 1-based line/col for error reporting
struct Scanner {
  const std::string& s;
  size_t i = 0;
  int line = 1, col = 1;

  explicit Scanner(const std::string& text) : s(text) {}

  bool eof() const { return i >= s.size(); }
  char peek() const { return s[i]; }

  void advance() {
    if (s[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++i;
  }

  void skip_ws_and_comments() {
    while (!eof()) {
      if (std::isspace(static_cast<unsigned char>(peek()))) {
        advance();
      } else if (peek() == '#') {
        while (!eof() && peek() != '\n') advance();
      } else {
        break;
      }
    }
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw SyntaxError("line " + std::to_string(line) + ", col " + std::to_string(col) +
                      ": " + msg);
  }

  void expect(char c) {
    if (eof() || peek() != c) fail(std::string("expected '") + c + "'");
    advance();
  }

  bool try_consume(char c) {
    if (!eof() && peek() == c) {
      advance();
      return true;
    }
    return false;
  }

  long read_int() {
    bool neg = try_consume('-');
    if (eof() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer");
    long v = 0;
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (peek() - '0');
      if (v > 1000000000L) fail("integer too large");
      advance();
    }
    return neg ? -v : v;
  }

  std::string read_word() {
    std::string w;
    while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
      w += s[i], advance();
    return w;
  }
};

}  // namespace

LinkDiagram parse_pd(const std::string& text) {
  Scanner sc(text);
  int declared = -1, unknots = 0;
  bool saw_components = false, saw_unknots = false;
  std::vector<std::array<int, 4>> quads;
  while (true) {
    sc.skip_ws_and_comments();
    if (sc.eof()) break;
    if (sc.peek() == 'X') {
      sc.advance();
      sc.expect('(');
      std::array<int, 4> q{};
      for (int k = 0; k < 4; ++k) {
        sc.skip_ws_and_comments();
        long v = sc.read_int();
        if (v < 1) sc.fail("arc labels must be positive");
        q[size_t(k)] = int(v);
        sc.skip_ws_and_comments();
        if (k < 3) sc.expect(',');
      }
      sc.expect(')');
      quads.push_back(q);
    } else if (std::isalpha(static_cast<unsigned char>(sc.peek()))) {
      std::string key = sc.read_word();
      sc.skip_ws_and_comments();
      sc.expect('=');
      sc.skip_ws_and_comments();
      long v = sc.read_int();
      if (key == "components") {
        if (saw_components) throw SemanticError("duplicate components= header");
        if (v < 1) throw SemanticError("components must be at least 1");
        declared = int(v);
        saw_components = true;
      } else if (key == "unknots") {
        if (saw_unknots) throw SemanticError("duplicate unknots= header");
        if (v < 0) throw SemanticError("unknots cannot be negative");
        unknots = int(v);
        saw_unknots = true;
      } else {
        sc.fail("unknown header key '" + key + "'");
      }
    } else {
      sc.fail("unexpected character");
    }
  }
  return make_diagram(quads, declared, unknots);
}

std::string serialize_pd(const LinkDiagram& d) {
  std::vector<std::array<int, 4>> quads;
  quads.reserve(d.crossings.size());
  for (const auto& c : d.crossings) quads.push_back(c.a);
  std::sort(quads.begin(), quads.end(), [](const auto& x, const auto& y) {
    int mx = std::min({x[0], x[1], x[2], x[3]});
    int my = std::min({y[0], y[1], y[2], y[3]});
    if (mx != my) return mx < my;
    return x < y;
  });
  std::ostringstream os;
  os << "components=" << d.n_components << " unknots=" << d.unknotted_free_components
     << "\n";
  for (const auto& q : quads)
    os << "X(" << q[0] << "," << q[1] << "," << q[2] << "," << q[3] << ")\n";
  return os.str();
}

BraidWord parse_braid(const std::string& text) {
  Scanner sc(text);
  sc.skip_ws_and_comments();
  std::string key = sc.read_word();
  if (key != "strands") sc.fail("expected strands= header");
  sc.skip_ws_and_comments();
  sc.expect('=');
  sc.skip_ws_and_comments();
  long n = sc.read_int();
  if (n < 1) throw RangeError("strand count must be at least 1");
  BraidWord w;
  w.strands = int(n);
  while (true) {
    sc.skip_ws_and_comments();
    if (sc.eof()) break;
    char c = sc.peek();
    if (c == 's') {
      sc.advance();
      long k = sc.read_int();
      if (k < 1 || k >= n)
        throw RangeError("generator s" + std::to_string(k) + " needs 1 <= index < " +
                         std::to_string(n));
      bool inv = false;
      if (sc.try_consume('^')) {
        long e = sc.read_int();
        if (e != -1 && e != 1) sc.fail("only ^-1 and ^1 are supported");
        inv = e == -1;
      }
      w.gens.push_back({int(k), inv});
    } else if (c == 'A') {
      sc.advance();
      sc.expect('(');
      sc.skip_ws_and_comments();
      long i = sc.read_int();
      sc.skip_ws_and_comments();
      sc.expect(',');
      sc.skip_ws_and_comments();
      long j = sc.read_int();
      sc.skip_ws_and_comments();
      sc.expect(')');
      int eta = 1;
      if (sc.try_consume('^')) {
        long e = sc.read_int();
        if (e != -1 && e != 1) sc.fail("only ^-1 and ^1 are supported");
        eta = int(e);
      }
      BraidWord band = band_generator(w.strands, int(i), int(j));  // throws RangeError
      if (eta < 0) band = inverse(band);
      w.gens.insert(w.gens.end(), band.gens.begin(), band.gens.end());
    } else {
      sc.fail("unexpected character");
    }
  }
  return w;
}

std::string serialize_braid(const BraidWord& w) {
  std::ostringstream os;
  os << "strands=" << w.strands << "\n";
  for (size_t i = 0; i < w.gens.size(); ++i) {
    if (i) os << ' ';
    os << 's' << w.gens[i].index;
    if (w.gens[i].inverse) os << "^-1";
  }
  if (!w.gens.empty()) os << "\n";
  return os.str();
}

}  // namespace linkkit

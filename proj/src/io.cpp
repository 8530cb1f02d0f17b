#include "skewlat/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace skewlat {

namespace {

struct Token {
  std::string text;
  int line;
  int column;
};

// Whitespace-separated tokens with '#' comments stripped, positions 1-based.
std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == '\n') {
      ++line;
      col = 1;
      ++i;
    } else if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      ++col;
      ++i;
    } else {
      Token t{{}, line, col};
      while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) &&
             text[i] != '#') {
        t.text += text[i];
        ++i;
        ++col;
      }
      out.push_back(std::move(t));
    }
  }
  return out;
}

class Reader {
 public:
  explicit Reader(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  bool done() const { return pos_ >= tokens_.size(); }
  const Token& peek() const {
    if (done()) throw parse_error("unexpected end of file", last_line(), 1);
    return tokens_[pos_];
  }
  Token next() {
    Token t = peek();
    ++pos_;
    return t;
  }
  int next_int(const char* what, int lo, int hi) {
    const Token t = next();
    int value = 0;
    size_t parsed = 0;
    try {
      value = std::stoi(t.text, &parsed);
    } catch (const std::exception&) {
      parsed = 0;
    }
    if (parsed != t.text.size())
      throw parse_error(std::string("expected ") + what + ", got '" + t.text + "'", t.line,
                        t.column);
    if (value < lo || value > hi)
      throw parse_error(std::string(what) + " out of range: " + t.text, t.line, t.column);
    return value;
  }
  int last_line() const { return tokens_.empty() ? 1 : tokens_.back().line; }

 private:
  std::vector<Token> tokens_;
  size_t pos_ = 0;
};

OpTable read_table(Reader& r, int n) {
  OpTable t(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t.at(x, y) = r.next_int("table entry", 0, n - 1);
  return t;
}

}  // namespace

AlgebraFile parse_algebra_file(std::string_view text) {
  Reader r(tokenize(text));
  const Token header = r.next();
  if (header.text != "skl1")
    throw parse_error("expected format header 'skl1', got '" + header.text + "'", header.line,
                      header.column);

  AlgebraFile file;
  if (!r.done() && r.peek().text == "name") {
    r.next();
    file.name = r.next().text;
  }
  {
    const Token t = r.next();
    if (t.text != "size")
      throw parse_error("expected 'size', got '" + t.text + "'", t.line, t.column);
  }
  const int n = r.next_int("size", 1, 1 << 14);
  file.alg.size = n;

  const Token meet_kw = r.next();
  if (meet_kw.text != "meet")
    throw parse_error("expected 'meet', got '" + meet_kw.text + "'", meet_kw.line,
                      meet_kw.column);
  file.alg.meet = read_table(r, n);

  const Token join_kw = r.next();
  if (join_kw.text != "join")
    throw parse_error("expected 'join', got '" + join_kw.text + "'", join_kw.line,
                      join_kw.column);
  file.alg.join = read_table(r, n);

  while (!r.done()) {
    const Token kw = r.next();
    if (kw.text == "imp") {
      if (file.alg.imp) throw parse_error("duplicate 'imp' block", kw.line, kw.column);
      file.alg.imp = read_table(r, n);
    } else if (kw.text == "zero") {
      if (file.alg.zero) throw parse_error("duplicate 'zero'", kw.line, kw.column);
      file.alg.zero = r.next_int("zero index", 0, n - 1);
    } else if (kw.text == "top") {
      if (file.alg.top) throw parse_error("duplicate 'top'", kw.line, kw.column);
      file.alg.top = r.next_int("top index", 0, n - 1);
    } else {
      throw parse_error("unknown keyword '" + kw.text + "'", kw.line, kw.column);
    }
  }
  return file;
}

AlgebraFile load_algebra_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw io_error("cannot read file: " + path);
  return parse_algebra_file(buf.str());
}

std::string emit_algebra_file(const AlgebraFile& file) {
  std::ostringstream os;
  os << "skl1\n";
  if (file.name) os << "name " << *file.name << '\n';
  const int n = file.alg.size;
  os << "size " << n << '\n';
  auto table = [&](const char* kw, const OpTable& t) {
    os << kw << '\n';
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        if (y) os << ' ';
        os << t(x, y);
      }
      os << '\n';
    }
  };
  table("meet", file.alg.meet);
  table("join", file.alg.join);
  if (file.alg.imp) table("imp", *file.alg.imp);
  if (file.alg.zero) os << "zero " << *file.alg.zero << '\n';
  if (file.alg.top) os << "top " << *file.alg.top << '\n';
  return os.str();
}

}  // namespace skewlat

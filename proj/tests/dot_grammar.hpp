#pragma once
// A minimal recursive-descent reader for the DOT subset the exporter uses:
//
//   graph     := ("digraph" | "graph") [ID] "{" stmt* "}"
//   stmt      := ID "=" ID [";"]
//              | "subgraph" [ID] "{" stmt* "}" [";"]
//              | ID ("->" | "--") ID [attrs] [";"]
//              | ID [attrs] [";"]
//   attrs     := "[" (ID "=" ID [","|";"])* "]"
//   ID        := [A-Za-z_][A-Za-z0-9_]* | -?[0-9]+(.[0-9]+)? | "quoted"
//
// It records nodes and edges so tests can check the structure as well.
#include <cctype>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ktinv::testing {

struct DotGraph {
  bool directed = false;
  std::map<std::string, std::map<std::string, std::string>> nodes;
  struct Edge {
    std::string from, to;
    std::map<std::string, std::string> attrs;
  };
  std::vector<Edge> edges;
  std::vector<std::string> subgraphs;
};

class DotReader {
 public:
  explicit DotReader(std::string text) : s_(std::move(text)) {}

  std::optional<DotGraph> parse() {
    DotGraph g;
    auto kw = ident();
    if (!kw || (*kw != "digraph" && *kw != "graph")) return std::nullopt;
    g.directed = *kw == "digraph";
    skip();
    if (peek() != '{' && !id()) return std::nullopt;
    if (!stmts(g)) return std::nullopt;
    skip();
    if (pos_ != s_.size()) return std::nullopt;
    return g;
  }

 private:
  std::string s_;
  std::size_t pos_ = 0;

  void skip() {
    while (pos_ < s_.size()) {
      if (std::isspace(static_cast<unsigned char>(s_[pos_]))) {
        ++pos_;
      } else if (s_.compare(pos_, 2, "//") == 0) {
        while (pos_ < s_.size() && s_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  bool eat(const char* tok) {
    skip();
    std::string t(tok);
    if (s_.compare(pos_, t.size(), t) != 0) return false;
    pos_ += t.size();
    return true;
  }

  std::optional<std::string> ident() {
    skip();
    std::size_t b = pos_;
    if (pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      return s_.substr(b, pos_ - b);
    }
    return std::nullopt;
  }

  std::optional<std::string> id() {
    if (auto w = ident()) return w;
    skip();
    if (pos_ >= s_.size()) return std::nullopt;
    if (s_[pos_] == '"') {
      std::string out;
      ++pos_;
      while (pos_ < s_.size() && s_[pos_] != '"') {
        if (s_[pos_] == '\\' && pos_ + 1 < s_.size()) ++pos_;
        out += s_[pos_++];
      }
      if (pos_ >= s_.size()) return std::nullopt;
      ++pos_;
      return out;
    }
    std::size_t b = pos_;
    if (s_[pos_] == '-' && !(pos_ + 1 < s_.size() && s_[pos_ + 1] == '>')) ++pos_;
    std::size_t digits = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == digits) {
      pos_ = b;
      return std::nullopt;
    }
    if (pos_ < s_.size() && s_[pos_] == '.') {
      ++pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    return s_.substr(b, pos_ - b);
  }

  bool attrs(std::map<std::string, std::string>& out) {
    if (!eat("[")) return true;
    while (!eat("]")) {
      auto k = id();
      if (!k || !eat("=")) return false;
      auto v = id();
      if (!v) return false;
      out[*k] = *v;
      if (!eat(",")) eat(";");
    }
    return true;
  }

  bool stmts(DotGraph& g) {
    if (!eat("{")) return false;
    for (;;) {
      if (eat("}")) return true;
      if (peek() == '\0') return false;
      auto first = id();
      if (!first) return false;
      if (*first == "subgraph") {
        std::string name;
        if (peek() != '{') {
          auto n = id();
          if (!n) return false;
          name = *n;
        }
        g.subgraphs.push_back(name);
        if (!stmts(g)) return false;
      } else if (eat("=")) {
        if (!id()) return false;
      } else if (eat(g.directed ? "->" : "--")) {
        auto to = id();
        if (!to) return false;
        DotGraph::Edge e{*first, *to, {}};
        if (!attrs(e.attrs)) return false;
        g.edges.push_back(std::move(e));
      } else {
        if (!attrs(g.nodes[*first])) return false;
      }
      eat(";");
    }
  }
};

inline std::optional<DotGraph> parse_dot(const std::string& text) {
  return DotReader(text).parse();
}

}  // namespace ktinv::testing

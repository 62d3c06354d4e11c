#pragma once

// Line-oriented text formats (.poset, .map, .rel, .exreg) and DOT export.
// Lines starting with '#' and blank lines are ignored everywhere.

#include <exreg/completion.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

namespace exreg {

namespace fs = std::filesystem;

namespace detail {

struct LineReader {
  std::istream& in;
  std::string name;
  std::size_t line_no = 0;

  // Next non-comment line split into tokens; false at end of input.
  bool next(std::vector<std::string>& tokens) {
    std::string line;
    while (std::getline(in, line)) {
      ++line_no;
      auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      std::istringstream ss(line);
      tokens.clear();
      for (std::string t; ss >> t;) tokens.push_back(t);
      if (!tokens.empty()) return true;
    }
    return false;
  }

  [[noreturn]] void error(const std::string& msg) const {
    fail(ErrorCode::ParseError, name + ":" + std::to_string(line_no) + ": " + msg);
  }

  std::size_t index(const std::string& tok, std::size_t bound) const {
    std::size_t v = 0;
    if (tok.empty() || tok.size() > 9 || tok.find_first_not_of("0123456789") != std::string::npos)
      error("expected an element index, got '" + tok + "'");
    v = std::stoul(tok);
    if (v >= bound) error("index " + tok + " out of range (size " + std::to_string(bound) + ")");
    return v;
  }
};

inline std::ifstream open_input(const fs::path& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::ParseError, path.string() + ":0: cannot open file");
  return in;
}

// Resolves a file reference relative to the referring file's directory.
inline fs::path resolve(const fs::path& base, const std::string& ref) {
  fs::path p(ref);
  return p.is_absolute() ? p : base.parent_path() / p;
}

// Rethrows engine errors raised while building a parsed value with the
// file position attached, keeping the original error code.
template <class F>
auto at_position(const LineReader& r, F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    throw Error(e.code(), r.name + ":" + std::to_string(r.line_no) + ": " + e.detail());
  }
}

}  // namespace detail

// ---- .poset ---------------------------------------------------------------

inline FinPoset parse_poset(std::istream& in, const std::string& name) {
  detail::LineReader r{in, name};
  std::vector<std::string> t;
  if (!r.next(t) || t.size() != 2 || t[0] != "poset") r.error("expected 'poset <n>'");
  std::size_t n = r.index(t[1], 1000000);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<std::string> labels;
  while (r.next(t)) {
    if (t.size() == 3 && t[1] == "<") {
      pairs.emplace_back(r.index(t[0], n), r.index(t[2], n));
    } else if (t.size() == 3 && t[0] == "label") {
      if (labels.empty()) {
        labels.resize(n);
        for (std::size_t i = 0; i < n; ++i) labels[i] = std::to_string(i);
      }
      labels[r.index(t[1], n)] = t[2];
    } else {
      r.error("expected 'i < j' or 'label i name'");
    }
  }
  return detail::at_position(r, [&] {
    return labels.empty() ? make_poset(n, pairs) : make_poset(std::move(labels), pairs);
  });
}

inline FinPoset read_poset_file(const fs::path& path) {
  auto in = detail::open_input(path);
  return parse_poset(in, path.string());
}

// Covering pairs of the order (transitive reduction).
inline std::vector<Pair> cover_pairs(const FinPoset& P) {
  std::vector<Pair> out;
  for (std::size_t i = 0; i < P.size(); ++i)
    for (std::size_t j = 0; j < P.size(); ++j) {
      if (i == j || !P.leq(i, j)) continue;
      bool covered = true;
      for (std::size_t k = 0; k < P.size() && covered; ++k)
        if (k != i && k != j && P.leq(i, k) && P.leq(k, j)) covered = false;
      if (covered) out.emplace_back(i, j);
    }
  return out;
}

inline void write_poset(std::ostream& os, const FinPoset& P) {
  os << "poset " << P.size() << "\n";
  for (auto [i, j] : cover_pairs(P)) os << i << " < " << j << "\n";
  if (P.has_labels())
    for (std::size_t i = 0; i < P.size(); ++i) os << "label " << i << " " << P.label(i) << "\n";
}

inline std::string poset_text(const FinPoset& P) {
  std::ostringstream os;
  write_poset(os, P);
  return os.str();
}

// ---- .map -----------------------------------------------------------------

struct MapFile {
  MonotoneMap map;
  fs::path dom_path, cod_path;
};

inline MapFile read_map_file(const fs::path& path) {
  auto in = detail::open_input(path);
  detail::LineReader r{in, path.string()};
  std::vector<std::string> t;
  if (!r.next(t) || t.size() != 3 || t[0] != "map") r.error("expected 'map <domfile> <codfile>'");
  MapFile mf;
  mf.dom_path = detail::resolve(path, t[1]);
  mf.cod_path = detail::resolve(path, t[2]);
  FinPoset X = read_poset_file(mf.dom_path);
  FinPoset Y = read_poset_file(mf.cod_path);
  std::vector<std::size_t> a(X.size(), Y.size());
  while (r.next(t)) {
    if (t.size() != 3 || t[1] != "->") r.error("expected 'i -> j'");
    std::size_t x = r.index(t[0], X.size());
    if (a[x] != Y.size()) r.error("element " + t[0] + " assigned twice");
    a[x] = r.index(t[2], Y.size());
  }
  for (std::size_t x = 0; x < a.size(); ++x)
    if (a[x] == Y.size()) r.error("element " + std::to_string(x) + " has no image");
  mf.map = detail::at_position(r, [&] { return MonotoneMap(X, Y, a); });
  return mf;
}

inline void write_map(std::ostream& os, const MonotoneMap& f, const std::string& domfile,
                      const std::string& codfile) {
  os << "map " << domfile << " " << codfile << "\n";
  for (std::size_t x = 0; x < f.dom().size(); ++x) os << x << " -> " << f(x) << "\n";
}

// ---- .rel -----------------------------------------------------------------

struct RelFile {
  Relation rel;
  fs::path dom_path, cod_path;
};

inline RelFile read_rel_file(const fs::path& path) {
  auto in = detail::open_input(path);
  detail::LineReader r{in, path.string()};
  std::vector<std::string> t;
  if (!r.next(t) || t.size() != 3 || t[0] != "rel") r.error("expected 'rel <domfile> <codfile>'");
  RelFile rf;
  rf.dom_path = detail::resolve(path, t[1]);
  rf.cod_path = detail::resolve(path, t[2]);
  FinPoset X = read_poset_file(rf.dom_path);
  FinPoset Y = read_poset_file(rf.cod_path);
  BoolMatrix m(X.size(), Y.size());
  while (r.next(t)) {
    if (t.size() != 3 || t[1] != "~") r.error("expected 'i ~ j'");
    m.set(r.index(t[0], X.size()), r.index(t[2], Y.size()));
  }
  rf.rel = Relation(X, Y, std::move(m));
  return rf;
}

inline void write_pairs(std::ostream& os, const Relation& R, const char* prefix) {
  for (auto [x, y] : R.pairs()) os << prefix << x << " ~ " << y << "\n";
}

inline void write_rel(std::ostream& os, const Relation& R, const std::string& domfile,
                      const std::string& codfile) {
  os << "rel " << domfile << " " << codfile << "\n";
  write_pairs(os, R, "");
}

// ---- .exreg ---------------------------------------------------------------

struct ObjectFile {
  ExRegObject object;
  fs::path poset_path;
};

struct MorphismFile {
  ExRegMorphism morphism;
  fs::path src_path, tgt_path;
};

using ExRegFile = std::variant<ObjectFile, MorphismFile>;

inline ExRegFile read_exreg_file(const fs::path& path);

inline ObjectFile read_object_file(const fs::path& path) {
  ExRegFile f = read_exreg_file(path);
  if (!std::holds_alternative<ObjectFile>(f))
    fail(ErrorCode::ParseError, path.string() + ":1: expected an object file");
  return std::get<ObjectFile>(f);
}

inline MorphismFile read_morphism_file(const fs::path& path) {
  ExRegFile f = read_exreg_file(path);
  if (!std::holds_alternative<MorphismFile>(f))
    fail(ErrorCode::ParseError, path.string() + ":1: expected a morphism file");
  return std::get<MorphismFile>(f);
}

// Objects: `object <posetfile>` then `cong i ~ j`, closed under the order
// and transitivity. Morphisms: `morphism <src> <tgt>` then `lower i ~ j` and
// `upper j ~ i`; without any upper line the right adjoint is derived.
inline ExRegFile read_exreg_file(const fs::path& path) {
  auto in = detail::open_input(path);
  detail::LineReader r{in, path.string()};
  std::vector<std::string> t;
  if (!r.next(t)) r.error("empty file");
  if (t.size() == 2 && t[0] == "object") {
    ObjectFile of;
    of.poset_path = detail::resolve(path, t[1]);
    FinPoset X = read_poset_file(of.poset_path);
    std::vector<Pair> pairs;
    while (r.next(t)) {
      if (t.size() != 4 || t[0] != "cong" || t[2] != "~") r.error("expected 'cong i ~ j'");
      pairs.emplace_back(r.index(t[1], X.size()), r.index(t[3], X.size()));
    }
    of.object = make_object_closure(X, pairs);
    return of;
  }
  if (t.size() == 3 && t[0] == "morphism") {
    MorphismFile mf;
    mf.src_path = detail::resolve(path, t[1]);
    mf.tgt_path = detail::resolve(path, t[2]);
    ExRegObject A = read_object_file(mf.src_path).object;
    ExRegObject B = read_object_file(mf.tgt_path).object;
    BoolMatrix lo(A.size(), B.size()), up(B.size(), A.size());
    bool has_upper = false;
    while (r.next(t)) {
      if (t.size() != 4 || t[2] != "~") r.error("expected 'lower i ~ j' or 'upper j ~ i'");
      if (t[0] == "lower") {
        lo.set(r.index(t[1], A.size()), r.index(t[3], B.size()));
      } else if (t[0] == "upper") {
        has_upper = true;
        up.set(r.index(t[1], B.size()), r.index(t[3], A.size()));
      } else {
        r.error("expected 'lower' or 'upper'");
      }
    }
    Relation lower(A.carrier(), B.carrier(), std::move(lo));
    mf.morphism = detail::at_position(r, [&] {
      if (!has_upper) return make_morphism(A, B, lower);
      return validate_morphism(A, B, lower, Relation(B.carrier(), A.carrier(), std::move(up)));
    });
    return mf;
  }
  r.error("expected 'object <posetfile>' or 'morphism <src> <tgt>'");
}

// Writes the pairs of E beyond the order; closure on reading restores E.
inline void write_object(std::ostream& os, const ExRegObject& A, const std::string& posetfile) {
  os << "object " << posetfile << "\n";
  for (auto [a, b] : A.congruence().pairs())
    if (!A.carrier().leq(a, b)) os << "cong " << a << " ~ " << b << "\n";
}

inline void write_morphism(std::ostream& os, const ExRegMorphism& R, const std::string& srcfile,
                           const std::string& tgtfile) {
  os << "morphism " << srcfile << " " << tgtfile << "\n";
  write_pairs(os, R.lower(), "lower ");
  write_pairs(os, R.upper(), "upper ");
}

// ---- DOT ------------------------------------------------------------------

inline std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

// Hasse diagram, smaller elements at the bottom.
inline void write_poset_dot(std::ostream& os, const FinPoset& P, const std::string& name = "poset") {
  os << "digraph \"" << dot_escape(name) << "\" {\n  rankdir=BT;\n  node [shape=circle];\n";
  for (std::size_t i = 0; i < P.size(); ++i)
    os << "  n" << i << " [label=\"" << dot_escape(P.label(i)) << "\"];\n";
  for (auto [i, j] : cover_pairs(P)) os << "  n" << i << " -> n" << j << ";\n";
  os << "}\n";
}

// Bipartite drawing: domain on the left, codomain on the right.
inline void write_relation_dot(std::ostream& os, const Relation& R, const std::string& name = "relation") {
  os << "digraph \"" << dot_escape(name) << "\" {\n  rankdir=LR;\n  node [shape=circle];\n";
  os << "  subgraph cluster_dom {\n    label=\"dom\";\n";
  for (std::size_t i = 0; i < R.dom().size(); ++i)
    os << "    x" << i << " [label=\"" << dot_escape(R.dom().label(i)) << "\"];\n";
  os << "  }\n  subgraph cluster_cod {\n    label=\"cod\";\n";
  for (std::size_t j = 0; j < R.cod().size(); ++j)
    os << "    y" << j << " [label=\"" << dot_escape(R.cod().label(j)) << "\"];\n";
  os << "  }\n";
  for (auto [x, y] : R.pairs()) os << "  x" << x << " -> y" << y << ";\n";
  os << "}\n";
}

// ---- bundles --------------------------------------------------------------

// A set of named text files that refer to each other by name.
struct Bundle {
  std::vector<std::pair<std::string, std::string>> files;

  void add(const std::string& name, const std::string& contents) { files.emplace_back(name, contents); }

  void print(std::ostream& os) const {
    for (const auto& [name, contents] : files) os << "## " << name << "\n" << contents;
  }

  void write_to(const fs::path& dir) const {
    fs::create_directories(dir);
    for (const auto& [name, contents] : files) {
      std::ofstream out(dir / name);
      if (!out) fail(ErrorCode::ParseError, (dir / name).string() + ":0: cannot write file");
      out << contents;
    }
  }
};

template <class F>
std::string to_text(F&& writer) {
  std::ostringstream os;
  writer(os);
  return os.str();
}

// Named artifacts in the text formats, referring to each other by file name.
class Artifacts {
 public:
  std::string poset(const std::string& stem, const FinPoset& P) {
    std::string name = stem + ".poset";
    bundle_.add(name, poset_text(P));
    return name;
  }
  void map(const std::string& stem, const MonotoneMap& f, const std::string& dom, const std::string& cod) {
    bundle_.add(stem + ".map", to_text([&](std::ostream& os) { write_map(os, f, dom, cod); }));
  }
  // Writes the domain and codomain too, under stem.dom / stem.cod.
  void map(const std::string& stem, const MonotoneMap& f) {
    std::string dom = poset(stem + ".dom", f.dom()), cod = poset(stem + ".cod", f.cod());
    map(stem, f, dom, cod);
  }
  void rel(const std::string& stem, const Relation& R, const std::string& dom, const std::string& cod) {
    bundle_.add(stem + ".rel", to_text([&](std::ostream& os) { write_rel(os, R, dom, cod); }));
  }
  std::string object(const std::string& stem, const ExRegObject& A) {
    std::string carrier = poset(stem, A.carrier());
    std::string name = stem + ".exreg";
    bundle_.add(name, to_text([&](std::ostream& os) { write_object(os, A, carrier); }));
    return name;
  }
  void morphism(const std::string& stem, const ExRegMorphism& R, const std::string& src, const std::string& tgt) {
    bundle_.add(stem + ".exreg", to_text([&](std::ostream& os) { write_morphism(os, R, src, tgt); }));
  }
  // Source and target objects are written under stem.src / stem.tgt.
  void morphism(const std::string& stem, const ExRegMorphism& R) {
    std::string src = object(stem + ".src", R.src()), tgt = object(stem + ".tgt", R.tgt());
    morphism(stem, R, src, tgt);
  }
  void note(const std::string& name, const std::string& text) { bundle_.add(name, text); }

  const Bundle& bundle() const noexcept { return bundle_; }
  std::string str() const {
    std::ostringstream os;
    bundle_.print(os);
    return os.str();
  }

 private:
  Bundle bundle_;
};

}  // namespace exreg

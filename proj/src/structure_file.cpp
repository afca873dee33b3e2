#include "wcpx/structure_file.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <sstream>

namespace wcpx {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error([&] {
        std::ostringstream os;
        os << "line " << line;
        if (column > 0) os << ", column " << column;
        os << ": " << message;
        return os.str();
      }()),
      line_(line),
      column_(column),
      message_(message) {}

bool operator==(const StructureBlock& a, const StructureBlock& b) {
  return a.kind == b.kind && a.name == b.name && a.dim == b.dim && a.unit == b.unit && a.counit == b.counit &&
         a.mul == b.mul && a.comul == b.comul && a.antipode == b.antipode;
}

bool operator==(const MorphismBlock& a, const MorphismBlock& b) {
  return a.name == b.name && a.source == b.source && a.target == b.target && a.entries == b.entries;
}

bool operator==(const BundleBlock& a, const BundleBlock& b) {
  return a.kind == b.kind && a.name == b.name && a.fields == b.fields;
}

const std::string* BundleBlock::field(std::string_view role) const {
  for (const auto& [r, v] : fields)
    if (r == role) return &v;
  return nullptr;
}

namespace {

template <typename T>
const T* find_block(const std::vector<Block>& blocks, std::string_view name) {
  for (const auto& b : blocks)
    if (const auto* p = std::get_if<T>(&b); p && p->name == name) return p;
  return nullptr;
}

}  // namespace

const StructureBlock* StructureFile::structure(std::string_view name) const {
  return find_block<StructureBlock>(blocks, name);
}
const MorphismBlock* StructureFile::morphism(std::string_view name) const {
  return find_block<MorphismBlock>(blocks, name);
}
const BundleBlock* StructureFile::bundle(std::string_view name) const { return find_block<BundleBlock>(blocks, name); }

std::vector<const BundleBlock*> StructureFile::bundles(BundleBlock::Kind kind) const {
  std::vector<const BundleBlock*> out;
  for (const auto& b : blocks)
    if (const auto* p = std::get_if<BundleBlock>(&b); p && p->kind == kind) out.push_back(p);
  return out;
}

std::string_view to_string(StructureBlock::Kind k) {
  switch (k) {
    case StructureBlock::Kind::object: return "object";
    case StructureBlock::Kind::algebra: return "algebra";
    case StructureBlock::Kind::coalgebra: return "coalgebra";
    case StructureBlock::Kind::bialgebra: return "bialgebra";
    case StructureBlock::Kind::hopf: return "hopf";
  }
  return "?";
}

std::string_view to_string(BundleBlock::Kind k) {
  switch (k) {
    case BundleBlock::Kind::partial_action: return "partial_action";
    case BundleBlock::Kind::extending_datum: return "extending_datum";
    case BundleBlock::Kind::crossed_system: return "crossed_system";
  }
  return "?";
}

namespace {

using Kind = StructureBlock::Kind;
using BKind = BundleBlock::Kind;

bool has_algebra(Kind k) { return k == Kind::algebra || k == Kind::bialgebra || k == Kind::hopf; }
bool has_coalgebra(Kind k) { return k == Kind::coalgebra || k == Kind::bialgebra || k == Kind::hopf; }

struct Token {
  enum class Type { word, punct, end };
  Type type = Type::end;
  std::string text;
  std::size_t col = 0;
};

bool word_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '/' || c == '-' || c == '+' || c == '.';
}

// Columns count code points, so "⊗" is one column wide.
std::vector<Token> lex(std::string_view line, std::size_t lineno) {
  std::vector<Token> out;
  std::size_t col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i)
      if ((static_cast<unsigned char>(line[i]) & 0xC0) != 0x80) ++col;
  };
  while (i < line.size()) {
    const char c = line[i];
    if (c == '#') break;
    if (c == ' ' || c == '\t' || c == '\r') {
      advance(1);
      continue;
    }
    const std::size_t start = col;
    if (c == '-' && i + 1 < line.size() && line[i + 1] == '>') {
      out.push_back({Token::Type::punct, "->", start});
      advance(2);
    } else if (line.substr(i, 3) == "⊗") {
      out.push_back({Token::Type::punct, "⊗", start});
      advance(3);
    } else if (c == ':' || c == '=' || c == '(' || c == ')' || c == ',' || c == '*') {
      // '*' is an ASCII spelling of ⊗.
      out.push_back({Token::Type::punct, c == '*' ? std::string("⊗") : std::string(1, c), start});
      advance(1);
    } else if (word_char(c)) {
      std::size_t j = i;
      while (j < line.size() && word_char(line[j]) && !(line[j] == '-' && j + 1 < line.size() && line[j + 1] == '>'))
        ++j;
      out.push_back({Token::Type::word, std::string(line.substr(i, j - i)), start});
      advance(j - i);
    } else {
      throw ParseError(lineno, start, "unexpected character '" + std::string(1, c) + "'");
    }
  }
  out.push_back({Token::Type::end, "", col});
  return out;
}

class LineParser {
 public:
  LineParser(std::vector<Token> tokens, std::size_t line) : toks_(std::move(tokens)), line_(line) {}

  const Token& peek() const { return toks_[pos_]; }
  bool at_end() const { return peek().type == Token::Type::end; }
  std::size_t line() const { return line_; }

  [[noreturn]] void fail(const Token& t, const std::string& msg) const { throw ParseError(line_, t.col, msg); }

  const Token& word(const char* what) {
    const Token& t = peek();
    if (t.type != Token::Type::word) fail(t, std::string("expected ") + what + (at_end() ? " before end of line" : ", got '" + t.text + "'"));
    ++pos_;
    return t;
  }

  void punct(const char* p) {
    const Token& t = peek();
    if (t.type != Token::Type::punct || t.text != p)
      fail(t, std::string("expected '") + p + "'" + (at_end() ? " before end of line" : ", got '" + t.text + "'"));
    ++pos_;
  }

  bool accept(const char* p) {
    const Token& t = peek();
    if (t.type == Token::Type::punct && t.text == p) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::size_t natural(const char* what) {
    const Token& t = word(what);
    std::size_t v = 0;
    const auto* first = t.text.data();
    const auto* last = first + t.text.size();
    auto [p, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || p != last) fail(t, std::string("expected ") + what + ", got '" + t.text + "'");
    return v;
  }

  /// A 1-based index in 1..bound, returned 0-based.
  std::size_t index(std::size_t bound, const char* what) {
    const Token& t = peek();
    const std::size_t v = natural(what);
    if (v < 1 || v > bound)
      fail(t, std::string(what) + " " + std::to_string(v) + " out of range 1.." + std::to_string(bound));
    return v - 1;
  }

  Scalar scalar(const FieldSpec& field) {
    const Token& t = word("scalar");
    try {
      return Scalar::parse(field, t.text);
    } catch (const FieldError& e) {
      fail(t, std::string("scalar '") + t.text + "' in " + field.name() + ": " + e.what());
    }
  }

  void finish() {
    if (!at_end()) fail(peek(), "unexpected '" + peek().text + "'");
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::size_t line_;
};

const std::map<std::string_view, Kind>& structure_keywords() {
  static const std::map<std::string_view, Kind> m{{"object", Kind::object},
                                                   {"algebra", Kind::algebra},
                                                   {"coalgebra", Kind::coalgebra},
                                                   {"bialgebra", Kind::bialgebra},
                                                   {"hopf", Kind::hopf}};
  return m;
}

const std::map<std::string_view, BKind>& bundle_keywords() {
  static const std::map<std::string_view, BKind> m{{"partial_action", BKind::partial_action},
                                                    {"extending_datum", BKind::extending_datum},
                                                    {"crossed_system", BKind::crossed_system}};
  return m;
}

enum class Need { any, algebra, bialgebra, hopf, morphism };

struct RoleSpec {
  std::string_view role;
  Need need;
  bool required;
  // For morphisms: source and target as role names, "" for K.
  std::vector<std::string_view> source;
  std::vector<std::string_view> target;
};

const std::vector<RoleSpec>& roles_for(BKind k) {
  static const std::vector<RoleSpec> partial{
      {"H", Need::hopf, true, {}, {}},
      {"A", Need::algebra, true, {}, {}},
      {"phi", Need::morphism, true, {"H", "A"}, {"A"}},
      {"omega", Need::morphism, true, {"H", "H"}, {"A"}},
  };
  static const std::vector<RoleSpec> datum{
      {"A", Need::bialgebra, true, {}, {}},
      {"H", Need::bialgebra, true, {}, {}},
      {"right_action", Need::morphism, true, {"H", "A"}, {"H"}},
      {"left_action", Need::morphism, true, {"H", "A"}, {"A"}},
      {"tau", Need::morphism, true, {"H", "H"}, {"A"}},
  };
  static const std::vector<RoleSpec> crossed{
      {"A", Need::algebra, true, {}, {}},
      {"V", Need::any, true, {}, {}},
      {"psi", Need::morphism, true, {"V", "A"}, {"A", "V"}},
      {"sigma", Need::morphism, true, {"V", "V"}, {"A", "V"}},
      {"preunit", Need::morphism, false, {}, {"A", "V"}},
  };
  switch (k) {
    case BKind::partial_action: return partial;
    case BKind::extending_datum: return datum;
    case BKind::crossed_system: return crossed;
  }
  return partial;
}

std::string_view need_name(Need n) {
  switch (n) {
    case Need::any: return "structure or object";
    case Need::algebra: return "algebra, bialgebra or hopf block";
    case Need::bialgebra: return "bialgebra or hopf block";
    case Need::hopf: return "hopf block";
    case Need::morphism: return "morphism";
  }
  return "?";
}

bool satisfies(Kind k, Need n) {
  switch (n) {
    case Need::any: return true;
    case Need::algebra: return has_algebra(k);
    case Need::bialgebra: return k == Kind::bialgebra || k == Kind::hopf;
    case Need::hopf: return k == Kind::hopf;
    case Need::morphism: return false;
  }
  return false;
}

class Parser {
 public:
  Parser(std::string_view text, const FieldSpec& field) : text_(text) { file_.field = field; }

  StructureFile run() {
    std::size_t lineno = 0;
    std::size_t start = 0;
    while (start <= text_.size()) {
      const std::size_t nl = text_.find('\n', start);
      const std::string_view raw = text_.substr(start, nl == std::string_view::npos ? std::string_view::npos : nl - start);
      ++lineno;
      LineParser lp(lex(raw, lineno), lineno);
      if (!lp.at_end()) line(lp);
      if (nl == std::string_view::npos) break;
      start = nl + 1;
    }
    close_block();
    return std::move(file_);
  }

 private:
  void line(LineParser& lp) {
    const Token& head = lp.peek();
    if (head.type != Token::Type::word) lp.fail(head, "expected a keyword, got '" + head.text + "'");
    if (head.text == "field") return field_line(lp);
    if (auto it = structure_keywords().find(head.text); it != structure_keywords().end()) {
      close_block();
      return structure_header(lp, it->second);
    }
    if (head.text == "morphism") {
      close_block();
      return morphism_header(lp);
    }
    if (auto it = bundle_keywords().find(head.text); it != bundle_keywords().end()) {
      close_block();
      return bundle_header(lp, it->second);
    }
    if (auto* s = current<StructureBlock>()) return structure_entry(lp, *s);
    if (auto* m = current<MorphismBlock>()) return morphism_entry(lp, *m);
    if (auto* b = current<BundleBlock>()) return bundle_entry(lp, *b);
    lp.fail(head, "'" + head.text + "' outside of any block");
  }

  template <typename T>
  T* current() {
    if (!open_) return nullptr;
    return std::get_if<T>(&file_.blocks.back());
  }

  void field_line(LineParser& lp) {
    const Token& kw = lp.word("field");
    if (file_.field_declared) lp.fail(kw, "field declared twice");
    if (!file_.blocks.empty()) lp.fail(kw, "field must be declared before any block");
    const Token& t = lp.word("field name");
    try {
      file_.field = FieldSpec::parse(t.text);
    } catch (const FieldError& e) {
      lp.fail(t, e.what());
    }
    file_.field_declared = true;
    lp.finish();
  }

  void declare(LineParser& lp, const Token& name) {
    if (name.text == "K") lp.fail(name, "'K' is reserved for the unit object");
    if (!names_.insert(name.text).second) lp.fail(name, "name '" + name.text + "' already declared");
  }

  void structure_header(LineParser& lp, Kind kind) {
    lp.word("keyword");
    const Token& name = lp.word("block name");
    declare(lp, name);
    const Token& dim_kw = lp.word("'dim'");
    if (dim_kw.text != "dim") lp.fail(dim_kw, "expected 'dim', got '" + dim_kw.text + "'");
    const Token& dt = lp.peek();
    const std::size_t dim = lp.natural("dimension");
    if (dim == 0) lp.fail(dt, "dimension must be positive");
    lp.finish();
    StructureBlock b;
    b.kind = kind;
    b.name = name.text;
    b.dim = dim;
    b.line = lp.line();
    file_.blocks.emplace_back(std::move(b));
    open_ = true;
  }

  void structure_entry(LineParser& lp, StructureBlock& b) {
    const Token& kw = lp.word("entry");
    const FieldSpec& k = file_.field;
    auto require = [&](bool ok, const char* what) {
      if (!ok) lp.fail(kw, std::string("'") + kw.text + "' not allowed in " + std::string(to_string(b.kind)) + " block (" + what + ")");
    };
    if (kw.text == "unit" || kw.text == "counit") {
      const bool is_unit = kw.text == "unit";
      require(is_unit ? has_algebra(b.kind) : has_coalgebra(b.kind), is_unit ? "needs a product" : "needs a coproduct");
      auto& slot = is_unit ? b.unit : b.counit;
      if (slot) lp.fail(kw, kw.text + " given twice");
      lp.punct(":");
      std::vector<Scalar> vals;
      while (!lp.at_end()) {
        if (vals.size() == b.dim) lp.fail(lp.peek(), kw.text + " has more than " + std::to_string(b.dim) + " entries");
        vals.push_back(lp.scalar(k));
      }
      if (vals.size() != b.dim)
        lp.fail(lp.peek(), kw.text + " needs " + std::to_string(b.dim) + " entries, got " + std::to_string(vals.size()));
      slot = std::move(vals);
      return;
    }
    if (kw.text == "mul") {
      require(has_algebra(b.kind), "needs a product");
      const std::size_t i = lp.index(b.dim, "index");
      const std::size_t j = lp.index(b.dim, "index");
      if (b.mul.count({i, j})) lp.fail(kw, "mul " + std::to_string(i + 1) + " " + std::to_string(j + 1) + " given twice");
      lp.punct(":");
      auto& row = b.mul[{i, j}];
      do {
        const Token& at = lp.peek();
        const std::size_t out = lp.index(b.dim, "index");
        lp.punct("=");
        if (!row.emplace(out, lp.scalar(k)).second) lp.fail(at, "output index repeated");
      } while (!lp.at_end());
      return;
    }
    if (kw.text == "comul") {
      require(has_coalgebra(b.kind), "needs a coproduct");
      const std::size_t i = lp.index(b.dim, "index");
      if (b.comul.count(i)) lp.fail(kw, "comul " + std::to_string(i + 1) + " given twice");
      lp.punct(":");
      auto& row = b.comul[i];
      do {
        const Token& at = lp.peek();
        lp.punct("(");
        const std::size_t l = lp.index(b.dim, "index");
        lp.punct(",");
        const std::size_t r = lp.index(b.dim, "index");
        lp.punct(")");
        lp.punct("=");
        if (!row.emplace(std::pair{l, r}, lp.scalar(k)).second) lp.fail(at, "output index repeated");
      } while (!lp.at_end());
      return;
    }
    if (kw.text == "antipode") {
      require(b.kind == Kind::hopf, "needs a hopf block");
      const std::size_t i = lp.index(b.dim, "index");
      if (b.antipode.count(i)) lp.fail(kw, "antipode " + std::to_string(i + 1) + " given twice");
      lp.punct(":");
      auto& row = b.antipode[i];
      do {
        const Token& at = lp.peek();
        const std::size_t out = lp.index(b.dim, "index");
        lp.punct("=");
        if (!row.emplace(out, lp.scalar(k)).second) lp.fail(at, "output index repeated");
      } while (!lp.at_end());
      return;
    }
    lp.fail(kw, "unknown entry '" + kw.text + "' in " + std::string(to_string(b.kind)) + " block");
  }

  std::size_t object_dim(LineParser& lp, const Token& t) {
    if (t.text == "K") return 1;
    const auto* s = file_.structure(t.text);
    if (!s) {
      if (names_.count(t.text)) lp.fail(t, "'" + t.text + "' is not an object");
      lp.fail(t, "undeclared object '" + t.text + "'");
    }
    return s->dim;
  }

  std::vector<std::string> object_list(LineParser& lp) {
    std::vector<std::string> names;
    do {
      const Token& t = lp.word("object name");
      object_dim(lp, t);
      if (t.text != "K") names.push_back(t.text);
    } while (lp.accept("⊗"));
    return names;
  }

  std::size_t total(const std::vector<std::string>& objs) const {
    std::size_t n = 1;
    for (const auto& o : objs) n *= file_.structure(o)->dim;
    return n;
  }

  void morphism_header(LineParser& lp) {
    lp.word("keyword");
    const Token& name = lp.word("morphism name");
    declare(lp, name);
    lp.punct(":");
    MorphismBlock m;
    m.name = name.text;
    m.line = lp.line();
    m.source = object_list(lp);
    lp.punct("->");
    m.target = object_list(lp);
    lp.finish();
    file_.blocks.emplace_back(std::move(m));
    open_ = true;
  }

  void morphism_entry(LineParser& lp, MorphismBlock& m) {
    const Token& kw = lp.word("entry");
    if (kw.text != "e") lp.fail(kw, "unknown entry '" + kw.text + "' in morphism block");
    const std::size_t col = lp.index(total(m.source), "column");
    if (m.entries.count(col)) lp.fail(kw, "column " + std::to_string(col + 1) + " given twice");
    lp.punct(":");
    auto& rows = m.entries[col];
    const std::size_t nrows = total(m.target);
    do {
      const Token& at = lp.peek();
      const std::size_t r = lp.index(nrows, "row");
      lp.punct("=");
      if (!rows.emplace(r, lp.scalar(file_.field)).second) lp.fail(at, "row repeated");
    } while (!lp.at_end());
  }

  void bundle_header(LineParser& lp, BKind kind) {
    lp.word("keyword");
    const Token& name = lp.word("block name");
    declare(lp, name);
    lp.finish();
    BundleBlock b;
    b.kind = kind;
    b.name = name.text;
    b.line = lp.line();
    file_.blocks.emplace_back(std::move(b));
    open_ = true;
  }

  void bundle_entry(LineParser& lp, BundleBlock& b) {
    const Token& role = lp.word("role");
    const auto& specs = roles_for(b.kind);
    const auto it = std::find_if(specs.begin(), specs.end(), [&](const RoleSpec& s) { return s.role == role.text; });
    if (it == specs.end()) lp.fail(role, "unknown role '" + role.text + "' in " + std::string(to_string(b.kind)) + " block");
    if (b.field(role.text)) lp.fail(role, "role '" + role.text + "' given twice");
    lp.accept(":");
    const Token& ref = lp.word("block name");
    lp.finish();
    if (it->need == Need::morphism) {
      const auto* m = file_.morphism(ref.text);
      if (!m) lp.fail(ref, (names_.count(ref.text) ? "'" + ref.text + "' is not a morphism" : "undeclared morphism '" + ref.text + "'"));
      std::size_t src = 1, tgt = 1;
      for (auto r : it->source) src *= role_dim(lp, b, r, role);
      for (auto r : it->target) tgt *= role_dim(lp, b, r, role);
      if (total(m->source) != src || total(m->target) != tgt)
        lp.fail(ref, "morphism '" + ref.text + "' has shape " + std::to_string(total(m->source)) + " -> " +
                         std::to_string(total(m->target)) + ", role '" + role.text + "' needs " + std::to_string(src) +
                         " -> " + std::to_string(tgt));
    } else {
      const auto* s = file_.structure(ref.text);
      if (!s || !satisfies(s->kind, it->need))
        lp.fail(ref, (names_.count(ref.text) || s ? "'" + ref.text + "' is not a " : "undeclared ") +
                         std::string(need_name(it->need)) + (names_.count(ref.text) || s ? "" : " '" + ref.text + "'"));
    }
    b.fields.emplace_back(role.text, ref.text);
  }

  std::size_t role_dim(LineParser& lp, const BundleBlock& b, std::string_view r, const Token& at) {
    const std::string* ref = b.field(r);
    if (!ref) lp.fail(at, "role '" + std::string(r) + "' must be given before '" + at.text + "'");
    return file_.structure(*ref)->dim;
  }

  void close_block() {
    if (!open_) return;
    open_ = false;
    const Block& blk = file_.blocks.back();
    if (const auto* s = std::get_if<StructureBlock>(&blk)) {
      if (has_algebra(s->kind) && !s->unit)
        throw ParseError(s->line, 0, std::string(to_string(s->kind)) + " '" + s->name + "' has no unit");
      if (has_coalgebra(s->kind) && !s->counit)
        throw ParseError(s->line, 0, std::string(to_string(s->kind)) + " '" + s->name + "' has no counit");
    } else if (const auto* b = std::get_if<BundleBlock>(&blk)) {
      for (const auto& spec : roles_for(b->kind))
        if (spec.required && !b->field(spec.role))
          throw ParseError(b->line, 0,
                           std::string(to_string(b->kind)) + " '" + b->name + "' is missing role '" + std::string(spec.role) + "'");
    }
  }

  std::string_view text_;
  StructureFile file_;
  std::set<std::string> names_;
  bool open_ = false;
};

}  // namespace

StructureFile parse_structure_file(std::string_view text, const FieldSpec& default_field) {
  return Parser(text, default_field).run();
}

namespace {

std::string join_objects(const std::vector<std::string>& objs) {
  if (objs.empty()) return "K";
  std::string s;
  for (std::size_t i = 0; i < objs.size(); ++i) s += (i ? "⊗" : "") + objs[i];
  return s;
}

}  // namespace

std::string emit_structure_file(const StructureFile& file) {
  std::ostringstream os;
  if (file.field_declared) os << "field " << file.field.name() << "\n";
  for (const auto& blk : file.blocks) {
    if (os.tellp() > 0) os << "\n";
    if (const auto* s = std::get_if<StructureBlock>(&blk)) {
      os << to_string(s->kind) << " " << s->name << " dim " << s->dim << "\n";
      auto list = [&](const char* kw, const std::optional<std::vector<Scalar>>& v) {
        if (!v) return;
        os << "  " << kw << ":";
        for (const auto& x : *v) os << " " << x;
        os << "\n";
      };
      list("unit", s->unit);
      for (const auto& [ij, row] : s->mul) {
        os << "  mul " << ij.first + 1 << " " << ij.second + 1 << " :";
        for (const auto& [k, v] : row) os << " " << k + 1 << "=" << v;
        os << "\n";
      }
      list("counit", s->counit);
      for (const auto& [i, row] : s->comul) {
        os << "  comul " << i + 1 << " :";
        for (const auto& [jk, v] : row) os << " (" << jk.first + 1 << "," << jk.second + 1 << ")=" << v;
        os << "\n";
      }
      for (const auto& [i, row] : s->antipode) {
        os << "  antipode " << i + 1 << " :";
        for (const auto& [j, v] : row) os << " " << j + 1 << "=" << v;
        os << "\n";
      }
    } else if (const auto* m = std::get_if<MorphismBlock>(&blk)) {
      os << "morphism " << m->name << " : " << join_objects(m->source) << " -> " << join_objects(m->target) << "\n";
      for (const auto& [c, rows] : m->entries) {
        os << "  e " << c + 1 << " :";
        for (const auto& [r, v] : rows) os << " " << r + 1 << "=" << v;
        os << "\n";
      }
    } else {
      const auto& b = std::get<BundleBlock>(blk);
      os << to_string(b.kind) << " " << b.name << "\n";
      for (const auto& [role, ref] : b.fields) os << "  " << role << " " << ref << "\n";
    }
  }
  return os.str();
}

namespace {

const StructureBlock& need_structure(const StructureFile& f, std::string_view name, bool (*ok)(Kind), const char* what) {
  const auto* s = f.structure(name);
  if (!s) throw ParseError(0, 0, "no structure block named '" + std::string(name) + "'");
  if (!ok(s->kind)) throw ParseError(s->line, 0, "'" + s->name + "' is not " + what);
  return *s;
}

AlgebraData algebra_of(const FieldSpec& k, const StructureBlock& s) {
  const std::size_t d = s.dim;
  LinMap unit(k, ObjectShape::unit(), ObjectShape{d});
  for (std::size_t i = 0; i < d; ++i) unit.set(i, 0, (*s.unit)[i]);
  LinMap mul(k, ObjectShape{d, d}, ObjectShape{d});
  for (const auto& [ij, row] : s.mul)
    for (const auto& [out, v] : row) mul.set(out, ij.first * d + ij.second, v);
  return {d, std::move(unit), std::move(mul)};
}

CoalgebraData coalgebra_of(const FieldSpec& k, const StructureBlock& s) {
  const std::size_t d = s.dim;
  LinMap counit(k, ObjectShape{d}, ObjectShape::unit());
  for (std::size_t i = 0; i < d; ++i) counit.set(0, i, (*s.counit)[i]);
  LinMap comul(k, ObjectShape{d}, ObjectShape{d, d});
  for (const auto& [i, row] : s.comul)
    for (const auto& [lr, v] : row) comul.set(lr.first * d + lr.second, i, v);
  return {d, std::move(counit), std::move(comul)};
}

const std::string& role(const BundleBlock& b, std::string_view r) {
  const std::string* v = b.field(r);
  if (!v) throw ParseError(b.line, 0, "'" + b.name + "' is missing role '" + std::string(r) + "'");
  return *v;
}

const BundleBlock& need_bundle(const StructureFile& f, std::string_view name, BKind kind) {
  const auto* b = f.bundle(name);
  if (!b) throw ParseError(0, 0, "no " + std::string(to_string(kind)) + " block named '" + std::string(name) + "'");
  if (b->kind != kind) throw ParseError(b->line, 0, "'" + b->name + "' is not a " + std::string(to_string(kind)) + " block");
  return *b;
}

}  // namespace

AlgebraData resolve_algebra(const StructureFile& f, std::string_view name) {
  return algebra_of(f.field, need_structure(f, name, has_algebra, "an algebra"));
}

CoalgebraData resolve_coalgebra(const StructureFile& f, std::string_view name) {
  return coalgebra_of(f.field, need_structure(f, name, has_coalgebra, "a coalgebra"));
}

BialgebraData resolve_bialgebra(const StructureFile& f, std::string_view name) {
  const auto& s = need_structure(
      f, name, [](Kind k) { return k == Kind::bialgebra || k == Kind::hopf; }, "a bialgebra");
  return {algebra_of(f.field, s), coalgebra_of(f.field, s)};
}

HopfData resolve_hopf(const StructureFile& f, std::string_view name) {
  const auto& s = need_structure(
      f, name, [](Kind k) { return k == Kind::hopf; }, "a Hopf algebra");
  LinMap antipode(f.field, ObjectShape{s.dim}, ObjectShape{s.dim});
  for (const auto& [i, row] : s.antipode)
    for (const auto& [j, v] : row) antipode.set(j, i, v);
  return {{algebra_of(f.field, s), coalgebra_of(f.field, s)}, std::move(antipode)};
}

PreHopfObject resolve_pre_hopf(const StructureFile& f, std::string_view name) {
  return PreHopfObject::from(resolve_bialgebra(f, name));
}

LinMap resolve_morphism(const StructureFile& f, std::string_view name) {
  const auto* m = f.morphism(name);
  if (!m) throw ParseError(0, 0, "no morphism named '" + std::string(name) + "'");
  auto shape = [&](const std::vector<std::string>& objs) {
    std::vector<std::size_t> dims;
    for (const auto& o : objs) dims.push_back(f.structure(o)->dim);
    return ObjectShape(std::move(dims));
  };
  LinMap out(f.field, shape(m->source), shape(m->target));
  for (const auto& [c, rows] : m->entries)
    for (const auto& [r, v] : rows) out.set(r, c, v);
  return out;
}

TwistedPartialAction resolve_partial_action(const StructureFile& f, std::string_view name) {
  const auto& b = need_bundle(f, name, BKind::partial_action);
  TwistedPartialAction act{resolve_hopf(f, role(b, "H")), resolve_algebra(f, role(b, "A")),
                           resolve_morphism(f, role(b, "phi")), resolve_morphism(f, role(b, "omega")),
                           symmetric_braiding()};
  return act;
}

ExtendingDatum resolve_extending_datum(const StructureFile& f, std::string_view name) {
  const auto& b = need_bundle(f, name, BKind::extending_datum);
  return {resolve_bialgebra(f, role(b, "A")),
          resolve_pre_hopf(f, role(b, "H")),
          resolve_morphism(f, role(b, "right_action")),
          resolve_morphism(f, role(b, "left_action")),
          resolve_morphism(f, role(b, "tau")),
          symmetric_braiding()};
}

CrossedSystemInput resolve_crossed_system(const StructureFile& f, std::string_view name) {
  const auto& b = need_bundle(f, name, BKind::crossed_system);
  std::optional<LinMap> preunit;
  if (const auto* p = b.field("preunit")) preunit = resolve_morphism(f, *p);
  return {resolve_algebra(f, role(b, "A")), f.structure(role(b, "V"))->dim, resolve_morphism(f, role(b, "psi")),
          resolve_morphism(f, role(b, "sigma")), std::move(preunit)};
}

}  // namespace wcpx

#include "zinbiel/problem_file.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace zinb {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

template <class T>
const T* find_named(const std::vector<T>& items, std::string_view name) {
  auto it = std::find_if(items.begin(), items.end(), [&](const T& x) { return x.name == name; });
  return it == items.end() ? nullptr : &*it;
}

struct Token {
  std::string text;
  std::size_t line;
  std::size_t column;
};

std::vector<Token> tokenize_line(std::string_view line, std::size_t line_no) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    if (c == '#') break;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '=') {
      out.push_back({"=", line_no, i + 1});
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) && line[i] != '=' && line[i] != '#') ++i;
    out.push_back({std::string(line.substr(start, i - start)), line_no, start + 1});
  }
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, std::optional<Field> override) : override_(std::move(override)) {
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const std::size_t nl = text.find('\n', pos);
      const auto line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
      ++line_no;
      auto tokens = tokenize_line(line, line_no);
      if (!tokens.empty()) lines_.push_back(std::move(tokens));
      if (nl == std::string_view::npos) break;
      pos = nl + 1;
    }
    if (override_) problem_.field = *override_;
  }

  ProblemFile run() {
    while (next_ < lines_.size()) {
      const auto& head = lines_[next_++];
      const std::string& key = head[0].text;
      if (key == "field") {
        parse_field(head);
      } else if (key == "algebra") {
        parse_algebra(head);
      } else if (key == "morphism") {
        parse_morphism(head);
      } else if (key == "cochain") {
        parse_cochain(head);
      } else if (key == "deformation") {
        parse_deformation(head);
      } else if (key == "isomorphism") {
        parse_isomorphism(head);
      } else {
        throw error(head[0], "unknown key '" + key + "'");
      }
      data_seen_ = data_seen_ || key != "field";
    }
    return std::move(problem_);
  }

 private:
  static ParseError error(const Token& t, const std::string& message) { return ParseError(t.line, t.column, message); }

  static void expect_arity(const std::vector<Token>& line, std::size_t n, const std::string& usage) {
    if (line.size() != n) throw error(line[std::min(line.size(), n) - 1], "expected '" + usage + "'");
  }

  static std::size_t parse_index(const Token& t, std::size_t bound, const std::string& what) {
    if (t.text.empty() || !std::all_of(t.text.begin(), t.text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      throw error(t, "expected a nonnegative integer for " + what + ", got '" + t.text + "'");
    }
    if (t.text.size() > 9) throw error(t, what + " '" + t.text + "' is out of range");
    const std::size_t v = std::stoul(t.text);
    if (v >= bound) {
      throw error(t, what + " " + t.text + " out of range (must be < " + std::to_string(bound) + ")");
    }
    return v;
  }

  Scalar parse_scalar(const Token& t) const {
    try {
      return Scalar::parse(problem_.field, t.text);
    } catch (const std::invalid_argument& e) {
      throw error(t, e.what());
    }
  }

  void require_new_name(const Token& t) {
    if (!names_.insert(t.text).second) throw error(t, "name '" + t.text + "' is already defined");
  }

  const AlgebraEntry& algebra_ref(const Token& t) const {
    const auto* a = problem_.find_algebra(t.text);
    if (!a) throw error(t, "unknown algebra '" + t.text + "'");
    return *a;
  }

  const MorphismEntry& morphism_ref(const Token& t) const {
    const auto* m = problem_.find_morphism(t.text);
    if (!m) throw error(t, "unknown morphism '" + t.text + "'");
    return *m;
  }

  // Entry lines up to `end`; each is "<indices...> = <scalar>".
  template <class Fn>
  void parse_entries(const Token& opener, Fn&& on_entry) {
    std::set<std::vector<std::string>> seen;
    for (;;) {
      if (next_ >= lines_.size()) throw error(opener, "block '" + opener.text + "' is missing 'end'");
      const auto& line = lines_[next_++];
      if (line[0].text == "end") {
        if (line.size() != 1) throw error(line[1], "unexpected token after 'end'");
        return;
      }
      const auto eq = std::find_if(line.begin(), line.end(), [](const Token& t) { return t.text == "="; });
      if (eq == line.end()) throw error(line.back(), "expected '= <scalar>' in entry");
      if (eq + 2 != line.end()) throw error(eq == line.end() - 1 ? *eq : *(eq + 1), "expected exactly one scalar after '='");
      std::vector<Token> keys(line.begin(), eq);
      if (keys.empty()) throw error(*eq, "entry has no indices");
      std::vector<std::string> key_text;
      for (const auto& k : keys) key_text.push_back(k.text);
      if (!seen.insert(key_text).second) throw error(keys[0], "duplicate entry");
      on_entry(keys, parse_scalar(*(eq + 1)));
    }
  }

  void parse_field(const std::vector<Token>& head) {
    expect_arity(head, 2, "field <Q|Fp:p>");
    if (data_seen_) throw error(head[0], "'field' must precede all data blocks");
    if (field_seen_) throw error(head[0], "field declared twice");
    field_seen_ = true;
    try {
      const Field f = Field::parse(head[1].text);
      if (!override_) problem_.field = f;
    } catch (const std::invalid_argument& e) {
      throw error(head[1], e.what());
    }
  }

  void parse_algebra(const std::vector<Token>& head) {
    expect_arity(head, 3, "algebra <name> <dim>");
    require_new_name(head[1]);
    const std::size_t dim = parse_index(head[2], 1000, "dimension");
    AlgebraEntry entry{head[1].text, StructureConstants::zero(problem_.field, dim)};
    parse_entries(head[0], [&](const std::vector<Token>& keys, Scalar value) {
      if (keys.size() != 3) throw error(keys[0], "algebra entries are '<i> <j> <k> = <scalar>'");
      const auto i = parse_index(keys[0], dim, "index");
      const auto j = parse_index(keys[1], dim, "index");
      const auto k = parse_index(keys[2], dim, "index");
      entry.constants.at(i, j, k) = std::move(value);
    });
    problem_.algebras.push_back(std::move(entry));
  }

  void parse_morphism(const std::vector<Token>& head) {
    expect_arity(head, 4, "morphism <name> <source> <target>");
    require_new_name(head[1]);
    const auto& src = algebra_ref(head[2]);
    const auto& tgt = algebra_ref(head[3]);
    MorphismEntry entry{head[1].text, src.name, tgt.name,
                        Matrix::zero(problem_.field, tgt.constants.dim, src.constants.dim)};
    parse_entries(head[0], [&](const std::vector<Token>& keys, Scalar value) {
      if (keys.size() != 2) throw error(keys[0], "morphism entries are '<row> <col> = <scalar>'");
      const auto r = parse_index(keys[0], entry.matrix.rows(), "row index");
      const auto c = parse_index(keys[1], entry.matrix.cols(), "column index");
      entry.matrix(r, c) = std::move(value);
    });
    problem_.morphisms.push_back(std::move(entry));
  }

  void parse_cochain(const std::vector<Token>& head) {
    expect_arity(head, 5, "cochain <name> <arity> <source> <target>");
    require_new_name(head[1]);
    const std::size_t arity = parse_index(head[2], 5, "arity");
    if (arity == 0) throw error(head[2], "arity must be between 1 and 4");
    const auto& src = algebra_ref(head[3]);
    const auto& tgt = algebra_ref(head[4]);
    const std::size_t d = src.constants.dim;
    const std::size_t m = tgt.constants.dim;
    CochainEntry entry{head[1].text, src.name, tgt.name, Cochain::zero(problem_.field, arity, d, m)};
    parse_entries(head[0], [&](const std::vector<Token>& keys, Scalar value) {
      if (keys.size() != arity + 1) {
        throw error(keys[0], "cochain entries need " + std::to_string(arity) + " argument indices and an output index");
      }
      std::vector<std::size_t> args;
      for (std::size_t k = 0; k < arity; ++k) args.push_back(parse_index(keys[k], d, "argument index"));
      const auto b = parse_index(keys[arity], m, "output index");
      entry.value.at(args, b) = std::move(value);
    });
    problem_.cochains.push_back(std::move(entry));
  }

  void parse_deformation(const std::vector<Token>& head) {
    expect_arity(head, 4, "deformation <name> <morphism> <order>");
    require_new_name(head[1]);
    const auto& f = morphism_ref(head[2]);
    const std::size_t order = parse_index(head[3], 1000, "order");
    const std::size_t d = f.matrix.cols();
    const std::size_t s = f.matrix.rows();
    DeformationEntry entry{head[1].text, f.name, {}};
    for (std::size_t i = 0; i < order; ++i) entry.terms.push_back(TripleCochain::zero(problem_.field, 2, d, s));
    parse_entries(head[0], [&](const std::vector<Token>& keys, Scalar value) {
      if (keys.size() < 2) throw error(keys[0], "deformation entries are '<order> <mR|mS|f> <indices> = <scalar>'");
      const auto t = parse_index(keys[0], order + 1, "term order");
      if (t == 0) throw error(keys[0], "term 0 is fixed by the morphism; orders start at 1");
      auto& term = entry.terms[t - 1];
      const std::string& comp = keys[1].text;
      if (comp == "mR" || comp == "mS") {
        const std::size_t n = comp == "mR" ? d : s;
        if (keys.size() != 5) throw error(keys[1], comp + " entries need '<x> <y> <b>'");
        const std::array<std::size_t, 2> args{parse_index(keys[2], n, "argument index"),
                                              parse_index(keys[3], n, "argument index")};
        const auto b = parse_index(keys[4], n, "output index");
        (comp == "mR" ? term.xi : term.pi).at(args, b) = std::move(value);
      } else if (comp == "f") {
        if (keys.size() != 4) throw error(keys[1], "f entries need '<x> <b>'");
        const std::array<std::size_t, 1> args{parse_index(keys[2], d, "argument index")};
        term.phi.at(args, parse_index(keys[3], s, "output index")) = std::move(value);
      } else {
        throw error(keys[1], "unknown component '" + comp + "' (expected mR, mS or f)");
      }
    });
    problem_.deformations.push_back(std::move(entry));
  }

  void parse_isomorphism(const std::vector<Token>& head) {
    expect_arity(head, 4, "isomorphism <name> <morphism> <order>");
    require_new_name(head[1]);
    const auto& f = morphism_ref(head[2]);
    const std::size_t order = parse_index(head[3], 1000, "order");
    const std::size_t d = f.matrix.cols();
    const std::size_t s = f.matrix.rows();
    IsomorphismEntry entry{head[1].text, f.name, {}};
    for (std::size_t i = 0; i < order; ++i) {
      entry.terms.emplace_back(Cochain::zero(problem_.field, 1, d, d), Cochain::zero(problem_.field, 1, s, s));
    }
    parse_entries(head[0], [&](const std::vector<Token>& keys, Scalar value) {
      if (keys.size() != 4) throw error(keys[0], "isomorphism entries are '<order> <R|S> <x> <b> = <scalar>'");
      const auto t = parse_index(keys[0], order + 1, "term order");
      if (t == 0) throw error(keys[0], "term 0 is the identity; orders start at 1");
      const std::string& side = keys[1].text;
      if (side != "R" && side != "S") throw error(keys[1], "unknown side '" + side + "' (expected R or S)");
      const std::size_t n = side == "R" ? d : s;
      const std::array<std::size_t, 1> args{parse_index(keys[2], n, "argument index")};
      auto& map = side == "R" ? entry.terms[t - 1].first : entry.terms[t - 1].second;
      map.at(args, parse_index(keys[3], n, "output index")) = std::move(value);
    });
    problem_.isomorphisms.push_back(std::move(entry));
  }

  std::optional<Field> override_;
  std::vector<std::vector<Token>> lines_;
  std::size_t next_ = 0;
  bool field_seen_ = false;
  bool data_seen_ = false;
  std::set<std::string> names_;
  ProblemFile problem_;
};

void write_cochain_entries(std::ostream& os, const Cochain& c, const std::string& prefix) {
  for (std::size_t t = 0; t < c.tuple_count(); ++t) {
    const auto v = c.value(t);
    const auto idx = c.tuple(t);
    for (std::size_t b = 0; b < v.size(); ++b) {
      if (v[b].is_zero()) continue;
      os << "  " << prefix;
      for (auto i : idx) os << i << ' ';
      os << b << " = " << v[b] << '\n';
    }
  }
}

}  // namespace

const AlgebraEntry* ProblemFile::find_algebra(std::string_view name) const { return find_named(algebras, name); }
const MorphismEntry* ProblemFile::find_morphism(std::string_view name) const { return find_named(morphisms, name); }
const CochainEntry* ProblemFile::find_cochain(std::string_view name) const { return find_named(cochains, name); }
const DeformationEntry* ProblemFile::find_deformation(std::string_view name) const {
  return find_named(deformations, name);
}
const IsomorphismEntry* ProblemFile::find_isomorphism(std::string_view name) const {
  return find_named(isomorphisms, name);
}

ProblemFile parse_problem(std::string_view text, std::optional<Field> field_override) {
  return Parser(text, std::move(field_override)).run();
}

std::string serialize_problem(const ProblemFile& problem) {
  std::ostringstream os;
  os << "field " << problem.field.to_string() << '\n';
  for (const auto& a : problem.algebras) {
    os << "\nalgebra " << a.name << ' ' << a.constants.dim << '\n';
    const std::size_t d = a.constants.dim;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k) {
          const auto& g = a.constants.at(i, j, k);
          if (!g.is_zero()) os << "  " << i << ' ' << j << ' ' << k << " = " << g << '\n';
        }
    os << "end\n";
  }
  for (const auto& m : problem.morphisms) {
    os << "\nmorphism " << m.name << ' ' << m.source << ' ' << m.target << '\n';
    for (std::size_t r = 0; r < m.matrix.rows(); ++r)
      for (std::size_t c = 0; c < m.matrix.cols(); ++c) {
        if (!m.matrix(r, c).is_zero()) os << "  " << r << ' ' << c << " = " << m.matrix(r, c) << '\n';
      }
    os << "end\n";
  }
  for (const auto& c : problem.cochains) {
    os << "\ncochain " << c.name << ' ' << c.value.arity() << ' ' << c.source << ' ' << c.target << '\n';
    write_cochain_entries(os, c.value, "");
    os << "end\n";
  }
  for (const auto& d : problem.deformations) {
    os << "\ndeformation " << d.name << ' ' << d.morphism << ' ' << d.order() << '\n';
    for (std::size_t t = 0; t < d.terms.size(); ++t) {
      const std::string n = std::to_string(t + 1) + ' ';
      write_cochain_entries(os, d.terms[t].xi, n + "mR ");
      write_cochain_entries(os, d.terms[t].pi, n + "mS ");
      write_cochain_entries(os, d.terms[t].phi, n + "f ");
    }
    os << "end\n";
  }
  for (const auto& p : problem.isomorphisms) {
    os << "\nisomorphism " << p.name << ' ' << p.morphism << ' ' << p.order() << '\n';
    for (std::size_t t = 0; t < p.terms.size(); ++t) {
      const std::string n = std::to_string(t + 1) + ' ';
      write_cochain_entries(os, p.terms[t].first, n + "R ");
      write_cochain_entries(os, p.terms[t].second, n + "S ");
    }
    os << "end\n";
  }
  return os.str();
}

}  // namespace zinb
